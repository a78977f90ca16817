/*
   Copyright 2026 The hypergeo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hypergeo/errors.hpp"

namespace hypergeo {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDifference: return "ZeroDifference";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotCyclotomicProduct: return "NotCyclotomicProduct";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NoInvariantForm: return "NoInvariantForm";
    case ErrorCode::NonUniqueForm: return "NonUniqueForm";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NormalizationUndefined: return "NormalizationUndefined";
    case ErrorCode::NotTransvection: return "NotTransvection";
    case ErrorCode::TripleDegenerate: return "TripleDegenerate";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnsupportedC: return "UnsupportedC";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::CyclicBinding: return "CyclicBinding";
    case ErrorCode::DegenerateFlag: return "DegenerateFlag";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InsufficientClosure: return "InsufficientClosure";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

ParseFailure::ParseFailure(std::size_t position, const std::string& detail)
    : Error(ErrorCode::ParseError,
            detail + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace hypergeo
