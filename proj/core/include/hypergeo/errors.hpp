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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypergeo {

enum class ErrorCode {
  ParseError,
  ZeroDifference,
  HypothesisViolation,
  NotCyclotomicProduct,
  NotMonic,
  Singular,
  DimensionMismatch,
  SizeLimit,
  NotUnipotent,
  NoInvariantForm,
  NonUniqueForm,
  DegenerateForm,
  NormalizationUndefined,
  NotTransvection,
  TripleDegenerate,
  InternalInconsistency,
  UnsupportedC,
  UnboundSymbol,
  CyclicBinding,
  DegenerateFlag,
  ShapeMismatch,
  InsufficientClosure,
  IoError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// ParseError carrying the byte offset of the failure.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t position, const std::string& detail);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hypergeo
