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

#include <iosfwd>
#include <string>
#include <vector>

namespace hypergeo::cli {

/// Exit codes. Stable across releases.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // also "verify" reporting a non-identity
  kHypothesis = 2,
  kParse = 3,
  kAlgebra = 4,
  kIo = 5,
};

struct RunConfig {
  std::string command;
  std::string f, g;
  std::string normalization = "auto";
  int depth = 6;
  int power_bound = 48;
  std::string format;
  std::string output;
  std::vector<std::string> lets;
  std::string word;
  int degree = 4;
  std::string table = "all";
  bool search = false;
};

/// Runs one command; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hypergeo::cli
