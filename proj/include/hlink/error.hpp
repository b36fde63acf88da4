// Copyright 2026 The hlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hlink {

enum class ErrorCode {
  ParseError,
  RangeError,
  InvalidGraph,
  InvalidPattern,
  InvalidPlacement,
  InvalidPath,
  VertexNotOnCycle,
  ArityMismatch,
  AdjacentTerminalsNoCut,
  InsufficientTargets,
  ParameterError,
  GenerationBudgetExceeded,
  BudgetNonPositive,
  DegenerateParameters,
  MalformedCertificate,
  BudgetExceeded,
  Inconclusive,
  Exhausted,
  NoFlower,
  PreconditionViolated,
  NotThreeConnected,
  NotPlanar,
  // Falsification-grade: these mean a proven statement failed on an instance.
  WitnessNotFound,
  CaseAnalysisIncomplete,
};

const char* to_string(ErrorCode code) noexcept;

/// True for codes that, if raised, contradict a theorem or lemma the
/// toolkit is checking.
constexpr bool is_falsification(ErrorCode code) noexcept {
  return code == ErrorCode::WitnessNotFound ||
         code == ErrorCode::CaseAnalysisIncomplete;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hlink
