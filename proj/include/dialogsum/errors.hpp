// Copyright 2026 The dialogsum Authors.
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

#ifndef DIALOGSUM_ERRORS_HPP_
#define DIALOGSUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dialogsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not follow the expected schema (missing column, malformed record).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A well-formed input carries an invalid value.
class DataError : public Error {
 public:
  using Error::Error;
};

// Requested sizes cannot be satisfied by the input.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Failure while obtaining a probability from a ResponseScorer.
class ScorerError : public Error {
 public:
  using Error::Error;
};

}  // namespace dialogsum

#endif  // DIALOGSUM_ERRORS_HPP_
