// Copyright 2026 The Authors.
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

#ifndef ESSPLIT_ERRORS_HPP_
#define ESSPLIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace essplit {

// Base of every error thrown by the library. Precondition failures derive
// from PreconditionError so front ends can map them to one exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public PreconditionError {
 public:
  explicit UnknownLabel(const std::string& label)
      : PreconditionError("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class GroundSetTooLarge : public PreconditionError {
 public:
  GroundSetTooLarge(std::size_t size, std::size_t cap)
      : PreconditionError("ground set of size " + std::to_string(size) +
                          " exceeds enumeration cap " + std::to_string(cap)) {}
};

class LabelCollision : public PreconditionError {
 public:
  explicit LabelCollision(const std::string& label)
      : PreconditionError("label '" + label + "' is already in use") {}
};

class ElementNotInX : public PreconditionError {
 public:
  explicit ElementNotInX(const std::string& label)
      : PreconditionError("element '" + label + "' is not a member of X") {}
};

class PreconditionViolated : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BaseNotFlat : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidPartition : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two closure cases that both apply produced different sets.
class FormulaDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace essplit

#endif  // ESSPLIT_ERRORS_HPP_
