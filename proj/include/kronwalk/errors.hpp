// Copyright 2026 The kronwalk Authors
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

namespace kronwalk {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map families of failures to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidOrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The marked vertex has no overlap with any coupled eigenspace.
class DegenerateOverlapError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// A requested computation exceeds a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kronwalk
