// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A user-supplied parameter or config field is malformed or out of its domain.
// The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A coin parameter (delta, phi, degree) lies outside the family's domain.
class CoinDomainError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// BiasedGrover below its lower delta bound: no symmetric unitary completion.
class BiasedGroverRangeError : public CoinDomainError {
 public:
  using CoinDomainError::CoinDomainError;
};

// A structural invariant does not hold (graph builders, coin/degree mismatch).
// The CLI maps these to exit code 3.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
