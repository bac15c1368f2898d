// Copyright 2026 The optowork Authors
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

namespace optowork {

// Base of every error raised by the library. Subclasses map onto CLI exit
// codes in tools/optowork.cpp.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input value or a formula evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPositiveDefinite : public DomainError {
 public:
  using DomainError::DomainError;
};

class PatternMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

// A maximum-work bound is undefined for the given local variances.
class MaxWorkUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace optowork
