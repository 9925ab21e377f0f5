// Copyright 2026 The tss Authors
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

namespace tss {

/// Base of every error raised by the library. The C API maps each subclass
/// to one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A token could not be read; the message names the file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input: ragged rows, empty files, bad lengths.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Parameters that cannot be honoured (k too large, single-class training).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A keyed lookup missed, e.g. an external prediction table without the key.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Filesystem problems: missing directories, unwritable outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tss
