// Copyright 2026 The semtok Authors.
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

#ifndef SEMTOK_ERROR_H_
#define SEMTOK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semtok {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& context = {});

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// A model file violates the documented format or the vocabulary invariants.
class ModelParseError : public Error {
 public:
  // `source` names the file, when known.
  ModelParseError(std::size_t line, const std::string& message,
                  const std::string& source = {});

  // 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& message);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace semtok

#endif  // SEMTOK_ERROR_H_
