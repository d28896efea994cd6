// dispeech/errors.h

// Copyright 2026  The dispeech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISPEECH_ERRORS_H_
#define DISPEECH_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace dispeech {

/// Base for every error the toolkit reports. `code()` is a stable,
/// machine-readable name (e.g. "MalformedLine") used by the CLI's JSON
/// error output; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

/// Bad input data or arguments (CLI exit status 1).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or stream failures (CLI exit status 2).
class IoError : public Error {
 public:
  explicit IoError(const std::string &message) : Error("IoError", message) {}
  IoError(std::string code, const std::string &message)
      : Error(std::move(code), message) {}
};

/// A parse failure tied to a 1-based line number in the source text.
class MalformedLineError : public ValidationError {
 public:
  MalformedLineError(int line, const std::string &detail)
      : ValidationError("MalformedLine",
                        "line " + std::to_string(line) + ": " + detail),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when some segment ids have no hypothesis; `ids()` lists them all.
class MissingHypothesisError : public ValidationError {
 public:
  explicit MissingHypothesisError(std::vector<std::string> ids)
      : ValidationError("MissingHypothesis", Describe(ids)),
        ids_(std::move(ids)) {}

  const std::vector<std::string> &ids() const { return ids_; }

 private:
  static std::string Describe(const std::vector<std::string> &ids) {
    std::string msg = std::to_string(ids.size()) + " segment(s) without a hypothesis:";
    for (const auto &id : ids) msg += " " + id;
    return msg;
  }

  std::vector<std::string> ids_;
};

}  // namespace dispeech

#endif  // DISPEECH_ERRORS_H_
