/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace xtc {

/// Broad error class, used to pick the process exit code in the CLI.
enum class ErrorKind {
  Validation,  ///< bad input: malformed file, precondition violation, ...
  SizeLimit,   ///< instance exceeds a hard resource bound
};

/// All errors thrown by the library. `code()` is a stable machine-readable
/// tag such as "InvalidCharacter" or "QubitCountMismatch".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_validation(std::string code,
                                          const std::string& message) {
  throw Error(ErrorKind::Validation, std::move(code), message);
}

[[noreturn]] inline void throw_size_limit(std::string code,
                                          const std::string& message) {
  throw Error(ErrorKind::SizeLimit, std::move(code), message);
}

}  // namespace xtc
