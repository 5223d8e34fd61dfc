// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>

namespace imbhn {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file (corpus records, model files). Messages carry the
/// offending line number where one is available.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Training diverged (non-finite relevance entry). Records the iteration.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int iteration)
      : Error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace imbhn
