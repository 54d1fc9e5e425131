#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chicrown {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 or DIMACS). Carries the byte offset
/// within the offending line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class OverlappingSets : public Error {
 public:
  using Error::Error;
};

class EmptyBase : public Error {
 public:
  using Error::Error;
};

class UnknownPattern : public Error {
 public:
  using Error::Error;
};

class InvalidEmbedding : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

/// A named hypothesis of a lemma-shaped check does not hold for the input.
class PreconditionUnmet : public Error {
 public:
  explicit PreconditionUnmet(const std::string& hypothesis)
      : Error("precondition unmet: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace chicrown
