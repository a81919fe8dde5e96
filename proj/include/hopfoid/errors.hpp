#pragma once

#include <stdexcept>
#include <string>

namespace hopfoid {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problems: mismatched dimensions, indices out of range.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class AntipodeNotInvertible : public NotInvertible {
 public:
  using NotInvertible::NotInvertible;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

/// Source and target images fail to commute, so no balanced tensor exists.
class NonCommutingImages : public Error {
 public:
  using Error::Error;
};

class NormalFormFailure : public Error {
 public:
  using Error::Error;
};

class NotMutuallyInverse : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the converse diagnostic is violated; `hypothesis()` names it.
class InvalidHypothesis : public Error {
 public:
  explicit InvalidHypothesis(std::string hypothesis)
      : Error("hypothesis violated: " + hypothesis), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A postcondition a builder checks eagerly did not hold.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& reason)
      : Error(location + ": " + reason), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace hopfoid
