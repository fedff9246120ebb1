#pragma once

#include <stdexcept>
#include <string>

namespace nk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element that must be invertible in the chosen Novikov completion is not.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A quotient whose denominator cannot be made to lie in S (constant term 1).
class NotInRationalSubring : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Differential shapes do not match the declared ranks.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotAComplex : public Error {
 public:
  NotAComplex(int degree, const std::string& product)
      : Error("d o d != 0 at degree " + std::to_string(degree) + ": " + product),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NotAChainMap : public Error {
 public:
  NotAChainMap(int degree)
      : Error("chain map does not commute with the differentials at degree " +
              std::to_string(degree)),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NarrowingNotSupported : public Error {
 public:
  using Error::Error;
};

/// The Novikov diagonalization hit its operation cap. `partial_torsion` is the
/// number of non-unit invariant factors fixed before giving up; it is a lower
/// bound for the true count.
class Inconclusive : public Error {
 public:
  Inconclusive(long partial_torsion, long operations)
      : Error("diagonalization exceeded " + std::to_string(operations) +
              " elementary operations"),
        partial_torsion_(partial_torsion) {}
  long partial_torsion() const { return partial_torsion_; }

 private:
  long partial_torsion_;
};

class InvalidDomain : public Error {
 public:
  InvalidDomain(std::string identity, int degree)
      : Error("fundamental domain identity '" + identity + "' fails at degree " +
              std::to_string(degree)),
        identity_(std::move(identity)),
        degree_(degree) {}
  const std::string& identity() const { return identity_; }
  int degree() const { return degree_; }

 private:
  std::string identity_;
  int degree_;
};

/// Two routes that must agree did not. Signals a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& reason)
      : Error(path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nk
