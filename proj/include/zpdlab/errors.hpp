#pragma once

#include <stdexcept>
#include <string>

namespace zpdlab {

// Base of every error thrown by the toolkit.  Each subclass corresponds to a
// distinct failure mode so callers (notably the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Input algebra data fails closure, independence, associativity, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Spectrum does not split over the rationals.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class FaithfulnessError : public Error {
 public:
  using Error::Error;
};

class CharacterError : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class LatticeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zpdlab
