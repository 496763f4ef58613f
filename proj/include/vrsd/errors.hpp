#pragma once

#include <stdexcept>
#include <string>

namespace vrsd {

// Base class for every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands disagree on vector dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An operation that requires a nonzero vector received a zero-norm one.
class ZeroNorm : public Error {
 public:
  using Error::Error;
};

// A nonempty sequence was required.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Requested selection size exceeds the candidate count (or is zero).
class KTooLarge : public Error {
 public:
  using Error::Error;
};

// MMR trade-off weight outside [0, 1].
class InvalidLambda : public Error {
 public:
  using Error::Error;
};

// Same-side scenario angles violate their ordering or range constraints.
class InvalidScenario : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would visit more subsets than the configured cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

// Subset-sum instance too large for brute force.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// A claimed certificate failed the exact decision check.
class NotACertificate : public Error {
 public:
  using Error::Error;
};

// The decision check requires a nonzero query vector.
class ZeroQuery : public Error {
 public:
  using Error::Error;
};

// A query outcome lacks a score for the requested algorithm tag.
class MissingTag : public Error {
 public:
  using Error::Error;
};

// Input file could not be parsed; the message names the offending line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vrsd
