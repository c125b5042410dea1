#pragma once

#include <stdexcept>
#include <string>

namespace kronroot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field construction or mixing scalars/matrices of different fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix would exceed the entry cap (see Matrix::kMaxEntries).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The field characteristic divides the Kronecker order, so the summed
/// rearrangement carries no information about the root.
class CharacteristicObstruction : public Error {
 public:
  using Error::Error;
};

}  // namespace kronroot
