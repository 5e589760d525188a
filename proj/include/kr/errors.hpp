#pragma once

#include <stdexcept>
#include <string>

namespace kr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments (bad rank, node, level, non-dominant weight...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structural claim that the library verifies (chain conditions, Hom
/// vanishing, decompositions, relation identities) turned out false.
class TheoremCheckFailure : public Error {
 public:
  using Error::Error;
};

/// A configured dimension cutoff would be exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The explicit matrix construction does not cover the requested weight.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

}  // namespace kr
