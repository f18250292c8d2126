#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace detset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad family name, out-of-range parameter, or a violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size cap (order, subgroup scan, hom candidates) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A search ran out of its node budget. Carries the bounds established so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper)
      : Error(what), lower_bound(lower), upper_bound(upper) {}
  std::size_t lower_bound;
  std::size_t upper_bound;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

}  // namespace detset
