#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfmix {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

// An order-dependent operation received an element of the wrong kind of order.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  SearchExhausted(std::size_t level, std::string condition, const std::string& what)
      : Error(what), level_(level), condition_(std::move(condition)) {}

  std::size_t level() const noexcept { return level_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::size_t level_;
  std::string condition_;
};

// A queried window is not contained in the sampled window or exceeds the horizon.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

class DisjointnessError : public Error {
 public:
  using Error::Error;
};

// The action could not be resolved below the configured level.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace cfmix
