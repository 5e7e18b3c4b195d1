#pragma once

#include <stdexcept>
#include <string>

namespace pz {

// Every error names the module operation that raised it ("zeta::zeta_eval").
class Error : public std::runtime_error {
 public:
  Error(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// Argument outside the operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Non-finite intermediates, failed convergence, inconsistent counts.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Enumeration or memory bound exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace pz
