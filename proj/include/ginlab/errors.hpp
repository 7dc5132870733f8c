#pragma once

#include <stdexcept>
#include <string>

namespace ginlab {

/// Raised by the polynomial text parser; `position` is a byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Groebner computation needed an S-pair above the configured degree cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int degree, int cap)
      : std::runtime_error("degree cap exceeded: S-pair of degree " + std::to_string(degree) +
                           " above cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Independent generic-coordinate trials produced pairwise different initial ideals.
class AgreementFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard refused an instance that would not finish at desk scale.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs were well formed but violate a mathematical precondition
/// (singular matrix, non-Borel ideal, dimension mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ginlab
