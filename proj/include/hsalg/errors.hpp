#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsalg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two polynomials over different variable families were combined.
struct family_mismatch_error : error {
  using error::error;
};

/// Multivectors or matrices of different working dimension were combined.
struct dimension_mismatch_error : error {
  using error::error;
};

/// A series coefficient beyond the stated truncation order was requested.
struct order_error : error {
  using error::error;
};

/// Inversion was requested for a series whose constant term is not a unit.
struct not_invertible_error : error {
  using error::error;
};

/// A computation touched basis indices beyond the working dimension, so the
/// chosen truncation cannot represent the result faithfully.
struct truncation_error : error {
  using error::error;
};

/// An operation precondition was violated by otherwise well-formed input.
struct precondition_error : error {
  using error::error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace hsalg
