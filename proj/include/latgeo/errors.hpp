#pragma once

#include <stdexcept>
#include <string>

namespace latgeo {

/// Checked 64-bit arithmetic ran out of range. Raised instead of wrapping;
/// all geometry in this library is exact or it is an error.
struct OverflowError final : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

/// Input violates a documented precondition (wrong dimension, etc.).
struct PreconditionError final : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A configurable resource guard tripped (bounding box too large,
/// too many vertices, enumeration bound exceeded).
struct ResourceLimitError final : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed polytope file or JSON document.
struct ParseError final : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (e.g. a witness map that does not
/// validate). Always a bug, never a user error.
struct InternalError final : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace latgeo
