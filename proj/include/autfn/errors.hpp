#pragma once

#include <stdexcept>
#include <string>

namespace autfn {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration grew past its element cap before closing.
struct cap_exceeded : error {
  explicit cap_exceeded(const std::string& what) : error(what) {}
};

/// A fixed-point extraction was attempted on a non-regular action.
struct non_regular_action : error {
  explicit non_regular_action(const std::string& what) : error(what) {}
};

}  // namespace autfn
