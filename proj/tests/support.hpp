#pragma once

#include <optional>

#include "eqgamma/error.hpp"

template <class F>
std::optional<eqgamma::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const eqgamma::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
