#pragma once

#include <optional>

#include <variform/error.hpp>

// Error code raised by f(), or nullopt if it returns normally.
template <class F>
std::optional<variform::Errc> errc_of(F&& f) {
  try {
    f();
  } catch (const variform::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
