#pragma once

#include <optional>

#include "twistor/errors.hpp"

template <class F>
std::optional<twistor::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const twistor::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
