#pragma once

#include <string>

#include "twistor/rings/bivar_poly.hpp"

namespace twistor::rings {

// Parses integer polynomial expressions in x and y written the way they are
// typeset in tables: implicit multiplication, ^ for powers, unary minus,
// e.g. "-2 (x - 1) x (x^2 - 2 x - 2)".  Throws InvalidArgument on bad input.
BivarPoly parse_poly(const std::string& text);

}  // namespace twistor::rings
