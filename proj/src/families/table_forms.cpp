#include "twistor/families.hpp"

#include <map>
#include <utility>

namespace twistor::families {

namespace {

const std::map<std::pair<std::string, int>, std::string>& forms() {
  static const std::map<std::pair<std::string, int>, std::string> m = {
      {{"f_diag", -5}, "-(x - 1) (x^2 - 2 x - 1) (x^4 - 4 x^3 + 2 x^2 + 4 x - 1) (x^8 - 8 x^7 + 20 x^6 - 8 x^5 - 30 x^4 + 24 x^3 + 12 x^2 - 8 x - 1)"},
      {{"f_diag", -4}, "(x^6 - 7 x^5 + 15 x^4 - 6 x^3 - 11 x^2 + 6 x + 1) (x^6 - 5 x^5 + 5 x^4 + 6 x^3 - 7 x^2 - 2 x + 1)"},
      {{"f_diag", -3}, "-(x - 1) (x^2 - 3 x + 1) (x^2 - x - 1) (x^4 - 4 x^3 + x^2 + 6 x + 1)"},
      {{"f_diag", -2}, "(x^3 - 4 x^2 + 3 x + 1) (x^3 - 2 x^2 - x + 1)"},
      {{"f_diag", -1}, "-(x - 1) (x^2 - 2 x - 1)"},
      {{"f_diag", 0}, "1"},
      {{"f_diag", 1}, "x-1"},
      {{"f_diag", 2}, "-(x^2 - 3 x + 1) (x^2 - x - 1)"},
      {{"f_diag", 3}, "(x - 1) (x^2 - 2 x - 1) (x^4 - 4 x^3 + 2 x^2 + 4 x - 1)"},
      {{"f_diag", 4}, "-(x^5 - 6 x^4 + 10 x^3 - x^2 - 6 x + 1) (x^5 - 4 x^4 + 2 x^3 + 5 x^2 - 2 x - 1)"},
      {{"f_diag", 5}, "(x - 1) (x^3 - 4 x^2 + 3 x + 1) (x^3 - 2 x^2 - x + 1) (x^6 - 6 x^5 + 8 x^4 + 8 x^3 - 13 x^2 - 6 x + 1)"},
      {{"tau_diag", -5}, "-2 (x - 1) (x^2 - 3 x + 1) (x^2 - 2 x - 1) (x^4 - 4 x^3 + 2 x^2 + 4 x - 1) (x^4 - 3 x^3 - x^2 + 3 x + 1)"},
      {{"tau_diag", -4}, "2 (x - 1) x (x^2 - 2 x - 2) (x^6 - 7 x^5 + 15 x^4 - 6 x^3 - 11 x^2 + 6 x + 1)"},
      {{"tau_diag", -3}, "-2 (x^2 - 3 x + 1) (x^2 - x - 1) (x^3 - 3 x^2 + 1)"},
      {{"tau_diag", -2}, "2 x (x^3 - 4x^2 + 3x + 1)"},
      {{"tau_diag", -1}, "-2(x-1)"},
      {{"tau_diag", 0}, "0"},
      {{"tau_diag", 1}, "2"},
      {{"tau_diag", 2}, "-2 x (x^2 - 3 x + 1)"},
      {{"tau_diag", 3}, "2 (x - 1) (x^2 - 2 x - 1) (x^3 - 3 x^2 + 1)"},
      {{"tau_diag", 4}, "-2 (x - 1) x (x^2 - 2 x - 2) (x^5 - 6 x^4 + 10 x^3 - x^2 - 6 x + 1)"},
      {{"tau_diag", 5}, "2 (x^2 - 3 x + 1) (x^3 - 4 x^2 + 3 x + 1) (x^3 - 2 x^2 - x + 1) (x^4 - 3 x^3 - x^2 + 3 x + 1)"},
      {{"k", -5}, "(x - 1) (x^2 - 2 x - 1) (x^4 - 4 x^3 + 2 x^2 + 4 x - 1)"},
      {{"k", -4}, "-x^6 + 7 x^5 - 15 x^4 + 6 x^3 + 11 x^2 - 6 x - 1"},
      {{"k", -3}, "-(x^2 - 3 x + 1) (x^2 - x - 1)"},
      {{"k", -2}, "x^3 - 4 x^2 + 3 x + 1"},
      {{"k", -1}, "x-1"},
      {{"k", 0}, "-1"},
      {{"k", 1}, "1"},
      {{"k", 2}, "x^2 - 3 x + 1"},
      {{"k", 3}, "-(x - 1) (x^2 - 2 x - 1)"},
      {{"k", 4}, "-x^5 + 6 x^4 - 10 x^3 + x^2 + 6 x - 1"},
      {{"k", 5}, "(x^3 - 4 x^2 + 3 x + 1) (x^3 - 2 x^2 - x + 1)"},
      {{"g", -5}, "-(x^8 - 8 x^7 + 20 x^6 - 8 x^5 - 30 x^4 + 24 x^3 + 12 x^2 - 8 x - 1)"},
      {{"h", -5}, "-(x - 1) (x^2 - 2 x - 1) (x^4 - 4 x^3 + 2 x^2 + 4 x - 1)"},
      {{"g", -4}, "-(x^6 - 5 x^5 + 5 x^4 + 6 x^3 - 7 x^2 - 2 x + 1)"},
      {{"h", -4}, "- (x - 1) x (x^2 - 2 x - 2)"},
      {{"g", -3}, "(x - 1) (x^4 - 4 x^3 + x^2 + 6 x + 1)"},
      {{"h", -3}, "x^3 - 3 x^2 + 1"},
      {{"g", -2}, "x^3 - 2 x^2 - x + 1"},
      {{"h", -2}, "x"},
      {{"g", -1}, "-(x^2-2x-1)"},
      {{"h", -1}, "-1"},
      {{"g", 0}, "-1"},
      {{"h", 0}, "0"},
      {{"g", 1}, "x-1"},
      {{"h", 1}, "1"},
      {{"g", 2}, "-(x^2 - x - 1)"},
      {{"h", 2}, "-x"},
      {{"g", 3}, "-(x^4 - 4 x^3 + 2 x^2 + 4 x - 1)"},
      {{"h", 3}, "- (x^3 - 3 x^2 + 1)"},
      {{"g", 4}, "x^5 - 4 x^4 + 2 x^3 + 5 x^2 - 2 x - 1"},
      {{"h", 4}, "(x - 1) x (x^2 - 2 x - 2)"},
      {{"g", 5}, "(x - 1)(x^6 - 6 x^5 + 8 x^4 + 8 x^3 - 13 x^2 - 6 x + 1)"},
      {{"h", 5}, "(x^2 - 3 x + 1) (x^4 - 3 x^3 - x^2 + 3 x + 1)"},
      {{"f", -3}, "y^6-(3 x^2+1) y^5 + (3 x^4 + 8 x^2-5) y^4- (x^6 +13 x^4 -6 x^2-4) y^3 + (6 x^6 + 11 x^4 - 24 x^2+6) y^2 - (12 x^6 - 16 x^4 - 2 x^2+3) y +(8 x^6 - 20 x^4 + 12 x^2 - 1)"},
      {{"f", -2}, "y^4 -(2 x^2 + 1) y^3+ (x^4 + 5 x^2 - 3) y^2 - (4 x^4 - x^2 - 2) y + (4 x^4 - 6 x^2 + 1)"},
      {{"f", -1}, "y^2 -(x^2 +1) y + (2 x^2 - 1)"},
      {{"f", 0}, "1"},
      {{"f", 1}, "y-1"},
      {{"f", 2}, "y^3 -(x^2+1)y^2 + (3 x^2-2) y - (2 x^2 - 1)"},
      {{"f", 3}, "y^5-(2 x^2 + 1) y^4 + (x^4 + 6 x^2 - 4) y^3 -( 5 x^4-3) y^2 + (8 x^4 - 11 x^2 + 3) y - (4 x^4 - 6 x^2 + 1)"},
      {{"tau", -3}, "-2 (x^2 y - 2 x^2 - y^2 + 1) (x^3 y - 2 x^3 - x^2 y + 2 x^2 - x y^2 + 2 x + y^2 - 1)"},
      {{"tau", -2}, "2 (x^3 y - 2 x^3 - x^2 y + 2 x^2 - x y^2 + x + y^2)"},
      {{"tau", -1}, "-2 (x - 1)"},
      {{"tau", 0}, "0"},
      {{"tau", 1}, "2"},
      {{"tau", 2}, "-2 (x^2 y - 2 x^2 + x - y^2)"},
      {{"tau", 3}, "2 (x^2 y - 2 x^2 - y^2 + 1) (x^2 y - 2 x^2 + x - y^2 + 1)"},
  };
  return m;
}

}  // namespace

std::optional<std::string> table_form(const std::string& family, int n) {
  auto it = forms().find({family, n});
  if (it == forms().end()) return std::nullopt;
  return it->second;
}

}  // namespace twistor::families
