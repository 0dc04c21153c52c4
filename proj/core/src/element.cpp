#include "bessel/element.hpp"

namespace bessel {

namespace {

std::string term_text(const Rational& c, const std::string& body, bool first) {
  std::string out;
  const bool negative = sgn(c) < 0;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational magnitude = negative ? Rational(-c) : c;
  if (magnitude != 1) out += to_string(magnitude) + "*";
  return out + body;
}

template <class Combo>
std::string combination_text(const Combo& x, const char* suffix) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : x.terms()) {
    out += term_text(c, "[" + f.text() + "]" + suffix, first);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const Element& x) { return combination_text(x, ""); }
std::string to_string(const DualElement& x) { return combination_text(x, "*"); }

std::string to_string(const TensorElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    out += term_text(c, "[" + k[0].text() + "]x[" + k[1].text() + "]", first);
    first = false;
  }
  return out;
}

}  // namespace bessel
