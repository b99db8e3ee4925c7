#include "metricgraph/rational.hpp"

#include <cctype>

namespace mg {

std::string to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  out = Integer(std::string(text));
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Integer n;
    if (!parse_integer(text, n)) return std::nullopt;
    return Rational(n);
  }
  Integer num, den;
  if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rational(num, den);
}

}  // namespace mg
