#include "facekit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace facekit {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_integer_token(den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
  }
  if (!valid_integer_token(num)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }

  BigInt p(std::string(num));
  BigInt q = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (q == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  Rat r(p, q);  // the (num, den) constructor canonicalizes
  return r;
}

std::string rat_str(const Rat& value) { return value.str(); }

BigInt rat_floor(const Rat& value) {
  BigInt q = numerator(value) / denominator(value);
  // Integer division truncates toward zero; fix up negatives.
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

}  // namespace facekit
