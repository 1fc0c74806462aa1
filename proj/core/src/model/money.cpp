#include "faasbench/model/money.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace faasbench {

namespace {

using int128 = __int128;

std::int64_t checked_narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("currency amount exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

// Half-up division, halves away from zero for negative numerators.
int128 div_half_up(int128 num, int128 den) {
  if (den <= 0) throw std::invalid_argument("division by non-positive amount");
  if (num >= 0) return (num + den / 2) / den;
  return -((-num + den / 2) / den);
}

}  // namespace

Money Money::parse_dollars(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  int128 whole = 0;
  bool any_digit = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    ++i;
  }
  int128 frac_pico = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::int64_t scale = kPicoPerDollar / 10;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (scale == 0) throw std::invalid_argument("more than 12 decimal places: " + text);
      frac_pico += static_cast<int128>(text[i] - '0') * scale;
      scale /= 10;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != text.size()) {
    throw std::invalid_argument("malformed currency amount: " + text);
  }
  int128 pico = whole * kPicoPerDollar + frac_pico;
  if (neg) pico = -pico;
  return Money(checked_narrow(pico));
}

std::int64_t Money::cents_rounded() const {
  return checked_narrow(div_half_up(pico_, kPicoPerCent));
}

std::string Money::to_dollar_string() const {
  std::int64_t cents = cents_rounded();
  bool neg = cents < 0;
  if (neg) cents = -cents;
  std::string s = (neg ? "-" : "") + std::to_string(cents / 100) + ".";
  std::int64_t rem = cents % 100;
  if (rem < 10) s += '0';
  s += std::to_string(rem);
  return s;
}

std::string Money::to_exact_string() const {
  std::int64_t p = pico_;
  bool neg = p < 0;
  if (neg) p = -p;
  std::string s = std::to_string(p / kPicoPerDollar);
  std::int64_t frac = p % kPicoPerDollar;
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(0, 12 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    s += "." + f;
  }
  return (neg ? "-" : "") + s;
}

Money Money::mul_div(std::int64_t num, std::int64_t den) const {
  return Money(checked_narrow(div_half_up(static_cast<int128>(pico_) * num, den)));
}

Money Money::scaled(std::int64_t factor) const {
  return Money(checked_narrow(static_cast<int128>(pico_) * factor));
}

}  // namespace faasbench
