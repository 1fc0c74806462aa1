#pragma once

#include <cstdint>
#include <string>

namespace faasbench {

// Fixed-point currency amount. One unit is a pico-dollar (1e-12 $) so that
// both billing amounts and per-unit rates (down to fractions of a
// micro-dollar per GB-second) share a single integer representation and
// per-call costs multiply out exactly.
class Money {
public:
  static constexpr std::int64_t kPicoPerDollar = 1'000'000'000'000LL;
  static constexpr std::int64_t kPicoPerMicro = 1'000'000LL;
  static constexpr std::int64_t kPicoPerCent = 10'000'000'000LL;

  constexpr Money() = default;

  static constexpr Money from_pico(std::int64_t pico) { return Money(pico); }
  static constexpr Money from_micro(std::int64_t micro) {
    return Money(micro * kPicoPerMicro);
  }
  static constexpr Money from_cents(std::int64_t cents) {
    return Money(cents * kPicoPerCent);
  }
  static constexpr Money from_dollars(std::int64_t dollars) {
    return Money(dollars * kPicoPerDollar);
  }
  // Parses decimal dollar strings such as "0.20" or "16.6667e-6" is NOT
  // accepted; use plain decimals ("0.0000166667").
  static Money parse_dollars(const std::string& text);

  constexpr std::int64_t pico() const { return pico_; }
  // Rounded half-up; negative amounts round half away from zero.
  std::int64_t cents_rounded() const;
  double dollars() const { return static_cast<double>(pico_) / kPicoPerDollar; }

  // "12.34" with exactly two decimals, the usual billing presentation.
  std::string to_dollar_string() const;
  // Full-precision decimal dollars, no trailing zero trimming surprises.
  std::string to_exact_string() const;

  constexpr Money operator+(Money o) const { return Money(pico_ + o.pico_); }
  constexpr Money operator-(Money o) const { return Money(pico_ - o.pico_); }
  Money& operator+=(Money o) {
    pico_ += o.pico_;
    return *this;
  }
  constexpr auto operator<=>(const Money&) const = default;

  // this * num / den with a 128-bit intermediate, rounded half-up.
  // Throws std::overflow_error when the result leaves the int64 range.
  Money mul_div(std::int64_t num, std::int64_t den) const;
  // this * factor, overflow-checked.
  Money scaled(std::int64_t factor) const;

private:
  constexpr explicit Money(std::int64_t pico) : pico_(pico) {}
  std::int64_t pico_{0};
};

}  // namespace faasbench
