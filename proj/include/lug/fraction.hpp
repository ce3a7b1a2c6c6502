#pragma once

#include <cstdint>
#include <string>

namespace lug {

// Extended rational p/q with q >= 0, gcd(|p|, q) = 1. q == 0 is infinity (stored as 1/0).
class TangleFraction {
public:
  constexpr TangleFraction() = default;
  TangleFraction(std::int64_t p, std::int64_t q);

  static TangleFraction infinity() { return TangleFraction(1, 0); }
  static TangleFraction zero() { return TangleFraction(0, 1); }

  std::int64_t numerator() const noexcept { return p_; }
  std::int64_t denominator() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0; }

  // Bottom twist: f -> 1 / (n + 1/f).
  TangleFraction bottom_twist(std::int64_t n) const;
  // Right twist: f -> f + n.
  TangleFraction right_twist(std::int64_t n) const;
  TangleFraction reciprocal() const { return TangleFraction(q_, p_); }
  TangleFraction negated() const { return TangleFraction(-p_, q_); }

  std::string to_string() const;

  friend bool operator==(const TangleFraction&, const TangleFraction&) = default;

private:
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

}  // namespace lug
