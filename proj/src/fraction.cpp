#include "lug/fraction.hpp"

#include <numeric>
#include <stdexcept>

#include "lug/error.hpp"
#include "lug/verdict.hpp"

namespace lug {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::InvalidArgument, "tangle fraction overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::InvalidArgument, "tangle fraction overflow");
  return out;
}

}  // namespace

TangleFraction::TangleFraction(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::InvalidArgument, "0/0 is not a tangle fraction");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
  p_ = p / g;
  q_ = q / g;
}

TangleFraction TangleFraction::bottom_twist(std::int64_t n) const {
  // 1 / (n + q/p) = p / (n p + q)
  return TangleFraction(p_, checked_add(checked_mul(n, p_), q_));
}

TangleFraction TangleFraction::right_twist(std::int64_t n) const {
  if (is_infinite()) return *this;
  return TangleFraction(checked_add(p_, checked_mul(n, q_)), q_);
}

std::string TangleFraction::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Splittable: return "splittable";
    case VerdictKind::Unsplittable: return "unsplittable";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ReidemeisterKind kind) noexcept {
  switch (kind) {
    case ReidemeisterKind::R1: return "R1";
    case ReidemeisterKind::R2: return "R2";
    case ReidemeisterKind::R3: return "R3";
  }
  return "?";
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvalidDiagram: return "invalid_diagram";
    case ErrorCode::IllegalMove: return "illegal_move";
    case ErrorCode::OutOfTurn: return "out_of_turn";
    case ErrorCode::StaleVersion: return "stale_version";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::BoundExceeded: return "bound_exceeded";
    case ErrorCode::Inapplicable: return "inapplicable";
    case ErrorCode::ContractViolation: return "contract_violation";
  }
  return "?";
}

}  // namespace lug
