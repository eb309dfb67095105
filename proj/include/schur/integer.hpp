#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace schur {

// Thrown by CheckedInt when a result leaves the int64 range. Callers that
// use the machine-word fast path catch it and redo the work with mpz_class.
struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow") {}
};

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design of the template code

  std::int64_t value() const noexcept { return v_; }
  explicit operator bool() const noexcept { return v_ != 0; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  CheckedInt operator-() const {
    if (v_ == INT64_MIN) throw ArithmeticOverflow();
    return -v_;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend auto operator<=>(CheckedInt a, CheckedInt b) { return a.v_ <=> b.v_; }

 private:
  std::int64_t v_ = 0;
};

// Uniform helpers over CheckedInt and mpz_class.

inline bool is_zero(const CheckedInt& a) { return a.value() == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline int sign_of(const CheckedInt& a) { return (a.value() > 0) - (a.value() < 0); }
inline int sign_of(const mpz_class& a) { return sgn(a); }
inline CheckedInt abs_of(const CheckedInt& a) { return a.value() < 0 ? -a : a; }
inline mpz_class abs_of(const mpz_class& a) { return abs(a); }

// Floor division quotient.
inline CheckedInt floor_div(const CheckedInt& a, const CheckedInt& b) {
  if (b.value() == -1) return -a;
  std::int64_t q = a.value() / b.value(), r = a.value() % b.value();
  if (r != 0 && ((r < 0) != (b.value() < 0))) --q;
  return q;
}
inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const CheckedInt& d, const CheckedInt& a) {
  return d.value() == -1 || a.value() % d.value() == 0;
}
inline bool divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
// Exact quotient; `d` must divide `a`.
inline CheckedInt exact_div(const CheckedInt& a, const CheckedInt& d) {
  if (d.value() == -1) return -a;
  return a.value() / d.value();
}
inline mpz_class exact_div(const mpz_class& a, const mpz_class& d) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline std::tuple<CheckedInt, CheckedInt, CheckedInt> gcd_ext(const CheckedInt& a, const CheckedInt& b) {
  // a, b are never INT64_MIN here in practice; negation would throw anyway
  CheckedInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!is_zero(r)) {
    CheckedInt q = floor_div(old_r, r);
    CheckedInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.value() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}
inline std::tuple<mpz_class, mpz_class, mpz_class> gcd_ext(const mpz_class& a, const mpz_class& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, s, t};
}

inline mpz_class to_mpz(const CheckedInt& a) { return mpz_class(static_cast<long>(a.value())); }
inline const mpz_class& to_mpz(const mpz_class& a) { return a; }

}  // namespace schur
