#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meander {

// Integer Laurent polynomial in one variable. Coefficients are int64 with
// overflow checks (std::overflow_error), stored densely from the lowest term.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coeff = 1);
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

  bool is_zero() const { return c_.empty(); }
  int min_exponent() const { return lo_; }
  int max_exponent() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient(int e) const;
  std::vector<std::pair<int, std::int64_t>> terms() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  LaurentPolynomial shifted(int k) const;  // times x^k
  LaurentPolynomial inverted() const;      // x -> 1/x
  // Substitutes x -> x^k for k != 0 ...
  LaurentPolynomial scaled_exponents(int k) const;
  // ... and its inverse; throws DomainError if some exponent is not divisible.
  LaurentPolynomial divided_exponents(int k) const;

  bool operator==(const LaurentPolynomial& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  // Total order: by lowest exponent, then coefficients from the lowest term.
  bool operator<(const LaurentPolynomial& o) const;

  // "[[e,c],[e,c],...]" sorted by exponent; "[]" for zero.
  std::string serialize() const;
  static LaurentPolynomial parse(std::string_view s);
  // Human readable, e.g. "-A^-5 - A^3 + A^7".
  std::string pretty(std::string_view var) const;

  std::uint64_t eval_mod(std::uint64_t x) const;  // modulo ModP::kP

 private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct ModP {
  static constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  ModP() = default;
  explicit ModP(std::uint64_t x) : v(x % kP) {}
  static ModP from_signed(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(kP);
    if (r < 0) r += static_cast<std::int64_t>(kP);
    return ModP(static_cast<std::uint64_t>(r));
  }
  ModP operator+(ModP o) const {
    ModP r;
    r.v = v + o.v;
    if (r.v >= kP) r.v -= kP;
    return r;
  }
  ModP operator-(ModP o) const {
    ModP r;
    r.v = v >= o.v ? v - o.v : v + kP - o.v;
    return r;
  }
  ModP operator-() const { return ModP() - *this; }
  ModP operator*(ModP o) const {
    unsigned __int128 x = static_cast<unsigned __int128>(v) * o.v;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kP), hi = static_cast<std::uint64_t>(x >> 61);
    ModP r;
    r.v = lo + hi;
    if (r.v >= kP) r.v -= kP;
    return r;
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP pow(std::int64_t e) const;
  ModP inverse() const { return pow(static_cast<std::int64_t>(kP - 2)); }
  bool is_zero() const { return v == 0; }
  bool operator==(const ModP&) const = default;
};

}  // namespace meander
