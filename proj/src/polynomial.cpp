#include "meander/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "meander/codes.hpp"
#include "meander/errors.hpp"

namespace meander {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coeff) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.lo_ = exponent;
    p.c_ = {coeff};
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p += monomial(e, c);
  return p;
}

void LaurentPolynomial::trim() {
  size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  if (a > 0 || b < c_.size()) c_ = std::vector<std::int64_t>(c_.begin() + a, c_.begin() + b);
  lo_ += static_cast<int>(a);
}

std::int64_t LaurentPolynomial::coefficient(int e) const {
  if (c_.empty() || e < lo_ || e > max_exponent()) return 0;
  return c_[e - lo_];
}

std::vector<std::pair<int, std::int64_t>> LaurentPolynomial::terms() const {
  std::vector<std::pair<int, std::int64_t>> t;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return t;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_), hi = std::max(max_exponent(), o.max_exponent());
  std::vector<std::int64_t> c(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] = add_checked(c[o.lo_ - lo + i], o.c_[i]);
  lo_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& x : r.c_) x = mul_checked(x, -1);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPolynomial r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = add_checked(r.c_[i + j], mul_checked(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial r;
  if (is_zero()) return r;
  r.lo_ = -max_exponent();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled_exponents(int k) const {
  if (k == 0) throw DomainError("exponent scale must be nonzero");
  LaurentPolynomial r;
  for (auto [e, c] : terms()) r += monomial(e * k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::divided_exponents(int k) const {
  if (k == 0) throw DomainError("exponent scale must be nonzero");
  LaurentPolynomial r;
  for (auto [e, c] : terms()) {
    if (e % k != 0) throw DomainError("exponent not divisible");
    r += monomial(e / k, c);
  }
  return r;
}

bool LaurentPolynomial::operator<(const LaurentPolynomial& o) const {
  if (lo_ != o.lo_) return lo_ < o.lo_;
  return c_ < o.c_;
}

std::string LaurentPolynomial::serialize() const {
  std::string s = "[";
  bool first = true;
  for (auto [e, c] : terms()) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(e) + "," + std::to_string(c) + "]";
  }
  return s + "]";
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view s) {
  IntTree t = parse_int_tree(s);
  LaurentPolynomial p;
  for (const auto& pair : t.items) {
    if (pair.leaf || pair.items.size() != 2 || !pair.items[0].leaf || !pair.items[1].leaf)
      throw MalformedInput("polynomial terms must be [exponent, coefficient] pairs");
    p += monomial(pair.items[0].value, pair.items[1].value);
  }
  return p;
}

std::string LaurentPolynomial::pretty(std::string_view var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto [e, c] : terms()) {
    std::int64_t a = c < 0 ? -c : c;
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::uint64_t LaurentPolynomial::eval_mod(std::uint64_t x) const {
  ModP X(x), acc;
  if (is_zero()) return 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * X + ModP::from_signed(c_[i]);
  return (acc * X.pow(lo_)).v;
}

ModP ModP::pow(std::int64_t e) const {
  ModP base = *this, r(1);
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace meander
