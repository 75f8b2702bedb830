#include "qca/qarith.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qca {

LaurentQ quantum_int(int k) {
  if (k == 0) return LaurentQ();
  const int sign = k < 0 ? -1 : 1;
  const int m = k < 0 ? -k : k;
  // q^{m-1} + q^{m-3} + ... + q^{1-m}
  std::vector<LaurentQ::Term> terms;
  for (int e = m - 1; e >= 1 - m; e -= 2) terms.emplace_back(2 * e, Rational(sign));
  return LaurentQ::from_terms(std::move(terms));
}

LaurentQ quantum_factorial(int k) {
  if (k < 0) throw AlgebraError("quantum_factorial: negative argument");
  LaurentQ r = 1;
  for (int i = 2; i <= k; ++i) r *= quantum_int(i);
  return r;
}

namespace {

// Nonnegative n uses the q-Pascal recurrence; the table is shared across threads
// and guarded, entries are never modified after insertion.
LaurentQ pascal_binom(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LaurentQ> table;
  if (k < 0 || k > n) return LaurentQ();
  if (k == 0 || k == n) return 1;
  {
    std::lock_guard lock(mutex);
    auto it = table.find({n, k});
    if (it != table.end()) return it->second;
  }
  LaurentQ r = pascal_binom(n - 1, k).shifted(k) + pascal_binom(n - 1, k - 1).shifted(k - n);
  std::lock_guard lock(mutex);
  table.emplace(std::make_pair(n, k), r);
  return r;
}

LaurentQ product_binom(int n, int k) {
  LaurentQ num = 1;
  for (int i = 0; i < k; ++i) num *= quantum_int(n - i);
  auto q = num.divide_exact(quantum_factorial(k));
  if (!q) throw AlgebraError("quantum_binom: inexact division");
  return *q;
}

}  // namespace

LaurentQ quantum_binom(int n, int k) {
  if (k < 0) return LaurentQ();
  if (k == 0) return 1;
  if (n >= 0) return pascal_binom(n, k);
  return product_binom(n, k);
}

namespace {

// Coefficients in t = q^{1/2}, lowest exponent shifted to 0.
std::vector<Rational> dense_in_t(const LaurentQ& x) {
  const int lo = x.min_half();
  std::vector<Rational> v(static_cast<std::size_t>(x.max_half() - lo) + 1);
  for (const auto& [h, c] : x.terms()) v[h - lo] = c;
  return v;
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return LaurentQ();
  if (a.is_zero()) return laurent_gcd(b, b);
  if (b.is_zero()) return laurent_gcd(a, a);
  std::vector<Rational> x = dense_in_t(a), y = dense_in_t(b);
  while (!y.empty()) {
    std::vector<Rational> r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  // Strip powers of t and make the result monic.
  std::size_t lo = 0;
  while (x[lo] == 0) ++lo;
  std::vector<LaurentQ::Term> terms;
  for (std::size_t i = lo; i < x.size(); ++i)
    if (x[i] != 0) terms.emplace_back(static_cast<int>(i - lo), x[i] / x.back());
  return LaurentQ::from_terms(std::move(terms));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

LaurentQ IntPoly::evaluate(const LaurentQ& x) const {
  LaurentQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += LaurentQ(Rational(*it));
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

IntPoly chebyshev(int k, const Integer& c0) {
  if (k < 0) throw AlgebraError("chebyshev: negative index");
  IntPoly prev({c0});
  IntPoly cur = IntPoly::monomial(1);
  if (k == 0) return prev;
  const IntPoly x = IntPoly::monomial(1);
  for (int i = 1; i < k; ++i) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntPoly chebyshev_T(int k) { return chebyshev(k, 2); }
IntPoly chebyshev_S(int k) { return chebyshev(k, 1); }

LaurentQ split_antisymmetric(const LaurentQ& x) {
  if (!x.is_integral()) throw AlgebraError("split_antisymmetric: half-integral exponent in " + x.to_string());
  if (!x.has_integer_coefficients())
    throw AlgebraError("split_antisymmetric: non-integer coefficient in " + x.to_string());
  if (x.coeff_half(0) != 0) throw AlgebraError("split_antisymmetric: nonzero constant term in " + x.to_string());
  if (x.bar() != -x) throw AlgebraError("split_antisymmetric: not bar-antisymmetric: " + x.to_string());
  return x.positive_part();
}

}  // namespace qca
