#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qca {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an algebraic invariant that the algorithms rely on is violated.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers on malformed input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Sparse Laurent polynomial in q^{1/2} with rational coefficients.
 *
 * A term is stored as (h, c) meaning c * q^{h/2}; terms are kept sorted by
 * increasing h and no stored coefficient is zero. The zero polynomial has no
 * terms. Elements with only even h lie in Q[q, q^-1] (see is_integral()).
 */
class LaurentQ {
 public:
  using Term = std::pair<int, Rational>;

  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  LaurentQ(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * q^{half/2}
  static LaurentQ half_power(int half, const Rational& c = 1);
  /// c * q^k
  static LaurentQ q_power(int k, const Rational& c = 1) { return half_power(2 * k, c); }
  /// Build from arbitrary (possibly unsorted, repeated, zero) terms.
  static LaurentQ from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Every exponent is an integer power of q.
  bool is_integral() const;
  bool has_integer_coefficients() const;

  /// Coefficient of q^{half/2}.
  Rational coeff_half(int half) const;
  Rational coeff(int k) const { return coeff_half(2 * k); }
  int min_half() const;
  int max_half() const;
  const Rational& leading_coeff() const;

  /// q -> q^{-1}
  LaurentQ bar() const;
  /// Multiplication by q^{half/2}.
  LaurentQ shifted_half(int half) const;
  LaurentQ shifted(int k) const { return shifted_half(2 * k); }
  /// Sum of coefficients, i.e. the value at q = 1.
  Rational eval_at_one() const;
  /// Value at a nonzero rational q; requires is_integral().
  Rational evaluate(const Rational& q) const;
  /// Terms with strictly positive exponent.
  LaurentQ positive_part() const;

  /// Exact quotient in Q[q^{1/2}, q^{-1/2}], or nullopt when `d` does not divide.
  std::optional<LaurentQ> divide_exact(const LaurentQ& d) const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ& operator*=(const Rational& c);
  /// this += a * b without materialising the product separately.
  void add_product(const LaurentQ& a, const LaurentQ& b);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(LaurentQ a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering, e.g. "q^2 + 1 + q^-2", "-q^(3/2) + 1/2*q".
  std::string to_string() const;
  /// LaTeX rendering, e.g. "q^{2} + 1 + q^{-2}".
  std::string to_latex() const;
  /// Inverse of to_string().
  static LaurentQ parse(std::string_view text);

 private:
  void normalize();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentQ& x);

/// Strict weak ordering used only to put Laurent polynomials into ordered containers.
bool lexicographic_less(const LaurentQ& a, const LaurentQ& b);

/// Renders a rational as "a" or "a/b".
std::string rational_to_string(const Rational& r);

}  // namespace qca
