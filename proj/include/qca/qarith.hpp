#pragma once

#include <string>
#include <vector>

#include "qca/laurent.hpp"

namespace qca {

/// [k] = (q^k - q^-k) / (q - q^-1); [-k] = -[k].
LaurentQ quantum_int(int k);

/// Quantum binomial [n k]; zero for k < 0. Defined for negative n as well.
LaurentQ quantum_binom(int n, int k);

/// [k]! = [k][k-1]...[1], with [0]! = 1.
LaurentQ quantum_factorial(int k);

inline LaurentQ bar(const LaurentQ& x) { return x.bar(); }

/// Greatest common divisor in Q[q^{1/2}, q^{-1/2}], normalized to have lowest
/// exponent 0 and leading coefficient 1; gcd(0, 0) = 0.
LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b);

/// Dense univariate polynomial over Z in X; coefficient i belongs to X^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly monomial(int degree, const Integer& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;

  /// Horner evaluation at a Laurent polynomial.
  LaurentQ evaluate(const LaurentQ& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "X^4 - 4*X^2 + 2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Normalized Chebyshev polynomials: T_0 = 2, T_1 = X, S_0 = 1, S_1 = X,
/// and f_{k+1} = X f_k - f_{k-1}.
IntPoly chebyshev_T(int k);
IntPoly chebyshev_S(int k);

/**
 * Splits a bar-antisymmetric x in q Z[q] - q^-1 Z[q^-1] as x = phi - bar(phi)
 * and returns phi (the strictly positive part of x).
 *
 * Throws AlgebraError unless x is integral in q, has integer coefficients,
 * a zero constant term and satisfies bar(x) = -x.
 */
LaurentQ split_antisymmetric(const LaurentQ& x);

}  // namespace qca
