#pragma once

#include <array>
#include <map>
#include <string>

#include "qca/classical.hpp"
#include "qca/pbw.hpp"
#include "qca/report.hpp"

namespace qca {

using IntMatrix4 = std::array<std::array<int, 4>, 4>;
using TorusExponent = std::array<int, 4>;  // exponents of (X_n, X_{n+1}, Y_0, Y_1)

/// Quasi-commutation matrix of the cluster (X_n, X_{n+1}, Y_0, Y_1): x_i x_j = q^{L_ij} x_j x_i.
IntMatrix4 L_matrix(int n);
/// Exchange matrix of the same cluster, rows (X_n, X_{n+1}, Y_0, Y_1).
ExchangeMatrix quantum_exchange_matrix(int n);

/// X_n: q^{-1/2} u_n for 0 <= n <= 3, q^{-(2n-5)^2/2} B[n-2,0,0,n-3] for n >= 3.
PbwElement rescaled_X(int n);
/// Y_0 = q^{-2} p_0, Y_1 = q^{-2} p_1.
PbwElement rescaled_Y(int i);

/// Twice the exponent of the normalizing power: sum_{i>j} a_i a_j L_ij.
int torus_twice_exponent(const TorusExponent& a, int n);
/// The same scalar from its expanded form -a1a2 - (n-1)a1a3 + (n-4)a1a4 - n a2a3 + (n-3)a2a4 + 2a3a4.
int torus_exponent_expanded(const TorusExponent& a, int n);

/**
 * Element of the quantum torus of (X_n, X_{n+1}, Y_0, Y_1): a combination of
 * normalized monomials M(a), multiplied by
 * M(a) M(b) = q^{(1/2) sum_{i>j} (a_i b_j - a_j b_i) L_ij} M(a + b).
 */
class TorusElement {
 public:
  using TermMap = std::map<TorusExponent, LaurentQ>;

  explicit TorusElement(int n);
  TorusElement(int n, const LaurentQ& c);
  /// c * M(a).
  static TorusElement monomial(int n, const TorusExponent& a, const LaurentQ& c = 1);
  /// Generator x_i (i = 0..3) raised to the integer power k.
  static TorusElement generator(int n, int i, int k = 1);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const LaurentQ& c, TorusElement a);
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// e.g. "(q^-2)*M(-1,2,0,0) + (1)*M(0,0,0,0)"
  std::string to_string() const;

 private:
  void add_term(const TorusExponent& a, const LaurentQ& c);
  int n_;
  TermMap terms_;
};

/**
 * M(a1, a2, a3, a4) = q^{(1/2) sum_{i>j} a_i a_j L_ij} X_n^a1 X_{n+1}^a2 Y_0^a3 Y_1^a4.
 * Also evaluates the reversed form q^{-(1/2) sum} Y_1^a4 Y_0^a3 X_{n+1}^a2 X_n^a1
 * and the ordered product, and throws AlgebraError unless all three agree.
 */
TorusElement torus_M(const TorusExponent& a, int n);

/// The six pairwise commutations of (X_n, X_{n+1}, Y_0, Y_1) in the algebra, for 3 <= n <= n_max.
Report verify_quasi_commutation(int n_max);
/// B[n,0,0,n-1] B[n+1,0,0,n] = q^2 B[n+1,0,0,n] B[n,0,0,n-1] for 1 <= n <= n_max.
Report verify_adjacent_commutation(int n_max);
/// The exchange relation for 2 <= n <= n_max and its rescaled cleared form for 3 <= n <= n_max.
Report verify_quantum_exchange(int n_max);
/// The torus form of the quantum exchange relation, the prefactor expansion, and
/// compatibility of L(n) with the exchange matrix, for 3 <= n <= n_max.
Report verify_bz_exchange(int n_max);

/// All of the above.
Report qseed_report(int n_max);

}  // namespace qca
