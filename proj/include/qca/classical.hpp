#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qca/cpoly.hpp"

namespace qca {

/**
 * Exchange matrix with rows for all variables (mutable first, then frozen) and
 * columns for the mutable ones. Entry b_ij counts arrows j -> i minus arrows
 * i -> j in the associated quiver.
 */
class ExchangeMatrix {
 public:
  ExchangeMatrix(std::vector<std::string> names, int mutable_count, std::vector<std::vector<int>> entries);

  /// Reads the matrix off a quiver given as a list of arrows (from, to) over `names`.
  static ExchangeMatrix from_quiver(std::vector<std::string> names, int mutable_count,
                                    const std::vector<std::pair<int, int>>& arrows);

  int rows() const { return static_cast<int>(names_.size()); }
  int mutable_count() const { return mutable_count_; }
  int entry(int i, int j) const { return b_[i][j]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& entries() const { return b_; }

  /// Matrix mutation at mutable index k; the variable name at k becomes `new_name` when given.
  ExchangeMatrix mutate(int k, const std::string& new_name = "") const;
  /// Same matrix with the mutable variables listed in the given order.
  ExchangeMatrix reorder_mutable(const std::vector<int>& order) const;
  bool principal_part_skew_symmetric() const;

  /// Equality of entries (names ignored).
  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }
  std::string to_string() const;

 private:
  std::vector<std::string> names_;
  int mutable_count_;
  std::vector<std::vector<int>> b_;
};

/// Matrix of the initial quiver on (U0, U1, P0, P1).
ExchangeMatrix initial_exchange_matrix();
/// Matrix of the seed (U1, U2, P0, P1): rows (0 2), (-2 0), (0 -1), (1 0).
ExchangeMatrix shifted_exchange_matrix();

/// Seed with cluster variables expressed in the initial variables.
struct Seed {
  std::vector<CPoly> variables;  // same order as the matrix rows
  ExchangeMatrix matrix;
  /// Exchange at mutable index k; throws AlgebraError if the exchange polynomial is not divisible.
  Seed mutate(int k, const std::string& new_name = "") const;
};

/// The seed (U1, U2, P0, P1) with the shifted exchange matrix.
Seed shifted_initial_seed();

/// U_n as a Laurent polynomial in U1, U2 with coefficients in Q[P0, P1], for any integer n.
/// Computed by alternating mutations from the seed (U1, U2); n < 1 via the symmetry U_i <-> U_{3-i}, P0 <-> P1.
CPoly cluster_variable(int n);

/// U_{n+3} from the explicit double sum over k + l <= n or (k, l) = (n+1, 0), for n >= 0.
CPoly cluster_formula(int n);

/// Binomial coefficient C(m, j) extended to negative m; zero for j < 0.
Integer extended_binomial(int m, int j);

/// Coefficient c_{n,a,b} of U3^a U2^{n+2-2a+b} U1^{n-1-2b+a} U0^b in U_{n+3}.
Integer cluster_coefficient(int n, int a, int b);

/// U_{n+3} as a polynomial in U3, U2, U1, U0 (n >= 0). Obtained by substituting
/// P0 = U2U0 - U1^2, P1 = U3U1 - U2^2; throws AlgebraError if the result
/// disagrees with the coefficients c_{n,a,b}.
CPoly polynomial_form(int n);

/// Coefficient-free U_{n+2} in the initial cluster (U0, U1), from the double sum (n >= 0).
CPoly coefficient_free_formula(int n);
/// Coefficient-free U_n in U1, U2 from U_{n+1}U_{n-1} = U_n^2 + 1 (any integer n).
CPoly coefficient_free_variable(int n);
/// Renames U0 -> U1 and U1 -> U2 (the variables must not involve U2 or U3).
CPoly shift_initial_seed(const CPoly& x);

/// T = (1 + U1^2 + U2^2) / (U1 U2), coefficient free.
CPoly coefficient_free_T();
/// z = (P1P0 + P1U1^2 + P0U2^2) / (U1 U2).
CPoly z_laurent();
/// z = U3U0 - U2U1.
CPoly z_polynomial();

enum class ChebyshevKind { S, T };

/// s_k (kind S: s_0 = 1) or t_k (kind T: t_0 = 2) with s_1 = t_1 = z and
/// f_{k+1} = z f_k - P1P0 f_{k-1}; z = U3U0 - U2U1, P0 and P1 kept as variables.
CPoly chebyshev_basis_element(int k, ChebyshevKind kind);

/// Cluster monomial U_{n+1}^a1 U_n^a2 P1^a3 P0^a4 in U1, U2 (Laurent form).
CPoly cluster_monomial(int n, int a1, int a2, int a3, int a4);

}  // namespace qca
