#include "qca/classical.hpp"

#include <cstdlib>

namespace qca {

namespace {

CPoly U(CVar v, int k = 1) { return CPoly::var(v, k); }

}  // namespace

// Exchange matrices -------------------------------------------------------------

ExchangeMatrix::ExchangeMatrix(std::vector<std::string> names, int mutable_count, std::vector<std::vector<int>> entries)
    : names_(std::move(names)), mutable_count_(mutable_count), b_(std::move(entries)) {
  if (mutable_count_ < 0 || mutable_count_ > rows()) throw AlgebraError("ExchangeMatrix: bad mutable count");
  if (static_cast<int>(b_.size()) != rows()) throw AlgebraError("ExchangeMatrix: row count mismatch");
  for (const auto& row : b_)
    if (static_cast<int>(row.size()) != mutable_count_) throw AlgebraError("ExchangeMatrix: column count mismatch");
}

ExchangeMatrix ExchangeMatrix::from_quiver(std::vector<std::string> names, int mutable_count,
                                           const std::vector<std::pair<int, int>>& arrows) {
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> b(n, std::vector<int>(mutable_count, 0));
  for (const auto& [from, to] : arrows) {
    if (from < 0 || from >= n || to < 0 || to >= n || from == to) throw AlgebraError("from_quiver: bad arrow");
    if (from < mutable_count) b[to][from] += 1;
    if (to < mutable_count) b[from][to] -= 1;
  }
  return ExchangeMatrix(std::move(names), mutable_count, std::move(b));
}

ExchangeMatrix ExchangeMatrix::mutate(int k, const std::string& new_name) const {
  if (k < 0 || k >= mutable_count_) throw AlgebraError("mutate: index out of range");
  auto b = b_;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < mutable_count_; ++j) {
      if (i == k || j == k)
        b[i][j] = -b_[i][j];
      else
        b[i][j] = b_[i][j] + (std::abs(b_[i][k]) * b_[k][j] + b_[i][k] * std::abs(b_[k][j])) / 2;
    }
  auto names = names_;
  if (!new_name.empty()) names[k] = new_name;
  return ExchangeMatrix(std::move(names), mutable_count_, std::move(b));
}

ExchangeMatrix ExchangeMatrix::reorder_mutable(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != mutable_count_) throw AlgebraError("reorder_mutable: bad permutation");
  std::vector<int> perm(rows());
  for (int i = 0; i < rows(); ++i) perm[i] = i < mutable_count_ ? order[i] : i;
  std::vector<std::string> names(rows());
  std::vector<std::vector<int>> b(rows(), std::vector<int>(mutable_count_));
  for (int i = 0; i < rows(); ++i) {
    names[i] = names_[perm[i]];
    for (int j = 0; j < mutable_count_; ++j) b[i][j] = b_[perm[i]][perm[j]];
  }
  return ExchangeMatrix(std::move(names), mutable_count_, std::move(b));
}

bool ExchangeMatrix::principal_part_skew_symmetric() const {
  for (int i = 0; i < mutable_count_; ++i)
    for (int j = 0; j < mutable_count_; ++j)
      if (b_[i][j] != -b_[j][i]) return false;
  return true;
}

std::string ExchangeMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    s += names_[i] + ":";
    for (int j = 0; j < mutable_count_; ++j) s += " " + std::to_string(b_[i][j]);
    s += "\n";
  }
  return s;
}

ExchangeMatrix initial_exchange_matrix() {
  // Arrows of the initial quiver over (U0, U1, P0, P1).
  return ExchangeMatrix::from_quiver({"U0", "U1", "P0", "P1"}, 2,
                                     {{3, 2}, {3, 2}, {2, 1}, {2, 1}, {1, 0}, {1, 0}, {1, 3}, {0, 2}});
}

ExchangeMatrix shifted_exchange_matrix() {
  return ExchangeMatrix({"U1", "U2", "P0", "P1"}, 2, {{0, 2}, {-2, 0}, {0, -1}, {1, 0}});
}

// Seeds --------------------------------------------------------------------------

Seed Seed::mutate(int k, const std::string& new_name) const {
  CPoly plus = 1, minus = 1;
  for (int i = 0; i < matrix.rows(); ++i) {
    const int b = matrix.entry(i, k);
    if (b > 0) plus *= variables[i].pow(b);
    if (b < 0) minus *= variables[i].pow(-b);
  }
  auto q = (plus + minus).divide_exact(variables[k]);
  if (!q) throw AlgebraError("Seed::mutate: exchange polynomial is not divisible");
  Seed next{variables, matrix.mutate(k, new_name)};
  next.variables[k] = *q;
  return next;
}

Seed shifted_initial_seed() {
  return Seed{{U(CVar::U1), U(CVar::U2), U(CVar::P0), U(CVar::P1)}, shifted_exchange_matrix()};
}

CPoly cluster_variable(int n) {
  if (n < 1) return cluster_variable(3 - n).swap_symmetry();
  if (n == 1) return U(CVar::U1);
  if (n == 2) return U(CVar::U2);
  Seed s = shifted_initial_seed();
  // Position 0 holds the odd-indexed variable, position 1 the even-indexed one.
  for (int m = 3; m <= n; ++m) s = s.mutate(m % 2 == 1 ? 0 : 1, "U" + std::to_string(m));
  return s.variables[n % 2 == 1 ? 0 : 1];
}

// Explicit formulas ----------------------------------------------------------------

Integer extended_binomial(int m, int j) {
  if (j < 0) return 0;
  Integer r;
  const Integer mm = m;
  mpz_bin_ui(r.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(j));
  return r;
}

namespace {

/// Calls f(k, l) over k + l <= n, k, l >= 0, and (k, l) = (n+1, 0).
template <class F>
void for_each_index(int n, F f) {
  for (int k = 0; k <= n; ++k)
    for (int l = 0; k + l <= n; ++l) f(k, l);
  f(n + 1, 0);
}

Rational to_rational(const Integer& x) { return Rational(x); }

}  // namespace

CPoly cluster_formula(int n) {
  if (n < 0) throw AlgebraError("cluster_formula: n must be nonnegative");
  CPoly sum;
  for_each_index(n, [&](int k, int l) {
    const Integer c = extended_binomial(n - k, l) * extended_binomial(n + 1 - l, k);
    if (c == 0) return;
    CPoly::Exponents e{0, 2 * k, 2 * l, 0, n + 1 - k, n - l};
    sum += CPoly::monomial(e, to_rational(c));
  });
  return sum * CPoly::monomial({0, -n, -(n + 1), 0, 0, 0});
}

Integer cluster_coefficient(int n, int a, int b) {
  Integer sum = 0;
  for_each_index(n, [&](int k, int l) {
    Integer t = extended_binomial(n - k, l) * extended_binomial(n + 1 - l, k) * extended_binomial(n + 1 - k, a) *
                extended_binomial(n - l, b);
    if ((k + l + a + b + 1) % 2 != 0) t = -t;
    sum += t;
  });
  return sum;
}

CPoly polynomial_form(int n) {
  const CPoly p = cluster_formula(n).expand_frozen();
  if (!p.is_polynomial()) throw AlgebraError("polynomial_form: result is not a polynomial");
  CPoly from_coefficients;
  for (int a = 0; a <= n + 1; ++a)
    for (int b = 0; b <= n; ++b) {
      const Integer c = cluster_coefficient(n, a, b);
      if (c == 0) continue;
      const int e2 = n + 2 - 2 * a + b, e1 = n - 1 - 2 * b + a;
      if (e2 < 0 || e1 < 0) throw AlgebraError("polynomial_form: nonzero coefficient at a negative exponent");
      from_coefficients += CPoly::monomial({a, e2, e1, b, 0, 0}, to_rational(c));
    }
  if (!(from_coefficients == p)) throw AlgebraError("polynomial_form: coefficient formula disagrees");
  return p;
}

CPoly coefficient_free_formula(int n) {
  if (n < 0) throw AlgebraError("coefficient_free_formula: n must be nonnegative");
  CPoly sum;
  for_each_index(n, [&](int k, int l) {
    const Integer c = extended_binomial(n - k, l) * extended_binomial(n + 1 - l, k);
    if (c != 0) sum += CPoly::monomial({0, 0, 2 * k, 2 * l, 0, 0}, to_rational(c));
  });
  return sum * CPoly::monomial({0, 0, -n, -(n + 1), 0, 0});
}

CPoly coefficient_free_variable(int n) {
  if (n < 1) return coefficient_free_variable(3 - n).swap_symmetry();
  CPoly prev = U(CVar::U1), cur = U(CVar::U2);
  if (n == 1) return prev;
  for (int m = 3; m <= n; ++m) {
    auto next = (cur * cur + 1).divide_exact(prev);
    if (!next) throw AlgebraError("coefficient_free_variable: exchange polynomial is not divisible");
    prev = std::move(cur);
    cur = std::move(*next);
  }
  return cur;
}

CPoly shift_initial_seed(const CPoly& x) {
  CPoly r;
  for (const auto& [e, c] : x.terms()) {
    if (e[0] != 0 || e[1] != 0) throw AlgebraError("shift_initial_seed: U2 or U3 present");
    r += CPoly::monomial({0, e[2], e[3], 0, e[4], e[5]}, c);
  }
  return r;
}

CPoly coefficient_free_T() {
  return (1 + U(CVar::U1, 2) + U(CVar::U2, 2)) * CPoly::monomial({0, -1, -1, 0, 0, 0});
}

CPoly z_laurent() {
  const CPoly P1 = U(CVar::P1), P0 = U(CVar::P0);
  return (P1 * P0 + P1 * U(CVar::U1, 2) + P0 * U(CVar::U2, 2)) * CPoly::monomial({0, -1, -1, 0, 0, 0});
}

CPoly z_polynomial() { return U(CVar::U3) * U(CVar::U0) - U(CVar::U2) * U(CVar::U1); }

CPoly chebyshev_basis_element(int k, ChebyshevKind kind) {
  if (k < 0) throw AlgebraError("chebyshev_basis_element: k must be nonnegative");
  const CPoly z = z_polynomial(), p = U(CVar::P1) * U(CVar::P0);
  CPoly prev = kind == ChebyshevKind::S ? CPoly(1) : CPoly(2), cur = z;
  if (k == 0) return prev;
  for (int m = 1; m < k; ++m) {
    CPoly next = z * cur - p * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CPoly cluster_monomial(int n, int a1, int a2, int a3, int a4) {
  if (a1 < 0 || a2 < 0 || a3 < 0 || a4 < 0) throw AlgebraError("cluster_monomial: exponents must be nonnegative");
  return cluster_variable(n + 1).pow(a1) * cluster_variable(n).pow(a2) * CPoly::var(CVar::P1, a3) *
         CPoly::var(CVar::P0, a4);
}

}  // namespace qca
