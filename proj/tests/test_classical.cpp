#include "doctest.h"
#include "qca/classical.hpp"

using qca::CPoly;
using qca::CVar;
using qca::ExchangeMatrix;

namespace {

CPoly U(CVar v, int k = 1) { return CPoly::var(v, k); }
const CPoly P0 = U(CVar::P0), P1 = U(CVar::P1);

// Quivers drawn over (mutable..., P0, P1); arrows (from, to).
const std::vector<std::pair<int, int>> kInitialArrows = {{3, 2}, {3, 2}, {2, 1}, {2, 1}, {1, 0}, {1, 0}, {1, 3}, {0, 2}};
// After mutation at U0, over (U2, U1, P0, P1).
const std::vector<std::pair<int, int>> kFirstMutationArrows = {{3, 2}, {3, 2}, {0, 1}, {0, 1}, {1, 3}, {2, 0}};
// After mutation at U0 and then U1, over (U2, U3, P0, P1).
const std::vector<std::pair<int, int>> kSecondMutationArrows = {{3, 2}, {3, 2}, {1, 0}, {1, 0}, {0, 3}, {0, 3}, {3, 1}, {2, 0}};

}  // namespace

TEST_CASE("extended binomials") {
  CHECK(qca::extended_binomial(5, 2) == 10);
  CHECK(qca::extended_binomial(2, 5) == 0);
  CHECK(qca::extended_binomial(-1, 0) == 1);
  CHECK(qca::extended_binomial(-1, 3) == -1);
  CHECK(qca::extended_binomial(3, -1) == 0);
}

TEST_CASE("first cluster variables") {
  CHECK(qca::cluster_variable(3) == (U(CVar::U2, 2) + P1) * U(CVar::U1).pow(-1));
  CHECK(qca::cluster_variable(0) == (U(CVar::U1, 2) + P0) * U(CVar::U2).pow(-1));
  CHECK(qca::cluster_formula(0) == qca::cluster_variable(3));
  // The polynomial images of U3 and U0 are the variables themselves.
  CHECK(qca::cluster_variable(3).expand_frozen() == U(CVar::U3));
  CHECK(qca::cluster_variable(0).expand_frozen() == U(CVar::U0));
}

TEST_CASE("U4 as a polynomial") {
  const CPoly u4 = U(CVar::U3, 2) * U(CVar::U0) - 2 * U(CVar::U3) * U(CVar::U2) * U(CVar::U1) + U(CVar::U2, 3);
  CHECK(qca::polynomial_form(1) == u4);
  CHECK(qca::polynomial_form(1).to_string() == "U3^2*U0 - 2*U3*U2*U1 + U2^3");
  CHECK(qca::cluster_formula(1) == qca::cluster_variable(4));
}

TEST_CASE("exchange relations for n = 4..10") {
  for (int n = 4; n <= 10; ++n) {
    INFO("n = " << n);
    const CPoly lhs = qca::cluster_variable(n + 1) * qca::cluster_variable(n - 1);
    const CPoly rhs = qca::cluster_variable(n).pow(2) + P1.pow(n - 1) * P0.pow(n - 4);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Laurent phenomenon and the explicit formula") {
  for (int n = 1; n <= 11; ++n) {
    INFO("n = " << n);
    const CPoly u = qca::cluster_variable(n);
    CHECK(u.denominators_only_in({CVar::U1, CVar::U2}));
    CHECK(u.max_degree(CVar::U3) == 0);
    CHECK(u.max_degree(CVar::U0) == 0);
    if (n >= 3) CHECK(qca::cluster_formula(n - 3) == u);
  }
  for (int n = -4; n <= 0; ++n) CHECK(qca::cluster_variable(n).denominators_only_in({CVar::U1, CVar::U2}));
}

TEST_CASE("polynomiality and the coefficient formula") {
  for (int n = 0; n <= 8; ++n) {
    INFO("n = " << n);
    const CPoly p = qca::polynomial_form(n);
    CHECK(p.is_polynomial());
    CHECK(p.max_degree(CVar::P0) == 0);
    CHECK(p.max_degree(CVar::P1) == 0);
    for (int a = 0; a <= n + 1; ++a)
      for (int b = 0; b <= n; ++b)
        if (n + 2 - 2 * a + b < 0 || n - 1 - 2 * b + a < 0) CHECK(qca::cluster_coefficient(n, a, b) == 0);
  }
  // U4 = U3^2U0 - 2U3U2U1 + U2^3.
  CHECK(qca::cluster_coefficient(1, 2, 1) == 1);
  CHECK(qca::cluster_coefficient(1, 1, 0) == -2);
  CHECK(qca::cluster_coefficient(1, 0, 0) == 1);
}

TEST_CASE("coefficient-free formula matches the specialized cluster variables") {
  for (int n = 0; n <= 8; ++n) {
    INFO("n = " << n);
    const CPoly shifted = qca::shift_initial_seed(qca::coefficient_free_formula(n));
    CHECK(shifted == qca::coefficient_free_variable(n + 3));
    CHECK(shifted == qca::cluster_formula(n).set_one(CVar::P0).set_one(CVar::P1));
  }
}

TEST_CASE("three-term recursions") {
  const CPoly T = qca::coefficient_free_T();
  for (int n = -3; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(qca::coefficient_free_variable(n + 1) ==
          T * qca::coefficient_free_variable(n) - qca::coefficient_free_variable(n - 1));
  }
  // T = U3U0 - U2U1 after specializing the coefficients.
  const CPoly u3 = qca::coefficient_free_variable(3), u0 = qca::coefficient_free_variable(0);
  CHECK(T == u3 * u0 - U(CVar::U2) * U(CVar::U1));

  const CPoly z = qca::z_laurent();
  CHECK(z == qca::cluster_variable(3) * qca::cluster_variable(0) - U(CVar::U2) * U(CVar::U1));
  for (int k = 4; k <= 10; ++k) {
    INFO("k = " << k);
    CHECK(qca::cluster_variable(k + 1) == z * qca::cluster_variable(k) - P1 * P0 * qca::cluster_variable(k - 1));
  }
}

TEST_CASE("Chebyshev basis elements") {
  using qca::ChebyshevKind;
  const CPoly z = qca::z_polynomial();
  CHECK(qca::chebyshev_basis_element(0, ChebyshevKind::S) == CPoly(1));
  CHECK(qca::chebyshev_basis_element(1, ChebyshevKind::S) == z);
  CHECK(qca::chebyshev_basis_element(2, ChebyshevKind::S) == z * z - P1 * P0);
  CHECK(qca::chebyshev_basis_element(0, ChebyshevKind::T) == CPoly(2));
  CHECK(qca::chebyshev_basis_element(2, ChebyshevKind::T) == z * z - 2 * P1 * P0);
  // With P1P0 = 1 the elements are the Chebyshev polynomials evaluated at z.
  const auto s3 = qca::chebyshev_basis_element(3, ChebyshevKind::S).set_one(CVar::P0).set_one(CVar::P1);
  CHECK(s3 == z.pow(3) - 2 * z);
  const auto t4 = qca::chebyshev_basis_element(4, ChebyshevKind::T).set_one(CVar::P0).set_one(CVar::P1);
  CHECK(t4 == z.pow(4) - 4 * z.pow(2) + 2);
}

TEST_CASE("exchange matrix mutation reproduces the quivers") {
  const ExchangeMatrix b0 = qca::initial_exchange_matrix();
  CHECK(b0.principal_part_skew_symmetric());
  const ExchangeMatrix b1 = b0.mutate(0, "U2");
  const ExchangeMatrix fig1 = ExchangeMatrix::from_quiver({"U2", "U1", "P0", "P1"}, 2, kFirstMutationArrows);
  CHECK(b1 == fig1);
  const ExchangeMatrix b2 = b1.mutate(1, "U3");
  CHECK(b2 == ExchangeMatrix::from_quiver({"U2", "U3", "P0", "P1"}, 2, kSecondMutationArrows));
  CHECK(b1.reorder_mutable({1, 0}) == qca::shifted_exchange_matrix());
  CHECK(b0 == ExchangeMatrix::from_quiver({"U0", "U1", "P0", "P1"}, 2, kInitialArrows));
  for (int k = 0; k < 2; ++k) {
    CHECK(b0.mutate(k).mutate(k) == b0);
    CHECK(b0.mutate(k).principal_part_skew_symmetric());
  }
  CHECK_THROWS_AS(b0.mutate(2), qca::AlgebraError);
}

TEST_CASE("seed mutation produces the exchange relations") {
  const auto seed = qca::shifted_initial_seed();
  const auto s1 = seed.mutate(0);
  CHECK(s1.variables[0] * U(CVar::U1) == U(CVar::U2, 2) + P1);
  const auto s2 = seed.mutate(1);
  CHECK(s2.variables[1] * U(CVar::U2) == U(CVar::U1, 2) + P0);
  CHECK(s1.mutate(0).variables[0] == U(CVar::U1));
}

TEST_CASE("cluster monomials") {
  CHECK(qca::cluster_monomial(1, 0, 0, 0, 0) == CPoly(1));
  CHECK(qca::cluster_monomial(1, 1, 1, 1, 0) == U(CVar::U2) * U(CVar::U1) * P1);
  CHECK(qca::cluster_monomial(3, 1, 0, 0, 0).expand_frozen() == qca::polynomial_form(1));
}
