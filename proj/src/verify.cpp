#include "qca/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

#include "qca/classical.hpp"
#include "qca/dcb.hpp"
#include "qca/qarith.hpp"
#include "qca/qseed.hpp"

namespace qca {

namespace {

LaurentQ q(int k) { return LaurentQ::q_power(k); }
PbwElement B(int a3, int a2, int a1, int a0) { return triangular_b_element({a3, a2, a1, a0}); }
PbwElement u(int i) { return generator(i); }

CheckResult compare(const std::string& suite, const std::string& identity, int n, const PbwElement& lhs,
                    const PbwElement& rhs) {
  CheckResult r{suite, identity, n, lhs == rhs, ""};
  if (!r.ok) r.detail = "lhs - rhs = " + (lhs - rhs).to_string();
  return r;
}

CheckResult compare(const std::string& suite, const std::string& identity, int n, const CPoly& lhs,
                    const CPoly& rhs) {
  CheckResult r{suite, identity, n, lhs == rhs, ""};
  if (!r.ok) r.detail = "lhs - rhs = " + (lhs - rhs).to_string();
  return r;
}

CheckResult flag(const std::string& suite, const std::string& identity, int n, bool ok, const std::string& detail) {
  return CheckResult{suite, identity, n, ok, ok ? "" : detail};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"straightening", "serre",        "layers",    "recursions",
                                              "products",      "closed-formulas", "pbw-expansion", "classical",
                                              "qseed",         "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

// Straightening ---------------------------------------------------------------------

Report verify_straightening(std::uint64_t seed) {
  const std::string s = "straightening";
  Report out;
  for (int i = 0; i + 1 <= 3; ++i)
    out.push_back(compare(s, "u" + std::to_string(i) + " u" + std::to_string(i + 1) + " = q^-2 u" +
                                 std::to_string(i + 1) + " u" + std::to_string(i),
                          i, u(i) * u(i + 1), q(-2) * (u(i + 1) * u(i))));
  for (int i = 0; i + 2 <= 3; ++i)
    out.push_back(compare(s, "u" + std::to_string(i) + " u" + std::to_string(i + 2) + " = q^-2 u" +
                                 std::to_string(i + 2) + " u" + std::to_string(i) + " + (q^-2 - 1) u" +
                                 std::to_string(i + 1) + "^2",
                          i, u(i) * u(i + 2), q(-2) * (u(i + 2) * u(i)) + (q(-2) - 1) * (u(i + 1) * u(i + 1))));
  out.push_back(compare(s, "u0 u3 = q^-2 u3 u0 + (q^-4 - 1) u2 u1", 0, u(0) * u(3),
                        q(-2) * (u(3) * u(0)) + (q(-4) - 1) * (u(2) * u(1))));

  // p0 u_i = q^{e0[i]} u_i p0 and p1 u_i = q^{e1[i]} u_i p1.
  const int e0[4] = {2, 0, -2, -4}, e1[4] = {4, 2, 0, -2};
  for (int i = 0; i < 4; ++i) {
    out.push_back(compare(s, "p0 u" + std::to_string(i) + " = q^" + std::to_string(e0[i]) + " u" +
                                 std::to_string(i) + " p0",
                          i, p0() * u(i), q(e0[i]) * (u(i) * p0())));
    out.push_back(compare(s, "p1 u" + std::to_string(i) + " = q^" + std::to_string(e1[i]) + " u" +
                                 std::to_string(i) + " p1",
                          i, p1() * u(i), q(e1[i]) * (u(i) * p1())));
  }
  out.push_back(compare(s, "p0 p1 = q^-4 p1 p0", 0, p0() * p1(), q(-4) * (p1() * p0())));

  // Associativity on seeded random elements.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  auto random_element = [&] {
    PbwElement x;
    for (int t = 0; t < 3; ++t) x.add_term({e(rng), e(rng), e(rng), e(rng)}, q(c(rng)) * LaurentQ(c(rng)));
    return x;
  };
  bool assoc = true;
  std::string detail;
  for (int t = 0; t < 10 && assoc; ++t) {
    const PbwElement a = random_element(), b = random_element(), d = random_element();
    if (!((a * b) * d == a * (b * d))) {
      assoc = false;
      detail = "a = " + a.to_string() + "; b = " + b.to_string() + "; c = " + d.to_string();
    }
  }
  out.push_back(flag(s, "(ab)c = a(bc) on random elements", 0, assoc, detail));
  return out;
}

Report verify_serre(std::optional<MembershipMode> mode, std::uint64_t seed) {
  MembershipOptions opts;
  opts.seed = seed;
  Report out;
  for (const auto& c : verify_straightening_mod_serre(mode, opts))
    out.push_back(flag("serre", c.relation + " in the Serre ideal at weight (" + std::to_string(c.weight[0]) + "," +
                                    std::to_string(c.weight[1]) + "), " + to_string(c.mode) + " mode",
                       c.weight[0] + c.weight[1], c.member, "not a member"));
  return out;
}

// Layers --------------------------------------------------------------------------

Report verify_golden_elements() {
  const std::vector<std::pair<ExponentVec, std::string>> golden = {
      {{1, 0, 0, 0}, "u3"},
      {{0, 1, 0, 0}, "u2"},
      {{0, 0, 1, 0}, "u1"},
      {{0, 0, 0, 1}, "u0"},
      {{1, 0, 1, 0}, "u3*u1 - (q^2)*u2^2"},
      {{0, 1, 0, 1}, "u2*u0 - (q^2)*u1^2"},
      {{1, 0, 0, 1}, "u3*u0 - (q^2)*u2*u1"},
      {{2, 0, 0, 1}, "(q)*u3^2*u0 - (q^3 + q)*u3*u2*u1 + (q^5)*u2^3"},
      {{1, 0, 0, 2}, "(q)*u3*u0^2 - (q^3 + q)*u2*u1*u0 + (q^5)*u1^3"},
      {{2, 0, 0, 2}, "(q^2)*u3^2*u0^2 - (q^4 + 2*q^3)*u3*u2*u1*u0 - (q^6)*u3*u1^3 - (q^6)*u2^3*u0 + (q^8)*u2^2*u1^2"},
  };
  Report out;
  std::map<int, LayerTable> layers;
  for (const auto& [a, text] : golden) {
    const int k = total(a);
    if (!layers.count(k)) layers.emplace(k, compute_layer(k));
    const std::string got = layers.at(k).entries.at(a).to_string();
    out.push_back(flag("layers", "B" + to_string(a) + " = " + text, k, got == text, "computed " + got));
  }
  return out;
}

Report verify_defining_conditions(int k_max) {
  Report out;
  for (int k = 0; k <= k_max; ++k) {
    check_deadline();
    const LayerTable layer = compute_layer(k);
    std::string detail;
    for (const auto& [a, b] : layer.entries) {
      const std::string v = dual_canonical_violation(a, b);
      if (!v.empty()) {
        detail = to_string(a) + ": " + v;
        break;
      }
    }
    out.push_back(flag("layers",
                       "triangularity and sigma-eigenvalue for all " + std::to_string(layer.entries.size()) +
                           " elements of total " + std::to_string(k),
                       k, detail.empty(), detail));
  }
  return out;
}

Report verify_order_independence(int k, const std::vector<std::uint64_t>& seeds) {
  Report out;
  const LayerTable reference = compute_layer(k);
  for (std::uint64_t seed : seeds) {
    check_deadline();
    const LayerTable other = compute_layer(k, seed);
    std::string detail;
    for (const auto& [a, b] : reference.entries)
      if (!(other.entries.at(a) == b)) {
        detail = "differs at " + to_string(a);
        break;
      }
    out.push_back(flag("layers", "layer " + std::to_string(k) + " under linear extension seed " + std::to_string(seed),
                       k, detail.empty() && other.entries.size() == reference.entries.size(), detail));
  }
  return out;
}

Report verify_fast_strategy(int k_max) {
  Report out;
  DcbEngine fast(Strategy::Fast);
  for (int k = 0; k <= k_max; ++k) {
    check_deadline();
    std::string detail;
    for (const auto& a : layer_vectors(k))
      if (!(fast.b_element(a) == triangular_b_element(a))) {
        detail = "differs at " + to_string(a);
        break;
      }
    out.push_back(flag("layers", "fast strategy agrees with the triangular algorithm on total " + std::to_string(k), k,
                       detail.empty(), detail));
  }
  return out;
}

// Recursions and products ------------------------------------------------------------

Report verify_recursions(int n_max) {
  const std::string s = "recursions";
  Report out;
  for (int n = 1; n <= n_max; ++n) {
    check_deadline();
    const PbwElement b1 = B(n, 0, 0, n - 1), b2 = B(n - 1, 0, 0, n), b3 = B(n, 0, 0, n);
    const PbwElement c = B(n - 1, 0, 0, n - 1);
    out.push_back(compare(s, "B[n,0,0,n-1] = q^(n-1) u3 B[n-1,0,0,n-1] - q^(2n-1) u2 B[n-1,0,1,n-2]", n, b1,
                          q(n - 1) * (u(3) * c) - q(2 * n - 1) * (u(2) * B(n - 1, 0, 1, n - 2))));
    out.push_back(compare(s, "B[n,0,0,n-1] = q^(3n-3) B[n-1,0,0,n-1] u3 - q^(2n-3) B[n-1,0,1,n-2] u2", n, b1,
                          q(3 * n - 3) * (c * u(3)) - q(2 * n - 3) * (B(n - 1, 0, 1, n - 2) * u(2))));
    out.push_back(compare(s, "B[n-1,0,0,n] = q^(n-1) B[n-1,0,0,n-1] u0 - q^(2n-1) B[n-2,1,0,n-1] u1", n, b2,
                          q(n - 1) * (c * u(0)) - q(2 * n - 1) * (B(n - 2, 1, 0, n - 1) * u(1))));
    out.push_back(compare(s, "B[n-1,0,0,n] = q^(3n-3) u0 B[n-1,0,0,n-1] - q^(2n-3) u1 B[n-2,1,0,n-1]", n, b2,
                          q(3 * n - 3) * (u(0) * c) - q(2 * n - 3) * (u(1) * B(n - 2, 1, 0, n - 1))));
    out.push_back(compare(s, "B[n,0,0,n] = q^(n-1) B[n,0,0,n-1] u0 - q^(2n) B[n-1,1,0,n-1] u1", n, b3,
                          q(n - 1) * (b1 * u(0)) - q(2 * n) * (B(n - 1, 1, 0, n - 1) * u(1))));
    out.push_back(compare(s, "B[n,0,0,n] = q^(3n-1) u0 B[n,0,0,n-1] - q^(2n-2) u1 B[n-1,1,0,n-1]", n, b3,
                          q(3 * n - 1) * (u(0) * b1) - q(2 * n - 2) * (u(1) * B(n - 1, 1, 0, n - 1))));
    out.push_back(compare(s, "B[n,0,0,n] = q^(n-1) u3 B[n-1,0,0,n] - q^(2n) u2 B[n-1,0,1,n-1]", n, b3,
                          q(n - 1) * (u(3) * b2) - q(2 * n) * (u(2) * B(n - 1, 0, 1, n - 1))));
    out.push_back(compare(s, "B[n,0,0,n] = q^(3n-1) B[n-1,0,0,n] u3 - q^(2n-2) B[n-1,0,1,n-1] u2", n, b3,
                          q(3 * n - 1) * (b2 * u(3)) - q(2 * n - 2) * (B(n - 1, 0, 1, n - 1) * u(2))));
  }
  return out;
}

namespace {

/// B[n,1,1,n] written as q^(8n-6) p1 p0 B[n-1,0,0,n-1]; zero for n = 0 by the negative-index convention.
PbwElement factored_middle(int n) {
  const PbwElement c = B(n - 1, 0, 0, n - 1);
  if (c.is_zero()) return {};
  return q(8 * n - 6) * (p1() * p0() * c);
}

}  // namespace

Report verify_products(int n_max) {
  const std::string s = "products";
  Report out;
  const PbwElement z = B(1, 0, 0, 1);
  for (int n = 1; n <= n_max; ++n) {
    check_deadline();
    const PbwElement x = B(n, 0, 0, n - 1), y = B(n, 0, 0, n);
    const PbwElement next = B(n + 1, 0, 0, n), mid = B(n, 1, 1, n - 1);
    const PbwElement diag = B(n + 1, 0, 0, n + 1), mid2 = B(n, 1, 1, n);
    out.push_back(compare(s, "B[n,0,0,n-1] B[1,0,0,1] = q^(3-4n) B[n+1,0,0,n] + q^(4-4n) B[n,1,1,n-1]", n, x * z,
                          q(3 - 4 * n) * next + q(4 - 4 * n) * mid));
    out.push_back(compare(s, "B[1,0,0,1] B[n,0,0,n-1] = q^(1-4n) B[n+1,0,0,n] + q^(-4n) B[n,1,1,n-1]", n, z * x,
                          q(1 - 4 * n) * next + q(-4 * n) * mid));
    out.push_back(compare(s, "B[n,0,0,n] B[1,0,0,1] = q^(-4n) B[n+1,0,0,n+1] + q^(-4n) B[n,1,1,n]", n, y * z,
                          q(-4 * n) * diag + q(-4 * n) * mid2));
    out.push_back(compare(s, "B[1,0,0,1] B[n,0,0,n] = q^(-4n) B[n+1,0,0,n+1] + q^(-4n) B[n,1,1,n]", n, z * y,
                          q(-4 * n) * diag + q(-4 * n) * mid2));
    out.push_back(compare(s, "B[n,1,1,n] = q^(8n-6) p1 p0 B[n-1,0,0,n-1]", n, mid2, factored_middle(n)));
    out.push_back(compare(s, "B[1,0,0,1] B[n,0,0,n] = B[n,0,0,n] B[1,0,0,1]", n, z * y, y * z));
  }
  // n = 0, with B[0,1,1,0] read through the p0/p1 factorization (index (-1,0,0,-1) gives zero).
  out.push_back(compare(s, "B[0,0,0,0] B[1,0,0,1] = B[1,0,0,1] + q^-6 p1 p0 B[-1,0,0,-1]", 0, B(0, 0, 0, 0) * z,
                        B(1, 0, 0, 1) + factored_middle(0)));
  out.push_back(compare(s, "B[1,0,0,1] B[0,0,0,0] = B[1,0,0,1] + q^-6 p1 p0 B[-1,0,0,-1]", 0, z * B(0, 0, 0, 0),
                        B(1, 0, 0, 1) + factored_middle(0)));
  return out;
}

// Closed formulas --------------------------------------------------------------------

Report verify_closed_formulas(int n_max) {
  const std::string s = "closed-formulas";
  Report out;
  for (int n = 0; n <= n_max; ++n) {
    check_deadline();
    PbwElement rhs1, rhs2;
    auto term = [&](int e, const LaurentQ& c, int a1, int a2, int a3, int a4) {
      return q(e) * c * (power(p1(), a1) * power(u(2), a2) * power(u(1), a3) * power(p0(), a4));
    };
    for (int k = 0; k <= n + 1; ++k)
      for (int l = 0; l <= n + 1; ++l) {
        const bool in_first = k + l <= n || (k == n + 1 && l == 0);
        if (in_first)
          rhs1 += term(closed_f(n, k, l), quantum_binom(n - k, l) * quantum_binom(n + 1 - l, k), n + 1 - k, 2 * k,
                       2 * l, n - l);
        if (k + l <= n)
          rhs2 += term(closed_g(n, k, l), quantum_binom(n - k, l) * quantum_binom(n - l, k), n - k, 2 * k, 2 * l,
                       n - l);
      }
    out.push_back(compare(s, "u2^n B[n+1,0,0,n] u1^(n+1) = sum q^f [n-k,l][n+1-l,k] p1^(n+1-k) u2^2k u1^2l p0^(n-l)",
                          n, power(u(2), n) * B(n + 1, 0, 0, n) * power(u(1), n + 1), rhs1));
    out.push_back(compare(s, "u2^n B[n,0,0,n] u1^n = sum q^g [n-k,l][n-l,k] p1^(n-k) u2^2k u1^2l p0^(n-l)", n,
                          power(u(2), n) * B(n, 0, 0, n) * power(u(1), n), rhs2));
  }
  return out;
}

Report verify_pbw_expansion(int n_max, int k_max) {
  const std::string s = "pbw-expansion";
  Report out;
  for (int n = 0; n <= n_max; ++n) {
    check_deadline();
    const PbwExpansion e = pbw_expansion_formula(n);
    const Coefficients actual = expand_in_dual_pbw(B(n + 1, 0, 0, n));
    std::string detail;
    if (!e.out_of_range.empty()) detail = "uncancelled terms at negative indices";
    if (e.coefficients != actual) detail = "coefficients differ from the dual PBW expansion";
    out.push_back(flag(s, "quadruple sum equals the dual PBW expansion of B[n+1,0,0,n]", n, detail.empty(), detail));
  }
  for (int k = 0; k <= k_max; ++k) {
    check_deadline();
    const auto [P1, P0] = power_formulas(k);
    out.push_back(compare(s, "p1^k = sum (-1)^i q^(2i^2-ik-k^2+i+k) [k,i] u3^(k-i) u2^2i u1^(k-i)", k, P1,
                          power(p1(), k)));
    out.push_back(compare(s, "p0^k = sum (-1)^i q^(2i^2-ik-k^2+i+k) [k,i] u2^(k-i) u1^2i u0^(k-i)", k, P0,
                          power(p0(), k)));
  }
  return out;
}

// Classical ----------------------------------------------------------------------

Report verify_classical(int n_max) {
  const std::string s = "classical";
  Report out;
  const CPoly P0 = CPoly::var(CVar::P0), P1 = CPoly::var(CVar::P1);
  const int top = std::max(10, n_max);

  for (int n = 4; n <= top; ++n)
    out.push_back(compare(s, "U_{n+1} U_{n-1} = U_n^2 + P1^(n-1) P0^(n-4)", n,
                          cluster_variable(n + 1) * cluster_variable(n - 1),
                          cluster_variable(n).pow(2) + P1.pow(n - 1) * P0.pow(n - 4)));
  for (int n = 3; n <= top; ++n) {
    const CPoly un = cluster_variable(n);
    out.push_back(flag(s, "U_n is Laurent in U1, U2", n, un.denominators_only_in({CVar::U1, CVar::U2}),
                       un.to_string()));
    out.push_back(compare(s, "U_n equals the explicit double sum", n, un, cluster_formula(n - 3)));
    bool ok = true;
    std::string detail;
    try {
      ok = polynomial_form(n - 3).is_polynomial();
    } catch (const AlgebraError& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back(flag(s, "U_n is a polynomial in U3, U2, U1, U0 matching c_{n,a,b}", n, ok, detail));
  }
  const CPoly U3 = CPoly::var(CVar::U3), U2 = CPoly::var(CVar::U2), U1 = CPoly::var(CVar::U1),
              U0 = CPoly::var(CVar::U0);
  out.push_back(compare(s, "U4 = U3^2 U0 - 2 U3 U2 U1 + U2^3", 4, polynomial_form(1),
                        U3.pow(2) * U0 - 2 * U3 * U2 * U1 + U2.pow(3)));
  for (int n = 0; n <= std::max(8, n_max); ++n) {
    std::string detail;
    for (int a = 0; a <= n + 1 && detail.empty(); ++a)
      for (int b = 0; b <= n && detail.empty(); ++b)
        if ((n + 2 - 2 * a + b < 0 || n - 1 - 2 * b + a < 0) && cluster_coefficient(n, a, b) != 0)
          detail = "c(" + std::to_string(a) + "," + std::to_string(b) + ") = " + cluster_coefficient(n, a, b).get_str();
    out.push_back(flag(s, "c_{n,a,b} = 0 outside the exponent range", n, detail.empty(), detail));
    out.push_back(compare(s, "coefficient-free formula (seed shifted) equals U_{n+3} at P0 = P1 = 1", n,
                          shift_initial_seed(coefficient_free_formula(n)),
                          cluster_formula(n).set_one(CVar::P0).set_one(CVar::P1)));
    out.push_back(compare(s, "coefficient-free formula equals the recursion U_{n+1}U_{n-1} = U_n^2 + 1", n,
                          shift_initial_seed(coefficient_free_formula(n)), coefficient_free_variable(n + 3)));
  }

  const CPoly T = coefficient_free_T();
  for (int n = 1; n <= top; ++n)
    out.push_back(compare(s, "U_{n+1} = T U_n - U_{n-1} (coefficient free)", n, coefficient_free_variable(n + 1),
                          T * coefficient_free_variable(n) - coefficient_free_variable(n - 1)));
  out.push_back(compare(s, "T = U3 U0 - U2 U1 (coefficient free)", 0, T,
                        coefficient_free_variable(3) * coefficient_free_variable(0) - U2 * U1));
  const CPoly z = z_laurent();
  out.push_back(compare(s, "z = U3 U0 - U2 U1", 0, z, cluster_variable(3) * cluster_variable(0) - U2 * U1));
  for (int k = 4; k <= top; ++k)
    out.push_back(compare(s, "U_{k+1} = z U_k - P1 P0 U_{k-1}", k, cluster_variable(k + 1),
                          z * cluster_variable(k) - P1 * P0 * cluster_variable(k - 1)));
  out.push_back(compare(s, "s_2 = z^2 - P1 P0", 2, chebyshev_basis_element(2, ChebyshevKind::S),
                        z_polynomial().pow(2) - P1 * P0));

  for (int n = 0; n <= std::max(3, n_max); ++n) {
    check_deadline();
    out.push_back(compare(s, "B[n+1,0,0,n] at q = 1 equals U_{n+3}", n, specialize_q1(B(n + 1, 0, 0, n)),
                          polynomial_form(n)));
  }
  for (int n = 0; n <= std::max(4, n_max); ++n) {
    check_deadline();
    out.push_back(compare(s, "B[n,0,0,n] at q = 1 equals s_n", n, specialize_q1(B(n, 0, 0, n)),
                          chebyshev_basis_element(n, ChebyshevKind::S).expand_frozen()));
  }

  // The drawn quivers, as arrow lists over (mutable..., P0, P1).
  const ExchangeMatrix b0 = initial_exchange_matrix();
  const auto fig0 = ExchangeMatrix::from_quiver({"U0", "U1", "P0", "P1"}, 2,
                                                {{3, 2}, {3, 2}, {2, 1}, {2, 1}, {1, 0}, {1, 0}, {1, 3}, {0, 2}});
  const auto fig1 = ExchangeMatrix::from_quiver({"U2", "U1", "P0", "P1"}, 2,
                                                {{3, 2}, {3, 2}, {0, 1}, {0, 1}, {1, 3}, {2, 0}});
  const auto fig2 = ExchangeMatrix::from_quiver({"U2", "U3", "P0", "P1"}, 2,
                                                {{3, 2}, {3, 2}, {1, 0}, {1, 0}, {0, 3}, {0, 3}, {3, 1}, {2, 0}});
  out.push_back(flag(s, "initial quiver", 0, b0 == fig0, b0.to_string()));
  out.push_back(flag(s, "mutation at U0 gives the second quiver", 1, b0.mutate(0) == fig1, b0.mutate(0).to_string()));
  out.push_back(flag(s, "mutation at U0 then U1 gives the third quiver", 2, b0.mutate(0).mutate(1) == fig2,
                     b0.mutate(0).mutate(1).to_string()));
  out.push_back(flag(s, "seed (U1, U2) matrix is the second quiver", 1,
                     b0.mutate(0).reorder_mutable({1, 0}) == shifted_exchange_matrix(), shifted_exchange_matrix().to_string()));
  out.push_back(flag(s, "mutation is involutive", 0, b0.mutate(0).mutate(0) == b0 && b0.mutate(1).mutate(1) == b0,
                     "not involutive"));
  return out;
}

// Dispatch -----------------------------------------------------------------------

namespace {

Report run_single(const std::string& name, const SuiteOptions& o) {
  if (name == "straightening") return verify_straightening(o.seed);
  if (name == "serre") return verify_serre(o.mode, o.seed);
  if (name == "layers") {
    Report r = verify_golden_elements();
    append(r, verify_defining_conditions(o.k_max));
    append(r, verify_order_independence(std::min(6, o.k_max), {o.seed, o.seed + 1, o.seed + 2}));
    append(r, verify_fast_strategy(o.k_max));
    return r;
  }
  if (name == "recursions") return verify_recursions(o.n_max);
  if (name == "products") return verify_products(o.n_max);
  if (name == "closed-formulas") return verify_closed_formulas(o.n_max);
  if (name == "pbw-expansion") return verify_pbw_expansion(o.n_max, o.k_max);
  if (name == "classical") return verify_classical(o.n_max);
  if (name == "qseed") return qseed_report(std::max(3, o.n_max));
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  if (name != "all") return run_single(name, opts);
  std::vector<std::string> names(suite_names().begin(), suite_names().end() - 1);
  std::vector<Report> results(names.size());
  if (opts.jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) results[i] = run_single(names[i], opts);
  } else {
    // Suites are independent; each worker thread has its own memo tables.
    std::size_t next = 0;
    while (next < names.size()) {
      std::vector<std::future<Report>> batch;
      const std::size_t start = next;
      for (; next < names.size() && batch.size() < static_cast<std::size_t>(opts.jobs); ++next)
        batch.push_back(std::async(std::launch::async, run_single, names[next], opts));
      for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }
  }
  Report out;
  for (const auto& r : results) append(out, r);
  return out;
}

}  // namespace qca
