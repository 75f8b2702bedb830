#include "qca/qseed.hpp"

#include "qca/dcb.hpp"

namespace qca {

IntMatrix4 L_matrix(int n) {
  return {{{0, 2, 2 * n - 2, -2 * n + 8},
           {-2, 0, 2 * n, -2 * n + 6},
           {-2 * n + 2, -2 * n, 0, -4},
           {2 * n - 8, 2 * n - 6, 4, 0}}};
}

ExchangeMatrix quantum_exchange_matrix(int n) {
  return ExchangeMatrix({"X" + std::to_string(n), "X" + std::to_string(n + 1), "Y0", "Y1"}, 2,
                        {{0, 2}, {-2, 0}, {n - 3, -n + 4}, {n, -n + 1}});
}

PbwElement rescaled_X(int n) {
  if (n < 0) throw AlgebraError("rescaled_X: n must be nonnegative");
  if (n < 3) return generator(n) * LaurentQ::half_power(-1);
  const int e = (2 * n - 5) * (2 * n - 5);
  return triangular_b_element({n - 2, 0, 0, n - 3}) * LaurentQ::half_power(-e);
}

PbwElement rescaled_Y(int i) {
  if (i != 0 && i != 1) throw AlgebraError("rescaled_Y: index must be 0 or 1");
  return (i == 0 ? p0() : p1()) * LaurentQ::q_power(-2);
}

int torus_twice_exponent(const TorusExponent& a, int n) {
  const IntMatrix4 L = L_matrix(n);
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) s += a[i] * a[j] * L[i][j];
  return s;
}

int torus_exponent_expanded(const TorusExponent& a, int n) {
  const auto [a1, a2, a3, a4] = a;
  return -a1 * a2 - (n - 1) * a1 * a3 + (n - 4) * a1 * a4 - n * a2 * a3 + (n - 3) * a2 * a4 + 2 * a3 * a4;
}

// Torus ---------------------------------------------------------------------------

TorusElement::TorusElement(int n) : n_(n) {}

TorusElement::TorusElement(int n, const LaurentQ& c) : n_(n) { add_term({0, 0, 0, 0}, c); }

TorusElement TorusElement::monomial(int n, const TorusExponent& a, const LaurentQ& c) {
  TorusElement t(n);
  t.add_term(a, c);
  return t;
}

TorusElement TorusElement::generator(int n, int i, int k) {
  if (i < 0 || i > 3) throw AlgebraError("TorusElement::generator: index out of range");
  TorusExponent a{};
  a[i] = k;
  return monomial(n, a);
}

void TorusElement::add_term(const TorusExponent& a, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (o.n_ != n_) throw AlgebraError("TorusElement: mismatched tori");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (o.n_ != n_) throw AlgebraError("TorusElement: mismatched tori");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
  if (x.n_ != y.n_) throw AlgebraError("TorusElement: mismatched tori");
  const IntMatrix4 L = L_matrix(x.n_);
  TorusElement r(x.n_);
  for (const auto& [a, ca] : x.terms_)
    for (const auto& [b, cb] : y.terms_) {
      int twice = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) twice += (a[i] * b[j] - a[j] * b[i]) * L[i][j];
      TorusExponent s;
      for (int i = 0; i < 4; ++i) s[i] = a[i] + b[i];
      r.add_term(s, ca * cb * LaurentQ::half_power(twice));
    }
  return r;
}

TorusElement operator*(const LaurentQ& c, TorusElement a) {
  TorusElement r(a.n_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*M(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
         std::to_string(a[2]) + "," + std::to_string(a[3]) + ")";
  }
  return s;
}

TorusElement torus_M(const TorusExponent& a, int n) {
  const TorusElement m = TorusElement::monomial(n, a);
  const int twice = torus_twice_exponent(a, n);
  TorusElement ordered(n, 1), reversed(n, 1);
  for (int i = 0; i < 4; ++i) ordered = ordered * TorusElement::generator(n, i, a[i]);
  for (int i = 3; i >= 0; --i) reversed = reversed * TorusElement::generator(n, i, a[i]);
  if (!(LaurentQ::half_power(twice) * ordered == m) || !(LaurentQ::half_power(-twice) * reversed == m))
    throw AlgebraError("torus_M: the two product forms disagree");
  return m;
}

// Verification --------------------------------------------------------------------

namespace {

CheckResult check(const std::string& identity, int n, const PbwElement& lhs, const PbwElement& rhs) {
  CheckResult r{"qseed", identity, n, lhs == rhs, ""};
  if (!r.ok) r.detail = "difference: " + (lhs - rhs).to_string();
  return r;
}

CheckResult check_torus(const std::string& identity, int n, const TorusElement& lhs, const TorusElement& rhs) {
  CheckResult r{"qseed", identity, n, lhs == rhs, ""};
  if (!r.ok) r.detail = "lhs: " + lhs.to_string() + "; rhs: " + rhs.to_string();
  return r;
}

bool all_odd_half_steps(const PbwElement& x) {
  for (const auto& [a, c] : x.terms())
    for (const auto& [h, v] : c.terms())
      if (h % 2 == 0) return false;
  return true;
}

PbwElement B(int a3, int a2, int a1, int a0) { return triangular_b_element({a3, a2, a1, a0}); }

}  // namespace

Report verify_quasi_commutation(int n_max) {
  Report out;
  const std::array<std::string, 4> names{"X_n", "X_{n+1}", "Y_0", "Y_1"};
  for (int n = 3; n <= n_max; ++n) {
    check_deadline();
    const std::array<PbwElement, 4> x{rescaled_X(n), rescaled_X(n + 1), rescaled_Y(0), rescaled_Y(1)};
    const IntMatrix4 L = L_matrix(n);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        out.push_back(check(names[i] + " " + names[j] + " = q^L " + names[j] + " " + names[i], n, x[i] * x[j],
                            x[j] * x[i] * LaurentQ::q_power(L[i][j])));
    CheckResult parity{"qseed", "X_n has odd half-step exponents; X_n X_{n+1} is integral", n,
                       all_odd_half_steps(x[0]) && all_odd_half_steps(x[1]) && (x[0] * x[1]).is_integral(), ""};
    if (!parity.ok) parity.detail = "unexpected coefficient parity";
    out.push_back(parity);
  }
  return out;
}

Report verify_adjacent_commutation(int n_max) {
  Report out;
  for (int n = 1; n <= n_max; ++n) {
    check_deadline();
    const PbwElement a = B(n, 0, 0, n - 1), b = B(n + 1, 0, 0, n);
    out.push_back(check("B[n,0,0,n-1] B[n+1,0,0,n] = q^2 B[n+1,0,0,n] B[n,0,0,n-1]", n, a * b,
                        b * a * LaurentQ::q_power(2)));
  }
  return out;
}

Report verify_quantum_exchange(int n_max) {
  Report out;
  for (int n = 2; n <= n_max; ++n) {
    check_deadline();
    const PbwElement lhs = B(n + 1, 0, 0, n) * B(n - 1, 0, 0, n - 2);
    const PbwElement rhs = power(B(n, 0, 0, n - 1), 2) * LaurentQ::q_power(2) +
                           power(p1(), n + 1) * power(p0(), n - 2) * LaurentQ::q_power(2 * n * n - 6 * n + 8);
    out.push_back(check("B[n+1,0,0,n] B[n-1,0,0,n-2] = q^2 B[n,0,0,n-1]^2 + q^(2n^2-6n+8) p1^(n+1) p0^(n-2)", n, lhs,
                        rhs));
  }
  for (int n = 3; n <= n_max; ++n) {
    check_deadline();
    const PbwElement lhs = rescaled_X(n + 2) * rescaled_X(n);
    const PbwElement rhs = power(rescaled_X(n + 1), 2) * LaurentQ::q_power(-2) +
                           power(rescaled_Y(1), n) * power(rescaled_Y(0), n - 3) *
                               LaurentQ::q_power(-2 * n * n + 6 * n - 3);
    out.push_back(check("X_{n+2} X_n = q^-2 X_{n+1}^2 + q^(-2n^2+6n-3) Y_1^n Y_0^(n-3)", n, lhs, rhs));
  }
  return out;
}

Report verify_bz_exchange(int n_max) {
  Report out;
  for (int n = 3; n <= n_max; ++n) {
    check_deadline();
    const TorusElement x_next = torus_M({-1, 2, 0, 0}, n) + torus_M({-1, 0, n - 3, n}, n);
    const TorusElement lhs = x_next * TorusElement::generator(n, 0);
    const TorusElement rhs = LaurentQ::q_power(-2) * TorusElement::generator(n, 1, 2) +
                             LaurentQ::q_power(-2 * n * n + 6 * n - 3) * (TorusElement::generator(n, 3, n) *
                                                                         TorusElement::generator(n, 2, n - 3));
    out.push_back(check_torus("(M(-1,2,0,0) + M(-1,0,n-3,n)) X_n = q^-2 X_{n+1}^2 + q^(-2n^2+6n-3) Y_1^n Y_0^(n-3)",
                              n, lhs, rhs));

    // Prefactor: the double sum against its expanded form.
    CheckResult expanded{"qseed", "(1/2) sum_{i>j} a_i a_j L_ij matches its expansion", n, true, ""};
    for (int a1 = -2; a1 <= 2 && expanded.ok; ++a1)
      for (int a2 = -2; a2 <= 2 && expanded.ok; ++a2)
        for (int a3 = -2; a3 <= 2 && expanded.ok; ++a3)
          for (int a4 = -2; a4 <= 2 && expanded.ok; ++a4)
            if (torus_twice_exponent({a1, a2, a3, a4}, n) != 2 * torus_exponent_expanded({a1, a2, a3, a4}, n)) {
              expanded.ok = false;
              expanded.detail = "mismatch at (" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                                std::to_string(a3) + "," + std::to_string(a4) + ")";
            }
    out.push_back(expanded);

    // Compatibility: B^T L = -2 [I | 0].
    const ExchangeMatrix bm = quantum_exchange_matrix(n);
    const IntMatrix4 L = L_matrix(n);
    CheckResult compat{"qseed", "B^T L = -2 [I | 0]", n, true, ""};
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 4; ++j) {
        int s = 0;
        for (int i = 0; i < 4; ++i) s += bm.entry(i, k) * L[i][j];
        if (s != (j == k ? -2 : 0)) {
          compat.ok = false;
          compat.detail = "entry (" + std::to_string(k) + "," + std::to_string(j) + ") = " + std::to_string(s);
        }
      }
    out.push_back(compat);

    // The same matrix arises by mutating the classical seed (U1, U2, P0, P1).
    Seed s = shifted_initial_seed();
    for (int m = 3; m <= n + 1; ++m) s = s.mutate(m % 2 == 1 ? 0 : 1);
    const ExchangeMatrix classical = n % 2 == 1 ? s.matrix : s.matrix.reorder_mutable({1, 0});
    CheckResult same{"qseed", "exchange matrix of (X_n, X_{n+1}) equals the mutated classical matrix", n,
                     classical == bm, ""};
    if (!same.ok) same.detail = "classical:\n" + classical.to_string();
    out.push_back(same);
  }
  return out;
}

Report qseed_report(int n_max) {
  Report out = verify_quasi_commutation(n_max);
  append(out, verify_adjacent_commutation(n_max));
  append(out, verify_quantum_exchange(n_max));
  append(out, verify_bz_exchange(n_max));
  return out;
}

}  // namespace qca
