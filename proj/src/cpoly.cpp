#include "qca/cpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qca {

namespace {

constexpr const char* kNames[6] = {"U3", "U2", "U1", "U0", "P1", "P0"};

CPoly::Exponents add(const CPoly::Exponents& a, const CPoly::Exponents& b) {
  CPoly::Exponents r;
  for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
  return r;
}

CPoly::Exponents sub(const CPoly::Exponents& a, const CPoly::Exponents& b) {
  CPoly::Exponents r;
  for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
  return r;
}

CPoly::Exponents min_exponents(const CPoly& p) {
  CPoly::Exponents m{};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < 6; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

CPoly shift(const CPoly& p, const CPoly::Exponents& by) {
  CPoly r;
  for (const auto& [e, c] : p.terms()) r += CPoly::monomial(add(e, by), c);
  return r;
}

}  // namespace

CPoly::CPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rational(c));
}

CPoly::CPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

CPoly CPoly::var(CVar v, int power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

CPoly CPoly::monomial(const Exponents& e, const Rational& c) {
  CPoly r;
  if (c != 0) r.terms_.emplace(e, c);
  return r;
}

void CPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
  });
}

bool CPoly::is_polynomial_in(CVar v) const { return min_degree(v) >= 0; }

bool CPoly::denominators_only_in(std::initializer_list<CVar> allowed) const {
  for (int i = 0; i < 6; ++i) {
    if (std::find(allowed.begin(), allowed.end(), static_cast<CVar>(i)) != allowed.end()) continue;
    if (!is_polynomial_in(static_cast<CVar>(i))) return false;
  }
  return true;
}

int CPoly::max_degree(CVar v) const {
  int r = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int x = e[static_cast<int>(v)];
    r = first ? x : std::max(r, x);
    first = false;
  }
  return r;
}

int CPoly::min_degree(CVar v) const {
  int r = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int x = e[static_cast<int>(v)];
    r = first ? x : std::min(r, x);
    first = false;
  }
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) { return *this = *this * o; }

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
  return r;
}

CPoly CPoly::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw AlgebraError("CPoly::pow: negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents ne;
    for (int i = 0; i < 6; ++i) ne[i] = e[i] * k;
    Rational nc = 1;
    for (int i = 0; i < -k; ++i) nc /= c;
    return monomial(ne, nc);
  }
  CPoly result = 1, base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CPoly CPoly::substitute(CVar v, const CPoly& value) const {
  const int idx = static_cast<int>(v);
  if (!is_polynomial_in(v)) throw AlgebraError("CPoly::substitute: negative exponent of substituted variable");
  std::map<int, CPoly> powers;
  CPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = rest[idx];
    rest[idx] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    r += monomial(rest, c) * it->second;
  }
  return r;
}

CPoly CPoly::set_one(CVar v) const {
  CPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[static_cast<int>(v)] = 0;
    r.add_term(rest, c);
  }
  return r;
}

CPoly CPoly::expand_frozen() const { return substitute(CVar::P0, frozen_p0()).substitute(CVar::P1, frozen_p1()); }

CPoly CPoly::swap_symmetry() const {
  CPoly r;
  for (const auto& [e, c] : terms_) r.add_term(Exponents{e[3], e[2], e[1], e[0], e[5], e[4]}, c);
  return r;
}

std::optional<CPoly> CPoly::divide_exact(const CPoly& d) const {
  if (d.is_zero()) throw AlgebraError("CPoly::divide_exact: division by zero");
  if (is_zero()) return CPoly();
  // Move both into the polynomial ring and strip the monomial content of the
  // divisor; the quotient is then a polynomial if it exists at all.
  const Exponents mf = min_exponents(*this), md = min_exponents(d);
  Exponents neg_mf, neg_md;
  for (int i = 0; i < 6; ++i) {
    neg_mf[i] = -mf[i];
    neg_md[i] = -md[i];
  }
  CPoly r = shift(*this, neg_mf);
  const CPoly dd = shift(d, neg_md);
  const auto& [lead_e, lead_c] = *dd.terms_.begin();
  CPoly quotient;
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms_.begin();
    Exponents t = sub(e, lead_e);
    if (std::any_of(t.begin(), t.end(), [](int x) { return x < 0; })) return std::nullopt;
    CPoly step = monomial(t, c / lead_c);
    quotient += step;
    r -= step * dd;
  }
  return shift(quotient, sub(mf, md));
}

namespace {

std::string render(const CPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int i = 0; i < 6; ++i) {
      if (e[i] == 0) continue;
      if (latex) {
        mono += std::string(1, kNames[i][0]) + "_" + kNames[i][1];
        if (e[i] != 1) mono += "^{" + std::to_string(e[i]) + "}";
      } else {
        if (!mono.empty()) mono += "*";
        mono += kNames[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
    }
    if (mono.empty()) {
      os << rational_to_string(mag);
    } else {
      if (mag != 1) os << rational_to_string(mag) << (latex ? "" : "*");
      os << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string CPoly::to_string() const { return render(*this, false); }
std::string CPoly::to_latex() const { return render(*this, true); }

CPoly frozen_p0() { return CPoly::var(CVar::U2) * CPoly::var(CVar::U0) - CPoly::var(CVar::U1, 2); }
CPoly frozen_p1() { return CPoly::var(CVar::U3) * CPoly::var(CVar::U1) - CPoly::var(CVar::U2, 2); }

}  // namespace qca
