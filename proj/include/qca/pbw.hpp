#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qca/cpoly.hpp"
#include "qca/laurent.hpp"

namespace qca {

/// (a3, a2, a1, a0): exponents of u3, u2, u1, u0 in that order.
using ExponentVec = std::array<int, 4>;
/// Coordinates in the simple roots (alpha1, alpha2).
using RootWeight = std::array<int, 2>;

/// Position of generator u_i inside an ExponentVec.
constexpr int slot(int i) { return 3 - i; }

int total(const ExponentVec& a);
RootWeight root_weight(const ExponentVec& a);
std::string to_string(const ExponentVec& a);  // "[a3,a2,a1,a0]"
ExponentVec operator+(const ExponentVec& a, const ExponentVec& b);
ExponentVec operator-(const ExponentVec& a, const ExponentVec& b);

/**
 * Element of U_q^+(w) in normal form: a finite combination of ordered
 * monomials u3^a3 u2^a2 u1^a1 u0^a0. Keys are stored in descending
 * lexicographic order.
 */
class PbwElement {
 public:
  using TermMap = std::map<ExponentVec, LaurentQ, std::greater<>>;

  PbwElement() = default;
  PbwElement(long c);  // NOLINT(google-explicit-constructor)
  PbwElement(const LaurentQ& c);  // NOLINT(google-explicit-constructor)
  static PbwElement monomial(const ExponentVec& a, const LaurentQ& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentQ coeff(const ExponentVec& a) const;
  bool is_homogeneous() const;
  /// Every coefficient lies in Q[q, q^-1].
  bool is_integral() const;

  void add_term(const ExponentVec& a, const LaurentQ& c);
  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement& operator*=(const LaurentQ& c);
  PbwElement operator-() const;
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(PbwElement a, const LaurentQ& c) { return a *= c; }
  friend PbwElement operator*(const LaurentQ& c, PbwElement a) { return a *= c; }
  friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }

  /// e.g. "u3*u1 - (q^2)*u2^2"
  std::string to_string() const;
  std::string to_latex() const;
  std::string to_json() const;
  static PbwElement parse(std::string_view text);
  static PbwElement from_json(std::string_view json);

 private:
  TermMap terms_;
};

/// Normal form of the product x * y.
PbwElement multiply(const PbwElement& x, const PbwElement& y);
PbwElement operator*(const PbwElement& x, const PbwElement& y);
PbwElement power(const PbwElement& x, int k);

/// Normal form of an arbitrary word u_{w[0]} u_{w[1]} ... in the generators.
PbwElement straighten_word(const std::vector<int>& word);

PbwElement generator(int i);
PbwElement p0();
PbwElement p1();

/// The ring anti-automorphism with sigma(q) = q^-1 and sigma(u_i) = q^{2i} u_i.
PbwElement sigma(const PbwElement& x);

/// u_i^k / [k]!, kept as numerator and scalar denominator so the numerator stays integral.
struct DividedPower {
  PbwElement numerator;
  LaurentQ denominator;
};
DividedPower divided_power(int i, int k);

/// Evaluation at q = 1 into the commutative ring Q[U3, U2, U1, U0].
CPoly specialize_q1(const PbwElement& x);

}  // namespace qca
