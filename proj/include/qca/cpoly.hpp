#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qca/laurent.hpp"

namespace qca {

/// Variables of the commutative side, in storage order.
enum class CVar { U3 = 0, U2 = 1, U1 = 2, U0 = 3, P1 = 4, P0 = 5 };

/**
 * Commutative Laurent polynomial in U3, U2, U1, U0, P1, P0 with rational
 * coefficients. Exponents may be negative, so quotients by monomials (and
 * exact quotients in general) stay inside the type.
 */
class CPoly {
 public:
  using Exponents = std::array<int, 6>;
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  CPoly() = default;
  CPoly(long c);  // NOLINT(google-explicit-constructor)
  CPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static CPoly var(CVar v, int power = 1);
  static CPoly monomial(const Exponents& e, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponents& e) const;

  /// No negative exponent anywhere.
  bool is_polynomial() const;
  /// No negative exponent in the given variable.
  bool is_polynomial_in(CVar v) const;
  /// Every variable outside `allowed` has a nonnegative exponent.
  bool denominators_only_in(std::initializer_list<CVar> allowed) const;
  /// Largest and smallest exponent of v over all terms (0 for the zero polynomial).
  int max_degree(CVar v) const;
  int min_degree(CVar v) const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly operator-() const;
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

  /// Nonnegative powers; negative powers are allowed for monomials only.
  CPoly pow(int k) const;
  /// Replaces every occurrence of v by `value` (v must occur with nonnegative exponents).
  CPoly substitute(CVar v, const CPoly& value) const;
  /// Evaluates v at 1.
  CPoly set_one(CVar v) const;
  /// Plugs in P0 = U2U0 - U1^2 and P1 = U3U1 - U2^2.
  CPoly expand_frozen() const;
  /// U3 <-> U0, U2 <-> U1, P1 <-> P0.
  CPoly swap_symmetry() const;

  /// Exact quotient in the Laurent polynomial ring, or nullopt if d does not divide.
  std::optional<CPoly> divide_exact(const CPoly& d) const;

  /// e.g. "U3^2*U0 - 2*U3*U2*U1 + U2^3"
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// P0 = U2U0 - U1^2 and P1 = U3U1 - U2^2 as polynomials in the U's.
CPoly frozen_p0();
CPoly frozen_p1();

}  // namespace qca
