#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qca/laurent.hpp"

namespace qca {

/// Word in the letters E1, E2; at most 64 letters. Bit k is set when letter k is E2.
class FreeWord {
 public:
  static constexpr int kMaxLength = 64;

  FreeWord() = default;
  /// From letters 1 and 2, e.g. {1, 1, 2}.
  static FreeWord from_letters(const std::vector<int>& letters);
  static FreeWord letter(int e);

  int length() const { return len_; }
  int letter_at(int k) const { return ((bits_ >> k) & 1u) ? 2 : 1; }
  /// (#E1, #E2)
  std::array<int, 2> weight() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) = default;

  /// "E1*E2*E1"; the empty word is "1".
  std::string to_string() const;

 private:
  // Field order matters for the defaulted ordering: shorter words first.
  int len_ = 0;
  std::uint64_t bits_ = 0;
};

/// All words of the given weight, in increasing order.
std::vector<FreeWord> words_of_weight(int e1, int e2);

/**
 * Element of the free algebra Q(q)<E1, E2>, stored as numerator / denominator
 * with a LaurentQ-valued numerator and a single nonzero LaurentQ denominator.
 */
class FreeElement {
 public:
  using TermMap = std::map<FreeWord, LaurentQ>;

  FreeElement() = default;
  FreeElement(const LaurentQ& c);  // NOLINT(google-explicit-constructor)
  static FreeElement word(const FreeWord& w, const LaurentQ& c = 1);
  static FreeElement generator(int e) { return word(FreeWord::letter(e)); }

  const TermMap& numerator() const { return num_; }
  const LaurentQ& denominator() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_homogeneous() const;
  /// Weight of the terms (requires a nonzero homogeneous element).
  std::array<int, 2> weight() const;

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement operator-() const;
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const LaurentQ& c, const FreeElement& a);
  /// Division by a nonzero scalar.
  FreeElement divided_by(const LaurentQ& c) const;
  friend bool operator==(const FreeElement& a, const FreeElement& b);

  std::string to_string() const;

 private:
  void reduce();
  TermMap num_;
  LaurentQ den_ = 1;
};

/// The two quantum Serre relators, of weights (3,1) and (1,3).
std::pair<FreeElement, FreeElement> serre_relators();

/// A = (E2E1 - q^-2 E1E2) / [2].
FreeElement element_A();

/// v0 = E1, v1 from the divided-power formula, v2 = A v1 - v1 A, v3 = A v2 - v2 A.
std::array<FreeElement, 4> build_generators();

enum class MembershipMode { Exact, Probabilistic };
std::string to_string(MembershipMode m);

/// x = (1/scale) * sum coef * left * S_relator * right.
struct Certificate {
  struct Term {
    FreeWord left;
    int relator = 0;  // 0 -> weight (3,1), 1 -> weight (1,3)
    FreeWord right;
    LaurentQ coef;
  };
  LaurentQ scale = 1;
  std::vector<Term> terms;
};

FreeElement expand_certificate(const Certificate& c);

struct MembershipOptions {
  int max_letters = 12;
  int evaluations = 5;
  std::uint64_t seed = 20240601;
};

struct MembershipResult {
  bool member = false;
  MembershipMode mode = MembershipMode::Exact;
  std::optional<Certificate> certificate;  // exact mode, members only
};

/// Membership of a homogeneous x in the two-sided ideal generated by the Serre relators.
MembershipResult ideal_membership(const FreeElement& x, MembershipMode mode, const MembershipOptions& opts = {});

struct SerreCheck {
  std::string relation;
  std::array<int, 2> weight{};
  MembershipMode mode = MembershipMode::Exact;
  bool member = false;
};

/// The six straightening relations v_i v_j - (ordered form) tested for ideal
/// membership. Without a forced mode, exact mode is used up to 8 letters and
/// probabilistic mode above.
std::vector<SerreCheck> verify_straightening_mod_serre(std::optional<MembershipMode> forced = std::nullopt,
                                                       const MembershipOptions& opts = {});

/// The left-hand side minus right-hand side of one of the six relations, by name ("v0v1", ..., "v2v3").
FreeElement straightening_defect(const std::string& relation);
std::vector<std::string> straightening_relation_names();

/// JSON array of {relation, weight, mode, member}.
std::string serre_report_to_json(const std::vector<SerreCheck>& checks);

}  // namespace qca
