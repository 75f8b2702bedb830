#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qca/pbw.hpp"

namespace qca {

using Coefficients = std::map<ExponentVec, LaurentQ, std::greater<>>;

/// a ⊲ b: b - a = s(-1,2,-1,0) + r(0,-1,2,-1) with s, r >= 0.
bool order_leq(const ExponentVec& a, const ExponentVec& b);

/// b(a) = sum of C(a_i, 2).
int stat_b(const ExponentVec& a);
/// N(a) = (a3+a2+a1+a0)^2 - 7a3 - 5a2 - 3a1 - a0.
int stat_N(const ExponentVec& a);

/// E[a] = q^{b(a)} u3^a3 u2^a2 u1^a1 u0^a0.
PbwElement dual_pbw(const ExponentVec& a);
/// Coefficients c_a with x = sum c_a E[a].
Coefficients expand_in_dual_pbw(const PbwElement& x);
PbwElement from_dual_pbw(const Coefficients& c);

/// All a with total(a) = k, in descending lexicographic order.
std::vector<ExponentVec> layer_vectors(int k);
/// All a with total(a) = k and the given root weight.
std::vector<ExponentVec> weight_block(int k, const RootWeight& w);

/**
 * A total order on `block` extending ⊲ (a ⊲ b puts a before b). Without a
 * seed: by decreasing a3 + a0, ties in descending lexicographic order. With a
 * seed: a uniformly shuffled topological sort.
 */
std::vector<ExponentVec> linear_extension(const std::vector<ExponentVec>& block,
                                          std::optional<std::uint64_t> seed = std::nullopt);

/// Empty when B satisfies both defining conditions for index a, else a description of the violation.
std::string dual_canonical_violation(const ExponentVec& a, const PbwElement& B);

struct LayerTable {
  int k = 0;
  std::map<ExponentVec, PbwElement, std::greater<>> entries;
  std::vector<ExponentVec> total_order;
};

enum class Strategy {
  Triangular,  // the general triangular algorithm on every weight block
  Fast,        // strip p0/p1 factors, use the (x,0,0,w) recursions, fall back to Triangular
};

/**
 * Memoizing evaluator for B[a]. An instance is not thread-safe; use one per
 * thread. Results do not depend on the strategy or on the order seed.
 */
class DcbEngine {
 public:
  explicit DcbEngine(Strategy strategy = Strategy::Fast, std::optional<std::uint64_t> order_seed = std::nullopt);

  Strategy strategy() const { return strategy_; }

  /// Directory for per-layer JSON caches; entries are re-verified when loaded.
  void set_cache_dir(std::optional<std::filesystem::path> dir) { cache_dir_ = std::move(dir); }

  /// B[a]; zero if any coordinate is negative.
  PbwElement b_element(const ExponentVec& a);
/// B[a] from a thread-local triangular engine. Verifiers use this one: the fast
/// strategy is built from the recursions they check.
PbwElement triangular_b_element(const ExponentVec& a);

  /// All of W_k, computed with the triangular algorithm; written to the cache when one is set.
  LayerTable layer(int k);

  /// Coefficients of x in the dual canonical basis. Throws ResourceLimit if a
  /// term lies in a layer above max_layer (when max_layer >= 0).
  Coefficients expand_in_basis(const PbwElement& x, int max_layer = -1);

 private:
  PbwElement compute_fast(const ExponentVec& a);
  void compute_block(int k, const RootWeight& w);
  bool load_cached_layer(int k);
  void save_layer(int k);

  Strategy strategy_;
  std::optional<std::uint64_t> order_seed_;
  std::optional<std::filesystem::path> cache_dir_;
  std::map<ExponentVec, PbwElement> memo_;
  std::map<int, bool> cache_checked_;
};

/// compute_layer(k) with a fresh triangular engine.
LayerTable compute_layer(int k, std::optional<std::uint64_t> order_seed = std::nullopt);

/// B[a] from a thread-local fast engine.
PbwElement b_element(const ExponentVec& a);
/// B[a] from a thread-local triangular engine. Verifiers use this one: the fast
/// strategy is built from the recursions they check.
PbwElement triangular_b_element(const ExponentVec& a);

/// Closed forms for p1^k and p0^k as sums of ordered monomials.
std::pair<PbwElement, PbwElement> power_formulas(int k);

/// Dual PBW coefficients of B[n+1,0,0,n] from the quadruple-sum formula.
/// Index vectors with a negative entry are collected separately; their
/// coefficients must cancel.
struct PbwExpansion {
  Coefficients coefficients;
  std::map<ExponentVec, LaurentQ> out_of_range;
};
PbwExpansion pbw_expansion_formula(int n);

/// Exponents of the closed product formulas.
int closed_f(int n, int k, int l);
int closed_g(int n, int k, int l);

}  // namespace qca
