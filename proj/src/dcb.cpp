#include "qca/dcb.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qca/qarith.hpp"
#include "qca/report.hpp"

namespace qca {

bool order_leq(const ExponentVec& a, const ExponentVec& b) {
  const int s = a[0] - b[0];
  const int r = a[3] - b[3];
  if (s < 0 || r < 0) return false;
  return b[1] == a[1] + 2 * s - r && b[2] == a[2] - s + 2 * r;
}

int stat_b(const ExponentVec& a) {
  int r = 0;
  for (int x : a) r += x * (x - 1) / 2;
  return r;
}

int stat_N(const ExponentVec& a) {
  const int t = total(a);
  return t * t - 7 * a[0] - 5 * a[1] - 3 * a[2] - a[3];
}

PbwElement dual_pbw(const ExponentVec& a) { return PbwElement::monomial(a, LaurentQ::q_power(stat_b(a))); }

Coefficients expand_in_dual_pbw(const PbwElement& x) {
  Coefficients c;
  for (const auto& [a, coef] : x.terms()) c.emplace(a, coef.shifted(-stat_b(a)));
  return c;
}

PbwElement from_dual_pbw(const Coefficients& c) {
  PbwElement r;
  for (const auto& [a, coef] : c) r.add_term(a, coef.shifted(stat_b(a)));
  return r;
}

std::vector<ExponentVec> layer_vectors(int k) {
  std::vector<ExponentVec> out;
  for (int a3 = k; a3 >= 0; --a3)
    for (int a2 = k - a3; a2 >= 0; --a2)
      for (int a1 = k - a3 - a2; a1 >= 0; --a1) out.push_back({a3, a2, a1, k - a3 - a2 - a1});
  return out;
}

std::vector<ExponentVec> weight_block(int k, const RootWeight& w) {
  std::vector<ExponentVec> out;
  for (const auto& a : layer_vectors(k))
    if (root_weight(a) == w) out.push_back(a);
  return out;
}

std::vector<ExponentVec> linear_extension(const std::vector<ExponentVec>& block, std::optional<std::uint64_t> seed) {
  std::vector<ExponentVec> order = block;
  if (!seed) {
    std::sort(order.begin(), order.end(), [](const ExponentVec& x, const ExponentVec& y) {
      const int dx = x[0] + x[3], dy = y[0] + y[3];
      if (dx != dy) return dx > dy;
      return x > y;
    });
    return order;
  }
  std::mt19937_64 rng(*seed);
  std::vector<ExponentVec> remaining = block;
  std::sort(remaining.begin(), remaining.end(), std::greater<>());
  order.clear();
  while (!remaining.empty()) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      bool has_predecessor = false;
      for (std::size_t j = 0; j < remaining.size() && !has_predecessor; ++j)
        has_predecessor = j != i && order_leq(remaining[j], remaining[i]);
      if (!has_predecessor) ready.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t chosen = ready[pick(rng)];
    order.push_back(remaining[chosen]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(chosen));
  }
  return order;
}

std::string dual_canonical_violation(const ExponentVec& a, const PbwElement& B) {
  const Coefficients c = expand_in_dual_pbw(B);
  auto lead = c.find(a);
  if (lead == c.end() || !lead->second.is_one()) return "coefficient of E" + to_string(a) + " is not 1";
  for (const auto& [b, coef] : c) {
    if (b == a) continue;
    if (!order_leq(a, b)) return "E" + to_string(b) + " occurs but is not above " + to_string(a);
    if (!coef.is_integral() || !coef.has_integer_coefficients() || coef.min_half() < 2)
      return "coefficient of E" + to_string(b) + " is not in qZ[q]: " + coef.to_string();
  }
  if (sigma(B) != B * LaurentQ::q_power(-stat_N(a))) return "sigma(B) != q^-N B";
  return {};
}

// DcbEngine ---------------------------------------------------------------------

DcbEngine::DcbEngine(Strategy strategy, std::optional<std::uint64_t> order_seed)
    : strategy_(strategy), order_seed_(order_seed) {}

PbwElement DcbEngine::b_element(const ExponentVec& a) {
  for (int x : a)
    if (x < 0) return PbwElement();
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  check_deadline();
  if (strategy_ == Strategy::Triangular) {
    compute_block(total(a), root_weight(a));
    it = memo_.find(a);
    if (it == memo_.end()) throw AlgebraError("triangular algorithm did not produce B" + to_string(a));
    return it->second;
  }
  PbwElement r = compute_fast(a);
  memo_.emplace(a, r);
  return r;
}

PbwElement DcbEngine::compute_fast(const ExponentVec& a) {
  const auto q = [](int k) { return LaurentQ::q_power(k); };
  const auto [a3, a2, a1, a0] = a;
  if (a3 > 0 && a1 > 0) {
    const ExponentVec b{a3 - 1, a2, a1 - 1, a0};
    return q(3 * b[0] + 2 * b[1] + b[2]) * (p1() * b_element(b));
  }
  if (a2 > 0 && a0 > 0) {
    const ExponentVec b{a3, a2 - 1, a1, a0 - 1};
    return q(b[1] + 2 * b[2] + 3 * b[3]) * (b_element(b) * p0());
  }
  // Now a3 * a1 = 0 and a2 * a0 = 0; everything except (x,0,0,w) is maximal for ⊲.
  if (a1 != 0 || a2 != 0 || a3 == 0 || a0 == 0) return dual_pbw(a);
  const PbwElement u0 = generator(0), u1 = generator(1), u3 = generator(3), u2 = generator(2);
  if (a3 == a0 + 1) {
    const int n = a3;
    return q(n - 1) * (u3 * b_element({n - 1, 0, 0, n - 1})) -
           q(2 * n - 1) * (u2 * b_element({n - 1, 0, 1, n - 2}));
  }
  if (a0 == a3 + 1) {
    const int n = a0;
    return q(n - 1) * (b_element({n - 1, 0, 0, n - 1}) * u0) -
           q(2 * n - 1) * (b_element({n - 2, 1, 0, n - 1}) * u1);
  }
  if (a3 == a0) {
    const int n = a3;
    return q(n - 1) * (b_element({n, 0, 0, n - 1}) * u0) - q(2 * n) * (b_element({n - 1, 1, 0, n - 1}) * u1);
  }
  compute_block(total(a), root_weight(a));
  return memo_.at(a);
}

void DcbEngine::compute_block(int k, const RootWeight& w) {
  if (!cache_checked_[k]) {
    cache_checked_[k] = true;
    if (load_cached_layer(k) && memo_.count(weight_block(k, w).front())) return;
  }
  const std::vector<ExponentVec> order = linear_extension(weight_block(k, w), order_seed_);
  std::map<ExponentVec, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  // Dual PBW coordinates of the B's of this block computed so far.
  std::map<ExponentVec, Coefficients> coords;
  for (std::size_t m = order.size(); m-- > 0;) {
    check_deadline();
    const ExponentVec& a = order[m];
    const int N = stat_N(a);
    Coefficients tail = expand_in_dual_pbw(sigma(dual_pbw(a)));
    auto lead = tail.find(a);
    if (lead == tail.end() || lead->second != LaurentQ::q_power(-N))
      throw AlgebraError("leading coefficient of sigma(E" + to_string(a) + ") is not q^-N");
    tail.erase(lead);

    // Rewrite the tail in terms of already computed B's, lowest position first.
    std::map<ExponentVec, LaurentQ> in_b;
    while (!tail.empty()) {
      auto pick = tail.begin();
      for (auto it = tail.begin(); it != tail.end(); ++it) {
        auto pos = position.find(it->first);
        if (pos == position.end() || pos->second <= m)
          throw AlgebraError("sigma(E" + to_string(a) + ") leaves the set above it at E" + to_string(it->first));
        if (pos->second < position.at(pick->first)) pick = it;
      }
      const ExponentVec b = pick->first;
      const LaurentQ d = pick->second;
      auto known = coords.find(b);
      if (known == coords.end()) throw AlgebraError("back-substitution needs unknown B" + to_string(b));
      for (const auto& [c, coef] : known->second) {
        LaurentQ& slot = tail[c];
        slot -= d * coef;
        if (slot.is_zero()) tail.erase(c);
      }
      in_b.emplace(b, d);
    }

    Coefficients B{{a, LaurentQ(1)}};
    for (const auto& [b, d] : in_b) {
      const LaurentQ phi = split_antisymmetric(d.shifted(N));
      for (const auto& [c, coef] : coords.at(b)) {
        LaurentQ& slot = B[c];
        slot += phi * coef;
        if (slot.is_zero()) B.erase(c);
      }
    }
    PbwElement element = from_dual_pbw(B);
    const std::string violation = dual_canonical_violation(a, element);
    if (!violation.empty()) throw AlgebraError("B" + to_string(a) + ": " + violation);
    coords.emplace(a, std::move(B));
    memo_.insert_or_assign(a, std::move(element));
  }
}

LayerTable DcbEngine::layer(int k) {
  LayerTable t;
  t.k = k;
  std::set<RootWeight> weights;
  for (const auto& a : layer_vectors(k)) weights.insert(root_weight(a));
  for (const auto& w : weights) {
    const std::vector<ExponentVec> block = weight_block(k, w);
    if (!memo_.count(block.front())) compute_block(k, w);
    for (const auto& a : block) t.entries.emplace(a, memo_.at(a));
    // Layer order: blocks concatenated, each in its linear extension.
    for (const auto& a : linear_extension(block, order_seed_)) t.total_order.push_back(a);
  }
  if (cache_dir_) save_layer(k);
  return t;
}

Coefficients DcbEngine::expand_in_basis(const PbwElement& x, int max_layer) {
  Coefficients rest = expand_in_dual_pbw(x);
  Coefficients out;
  while (!rest.empty()) {
    check_deadline();
    // A ⊲-minimal key: largest a3 + a0 (keys above it have strictly smaller a3 + a0).
    auto pick = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first[0] + it->first[3] > pick->first[0] + pick->first[3]) pick = it;
    const ExponentVec b = pick->first;
    const LaurentQ d = pick->second;
    if (max_layer >= 0 && total(b) > max_layer)
      throw ResourceLimit("layer " + std::to_string(total(b)) + " exceeds the cap " + std::to_string(max_layer));
    for (const auto& [c, coef] : expand_in_dual_pbw(b_element(b))) {
      LaurentQ& slot = rest[c];
      slot -= d * coef;
      if (slot.is_zero()) rest.erase(c);
    }
    out.emplace(b, d);
  }
  return out;
}

bool DcbEngine::load_cached_layer(int k) {
  if (!cache_dir_) return false;
  const auto path = *cache_dir_ / ("layer_" + std::to_string(k) + ".json");
  std::ifstream in(path);
  if (!in) return false;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    std::map<ExponentVec, PbwElement> loaded;
    for (const auto& entry : j) {
      const ExponentVec a = entry.at("a").get<ExponentVec>();
      PbwElement B = PbwElement::from_json(entry.at("element").dump());
      if (total(a) != k || !dual_canonical_violation(a, B).empty()) return false;
      loaded.emplace(a, std::move(B));
    }
    if (loaded.size() != layer_vectors(k).size()) return false;
    for (auto& [a, B] : loaded) memo_.insert_or_assign(a, std::move(B));
    return true;
  } catch (const std::exception&) {
    return false;  // the cache is advisory; anything unreadable is recomputed
  }
}

void DcbEngine::save_layer(int k) {
  std::filesystem::create_directories(*cache_dir_);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : layer_vectors(k))
    j.push_back({{"a", a}, {"element", nlohmann::json::parse(memo_.at(a).to_json())}});
  std::ofstream(*cache_dir_ / ("layer_" + std::to_string(k) + ".json")) << j.dump() << "\n";
}

LayerTable compute_layer(int k, std::optional<std::uint64_t> order_seed) {
  DcbEngine engine(Strategy::Triangular, order_seed);
  return engine.layer(k);
}

PbwElement b_element(const ExponentVec& a) {
  thread_local DcbEngine engine(Strategy::Fast);
  return engine.b_element(a);
}

PbwElement triangular_b_element(const ExponentVec& a) {
  thread_local DcbEngine engine(Strategy::Triangular);
  return engine.b_element(a);
}

// Closed formulas ---------------------------------------------------------------

namespace {

LaurentQ signed_q(int sign_exponent, int q_exponent) {
  return LaurentQ::q_power(q_exponent, (sign_exponent % 2 == 0) ? 1 : -1);
}

}  // namespace

std::pair<PbwElement, PbwElement> power_formulas(int k) {
  PbwElement P1, P0;
  for (int i = 0; i <= k; ++i) {
    const LaurentQ c = signed_q(i, 2 * i * i - i * k - k * k + i + k) * quantum_binom(k, i);
    P1.add_term({k - i, 2 * i, k - i, 0}, c);
    P0.add_term({0, k - i, 2 * i, k - i}, c);
  }
  return {P1, P0};
}

PbwExpansion pbw_expansion_formula(int n) {
  PbwExpansion out;
  auto add = [&](const ExponentVec& a, const LaurentQ& c) {
    const bool in_range = std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
    if (in_range) {
      LaurentQ& slot = out.coefficients[a];
      slot += c;
      if (slot.is_zero()) out.coefficients.erase(a);
    } else {
      LaurentQ& slot = out.out_of_range[a];
      slot += c;
      if (slot.is_zero()) out.out_of_range.erase(a);
    }
  };
  for (int k = 0; k <= n + 1; ++k) {
    for (int l = 0; l <= n; ++l) {
      if (!(k + l <= n || (k == n + 1 && l == 0))) continue;
      const LaurentQ outer = quantum_binom(n - k, l) * quantum_binom(n + 1 - l, k);
      for (int s = 0; s <= n + 1 - k; ++s) {
        for (int r = 0; r <= n - l; ++r) {
          const int e = -l - 2 * k * l + 2 * n + k * n + l * n - 3 * r - l * r - r * r + s - k * s + 2 * r * s - s * s;
          const LaurentQ c =
              signed_q(k + l + s + r + 1, e) * outer * quantum_binom(n + 1 - k, s) * quantum_binom(n - l, r);
          add({s, n + 2 - 2 * s + r, n - 1 - 2 * r + s, r}, c);
        }
      }
    }
  }
  return out;
}

int closed_f(int n, int k, int l) { return n * (n - 2) + k * (n + 2) + l * (n + 1) - 2 * k * l; }
int closed_g(int n, int k, int l) { return n * (n - 3) + k * (n + 1) + l * (n + 1) - 2 * k * l; }

}  // namespace qca
