#include "qca/free_serre.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "json.hpp"
#include "qca/qarith.hpp"
#include "qca/report.hpp"

namespace qca {

// Words ------------------------------------------------------------------------

FreeWord FreeWord::from_letters(const std::vector<int>& letters) {
  if (letters.size() > kMaxLength) throw AlgebraError("FreeWord: too many letters");
  FreeWord w;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] != 1 && letters[k] != 2) throw AlgebraError("FreeWord: letters are 1 or 2");
    if (letters[k] == 2) w.bits_ |= std::uint64_t{1} << k;
  }
  w.len_ = static_cast<int>(letters.size());
  return w;
}

FreeWord FreeWord::letter(int e) { return from_letters({e}); }

std::array<int, 2> FreeWord::weight() const {
  const int twos = std::popcount(bits_);
  return {len_ - twos, twos};
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.len_ + b.len_ > FreeWord::kMaxLength) throw AlgebraError("FreeWord: product too long");
  FreeWord w;
  w.len_ = a.len_ + b.len_;
  w.bits_ = a.bits_ | (b.len_ == 0 ? 0 : b.bits_ << a.len_);
  return w;
}

std::string FreeWord::to_string() const {
  if (len_ == 0) return "1";
  std::string s;
  for (int k = 0; k < len_; ++k) {
    if (k) s += "*";
    s += letter_at(k) == 1 ? "E1" : "E2";
  }
  return s;
}

std::vector<FreeWord> words_of_weight(int e1, int e2) {
  std::vector<FreeWord> out;
  if (e1 < 0 || e2 < 0) return out;
  std::vector<int> letters(e1, 1);
  letters.insert(letters.end(), e2, 2);
  do {
    out.push_back(FreeWord::from_letters(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Elements ---------------------------------------------------------------------

FreeElement::FreeElement(const LaurentQ& c) {
  if (!c.is_zero()) num_.emplace(FreeWord(), c);
}

FreeElement FreeElement::word(const FreeWord& w, const LaurentQ& c) {
  FreeElement r;
  if (!c.is_zero()) r.num_.emplace(w, c);
  return r;
}

bool FreeElement::is_homogeneous() const {
  if (num_.empty()) return true;
  const auto w = num_.begin()->first.weight();
  return std::all_of(num_.begin(), num_.end(), [&](const auto& t) { return t.first.weight() == w; });
}

std::array<int, 2> FreeElement::weight() const {
  if (num_.empty()) throw AlgebraError("weight of the zero element");
  return num_.begin()->first.weight();
}

void FreeElement::reduce() {
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  // Cancel the common factor of numerator and denominator.
  LaurentQ g = den_;
  for (const auto& [w, c] : num_) {
    g = laurent_gcd(g, c);
    if (g.is_one()) return;
  }
  auto d = den_.divide_exact(g);
  if (!d) return;
  den_ = *d;
  for (auto& [w, c] : num_) c = *c.divide_exact(g);
}

namespace {

void add_scaled(FreeElement::TermMap& into, const FreeElement::TermMap& from, const LaurentQ& factor) {
  for (const auto& [w, c] : from) {
    auto [it, inserted] = into.try_emplace(w, c * factor);
    if (!inserted) {
      it->second.add_product(c, factor);
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

}  // namespace

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  if (den_ == o.den_) {
    add_scaled(num_, o.num_, 1);
  } else {
    TermMap scaled;
    add_scaled(scaled, num_, o.den_);
    add_scaled(scaled, o.num_, den_);
    num_ = std::move(scaled);
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) { return *this += -o; }

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& [w, c] : r.num_) c = -c;
  return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.num_) {
    for (const auto& [wb, cb] : b.num_) {
      auto [it, inserted] = r.num_.try_emplace(wa * wb);
      it->second.add_product(ca, cb);
      if (it->second.is_zero()) r.num_.erase(it);
    }
  }
  r.den_ = a.den_ * b.den_;
  r.reduce();
  return r;
}

FreeElement operator*(const LaurentQ& c, const FreeElement& a) {
  FreeElement r = a;
  if (c.is_zero()) return FreeElement();
  for (auto& [w, x] : r.num_) x *= c;
  r.reduce();
  return r;
}

FreeElement FreeElement::divided_by(const LaurentQ& c) const {
  if (c.is_zero()) throw AlgebraError("FreeElement: division by zero");
  FreeElement r = *this;
  r.den_ *= c;
  r.reduce();
  return r;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  FreeElement::TermMap x, y;
  add_scaled(x, a.num_, b.den_);
  add_scaled(y, b.num_, a.den_);
  return x == y;
}

std::string FreeElement::to_string() const {
  if (num_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    s += "(" + it->second.to_string() + ")*" + it->first.to_string();
  }
  if (!den_.is_one()) s = "(" + s + ") / (" + den_.to_string() + ")";
  return s;
}

// Relators and generators --------------------------------------------------------

namespace {

FreeElement w(std::initializer_list<int> letters, const LaurentQ& c = 1) {
  return FreeElement::word(FreeWord::from_letters(letters), c);
}

}  // namespace

std::pair<FreeElement, FreeElement> serre_relators() {
  const LaurentQ three = quantum_int(3);
  FreeElement s1 = w({1, 1, 1, 2}) - w({1, 1, 2, 1}, three) + w({1, 2, 1, 1}, three) - w({2, 1, 1, 1});
  FreeElement s2 = w({2, 2, 2, 1}) - w({2, 2, 1, 2}, three) + w({2, 1, 2, 2}, three) - w({1, 2, 2, 2});
  return {s1, s2};
}

FreeElement element_A() {
  return (w({2, 1}) - w({1, 2}, LaurentQ::q_power(-2))).divided_by(quantum_int(2));
}

std::array<FreeElement, 4> build_generators() {
  const FreeElement E1 = FreeElement::generator(1), E2 = FreeElement::generator(2);
  const FreeElement E1_2 = (E1 * E1).divided_by(quantum_factorial(2));
  const FreeElement v0 = E1;
  const FreeElement v1 = E2 * E1_2 - LaurentQ::q_power(-1) * (E1 * E2 * E1) + LaurentQ::q_power(-2) * (E1_2 * E2);
  const FreeElement A = element_A();
  const FreeElement v2 = A * v1 - v1 * A;
  const FreeElement v3 = A * v2 - v2 * A;
  return {v0, v1, v2, v3};
}

std::string to_string(MembershipMode m) { return m == MembershipMode::Exact ? "exact" : "probabilistic"; }

FreeElement expand_certificate(const Certificate& c) {
  const auto [s1, s2] = serre_relators();
  FreeElement sum;
  for (const auto& t : c.terms)
    sum += t.coef * (FreeElement::word(t.left) * (t.relator == 0 ? s1 : s2) * FreeElement::word(t.right));
  return sum.divided_by(c.scale);
}

// Membership -------------------------------------------------------------------

namespace {

struct Spanner {
  FreeWord left;
  int relator;
  FreeWord right;
};

/// Spanning set {w S w'} of the ideal in the given weight.
std::vector<Spanner> spanning_set(const std::array<int, 2>& weight) {
  std::vector<Spanner> out;
  const std::array<std::array<int, 2>, 2> rel_weight{{{3, 1}, {1, 3}}};
  for (int r = 0; r < 2; ++r) {
    const int rest1 = weight[0] - rel_weight[r][0], rest2 = weight[1] - rel_weight[r][1];
    if (rest1 < 0 || rest2 < 0) continue;
    for (int l1 = 0; l1 <= rest1; ++l1)
      for (int l2 = 0; l2 <= rest2; ++l2)
        for (const auto& left : words_of_weight(l1, l2))
          for (const auto& right : words_of_weight(rest1 - l1, rest2 - l2)) out.push_back({left, r, right});
  }
  return out;
}

using Column = int;

/// Sparse row over Q[q^{±1/2}] with certificate: scale * row = sum cert_i * spanner_i (index -1: the target).
struct ExactRow {
  std::map<Column, LaurentQ> entries;
  std::map<int, LaurentQ> cert;
  LaurentQ scale = 1;
};

void normalize(ExactRow& r) {
  LaurentQ g;
  for (const auto& [c, x] : r.entries) {
    g = laurent_gcd(g, x);
    if (g.is_one()) break;
  }
  if (!g.is_zero() && !g.is_one()) {
    for (auto& [c, x] : r.entries) x = *x.divide_exact(g);
    r.scale *= g;
  }
  LaurentQ h = r.scale;
  for (const auto& [i, x] : r.cert) {
    if (h.is_one()) break;
    h = laurent_gcd(h, x);
  }
  if (!h.is_one()) {
    for (auto& [i, x] : r.cert) x = *x.divide_exact(h);
    r.scale = *r.scale.divide_exact(h);
  }
}

/// r <- P_p * r - r_p * P, eliminating column p of r with pivot row P.
void eliminate(ExactRow& r, const ExactRow& P) {
  const Column p = P.entries.begin()->first;
  const LaurentQ pp = P.entries.begin()->second;
  const LaurentQ rp = r.entries.at(p);
  std::map<Column, LaurentQ> entries;
  for (const auto& [c, x] : r.entries) entries[c] = x * pp;
  for (const auto& [c, x] : P.entries) {
    LaurentQ& slot = entries[c];
    slot -= rp * x;
    if (slot.is_zero()) entries.erase(c);
  }
  std::map<int, LaurentQ> cert;
  const LaurentQ fr = pp * P.scale, fp = rp * r.scale;
  for (const auto& [i, x] : r.cert) cert[i] = x * fr;
  for (const auto& [i, x] : P.cert) {
    LaurentQ& slot = cert[i];
    slot -= fp * x;
    if (slot.is_zero()) cert.erase(i);
  }
  r.entries = std::move(entries);
  r.cert = std::move(cert);
  r.scale *= P.scale;
  normalize(r);
}

class ExactEchelon {
 public:
  void reduce(ExactRow& r) const {
    while (!r.entries.empty()) {
      check_deadline();
      auto it = pivots_.find(r.entries.begin()->first);
      if (it == pivots_.end()) return;
      eliminate(r, it->second);
    }
  }
  void insert(ExactRow r) {
    reduce(r);
    if (!r.entries.empty()) pivots_.emplace(r.entries.begin()->first, std::move(r));
  }

 private:
  std::map<Column, ExactRow> pivots_;
};

using QRow = std::vector<std::pair<Column, Rational>>;  // sorted by column

class RationalEchelon {
 public:
  void reduce(QRow& r) const {
    QRow scratch;
    while (!r.empty()) {
      check_deadline();
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) return;
      const QRow& P = it->second;  // leading entry 1
      const Rational f = r.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < P.size()) {
        if (j == P.size() || (i < r.size() && r[i].first < P[j].first)) {
          scratch.push_back(std::move(r[i++]));
        } else if (i == r.size() || P[j].first < r[i].first) {
          scratch.emplace_back(P[j].first, -f * P[j].second);
          ++j;
        } else {
          Rational x = r[i].second - f * P[j].second;
          if (x != 0) scratch.emplace_back(r[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      r.swap(scratch);
    }
  }
  void insert(QRow r) {
    reduce(r);
    if (r.empty()) return;
    const Rational lead = r.front().second;
    for (auto& [c, x] : r) x /= lead;
    pivots_.emplace(r.front().first, std::move(r));
  }

 private:
  std::map<Column, QRow> pivots_;
};

std::map<FreeWord, Column> column_index(const std::array<int, 2>& weight) {
  std::map<FreeWord, Column> idx;
  for (const auto& word : words_of_weight(weight[0], weight[1])) idx.emplace(word, static_cast<Column>(idx.size()));
  return idx;
}

FreeElement spanner_element(const Spanner& s, const FreeElement& s1, const FreeElement& s2) {
  return FreeElement::word(s.left) * (s.relator == 0 ? s1 : s2) * FreeElement::word(s.right);
}

MembershipResult exact_membership(const FreeElement& x, const std::array<int, 2>& weight,
                                  const std::vector<Spanner>& spanners) {
  const auto [s1, s2] = serre_relators();
  const auto cols = column_index(weight);
  ExactEchelon echelon;
  for (std::size_t i = 0; i < spanners.size(); ++i) {
    ExactRow r;
    const FreeElement e = spanner_element(spanners[i], s1, s2);
    for (const auto& [word, c] : e.numerator()) r.entries.emplace(cols.at(word), c);
    r.cert.emplace(static_cast<int>(i), LaurentQ(1));
    echelon.insert(std::move(r));
  }
  ExactRow target;
  for (const auto& [word, c] : x.numerator()) target.entries.emplace(cols.at(word), c);
  target.cert.emplace(-1, LaurentQ(1));
  echelon.reduce(target);
  MembershipResult result;
  result.mode = MembershipMode::Exact;
  if (!target.entries.empty()) return result;
  // 0 = t * x_num + sum c_i s_i, so x = -(1 / (t * den)) sum c_i s_i.
  result.member = true;
  Certificate cert;
  cert.scale = -target.cert.at(-1) * x.denominator();
  for (const auto& [i, c] : target.cert) {
    if (i < 0) continue;
    cert.terms.push_back({spanners[i].left, spanners[i].relator, spanners[i].right, c});
  }
  result.certificate = std::move(cert);
  return result;
}

Rational random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-60, 60), den(1, 60);
  while (true) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (r != 0 && r != 1 && r != -1) return r;
  }
}

MembershipResult probabilistic_membership(const FreeElement& x, const std::array<int, 2>& weight,
                                          const std::vector<Spanner>& spanners, const MembershipOptions& opts) {
  const auto [s1, s2] = serre_relators();
  const auto cols = column_index(weight);
  std::vector<std::map<Column, LaurentQ>> rows;
  rows.reserve(spanners.size());
  for (const auto& s : spanners) {
    std::map<Column, LaurentQ> r;
    const FreeElement e = spanner_element(s, s1, s2);
    for (const auto& [word, c] : e.numerator()) r.emplace(cols.at(word), c);
    rows.push_back(std::move(r));
  }
  for (const auto& [word, c] : x.numerator())
    if (!c.is_integral()) throw AlgebraError("probabilistic membership needs coefficients in Q[q, q^-1]");
  if (!x.denominator().is_integral()) throw AlgebraError("probabilistic membership needs an integral denominator");

  std::mt19937_64 rng(opts.seed);
  MembershipResult result;
  result.mode = MembershipMode::Probabilistic;
  result.member = true;
  for (int e = 0; e < opts.evaluations; ++e) {
    Rational q0 = random_point(rng);
    while (x.denominator().evaluate(q0) == 0) q0 = random_point(rng);
    RationalEchelon echelon;
    for (const auto& r : rows) {
      QRow v;
      for (const auto& [c, coef] : r) {
        Rational val = coef.evaluate(q0);
        if (val != 0) v.emplace_back(c, std::move(val));
      }
      echelon.insert(std::move(v));
    }
    QRow target;
    for (const auto& [word, c] : x.numerator()) {
      Rational val = c.evaluate(q0);
      if (val != 0) target.emplace_back(cols.at(word), std::move(val));
    }
    std::sort(target.begin(), target.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.reduce(target);
    if (!target.empty()) {
      result.member = false;
      return result;
    }
  }
  return result;
}

}  // namespace

MembershipResult ideal_membership(const FreeElement& x, MembershipMode mode, const MembershipOptions& opts) {
  MembershipResult result;
  result.mode = mode;
  if (x.is_zero()) {
    result.member = true;
    if (mode == MembershipMode::Exact) result.certificate = Certificate{};
    return result;
  }
  if (!x.is_homogeneous()) throw AlgebraError("ideal_membership: element is not homogeneous");
  const auto weight = x.weight();
  if (weight[0] + weight[1] > opts.max_letters)
    throw ResourceLimit("ideal_membership: weight (" + std::to_string(weight[0]) + "," + std::to_string(weight[1]) +
                        ") exceeds the cap of " + std::to_string(opts.max_letters) + " letters");
  const auto spanners = spanning_set(weight);
  if (spanners.empty()) {
    result.member = false;
    return result;
  }
  return mode == MembershipMode::Exact ? exact_membership(x, weight, spanners)
                                       : probabilistic_membership(x, weight, spanners, opts);
}

// The six relations ----------------------------------------------------------------

std::vector<std::string> straightening_relation_names() { return {"v0v1", "v1v2", "v2v3", "v0v2", "v1v3", "v0v3"}; }

FreeElement straightening_defect(const std::string& relation) {
  static const std::array<FreeElement, 4> v = build_generators();
  if (relation.size() != 4 || relation[0] != 'v' || relation[2] != 'v') throw AlgebraError("unknown relation " + relation);
  const int i = relation[1] - '0', j = relation[3] - '0';
  if (i < 0 || j > 3 || j <= i) throw AlgebraError("unknown relation " + relation);
  const LaurentQ q2 = LaurentQ::q_power(-2);
  FreeElement defect = v[i] * v[j] - q2 * (v[j] * v[i]);
  if (j - i == 2) defect -= (q2 - 1) * (v[i + 1] * v[i + 1]);
  if (j - i == 3) defect -= (LaurentQ::q_power(-4) - 1) * (v[i + 2] * v[i + 1]);
  return defect;
}

std::vector<SerreCheck> verify_straightening_mod_serre(std::optional<MembershipMode> forced,
                                                       const MembershipOptions& opts) {
  std::vector<SerreCheck> out;
  for (const auto& name : straightening_relation_names()) {
    const FreeElement d = straightening_defect(name);
    SerreCheck c;
    c.relation = name;
    const int i = name[1] - '0', j = name[3] - '0';
    c.weight = {(i + 1) + (j + 1), i + j};  // v_k has weight (k+1, k)
    const int letters = c.weight[0] + c.weight[1];
    c.mode = forced ? *forced : (letters <= 8 ? MembershipMode::Exact : MembershipMode::Probabilistic);
    const MembershipResult r = ideal_membership(d, c.mode, opts);
    c.member = r.member;
    if (r.member && r.certificate && !(expand_certificate(*r.certificate) == d)) c.member = false;
    out.push_back(c);
  }
  return out;
}

std::string serre_report_to_json(const std::vector<SerreCheck>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"relation", c.relation}, {"weight", c.weight}, {"mode", to_string(c.mode)}, {"member", c.member}});
  return out.dump(2);
}

}  // namespace qca
