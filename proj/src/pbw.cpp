#include "qca/pbw.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "qca/qarith.hpp"

namespace qca {

int total(const ExponentVec& a) { return a[0] + a[1] + a[2] + a[3]; }

RootWeight root_weight(const ExponentVec& a) {
  return {4 * a[0] + 3 * a[1] + 2 * a[2] + a[3], 3 * a[0] + 2 * a[1] + a[2]};
}

std::string to_string(const ExponentVec& a) {
  return "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]) + "]";
}

ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

ExponentVec operator-(const ExponentVec& a, const ExponentVec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

PbwElement::PbwElement(long c) {
  if (c != 0) terms_.emplace(ExponentVec{}, LaurentQ(c));
}

PbwElement::PbwElement(const LaurentQ& c) {
  if (!c.is_zero()) terms_.emplace(ExponentVec{}, c);
}

PbwElement PbwElement::monomial(const ExponentVec& a, const LaurentQ& c) {
  for (int x : a)
    if (x < 0) throw AlgebraError("PbwElement::monomial: negative exponent in " + qca::to_string(a));
  PbwElement r;
  if (!c.is_zero()) r.terms_.emplace(a, c);
  return r;
}

LaurentQ PbwElement::coeff(const ExponentVec& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentQ() : it->second;
}

bool PbwElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const RootWeight w = root_weight(terms_.begin()->first);
  for (const auto& [a, c] : terms_)
    if (root_weight(a) != w) return false;
  return true;
}

bool PbwElement::is_integral() const {
  for (const auto& [a, c] : terms_)
    if (!c.is_integral()) return false;
  return true;
}

void PbwElement::add_term(const ExponentVec& a, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

PbwElement& PbwElement::operator*=(const LaurentQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

PbwElement PbwElement::operator-() const {
  PbwElement r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

// Straightening --------------------------------------------------------------

namespace {

using Key = std::uint64_t;

Key pack(const ExponentVec& a) {
  Key k = 0;
  for (int x : a) {
    if (x < 0 || x > 0xffff) throw AlgebraError("exponent out of range for straightening: " + to_string(a));
    k = (k << 16) | static_cast<Key>(x);
  }
  return k;
}

struct Memo {
  // u_i * u^b, keyed by (b, i)
  std::unordered_map<Key, PbwElement> left[4];
  // u^a * u^b for pairs of monomials
  std::unordered_map<Key, std::unordered_map<Key, PbwElement>> product;
  // u0^a0 u1^a1 u2^a2 u3^a3 in normal form
  std::unordered_map<Key, PbwElement> reversed;
};

Memo& memo() {
  thread_local Memo m;
  return m;
}

const PbwElement& left_monomial(int i, const ExponentVec& b);

PbwElement left_multiply(int i, const PbwElement& x) {
  PbwElement r;
  for (const auto& [b, c] : x.terms()) {
    const PbwElement& y = left_monomial(i, b);
    for (const auto& [m, cm] : y.terms()) r.add_term(m, c * cm);
  }
  return r;
}

PbwElement compute_left(int i, const ExponentVec& b) {
  int j = -1;
  for (int g = 3; g >= 0; --g) {
    if (b[slot(g)] > 0) {
      j = g;
      break;
    }
  }
  if (j <= i) {
    ExponentVec r = b;
    ++r[slot(i)];
    return PbwElement::monomial(r);
  }
  // u_i u_j m' with j > i: move u_i past one copy of u_j.
  ExponentVec rest = b;
  --rest[slot(j)];
  PbwElement moved = left_multiply(j, left_monomial(i, rest));
  moved *= LaurentQ::q_power(-2);
  const PbwElement tail = PbwElement::monomial(rest);
  switch (j - i) {
    case 1:
      break;
    case 2:
      moved += left_multiply(i + 1, left_multiply(i + 1, tail)) * (LaurentQ::q_power(-2) - 1);
      break;
    case 3:
      moved += left_multiply(i + 2, left_multiply(i + 1, tail)) * (LaurentQ::q_power(-4) - 1);
      break;
    default:
      throw AlgebraError("straightening: generator index out of range");
  }
  return moved;
}

const PbwElement& left_monomial(int i, const ExponentVec& b) {
  auto& table = memo().left[i];
  const Key k = pack(b);
  auto it = table.find(k);
  if (it != table.end()) return it->second;
  PbwElement r = compute_left(i, b);
  return table.emplace(k, std::move(r)).first->second;
}

const PbwElement& monomial_product(const ExponentVec& a, const ExponentVec& b) {
  auto& inner = memo().product[pack(a)];
  const Key kb = pack(b);
  auto it = inner.find(kb);
  if (it != inner.end()) return it->second;
  PbwElement r = PbwElement::monomial(b);
  for (int i = 0; i <= 3; ++i)
    for (int t = 0; t < a[slot(i)]; ++t) r = left_multiply(i, r);
  return inner.emplace(kb, std::move(r)).first->second;
}

const PbwElement& reversed_monomial(const ExponentVec& a) {
  auto& table = memo().reversed;
  const Key k = pack(a);
  auto it = table.find(k);
  if (it != table.end()) return it->second;
  PbwElement r = PbwElement::monomial({a[0], 0, 0, 0});
  for (int i = 2; i >= 0; --i)
    for (int t = 0; t < a[slot(i)]; ++t) r = left_multiply(i, r);
  return table.emplace(k, std::move(r)).first->second;
}

}  // namespace

PbwElement multiply(const PbwElement& x, const PbwElement& y) {
  std::map<ExponentVec, LaurentQ, std::greater<>> acc;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const LaurentQ c = ca * cb;
      for (const auto& [m, cm] : monomial_product(a, b).terms()) acc[m].add_product(c, cm);
    }
  }
  PbwElement r;
  for (auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

PbwElement operator*(const PbwElement& x, const PbwElement& y) { return multiply(x, y); }

PbwElement power(const PbwElement& x, int k) {
  if (k < 0) throw AlgebraError("power: negative exponent");
  PbwElement r = 1;
  for (int i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

PbwElement straighten_word(const std::vector<int>& word) {
  PbwElement r = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > 3) throw AlgebraError("straighten_word: generator index out of range");
    r = left_multiply(*it, r);
  }
  return r;
}

PbwElement generator(int i) {
  if (i < 0 || i > 3) throw AlgebraError("generator: index out of range");
  ExponentVec a{};
  a[slot(i)] = 1;
  return PbwElement::monomial(a);
}

PbwElement p0() {
  return PbwElement::monomial({0, 1, 0, 1}) - PbwElement::monomial({0, 0, 2, 0}, LaurentQ::q_power(2));
}

PbwElement p1() {
  return PbwElement::monomial({1, 0, 1, 0}) - PbwElement::monomial({0, 2, 0, 0}, LaurentQ::q_power(2));
}

PbwElement sigma(const PbwElement& x) {
  std::map<ExponentVec, LaurentQ, std::greater<>> acc;
  for (const auto& [a, c] : x.terms()) {
    const LaurentQ scaled = c.bar().shifted(2 * (3 * a[0] + 2 * a[1] + a[2]));
    for (const auto& [m, cm] : reversed_monomial(a).terms()) acc[m].add_product(scaled, cm);
  }
  PbwElement r;
  for (auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

DividedPower divided_power(int i, int k) {
  if (k < 0) throw AlgebraError("divided_power: negative exponent");
  ExponentVec a{};
  a[slot(i)] = k;
  return {PbwElement::monomial(a), quantum_factorial(k)};
}

CPoly specialize_q1(const PbwElement& x) {
  CPoly r;
  for (const auto& [a, c] : x.terms()) {
    if (!c.is_integral()) throw AlgebraError("specialize_q1: half-integral exponent in " + c.to_string());
    r += CPoly::monomial({a[0], a[1], a[2], a[3], 0, 0}, c.eval_at_one());
  }
  return r;
}

// Rendering and parsing --------------------------------------------------------

namespace {

std::string monomial_text(const ExponentVec& a, bool latex) {
  std::string s;
  for (int i = 3; i >= 0; --i) {
    const int e = a[slot(i)];
    if (e == 0) continue;
    if (latex) {
      if (!s.empty()) s += " ";
      s += "u_{" + std::to_string(i) + "}";
      if (e != 1) s += "^{" + std::to_string(e) + "}";
    } else {
      if (!s.empty()) s += "*";
      s += "u" + std::to_string(i);
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string render(const PbwElement& x, bool latex) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : x.terms()) {
    const bool negative = c.leading_coeff() < 0;
    const LaurentQ mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(a, latex);
    if (mag.is_one()) {
      out += mono.empty() ? "1" : mono;
      continue;
    }
    out += "(" + (latex ? mag.to_latex() : mag.to_string()) + ")";
    if (!mono.empty()) out += (latex ? " " : "*") + mono;
  }
  return out;
}

class PbwParser {
 public:
  explicit PbwParser(std::string_view s) : s_(s) {}

  PbwElement parse() {
    PbwElement r;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto [a, c] = term();
      r.add_term(a, negative ? -c : c);
      skip();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return r;
  }

 private:
  std::pair<ExponentVec, LaurentQ> term() {
    skip();
    LaurentQ c = 1;
    ExponentVec a{};
    if (peek() == '(') {
      ++pos_;
      const std::size_t start = pos_;
      int depth = 1;
      while (pos_ < s_.size() && depth > 0) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced parenthesis");
      c = LaurentQ::parse(s_.substr(start, pos_ - start - 1));
      skip();
      if (peek() != '*') return {a, c};
      ++pos_;
      skip();
      a = monomial();
    } else if (peek() == '1') {
      ++pos_;
    } else {
      a = monomial();
    }
    return {a, c};
  }

  ExponentVec monomial() {
    ExponentVec a{};
    int previous = 4;
    while (true) {
      skip();
      if (peek() != 'u') fail("expected generator");
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected generator index 0..3");
      const int i = s_[pos_++] - '0';
      if (i >= previous) fail("monomial not in normal order");
      previous = i;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer();
      }
      a[slot(i)] = e;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return a;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("PBW element: " + what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string PbwElement::to_string() const { return render(*this, false); }
std::string PbwElement::to_latex() const { return render(*this, true); }

PbwElement PbwElement::parse(std::string_view text) {
  if (text == "0") return PbwElement();
  return PbwParser(text).parse();
}

std::string PbwElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : terms_) terms.push_back({{"exp", a}, {"coef", c.to_string()}});
  return nlohmann::json{{"terms", terms}}.dump();
}

PbwElement PbwElement::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
    PbwElement r;
    for (const auto& t : j.at("terms")) {
      ExponentVec a = t.at("exp").get<ExponentVec>();
      r.add_term(a, LaurentQ::parse(t.at("coef").get<std::string>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PBW element JSON: ") + e.what());
  }
}

}  // namespace qca
