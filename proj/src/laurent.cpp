#include "qca/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qca {

LaurentQ::LaurentQ(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentQ::LaurentQ(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentQ LaurentQ::half_power(int half, const Rational& c) {
  LaurentQ r;
  if (c != 0) r.terms_.emplace_back(half, c);
  return r;
}

LaurentQ LaurentQ::from_terms(std::vector<Term> terms) {
  LaurentQ r;
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void LaurentQ::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    int h = terms_[i].first;
    Rational c = terms_[i].second;
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].first == h; ++j) c += terms_[j].second;
    if (c != 0) terms_[out++] = Term(h, std::move(c));
    i = j;
  }
  terms_.resize(out);
}

bool LaurentQ::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentQ::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first % 2 == 0; });
}

bool LaurentQ::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

Rational LaurentQ::coeff_half(int half) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half,
                             [](const Term& t, int h) { return t.first < h; });
  if (it != terms_.end() && it->first == half) return it->second;
  return 0;
}

int LaurentQ::min_half() const {
  if (terms_.empty()) throw AlgebraError("min_half of zero Laurent polynomial");
  return terms_.front().first;
}

int LaurentQ::max_half() const {
  if (terms_.empty()) throw AlgebraError("max_half of zero Laurent polynomial");
  return terms_.back().first;
}

const Rational& LaurentQ::leading_coeff() const {
  if (terms_.empty()) throw AlgebraError("leading coefficient of zero Laurent polynomial");
  return terms_.back().second;
}

LaurentQ LaurentQ::bar() const {
  LaurentQ r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentQ LaurentQ::shifted_half(int half) const {
  LaurentQ r = *this;
  for (auto& t : r.terms_) t.first += half;
  return r;
}

Rational LaurentQ::eval_at_one() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
  Integer num = base.get_num();
  Integer den = base.get_den();
  if (exponent < 0) {
    std::swap(num, den);
    exponent = -exponent;
  }
  Integer pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(pn, pd);
  r.canonicalize();
  return r;
}

}  // namespace

Rational LaurentQ::evaluate(const Rational& q) const {
  if (!is_integral()) throw AlgebraError("evaluate: half-integral exponent");
  if (q == 0 && !terms_.empty() && terms_.front().first < 0)
    throw AlgebraError("evaluate: pole at q = 0");
  Rational s = 0;
  for (const auto& t : terms_) s += t.second * rational_power(q, t.first / 2);
  return s;
}

LaurentQ LaurentQ::positive_part() const {
  LaurentQ r;
  for (const auto& t : terms_)
    if (t.first > 0) r.terms_.push_back(t);
  return r;
}

std::optional<LaurentQ> LaurentQ::divide_exact(const LaurentQ& d) const {
  if (d.is_zero()) throw AlgebraError("division by zero Laurent polynomial");
  if (is_zero()) return LaurentQ();
  const int shift_a = min_half();
  const int shift_d = d.min_half();
  const int deg_a = max_half() - shift_a;
  const int deg_d = d.max_half() - shift_d;
  if (deg_a < deg_d) return std::nullopt;
  std::vector<Rational> rem(static_cast<std::size_t>(deg_a) + 1);
  for (const auto& t : terms_) rem[t.first - shift_a] = t.second;
  std::vector<Rational> div(static_cast<std::size_t>(deg_d) + 1);
  for (const auto& t : d.terms_) div[t.first - shift_d] = t.second;
  std::vector<Term> quot;
  const Rational& lead = div[deg_d];
  for (int i = deg_a - deg_d; i >= 0; --i) {
    Rational c = rem[i + deg_d] / lead;
    if (c == 0) continue;
    for (int j = 0; j <= deg_d; ++j)
      if (div[j] != 0) rem[i + j] -= c * div[j];
    quot.emplace_back(i + shift_a - shift_d, std::move(c));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return from_terms(std::move(quot));
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  r.add_product(a, b);
  return r;
}

void LaurentQ::add_product(const LaurentQ& a, const LaurentQ& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    *this += half_power(a.terms_[0].first + b.terms_[0].first,
                        a.terms_[0].second * b.terms_[0].second);
    return;
  }
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo) + 1);
  std::vector<char> used(dense.size(), 0);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      std::size_t idx = static_cast<std::size_t>(ta.first + tb.first - lo);
      mpq_t tmp;
      mpq_init(tmp);
      mpq_mul(tmp, ta.second.get_mpq_t(), tb.second.get_mpq_t());
      mpq_add(dense[idx].get_mpq_t(), dense[idx].get_mpq_t(), tmp);
      mpq_clear(tmp);
      used[idx] = 1;
    }
  }
  LaurentQ prod;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (used[i] && dense[i] != 0) prod.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
  *this += prod;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ& LaurentQ::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool lexicographic_less(const LaurentQ& a, const LaurentQ& b) {
  auto ta = a.terms();
  auto tb = b.terms();
  return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                      [](const LaurentQ::Term& x, const LaurentQ::Term& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

std::string qpow_text(int half) {
  if (half % 2 == 0) {
    int k = half / 2;
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
  }
  return "q^(" + std::to_string(half) + "/2)";
}

std::string qpow_latex(int half) {
  if (half % 2 == 0) {
    int k = half / 2;
    if (k == 1) return "q";
    return "q^{" + std::to_string(k) + "}";
  }
  return "q^{" + std::to_string(half) + "/2}";
}

std::string rational_latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

template <typename PowFn, typename RatFn>
std::string render(std::span<const LaurentQ::Term> terms, PowFn pow, RatFn rat, const char* times) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = it->second < 0;
    Rational mag = abs(it->second);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (it->first == 0) {
      out += rat(mag);
    } else if (mag == 1) {
      out += pow(it->first);
    } else {
      out += rat(mag);
      out += times;
      out += pow(it->first);
    }
  }
  return out;
}

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentQ parse() {
    std::vector<LaurentQ::Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(term(op == '-'));
    }
    return LaurentQ::from_terms(std::move(terms));
  }

 private:
  LaurentQ::Term term(bool negative) {
    Rational c = 1;
    int half = 0;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        half = qpow();
      }
    } else if (!at_end() && peek() == 'q') {
      half = qpow();
    } else {
      fail("expected coefficient or q-power");
    }
    if (negative) c = -c;
    return {half, c};
  }

  Rational rational() {
    Integer num(digits());
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = Integer(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  int qpow() {
    if (at_end() || peek() != 'q') fail("expected 'q'");
    ++pos_;
    if (at_end() || peek() != '^') return 2;
    ++pos_;
    if (!at_end() && peek() == '(') {
      ++pos_;
      int h = signed_int();
      if (at_end() || peek() != '/') fail("expected '/2'");
      ++pos_;
      if (digits() != "2") fail("half-exponent denominator must be 2");
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return h;
    }
    return 2 * signed_int();
  }

  int signed_int() {
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.size() > 8) fail("exponent out of range");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Laurent polynomial parse error at offset " + std::to_string(pos_) + ": " +
                     what + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentQ::to_string() const {
  return render(terms_, qpow_text, rational_to_string, "*");
}

std::string LaurentQ::to_latex() const { return render(terms_, qpow_latex, rational_latex, ""); }

LaurentQ LaurentQ::parse(std::string_view text) { return LaurentParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const LaurentQ& x) { return os << x.to_string(); }

}  // namespace qca
