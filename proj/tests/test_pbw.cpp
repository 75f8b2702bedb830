#include <map>
#include <random>

#include "doctest.h"
#include "qca/pbw.hpp"
#include "qca/qarith.hpp"
#include "test_support.hpp"

using qca::ExponentVec;
using qca::LaurentQ;
using qca::PbwElement;

namespace {

LaurentQ q(int k) { return LaurentQ::q_power(k); }
PbwElement u(int i) { return qca::generator(i); }
PbwElement mono(const ExponentVec& a, const LaurentQ& c = 1) { return PbwElement::monomial(a, c); }

// Independent oracle: rewrite words by repeatedly fixing the rightmost inversion.
PbwElement naive_straighten(const std::vector<int>& word) {
  std::map<std::vector<int>, LaurentQ> pending{{word, 1}};
  PbwElement done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::vector<int>& w = node.key();
    const LaurentQ& c = node.mapped();
    int pos = -1;
    for (int p = static_cast<int>(w.size()) - 2; p >= 0; --p) {
      if (w[p] < w[p + 1]) {
        pos = p;
        break;
      }
    }
    if (pos < 0) {
      ExponentVec a{};
      for (int g : w) ++a[qca::slot(g)];
      done.add_term(a, c);
      continue;
    }
    const int i = w[pos], j = w[pos + 1];
    auto emit = [&](std::vector<int> middle, const LaurentQ& factor) {
      std::vector<int> nw(w.begin(), w.begin() + pos);
      nw.insert(nw.end(), middle.begin(), middle.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      LaurentQ& slot = pending[nw];
      slot += c * factor;
      if (slot.is_zero()) pending.erase(nw);
    };
    emit({j, i}, q(-2));
    if (j - i == 2) emit({i + 1, i + 1}, q(-2) - 1);
    if (j - i == 3) emit({i + 2, i + 1}, q(-4) - 1);
  }
  return done;
}

PbwElement random_element(std::mt19937_64& rng, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nt(1, max_terms), ex(0, max_exp);
  PbwElement r;
  for (int t = nt(rng); t > 0; --t) r.add_term({ex(rng), ex(rng), ex(rng), ex(rng)}, qca::testing::random_laurent(rng, 3, 3));
  return r;
}

}  // namespace

TEST_CASE("generators and frozen elements") {
  CHECK(u(3) == mono({1, 0, 0, 0}));
  CHECK(u(0) == mono({0, 0, 0, 1}));
  CHECK(qca::root_weight({0, 1, 0, 0}) == qca::RootWeight{3, 2});
  CHECK(qca::root_weight({1, 0, 0, 0}) == qca::RootWeight{4, 3});
  CHECK(qca::p1() == mono({1, 0, 1, 0}) - mono({0, 2, 0, 0}, q(2)));
  CHECK(qca::p0() == mono({0, 1, 0, 1}) - mono({0, 0, 2, 0}, q(2)));
  CHECK(qca::p0() * qca::p1() == q(-4) * (qca::p1() * qca::p0()));
}

TEST_CASE("defining straightening relations") {
  CHECK(u(0) * u(1) == mono({0, 0, 1, 1}, q(-2)));
  CHECK(u(0) * u(3) == mono({1, 0, 0, 1}, q(-2)) + mono({0, 1, 1, 0}, q(-4) - 1));
  CHECK(u(1) * u(3) == mono({1, 0, 1, 0}, q(-2)) + mono({0, 2, 0, 0}, q(-2) - 1));
  for (int i = 0; i < 3; ++i) CHECK(u(i) * u(i + 1) == q(-2) * (u(i + 1) * u(i)));
  for (int i = 0; i < 2; ++i)
    CHECK(u(i) * u(i + 2) == q(-2) * (u(i + 2) * u(i)) + (q(-2) - 1) * (u(i + 1) * u(i + 1)));
  // Already ordered products are just monomials.
  CHECK(u(3) * u(0) == mono({1, 0, 0, 1}));
  CHECK(u(2) * u(2) == mono({0, 2, 0, 0}));
}

TEST_CASE("all generator triples associate") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK((u(i) * u(j)) * u(k) == u(i) * (u(j) * u(k)));
}

TEST_CASE("straightening agrees with an independent rewriter") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 6), letter(0, 3);
  for (int t = 0; t < 150; ++t) {
    std::vector<int> w(len(rng));
    for (int& g : w) g = letter(rng);
    CHECK(qca::straighten_word(w) == naive_straighten(w));
  }
}

TEST_CASE("random products: associativity, homogeneity, sigma") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 25; ++t) {
    PbwElement x = random_element(rng, 3, 2), y = random_element(rng, 3, 2), z = random_element(rng, 2, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(qca::sigma(x * y) == qca::sigma(y) * qca::sigma(x));
    CHECK(qca::sigma(qca::sigma(x)) == x);
  }
  for (int t = 0; t < 25; ++t) {
    ExponentVec a{}, b{};
    std::uniform_int_distribution<int> ex(0, 3);
    for (int i = 0; i < 4; ++i) a[i] = ex(rng), b[i] = ex(rng);
    PbwElement prod = mono(a) * mono(b);
    CHECK(prod.is_homogeneous());
    CHECK(qca::root_weight(prod.terms().begin()->first) ==
          qca::RootWeight{qca::root_weight(a)[0] + qca::root_weight(b)[0], qca::root_weight(a)[1] + qca::root_weight(b)[1]});
  }
}

TEST_CASE("sigma on generators and a product") {
  for (int i = 0; i < 4; ++i) CHECK(qca::sigma(u(i)) == q(2 * i) * u(i));
  CHECK(qca::sigma(mono({1, 0, 0, 1})) == q(6) * (mono({1, 0, 0, 1}, q(-2)) + mono({0, 1, 1, 0}, q(-4) - 1)));
}

TEST_CASE("q-commutation of p0 and p1 with the generators") {
  const PbwElement P0 = qca::p0(), P1 = qca::p1();
  CHECK(P0 * u(0) == q(2) * (u(0) * P0));
  CHECK(P0 * u(1) == u(1) * P0);
  CHECK(P0 * u(2) == q(-2) * (u(2) * P0));
  CHECK(P0 * u(3) == q(-4) * (u(3) * P0));
  CHECK(P1 * u(0) == q(4) * (u(0) * P1));
  CHECK(P1 * u(1) == q(2) * (u(1) * P1));
  CHECK(P1 * u(2) == u(2) * P1);
  CHECK(P1 * u(3) == q(-2) * (u(3) * P1));
}

TEST_CASE("moving u1 past powers of u3") {
  for (int l = 1; l <= 10; ++l) {
    PbwElement rhs = mono({l, 0, 1, 0}, q(-2 * l)) + mono({l - 1, 2, 0, 0}, q(-4 * l + 2) - q(-2 * l + 2));
    CHECK(u(1) * mono({l, 0, 0, 0}) == rhs);
  }
}

TEST_CASE("divided powers") {
  CHECK(qca::divided_power(2, 0).numerator == PbwElement(1));
  CHECK(qca::divided_power(2, 0).denominator == 1);
  CHECK(qca::divided_power(3, 1).numerator == u(3));
  auto d = qca::divided_power(1, 2);
  CHECK(d.numerator == mono({0, 0, 2, 0}));
  CHECK(d.denominator == qca::quantum_int(2));
}

TEST_CASE("specialization at q = 1") {
  using qca::CPoly;
  using qca::CVar;
  CHECK(qca::specialize_q1(qca::p1()) == CPoly::var(CVar::U3) * CPoly::var(CVar::U1) - CPoly::var(CVar::U2, 2));
  CHECK(qca::specialize_q1(u(0) * u(1) - q(-2) * (u(1) * u(0))).is_zero());
  CHECK(qca::specialize_q1(mono({1, 0, 0, 1}) - mono({0, 1, 1, 0}, q(2))).to_string() == "U3*U0 - U2*U1");
  CHECK_THROWS_AS(qca::specialize_q1(mono({1, 0, 0, 0}, LaurentQ::half_power(1))), qca::AlgebraError);
}

TEST_CASE("text, LaTeX and JSON formats") {
  CHECK(PbwElement(1).to_string() == "1");
  CHECK(PbwElement().to_string() == "0");
  CHECK(qca::p1().to_string() == "u3*u1 - (q^2)*u2^2");
  PbwElement x = mono({2, 0, 0, 1}, q(1)) - mono({1, 1, 1, 0}, q(1) + q(3)) + mono({0, 3, 0, 0}, q(5));
  CHECK(x.to_string() == "(q)*u3^2*u0 - (q^3 + q)*u3*u2*u1 + (q^5)*u2^3");
  CHECK(x.to_latex() == "(q) u_{3}^{2} u_{0} - (q^{3} + q) u_{3} u_{2} u_{1} + (q^{5}) u_{2}^{3}");
  CHECK(PbwElement::parse(x.to_string()) == x);
  CHECK(PbwElement::from_json(x.to_json()) == x);
  CHECK(PbwElement::parse("-(q - q^-1) + u0") == mono({0, 0, 0, 1}) - (q(1) - q(-1)));
  CHECK_THROWS_AS(PbwElement::parse("u0*u3"), qca::ParseError);
  CHECK_THROWS_AS(PbwElement::parse("u4"), qca::ParseError);
  CHECK_THROWS_AS(PbwElement::from_json("{\"terms\": 3}"), qca::ParseError);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    PbwElement y = random_element(rng, 4, 3);
    CHECK(PbwElement::parse(y.to_string()) == y);
    CHECK(PbwElement::from_json(y.to_json()) == y);
  }
}
