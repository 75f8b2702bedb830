#include <chrono>

#include "doctest.h"
#include "qca/free_serre.hpp"
#include "qca/pbw.hpp"
#include "qca/qarith.hpp"
#include "qca/report.hpp"

using qca::FreeElement;
using qca::FreeWord;
using qca::LaurentQ;
using qca::MembershipMode;

namespace {

LaurentQ q(int k) { return LaurentQ::q_power(k); }
FreeElement E(int e) { return FreeElement::generator(e); }

}  // namespace

TEST_CASE("words") {
  const auto w = FreeWord::from_letters({1, 2, 2});
  CHECK(w.length() == 3);
  CHECK(w.weight() == std::array<int, 2>{1, 2});
  CHECK(w.to_string() == "E1*E2*E2");
  CHECK((FreeWord::letter(2) * w).to_string() == "E2*E1*E2*E2");
  CHECK(FreeWord().to_string() == "1");
  CHECK(qca::words_of_weight(2, 2).size() == 6);
  CHECK(qca::words_of_weight(7, 5).size() == 792);
  CHECK_THROWS_AS(FreeWord::from_letters({3}), qca::AlgebraError);
}

TEST_CASE("free algebra arithmetic") {
  const FreeElement a = E(1) + q(1) * E(2), b = E(2) - E(1).divided_by(qca::quantum_int(2));
  const FreeElement c = q(-1) * E(1) * E(2) + LaurentQ(3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a - a).is_zero());
  CHECK(b.divided_by(qca::quantum_int(2)) * qca::quantum_int(2) == b);
  CHECK(E(1) * E(2) != E(2) * E(1));
  CHECK((E(1) * E(2) * E(1)).weight() == std::array<int, 2>{2, 1});
  CHECK_FALSE((E(1) + E(1) * E(2)).is_homogeneous());
}

TEST_CASE("generators") {
  const auto v = qca::build_generators();
  const FreeElement A = qca::element_A();
  CHECK(v[0] == E(1));
  CHECK(v[1] == A * v[0] - v[0] * A);
  CHECK(v[1] == (E(2) * E(1) * E(1) - (q(-2) + 1) * (E(1) * E(2) * E(1)) + q(-2) * (E(1) * E(1) * E(2)))
                    .divided_by(qca::quantum_int(2)));
  for (int i = 0; i < 4; ++i) CHECK(v[i].weight() == std::array<int, 2>{i + 1, i});
}

TEST_CASE("the Serre relators themselves and non-members") {
  const auto [s1, s2] = qca::serre_relators();
  for (auto mode : {MembershipMode::Exact, MembershipMode::Probabilistic}) {
    CHECK(qca::ideal_membership(s1, mode).member);
    CHECK(qca::ideal_membership(E(2) * s2 * E(1), mode).member);
    CHECK_FALSE(qca::ideal_membership(E(1) * E(2), mode).member);
    CHECK_FALSE(qca::ideal_membership(s1 + E(1) * E(1) * E(1) * E(2), mode).member);
    // v0 v1 - v1 v0 is not zero modulo the ideal; only the q^-2 twisted form is.
    const auto v = qca::build_generators();
    CHECK_FALSE(qca::ideal_membership(v[0] * v[1] - v[1] * v[0], mode).member);
  }
  CHECK_THROWS_AS(qca::ideal_membership(E(1) + E(1) * E(2), MembershipMode::Exact), qca::AlgebraError);
  const FreeElement big = FreeElement::word(FreeWord::from_letters(std::vector<int>(13, 1)));
  CHECK_THROWS_AS(qca::ideal_membership(big, MembershipMode::Exact), qca::ResourceLimit);
}

TEST_CASE("certificates reproduce the element") {
  for (const std::string name : {"v0v1", "v0v2", "v1v2", "v0v3"}) {
    const FreeElement d = qca::straightening_defect(name);
    const auto r = qca::ideal_membership(d, MembershipMode::Exact);
    REQUIRE(r.member);
    REQUIRE(r.certificate);
    CHECK(qca::expand_certificate(*r.certificate) == d);
  }
}

TEST_CASE("exact and probabilistic agree up to weight (5,3)") {
  for (const std::string name : {"v0v1", "v0v2", "v1v2", "v0v3"}) {
    const FreeElement d = qca::straightening_defect(name);
    CHECK(qca::ideal_membership(d, MembershipMode::Exact).member);
    CHECK(qca::ideal_membership(d, MembershipMode::Probabilistic).member);
    const auto w = d.weight();
    const FreeElement wrong = d + FreeElement::word(qca::words_of_weight(w[0], w[1]).back(), q(1));
    CHECK(qca::ideal_membership(wrong, MembershipMode::Exact).member ==
          qca::ideal_membership(wrong, MembershipMode::Probabilistic).member);
  }
}

TEST_CASE("all six straightening relations hold modulo the Serre ideal") {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = qca::verify_straightening_mod_serre();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(checks.size() == 6);
  for (const auto& c : checks) {
    INFO(c.relation);
    CHECK(c.member);
    CHECK(c.mode == (c.weight[0] + c.weight[1] <= 8 ? MembershipMode::Exact : MembershipMode::Probabilistic));
  }
  MESSAGE("six relations checked in " << seconds << " s");
  const auto v = qca::build_generators();
  CHECK_FALSE(qca::ideal_membership(v[1] * v[3] - v[3] * v[1], MembershipMode::Probabilistic).member);
  CHECK_FALSE(qca::ideal_membership(v[2] * v[3] - v[3] * v[2], MembershipMode::Probabilistic).member);
  CHECK(qca::serre_report_to_json(checks).find("\"v2v3\"") != std::string::npos);
}

// Products of v-generators straightened in the PBW algebra must agree with the
// free algebra modulo the Serre ideal (u_i and v_i differ by a uniform scalar
// on a homogeneous weight).
TEST_CASE("straightening agrees with the free algebra modulo the ideal") {
  const auto v = qca::build_generators();
  const std::vector<std::vector<int>> products = {{1, 0}, {0, 0, 1}, {1, 1, 0}, {2, 0}, {2, 1}, {3, 0}, {1, 0, 2}};
  for (const auto& word : products) {
    FreeElement lhs = LaurentQ(1);
    qca::PbwElement straight = 1;
    for (int i : word) {
      lhs = lhs * v[i];
      straight = straight * qca::generator(i);
    }
    FreeElement rhs;
    for (const auto& [a, c] : straight.terms()) {
      FreeElement m = c;
      for (int i = 3; i >= 0; --i)
        for (int k = 0; k < a[qca::slot(i)]; ++k) m = m * v[i];
      rhs += m;
    }
    const auto r = qca::ideal_membership(lhs - rhs, MembershipMode::Exact);
    CHECK(r.member);
  }
}
