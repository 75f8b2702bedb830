#include <set>

#include "doctest.h"
#include "qca/verify.hpp"

namespace {

void require_all_ok(const qca::Report& r) {
  CHECK_FALSE(r.empty());
  for (const auto& c : r) {
    INFO(c.suite << ": " << c.identity << " at n = " << c.n << ": " << c.detail);
    CHECK(c.ok);
  }
}

qca::SuiteOptions small() {
  qca::SuiteOptions o;
  o.n_max = 3;
  o.k_max = 4;
  return o;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(qca::suite_names().back() == "all");
  CHECK(qca::is_suite("closed-formulas"));
  CHECK_FALSE(qca::is_suite("bogus"));
  CHECK_THROWS_AS(qca::run_suite("bogus", small()), std::invalid_argument);
}

TEST_CASE("straightening suite") { require_all_ok(qca::run_suite("straightening", small())); }

TEST_CASE("recursions, products, closed formulas, PBW expansion") {
  for (const char* s : {"recursions", "products", "closed-formulas", "pbw-expansion"}) {
    const auto r = qca::run_suite(s, small());
    for (const auto& c : r) CHECK(c.suite == s);
    require_all_ok(r);
  }
}

TEST_CASE("recursion report has eight forms per n") { CHECK(qca::verify_recursions(2).size() == 16); }

TEST_CASE("classical suite") { require_all_ok(qca::verify_classical(3)); }

TEST_CASE("golden elements: only the printed B[2,0,0,2] disagrees") {
  const auto r = qca::verify_golden_elements();
  CHECK(r.size() == 10);
  int failures = 0;
  for (const auto& c : r)
    if (!c.ok) {
      ++failures;
      CHECK(c.identity.rfind("B[2,0,0,2] = ", 0) == 0);
      CHECK(c.detail ==
            "computed (q^2)*u3^2*u0^2 - (q^4 + 2*q^2)*u3*u2*u1*u0 + (q^6)*u3*u1^3 + (q^6)*u2^3*u0");
    }
  CHECK(failures == 1);
}

TEST_CASE("defining conditions and order independence") {
  require_all_ok(qca::verify_defining_conditions(4));
  require_all_ok(qca::verify_order_independence(4, {1, 2}));
}

TEST_CASE("parallel run of all suites keeps the sequential order") {
  qca::SuiteOptions o = small();
  o.n_max = 3;
  const auto seq = qca::run_suite("all", o);
  o.jobs = 4;
  const auto par = qca::run_suite("all", o);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].identity == par[i].identity);
    CHECK(seq[i].ok == par[i].ok);
  }
  std::set<std::string> suites;
  for (const auto& c : seq) suites.insert(c.suite);
  CHECK(suites.size() == qca::suite_names().size() - 1);
}
