#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qca/free_serre.hpp"
#include "qca/report.hpp"

namespace qca {

struct SuiteOptions {
  int n_max = 6;
  int k_max = 7;
  std::optional<MembershipMode> mode;  // serre suite; default policy when empty
  std::uint64_t seed = 20240601;
  int jobs = 1;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite (or every suite for "all"); results are in a fixed order.
Report run_suite(const std::string& name, const SuiteOptions& opts);

/// Generator relations, q-commutation of p0 and p1, and seeded associativity checks.
Report verify_straightening(std::uint64_t seed);
/// The six straightening relations modulo the Serre ideal.
Report verify_serre(std::optional<MembershipMode> mode, std::uint64_t seed);

/// The explicitly listed basis elements, compared as rendered text.
Report verify_golden_elements();
/// Both defining conditions for every index of total at most k_max.
Report verify_defining_conditions(int k_max);
/// Layer k recomputed under seeded linear extensions agrees with the default one.
Report verify_order_independence(int k, const std::vector<std::uint64_t>& seeds);
/// The fast strategy reproduces the triangular algorithm for every index of total at most k_max.
Report verify_fast_strategy(int k_max);

/// The eight recursion forms for B[n,0,0,n-1], B[n-1,0,0,n], B[n,0,0,n], 1 <= n <= n_max.
Report verify_recursions(int n_max);
/// The four product expansions for 1 <= n <= n_max, the n = 0 cases of the last two,
/// and commutativity of B[1,0,0,1] with B[n,0,0,n].
Report verify_products(int n_max);
/// Both closed product formulas for 0 <= n <= n_max.
Report verify_closed_formulas(int n_max);
/// The quadruple-sum expansion for 0 <= n <= n_max and the power formulas for k <= k_max.
Report verify_pbw_expansion(int n_max, int k_max);
/// Classical identities plus the q = 1 images of B[n+1,0,0,n] and B[n,0,0,n].
Report verify_classical(int n_max);

}  // namespace qca
