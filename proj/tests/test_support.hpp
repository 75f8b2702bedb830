#pragma once

#include <random>

#include "qca/laurent.hpp"

namespace qca::testing {

inline LaurentQ random_laurent(std::mt19937_64& rng, int max_terms = 4, int span = 6, bool integral = true) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<LaurentQ::Term> terms;
  for (int i = n_terms(rng); i > 0; --i) {
    int h = exp(rng);
    if (integral) h *= 2;
    terms.emplace_back(h, Rational(num(rng), den(rng)));
  }
  for (auto& t : terms) t.second.canonicalize();
  return LaurentQ::from_terms(std::move(terms));
}

}  // namespace qca::testing
