#pragma once

#include <string>

#include "polardeg/parser.hpp"
#include "polardeg/poly.hpp"

namespace testing_helpers {

inline polardeg::PolyQ Q(const std::string& text, std::size_t nvars = 3) {
  return polardeg::parse_poly_q(text, nvars);
}

inline polardeg::PolyP P(const std::string& text, std::size_t nvars = 3,
                         polardeg::u64 prime = polardeg::kDefaultPrime) {
  return polardeg::parse_poly(text, nvars, polardeg::PrimeField(prime));
}

// Random dense polynomial of total degree <= d with small coefficients.
template <class K>
polardeg::MultiPoly<K> random_poly(const K& field, std::size_t nvars, unsigned d, polardeg::SeedStream& s,
                                   bool homogeneous = false) {
  using Poly = polardeg::MultiPoly<K>;
  std::vector<typename Poly::Term> terms;
  std::vector<unsigned> e(nvars, 0);
  for (int k = 0; k < 6; ++k) {
    unsigned left = homogeneous ? d : unsigned(s.uniform(d + 1));
    for (std::size_t i = 0; i + 1 < nvars; ++i) {
      e[i] = unsigned(s.uniform(left + 1));
      left -= e[i];
    }
    e[nvars - 1] = left;
    const long c = long(s.uniform(19)) - 9;
    if (c == 0) continue;
    terms.push_back({polardeg::Monomial::from_exponents(e), field.from_int(c)});
  }
  return Poly::from_terms(field, nvars, std::move(terms));
}

}  // namespace testing_helpers
