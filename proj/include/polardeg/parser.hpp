#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polardeg/poly.hpp"

namespace polardeg {

/// Extra variable names accepted besides the x<k> convention, e.g.
/// {"x", 0}, {"y", 1}, {"z", 2}.
using VariableAliases = std::map<std::string, std::size_t, std::less<>>;

/// Parse a polynomial with rational coefficients.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///   var    := 'x' nat | alias
///   rational := nat ('/' nat)?
///
/// Juxtaposition is rejected; every product needs an explicit '*'.
/// Errors carry a 1-based line and column.
PolyQ parse_poly_q(std::string_view text, std::size_t nvars, const VariableAliases& aliases = {});

/// Parse and reduce into K. Over F_p a denominator divisible by p is an
/// error.
template <class K>
MultiPoly<K> parse_poly(std::string_view text, std::size_t nvars, const K& field,
                        const VariableAliases& aliases = {}) {
  return lift(parse_poly_q(text, nvars, aliases), field);
}

/// Smallest variable count that covers every x<k> in the text (at least 1).
std::size_t infer_nvars(std::string_view text);

/// Comma-separated nonzero rationals, e.g. "1,-1,2/3".
std::vector<mpq_class> parse_weights(std::string_view text);

/// Text accepted by parse_poly_q; over F_p coefficients print in the
/// symmetric range (-p/2, p/2].
template <class K>
std::string to_string(const MultiPoly<K>& p);

std::string to_string(const mpq_class& q);

}  // namespace polardeg
