#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polardeg/foliation.hpp"
#include "polardeg/polar.hpp"

namespace polardeg {

/// Evidence for one claim on one instance.
struct VerificationOutcome {
  std::string claim;
  std::string instance;
  std::vector<long long> lhs;
  std::vector<long long> rhs;
  bool pass = false;
  std::string label;  // "hypothesis-unverified" when the run bypassed a hypothesis check
  std::vector<DegreeReport> reports;
};

nlohmann::ordered_json outcome_json(const VerificationOutcome& o);

/// e_i^k = e_0^{k-i} + e_0^{k-i+1}, for 2 <= k <= n and 1 <= i <= k-1.
VerificationOutcome verify_gauss_theorem(const LogFoliation<RationalField>& fol, std::size_t k, int i,
                                         const DegreeOptions& opts, const std::string& instance = "");

/// e_i^k = e_{i-s}^{k-s}. Requires s >= 1, s + 2 <= k <= n, 2 <= i <= k-1
/// and i - s >= 1 (both sides must fall under the Gauss identity).
VerificationOutcome verify_gauss_shift(const LogFoliation<RationalField>& fol, std::size_t k, int i,
                                       std::size_t s, const DegreeOptions& opts,
                                       const std::string& instance = "");

/// deg_i of the Gauss map of the associated foliation equals
/// deg_i + deg_{i-1} of the weighted polar map (deg_{-1} = 0).
VerificationOutcome verify_polar_relation(const WeightedFunction& w, int i, const DegreeOptions& opts,
                                          const std::string& instance = "");

/// deg_i of the weighted polar map equals e_0^{n+1-i} of the associated
/// foliation.
VerificationOutcome verify_corollary_deg(const WeightedFunction& w, int i, const DegreeOptions& opts,
                                         const std::string& instance = "");

/// Full profiles under every weight set equal the all-ones profile. Mixed
/// signs are rejected unless `allow_unverified`, which labels the outcome.
VerificationOutcome verify_invariance(const std::vector<PolyQ>& factors,
                                      const std::vector<std::vector<mpq_class>>& weight_sets,
                                      const DegreeOptions& opts, bool allow_unverified = false,
                                      const std::string& instance = "");

/// deg_i(grad(F1 F2)) >= max(deg_i(grad F1), deg_i(grad F2)).
VerificationOutcome verify_product_bound(const PolyQ& f1, const PolyQ& f2, int i, const DegreeOptions& opts,
                                         const std::string& instance = "");

/// Smooth conic, triangle and conic plus tangent line are homaloidal;
/// concurrent lines (0), conic plus transversal line (2) and the Fermat
/// cubic (4) are not.
std::vector<VerificationOutcome> run_dolgachev_suite(const DegreeOptions& opts);

/// k concurrent lines plus x2. Resonant weights (1, ..., 1, -(k-1), 1)
/// give deg_0 = 1, all-ones weights give k - 1; also checks the
/// singular-scheme degree k^2 + k + 1 of the degree-k foliation of P^2
/// built from the lines, x2 and a generic line.
VerificationOutcome run_resonance_example(unsigned k, const DegreeOptions& opts);

/// Degree-k foliation of P^2 from the resonance example.
LogFoliation<RationalField> resonance_foliation(unsigned k);

/// The Gauss identity and its shifted corollary at every admissible
/// (k, i) with k <= max_k.
std::vector<VerificationOutcome> verify_gauss_all(const LogFoliation<RationalField>& fol, std::size_t max_k,
                                                  const DegreeOptions& opts, const std::string& instance);

}  // namespace polardeg
