#include "polardeg/verify.hpp"

#include <algorithm>

#include "polardeg/corpus.hpp"
#include "polardeg/parser.hpp"

namespace polardeg {

namespace {

long long value_of(const DegreeReport& r) { return r.value ? *r.value : -1; }

bool all_stable(const std::vector<DegreeReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const DegreeReport& r) { return r.stable; });
}

VerificationOutcome finish(VerificationOutcome o) {
  o.pass = all_stable(o.reports) && o.lhs == o.rhs;
  return o;
}

void require_gauss_range(std::size_t n, std::size_t k, int i) {
  if (k < 2 || k > n) throw DomainError("k must lie in [2, n]");
  if (i < 1 || std::size_t(i) > k - 1) throw DomainError("i must lie in [1, k-1]");
}

}  // namespace

nlohmann::ordered_json outcome_json(const VerificationOutcome& o) {
  nlohmann::ordered_json j;
  j["claim"] = o.claim;
  j["instance"] = o.instance;
  j["lhs"] = o.lhs;
  j["rhs"] = o.rhs;
  j["pass"] = o.pass;
  if (!o.label.empty()) j["label"] = o.label;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : o.reports) {
    nlohmann::ordered_json x;
    x["i"] = r.level;
    x["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    x["stable"] = r.stable;
    reports.push_back(x);
  }
  j["reports"] = reports;
  return j;
}

VerificationOutcome verify_gauss_theorem(const LogFoliation<RationalField>& fol, std::size_t k, int i,
                                         const DegreeOptions& opts, const std::string& instance) {
  require_gauss_range(fol.ambient_dimension(), k, i);
  const auto lifted = lift_foliation(fol, opts.field);
  VerificationOutcome o;
  o.claim = "gauss-theorem (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")";
  o.instance = instance;
  auto left = e_degree(lifted, k, i, opts);
  auto a = e_degree(lifted, k - std::size_t(i), 0, opts);
  auto b = e_degree(lifted, k - std::size_t(i) + 1, 0, opts);
  o.lhs = {value_of(left)};
  o.rhs = {value_of(a) + value_of(b)};
  o.reports = {left, a, b};
  return finish(std::move(o));
}

VerificationOutcome verify_gauss_shift(const LogFoliation<RationalField>& fol, std::size_t k, int i,
                                       std::size_t s, const DegreeOptions& opts, const std::string& instance) {
  const std::size_t n = fol.ambient_dimension();
  if (s < 1 || s + 2 > k || k > n) throw DomainError("need s >= 1 and s + 2 <= k <= n");
  if (i < 2 || std::size_t(i) > k - 1) throw DomainError("need 2 <= i <= k-1");
  if (std::size_t(i) < s + 1) throw DomainError("need i - s >= 1");
  const auto lifted = lift_foliation(fol, opts.field);
  VerificationOutcome o;
  o.claim = "gauss-shift (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ", s=" + std::to_string(s) + ")";
  o.instance = instance;
  auto left = e_degree(lifted, k, i, opts);
  auto right = e_degree(lifted, k - s, i - int(s), opts);
  o.lhs = {value_of(left)};
  o.rhs = {value_of(right)};
  o.reports = {left, right};
  return finish(std::move(o));
}

std::vector<VerificationOutcome> verify_gauss_all(const LogFoliation<RationalField>& fol, std::size_t max_k,
                                                  const DegreeOptions& opts, const std::string& instance) {
  const std::size_t top = std::min(fol.ambient_dimension(), max_k);
  std::vector<VerificationOutcome> out;
  for (std::size_t k = 2; k <= top; ++k)
    for (int i = 1; std::size_t(i) < k; ++i) out.push_back(verify_gauss_theorem(fol, k, i, opts, instance));
  for (std::size_t k = 3; k <= top; ++k)
    for (std::size_t s = 1; s + 2 <= k; ++s)
      for (int i = int(s) + 1; std::size_t(i) < k; ++i)
        if (i >= 2) out.push_back(verify_gauss_shift(fol, k, i, s, opts, instance));
  return out;
}

VerificationOutcome verify_polar_relation(const WeightedFunction& w, int i, const DegreeOptions& opts,
                                          const std::string& instance) {
  const std::size_t n = w.dimension();
  if (i < 0 || std::size_t(i) >= n) throw DomainError("i must lie in [0, n-1]");
  const auto fol = lift_foliation(associated_foliation(w), opts.field);
  const auto polar = lift_map(weighted_polar_map(w), opts.field);
  VerificationOutcome o;
  o.claim = "polar-relation (i=" + std::to_string(i) + ")";
  o.instance = instance;
  auto gauss = e_degree(fol, n + 1, i, opts);
  auto here = map_degree(polar, i, opts);
  o.reports = {gauss, here};
  long long below = 0;
  if (i > 0) {
    auto prev = map_degree(polar, i - 1, opts);
    below = value_of(prev);
    o.reports.push_back(prev);
  }
  o.lhs = {value_of(gauss)};
  o.rhs = {value_of(here) + below};
  return finish(std::move(o));
}

VerificationOutcome verify_corollary_deg(const WeightedFunction& w, int i, const DegreeOptions& opts,
                                         const std::string& instance) {
  const std::size_t n = w.dimension();
  if (i < 0 || std::size_t(i) >= n) throw DomainError("i must lie in [0, n-1]");
  const auto fol = lift_foliation(associated_foliation(w), opts.field);
  const auto polar = lift_map(weighted_polar_map(w), opts.field);
  VerificationOutcome o;
  o.claim = "corollary-deg (i=" + std::to_string(i) + ")";
  o.instance = instance;
  auto left = map_degree(polar, i, opts);
  auto right = e_degree(fol, n + 1 - std::size_t(i), 0, opts);
  o.lhs = {value_of(left)};
  o.rhs = {value_of(right)};
  o.reports = {left, right};
  return finish(std::move(o));
}

VerificationOutcome verify_invariance(const std::vector<PolyQ>& factors,
                                      const std::vector<std::vector<mpq_class>>& weight_sets,
                                      const DegreeOptions& opts, bool allow_unverified,
                                      const std::string& instance) {
  VerificationOutcome o;
  o.claim = "invariance";
  o.instance = instance;
  const WeightedFunction base(factors, std::vector<mpq_class>(factors.size(), mpq_class(1)));
  bool unverified = false;
  std::vector<WeightedFunction> variants;
  for (const auto& ws : weight_sets) {
    auto w = base.with_weights(ws);
    if (!w.weights_same_sign()) {
      if (!allow_unverified)
        throw DomainError("weights of mixed sign: the invariance hypothesis cannot be certified");
      unverified = true;
    }
    variants.push_back(std::move(w));
  }
  if (unverified) o.label = "hypothesis-unverified";
  const auto reference = polar_degrees_profile(base, opts);
  for (const auto& w : variants) {
    const auto profile = polar_degrees_profile(w, opts);
    for (std::size_t i = 0; i < profile.size(); ++i) {
      o.lhs.push_back(value_of(reference[i]));
      o.rhs.push_back(value_of(profile[i]));
      o.reports.push_back(profile[i]);
    }
  }
  o.reports.insert(o.reports.begin(), reference.begin(), reference.end());
  return finish(std::move(o));
}

VerificationOutcome verify_product_bound(const PolyQ& f1, const PolyQ& f2, int i, const DegreeOptions& opts,
                                         const std::string& instance) {
  const WeightedFunction product({f1, f2}, {mpq_class(1), mpq_class(1)});
  const std::size_t n = product.dimension();
  if (i < 0 || std::size_t(i) >= n) throw DomainError("i must lie in [0, n-1]");
  VerificationOutcome o;
  o.claim = "product-bound (i=" + std::to_string(i) + ")";
  o.instance = instance;
  auto both = map_degree(lift_map(weighted_polar_map(product), opts.field), i, opts);
  auto one = map_degree(lift_map(polar_map(f1), opts.field), i, opts);
  auto two = map_degree(lift_map(polar_map(f2), opts.field), i, opts);
  o.lhs = {value_of(both)};
  o.rhs = {std::max(value_of(one), value_of(two))};
  o.reports = {both, one, two};
  o.pass = all_stable(o.reports) && o.lhs[0] >= o.rhs[0];
  return o;
}

std::vector<VerificationOutcome> run_dolgachev_suite(const DegreeOptions& opts) {
  struct Case {
    const char* name;
    std::string poly;
    long long expected;
  };
  const std::vector<Case> cases = {
      {"smooth conic", corpus::kConic, 1},
      {"three lines in general position", corpus::kTriangle, 1},
      {"conic plus tangent line", corpus::kConicTangentLine, 1},
      {"three concurrent lines", corpus::kConcurrentLines, 0},
      {"conic plus transversal line", corpus::kConicTransversalLine, 2},
      {"Fermat cubic", corpus::fermat(3), 4},
  };
  std::vector<VerificationOutcome> out;
  for (const auto& c : cases) {
    VerificationOutcome o;
    o.claim = c.expected == 1 ? "dolgachev: homaloidal" : "dolgachev: control";
    o.instance = std::string(c.name) + ": " + c.poly;
    auto r = map_degree(lift_map(polar_map(corpus::poly(c.poly)), opts.field), 0, opts);
    o.lhs = {value_of(r)};
    o.rhs = {c.expected};
    o.reports = {r};
    out.push_back(finish(std::move(o)));
  }
  return out;
}

LogFoliation<RationalField> resonance_foliation(unsigned k) {
  if (k < 2) throw DomainError("resonance example needs k >= 2");
  auto lines = corpus::resonance_lines(k);
  lines.push_back("x0 + 3*x1 + 5*x2");
  std::vector<PolyQ> fs;
  for (const auto& l : lines) fs.push_back(corpus::poly(l));
  std::vector<mpq_class> ws(k - 1, mpq_class(1));
  ws.push_back(-mpq_class(k - 1));
  ws.push_back(1);
  ws.push_back(-1);
  return logarithmic_foliation(WeightedFunction(std::move(fs), std::move(ws)));
}

VerificationOutcome run_resonance_example(unsigned k, const DegreeOptions& opts) {
  if (k < 2) throw DomainError("resonance example needs k >= 2");
  const auto lines = corpus::resonance_lines(k);
  std::vector<PolyQ> fs;
  for (const auto& l : lines) fs.push_back(corpus::poly(l));
  std::vector<mpq_class> resonant(k - 1, mpq_class(1));
  resonant.push_back(-mpq_class(k - 1));
  resonant.push_back(1);
  const WeightedFunction res(fs, resonant);
  const auto ones = res.with_weights(std::vector<mpq_class>(k + 1, mpq_class(1)));

  VerificationOutcome o;
  o.claim = "resonance (k=" + std::to_string(k) + ")";
  o.instance = std::to_string(k) + " concurrent lines plus x2";
  auto r1 = map_degree(lift_map(weighted_polar_map(res), opts.field), 0, opts);
  auto r2 = map_degree(lift_map(weighted_polar_map(ones), opts.field), 0, opts);
  o.reports = {r1, r2};
  o.lhs = {value_of(r1), value_of(r2), singular_scheme_degree_p2(resonance_foliation(k), opts.limits)};
  o.rhs = {1, static_cast<long long>(k) - 1, static_cast<long long>(k) * k + k + 1};
  return finish(std::move(o));
}

}  // namespace polardeg
