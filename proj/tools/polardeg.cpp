// polardeg: degrees of polar maps and Gauss maps of logarithmic foliations.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polardeg/corpus.hpp"
#include "polardeg/foliation.hpp"
#include "polardeg/parser.hpp"
#include "polardeg/polar.hpp"
#include "polardeg/report.hpp"
#include "polardeg/verify.hpp"

using namespace polardeg;
using nlohmann::ordered_json;

namespace {

constexpr const char* kGrammar =
    "usage:\n"
    "  polardeg polar --poly <str> [--poly <str>]* [--weights <str>] [--i <int>|--profile]\n"
    "                 [--prime <int>] [--trials <int>] [--seed <int>] [--json]\n"
    "  polardeg gauss --foliation-from <polys|weights> [--kind associated|log] [--k <int>] [--i <int>] ...\n"
    "  polardeg foliation --foliation-from <polys|weights> [--kind associated|log] [--sing-degree] ...\n"
    "  polardeg verify <dolgachev|gauss-theorem|polar-relation|corollary-deg|invariance|\n"
    "                   product-bound|resonance> [instance flags] ...\n"
    "  <polys|weights> is \"F1;F2;...|w1,w2,...\"; the weights part is optional (all ones).\n";

struct Common {
  u64 prime = kDefaultPrime;
  int trials = 5;
  int retries = 3;
  u64 seed = 0;
  std::size_t nvars = 0;
  bool json = false;

  DegreeOptions options() const {
    DegreeOptions o;
    o.field = PrimeField(prime);
    o.trials = trials;
    o.retries = retries;
    o.seed = seed;
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--prime", c.prime, "prime modulus of the working field")->capture_default_str();
  app->add_option("--trials", c.trials, "randomized trials per degree")->check(CLI::Range(1, 1000))->capture_default_str();
  app->add_option("--retries", c.retries, "redraws per failed trial")->check(CLI::Range(0, 100))->capture_default_str();
  app->add_option("--seed", c.seed, "base seed")->capture_default_str();
  app->add_option("--nvars", c.nvars, "number of variables (default: inferred)");
  app->add_flag("--json", c.json, "emit JSON");
}

// Raised for malformed arguments that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::size_t resolve_nvars(const std::vector<std::string>& polys, std::size_t given) {
  if (given) return given;
  std::size_t n = 1;
  for (const auto& p : polys) n = std::max(n, infer_nvars(p));
  return n;
}

struct WeightedInput {
  std::vector<std::string> polys;
  std::vector<std::string> weight_texts;  // as given, for the JSON header
  std::vector<PolyQ> factors;
  std::vector<mpq_class> weights;
  std::size_t nvars = 0;
};

WeightedInput read_weighted(const std::vector<std::string>& polys, const std::string& weights, std::size_t nvars) {
  if (polys.empty()) throw UsageError("at least one --poly is required");
  WeightedInput in;
  in.polys = polys;
  in.nvars = resolve_nvars(polys, nvars);
  for (const auto& p : polys) in.factors.push_back(parse_poly_q(p, in.nvars));
  if (weights.empty()) {
    in.weights.assign(polys.size(), mpq_class(1));
  } else {
    in.weights = parse_weights(weights);
    in.weight_texts = split(weights, ',');
  }
  if (in.weights.size() != in.factors.size())
    throw UsageError("got " + std::to_string(in.factors.size()) + " polynomials but " +
                     std::to_string(in.weights.size()) + " weights");
  if (in.weight_texts.empty())
    for (const auto& w : in.weights) in.weight_texts.push_back(to_string(w));
  return in;
}

// "F1;F2|w1,w2"
WeightedInput read_foliation_from(const std::string& spec, std::size_t nvars) {
  const auto bar = spec.find('|');
  const std::string polys = spec.substr(0, bar);
  const std::string weights = bar == std::string::npos ? "" : spec.substr(bar + 1);
  auto parts = split(polys, ';');
  if (parts.empty()) throw UsageError("--foliation-from needs at least one polynomial");
  return read_weighted(parts, weights, nvars);
}

mpq_class total_degree(const WeightedInput& in) {
  mpq_class d = 0;
  for (std::size_t i = 0; i < in.factors.size(); ++i) d += in.weights[i] * in.factors[i].degree();
  return d;
}

WeightedFunction make_weighted(const WeightedInput& in, u64 seed) {
  return WeightedFunction(in.factors, in.weights, seed);
}

LogFoliation<RationalField> make_foliation(const WeightedInput& in, const std::string& kind, u64 seed) {
  const bool zero = total_degree(in) == 0;
  std::string k = kind;
  if (k == "auto") k = zero ? "log" : "associated";
  const auto w = make_weighted(in, seed);
  if (k == "log") return logarithmic_foliation(w);
  return associated_foliation(w);
}

ReportInput header(const std::string& command, const WeightedInput& in, const Common& c) {
  ReportInput r;
  r.command = command;
  r.polys = in.polys;
  r.weights = in.weight_texts;
  r.nvars = in.nvars;
  r.field = FieldSpec::prime(c.prime);
  return r;
}

bool all_ok(const std::vector<DegreeReport>& rs) {
  for (const auto& r : rs)
    if (r.status() != "ok") return false;
  return !rs.empty();
}

std::string value_text(const DegreeReport& r) {
  std::string s = r.value ? std::to_string(*r.value) : "?";
  if (!r.stable) s += " (" + r.status() + ")";
  return s;
}

void print_levels(const std::string& name, const std::vector<DegreeReport>& rs) {
  for (const auto& r : rs) {
    std::cout << name << "_" << r.level << " = " << value_text(r) << "\n";
    if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
  }
}

// ---- verbs ----

struct PolarArgs {
  std::vector<std::string> polys;
  std::string weights;
  std::optional<int> level;
  bool profile = false;
};

int run_polar(const PolarArgs& a, const Common& c) {
  const auto in = read_weighted(a.polys, a.weights, c.nvars);
  if (total_degree(in) == 0)
    throw DomainError("deg of the weighted function is zero; the polar map is not defined (use gauss --kind log)");
  const auto w = make_weighted(in, c.seed);
  const auto opts = c.options();
  const auto rin = header("polar", in, c);
  std::vector<DegreeReport> rs;
  if (a.profile) {
    rs = polar_degrees_profile(w, opts);
  } else {
    const int i = a.level.value_or(0);
    if (i < 0 || std::size_t(i) >= w.dimension())
      throw UsageError("--i must lie in [0, " + std::to_string(w.dimension() - 1) + "]");
    rs.push_back(map_degree(lift_map(weighted_polar_map(w), opts.field), i, opts));
  }
  if (c.json)
    std::cout << (a.profile ? emit_profile(rs, rin) : emit_report(rs.front(), rin)) << "\n";
  else
    print_levels("deg", rs);
  return all_ok(rs) ? 0 : 1;
}

struct FoliationArgs {
  std::string from;
  std::string kind = "auto";
  std::optional<std::size_t> k;
  std::optional<int> level;
  bool sing_degree = false;
};

int run_gauss(const FoliationArgs& a, const Common& c) {
  const auto in = read_foliation_from(a.from, c.nvars);
  const auto fol = make_foliation(in, a.kind, c.seed);
  const auto opts = c.options();
  const std::size_t n = fol.ambient_dimension();
  const std::size_t k = a.k.value_or(n);
  if (k < 1 || k > n) throw UsageError("--k must lie in [1, " + std::to_string(n) + "]");
  const auto lifted = lift_foliation(fol, opts.field);
  std::vector<DegreeReport> rs;
  if (a.level) {
    if (*a.level < 0 || std::size_t(*a.level) >= k) throw UsageError("--i must lie in [0, k-1]");
    rs.push_back(e_degree(lifted, k, *a.level, opts));
  } else {
    for (std::size_t i = 0; i < k; ++i) rs.push_back(e_degree(lifted, k, int(i), opts));
  }
  if (c.json) {
    auto rin = header("gauss", in, c);
    auto j = a.level ? report_json(rs.front(), rin) : profile_json(rs, rin);
    ordered_json out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out[it.key()] = it.value();
      if (it.key() == "field") {
        out["ambient"] = n;
        out["foliation_degree"] = fol.degree();
        out["k"] = k;
      }
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "foliation of P^" << n << " of degree " << fol.degree() << "\n";
    print_levels("e^" + std::to_string(k), rs);
  }
  return all_ok(rs) ? 0 : 1;
}

int run_foliation(const FoliationArgs& a, const Common& c) {
  const auto in = read_foliation_from(a.from, c.nvars);
  const auto fol = make_foliation(in, a.kind, c.seed);
  const bool integrable = is_integrable(fol.coefficients());
  std::optional<long long> sing;
  if (a.sing_degree) sing = singular_scheme_degree_p2(fol, c.options().limits);
  if (c.json) {
    auto j = json_header(header("foliation", in, c));
    j["ambient"] = fol.ambient_dimension();
    j["foliation_degree"] = fol.degree();
    ordered_json coeffs = ordered_json::array();
    for (const auto& a : fol.coefficients()) coeffs.push_back(to_string(a));
    j["coefficients"] = coeffs;
    j["integrable"] = integrable;
    if (sing) j["sing_degree"] = *sing;
    j["status"] = integrable ? "ok" : "error";
    if (!integrable) j["message"] = "form is not integrable";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "foliation of P^" << fol.ambient_dimension() << " of degree " << fol.degree() << "\n";
    for (std::size_t i = 0; i < fol.coefficients().size(); ++i)
      std::cout << "  a" << i << " = " << to_string(fol.coefficients()[i]) << "\n";
    std::cout << "integrable: " << (integrable ? "yes" : "no") << "\n";
    if (sing) std::cout << "singular scheme degree: " << *sing << "\n";
  }
  return integrable ? 0 : 1;
}

struct VerifyArgs {
  std::string claim;
  std::vector<std::string> polys;
  std::string weights;
  std::vector<std::string> weight_sets;
  std::string from;
  std::string kind = "auto";
  std::optional<std::size_t> k;
  std::optional<int> level;
  std::optional<std::size_t> shift;
  std::size_t max_k = 4;
  bool allow_unverified = false;
};

std::vector<VerificationOutcome> verify_weighted_claim(const VerifyArgs& a, const Common& c, bool polar) {
  const auto opts = c.options();
  std::vector<std::pair<std::string, WeightedFunction>> cases;
  if (!a.polys.empty()) {
    const auto in = read_weighted(a.polys, a.weights, c.nvars);
    cases.emplace_back("user input", make_weighted(in, c.seed));
  } else {
    for (const char* f : {corpus::kConic, corpus::kTriangle})
      cases.emplace_back(f, corpus::weighted({f}, "1"));
    for (unsigned d : {3u, 4u}) cases.emplace_back(corpus::fermat(d), corpus::weighted({corpus::fermat(d)}, "1"));
  }
  std::vector<VerificationOutcome> out;
  for (const auto& [name, w] : cases) {
    std::vector<int> levels;
    if (a.level) levels = {*a.level};
    else
      for (std::size_t i = 0; i < w.dimension(); ++i) levels.push_back(int(i));
    for (int i : levels)
      out.push_back(polar ? verify_polar_relation(w, i, opts, name) : verify_corollary_deg(w, i, opts, name));
  }
  return out;
}

std::vector<VerificationOutcome> run_claim(const VerifyArgs& a, const Common& c) {
  const auto opts = c.options();
  const std::string& claim = a.claim;
  if (claim == "dolgachev") return run_dolgachev_suite(opts);
  if (claim == "polar-relation") return verify_weighted_claim(a, c, true);
  if (claim == "corollary-deg") return verify_weighted_claim(a, c, false);
  if (claim == "gauss-theorem") {
    std::vector<std::pair<std::string, LogFoliation<RationalField>>> fols;
    if (!a.from.empty()) {
      fols.emplace_back(a.from, make_foliation(read_foliation_from(a.from, c.nvars), a.kind, c.seed));
    } else {
      for (const auto& inst : corpus::foliation_instances())
        fols.emplace_back(inst.name, associated_foliation(corpus::weighted(inst.factors, inst.weights.front(), inst.nvars)));
    }
    std::vector<VerificationOutcome> out;
    for (const auto& [name, fol] : fols) {
      if (a.k && a.level) {
        if (a.shift) out.push_back(verify_gauss_shift(fol, *a.k, *a.level, *a.shift, opts, name));
        else out.push_back(verify_gauss_theorem(fol, *a.k, *a.level, opts, name));
      } else {
        auto v = verify_gauss_all(fol, a.max_k, opts, name);
        out.insert(out.end(), v.begin(), v.end());
      }
    }
    return out;
  }
  if (claim == "invariance") {
    std::vector<VerificationOutcome> out;
    if (!a.polys.empty()) {
      if (a.weight_sets.empty()) throw UsageError("invariance needs at least one --weight-set");
      const auto in = read_weighted(a.polys, "", c.nvars);
      std::vector<std::vector<mpq_class>> sets;
      for (const auto& s : a.weight_sets) sets.push_back(parse_weights(s));
      out.push_back(verify_invariance(in.factors, sets, opts, a.allow_unverified, "user input"));
    } else {
      for (const auto& inst : corpus::invariance_instances()) {
        std::vector<PolyQ> fs;
        for (const auto& f : inst.factors) fs.push_back(corpus::poly(f, inst.nvars));
        std::vector<std::vector<mpq_class>> sets;
        for (const auto& s : inst.weights) sets.push_back(parse_weights(s));
        out.push_back(verify_invariance(fs, sets, opts, a.allow_unverified, inst.name));
      }
    }
    return out;
  }
  if (claim == "product-bound") {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!a.polys.empty()) {
      if (a.polys.size() != 2) throw UsageError("product-bound needs exactly two --poly");
      pairs.emplace_back(a.polys[0], a.polys[1]);
    } else {
      pairs = corpus::product_pairs();
    }
    std::vector<VerificationOutcome> out;
    for (const auto& [f1, f2] : pairs) {
      const std::size_t n = resolve_nvars({f1, f2}, c.nvars);
      const auto p1 = parse_poly_q(f1, n), p2 = parse_poly_q(f2, n);
      const std::string name = "(" + f1 + ") * (" + f2 + ")";
      if (a.level) {
        out.push_back(verify_product_bound(p1, p2, *a.level, opts, name));
      } else {
        for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(verify_product_bound(p1, p2, int(i), opts, name));
      }
    }
    return out;
  }
  if (claim == "resonance") {
    std::vector<unsigned> ks;
    if (a.k) ks = {unsigned(*a.k)};
    else ks = {2, 3, 4};
    std::vector<VerificationOutcome> out;
    for (unsigned k : ks) out.push_back(run_resonance_example(k, opts));
    return out;
  }
  throw UsageError("unknown claim '" + claim + "'");
}

std::string join(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int run_verify(const VerifyArgs& a, const Common& c) {
  const auto outs = run_claim(a, c);
  bool pass = !outs.empty();
  for (const auto& o : outs) pass = pass && o.pass;
  if (c.json) {
    ordered_json j;
    j["command"] = "verify";
    j["claim"] = a.claim;
    j["field"] = {{"kind", "prime-field"}, {"prime", c.prime}};
    j["seed"] = c.seed;
    ordered_json list = ordered_json::array();
    for (const auto& o : outs) list.push_back(outcome_json(o));
    j["outcomes"] = list;
    j["pass"] = pass;
    j["status"] = pass ? "ok" : "fail";
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& o : outs) {
      std::cout << (o.pass ? "PASS " : "FAIL ") << o.claim << " | " << o.instance << " | lhs=" << join(o.lhs)
                << " rhs=" << join(o.rhs);
      if (!o.label.empty()) std::cout << " [" << o.label << "]";
      std::cout << "\n";
    }
    std::cout << (pass ? "all passed" : "some checks failed") << "\n";
  }
  return pass ? 0 : 1;
}

void print_error(const Common& c, const std::string& command, const std::string& status, const std::string& msg) {
  if (c.json) {
    ordered_json j;
    j["command"] = command;
    j["status"] = status;
    j["message"] = msg;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "polardeg: " << msg << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of polar maps and of Gauss maps of logarithmic foliations"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  Common common;
  PolarArgs polar;
  FoliationArgs gauss, foliation;
  VerifyArgs verify;

  auto* p = app.add_subcommand("polar", "degrees of the (weighted) polar map");
  p->add_option("--poly", polar.polys, "factor F_j (repeatable)")->required();
  p->add_option("--weights", polar.weights, "comma-separated rational weights");
  auto* lvl = p->add_option("--i", polar.level, "level i of deg_i");
  auto* prof = p->add_flag("--profile", polar.profile, "all levels 0..n-1");
  lvl->excludes(prof);
  add_common(p, common);

  auto* g = app.add_subcommand("gauss", "e_i^k of a logarithmic foliation");
  g->add_option("--foliation-from", gauss.from, "\"F1;F2;...|w1,w2,...\"")->required();
  g->add_option("--kind", gauss.kind, "associated (P^{n+1}), log (P^n, needs deg 0) or auto")
      ->check(CLI::IsMember({"auto", "associated", "log"}));
  g->add_option("--k", gauss.k, "dimension of the generic subspace (default: ambient)");
  g->add_option("--i", gauss.level, "level i (default: all)");
  add_common(g, common);

  auto* f = app.add_subcommand("foliation", "build a foliation and report its invariants");
  f->add_option("--foliation-from", foliation.from, "\"F1;F2;...|w1,w2,...\"")->required();
  f->add_option("--kind", foliation.kind, "associated, log or auto")
      ->check(CLI::IsMember({"auto", "associated", "log"}));
  f->add_flag("--sing-degree", foliation.sing_degree, "degree of the singular scheme (P^2 only)");
  add_common(f, common);

  auto* v = app.add_subcommand("verify", "check an identity on an instance or on the shipped corpus");
  v->add_option("claim", verify.claim, "claim to check")
      ->required()
      ->check(CLI::IsMember({"dolgachev", "gauss-theorem", "polar-relation", "corollary-deg", "invariance",
                             "product-bound", "resonance"}));
  v->add_option("--poly", verify.polys, "factor (repeatable)");
  v->add_option("--weights", verify.weights, "weights for polar-relation / corollary-deg");
  v->add_option("--weight-set", verify.weight_sets, "weight vector for invariance (repeatable)");
  v->add_option("--foliation-from", verify.from, "foliation for gauss-theorem");
  v->add_option("--kind", verify.kind, "associated, log or auto")->check(CLI::IsMember({"auto", "associated", "log"}));
  v->add_option("--k", verify.k, "subspace dimension (gauss-theorem) or number of lines (resonance)");
  v->add_option("--i", verify.level, "level i");
  v->add_option("--s", verify.shift, "shift s for the shifted Gauss identity");
  v->add_option("--max-k", verify.max_k, "largest k for gauss-theorem sweeps")->capture_default_str();
  v->add_flag("--allow-unverified", verify.allow_unverified, "accept mixed-sign weights, labeling the outcome");
  add_common(v, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "polardeg: " << e.what() << "\n" << kGrammar;
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    PrimeField check(common.prime);
  } catch (const DomainError& e) {
    print_error(common, command, "usage-error", std::string("--prime: ") + e.what());
    return 2;
  }
  try {
    if (command == "polar") return run_polar(polar, common);
    if (command == "gauss") return run_gauss(gauss, common);
    if (command == "foliation") return run_foliation(foliation, common);
    return run_verify(verify, common);
  } catch (const UsageError& e) {
    print_error(common, command, "usage-error", e.what());
    if (!common.json) std::cerr << kGrammar;
    return 2;
  } catch (const ParseError& e) {
    print_error(common, command, "usage-error", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error(common, command, "error", e.what());
    return 1;
  }
}
