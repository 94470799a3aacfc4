// Python bindings. Polynomials cross the boundary as text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polardeg/corpus.hpp"
#include "polardeg/foliation.hpp"
#include "polardeg/parser.hpp"
#include "polardeg/verify.hpp"

namespace py = pybind11;
using namespace polardeg;

namespace {

DegreeOptions options(u64 prime, int trials, int retries, u64 seed) {
  if (trials < 1) throw DomainError("trials must be positive");
  if (retries < 0) throw DomainError("retries must be non-negative");
  DegreeOptions o;
  o.field = PrimeField(prime);
  o.trials = trials;
  o.retries = retries;
  o.seed = seed;
  return o;
}

std::size_t nvars_of(const std::vector<std::string>& polys, std::size_t given) {
  if (given) return given;
  std::size_t n = 1;
  for (const auto& p : polys) n = std::max(n, infer_nvars(p));
  return n;
}

std::vector<PolyQ> parse_all(const std::vector<std::string>& polys, std::size_t nvars) {
  if (polys.empty()) throw DomainError("need at least one polynomial");
  std::vector<PolyQ> out;
  for (const auto& p : polys) out.push_back(parse_poly_q(p, nvars));
  return out;
}

WeightedFunction weighted(const std::vector<std::string>& polys, const std::optional<std::string>& weights,
                          std::size_t nvars, u64 seed) {
  auto fs = parse_all(polys, nvars_of(polys, nvars));
  std::vector<mpq_class> ws = weights ? parse_weights(*weights) : std::vector<mpq_class>(fs.size(), 1);
  if (ws.size() != fs.size()) throw DomainError("number of weights differs from number of polynomials");
  return WeightedFunction(std::move(fs), std::move(ws), seed);
}

LogFoliation<RationalField> foliation_of(const WeightedFunction& w, std::string kind) {
  if (kind == "auto") kind = w.total_degree() == 0 ? "log" : "associated";
  if (kind == "log") return logarithmic_foliation(w);
  if (kind == "associated") return associated_foliation(w);
  throw DomainError("kind must be auto, associated or log");
}

std::vector<std::string> texts(const std::vector<PolyQ>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

}  // namespace

#define POLARDEG_OPTS                                                                              \
  py::arg("prime") = kDefaultPrime, py::arg("trials") = 5, py::arg("retries") = 3, py::arg("seed") = 0

PYBIND11_MODULE(_polardeg, m) {
  m.doc() = "Degrees of polar maps and Gauss maps of logarithmic foliations";
  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<ResourceLimit> resource_limit(m, "ResourceLimit", error.ptr());
  static py::exception<RingMismatch> ring_mismatch(m, "RingMismatch", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ResourceLimit& e) {
      resource_limit(e.what());
    } catch (const RingMismatch& e) {
      ring_mismatch(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<TrialOutcome>(m, "TrialOutcome")
      .def_readonly("seed", &TrialOutcome::seed)
      .def_readonly("value", &TrialOutcome::value)
      .def_readonly("zero_dim", &TrialOutcome::zero_dim)
      .def_readonly("reduced", &TrialOutcome::reduced);

  py::class_<DegreeReport>(m, "DegreeReport")
      .def_readonly("level", &DegreeReport::level)
      .def_readonly("value", &DegreeReport::value)
      .def_readonly("stable", &DegreeReport::stable)
      .def_readonly("note", &DegreeReport::note)
      .def_readonly("trials", &DegreeReport::trials)
      .def_property_readonly("status", &DegreeReport::status)
      .def("__repr__", [](const DegreeReport& r) {
        return "DegreeReport(level=" + std::to_string(r.level) +
               ", value=" + (r.value ? std::to_string(*r.value) : "None") + ", status=" + r.status() + ")";
      });

  py::class_<VerificationOutcome>(m, "VerificationOutcome")
      .def_readonly("claim", &VerificationOutcome::claim)
      .def_readonly("instance", &VerificationOutcome::instance)
      .def_readonly("lhs", &VerificationOutcome::lhs)
      .def_readonly("rhs", &VerificationOutcome::rhs)
      .def_readonly("passed", &VerificationOutcome::pass)
      .def_readonly("label", &VerificationOutcome::label)
      .def_readonly("reports", &VerificationOutcome::reports)
      .def("to_json", [](const VerificationOutcome& o) { return outcome_json(o).dump(); })
      .def("__bool__", [](const VerificationOutcome& o) { return o.pass; });

  m.def(
      "parse_poly",
      [](const std::string& text, std::size_t nvars) {
        return to_string(parse_poly_q(text, nvars ? nvars : infer_nvars(text)));
      },
      "Parse a polynomial and print it canonically", py::arg("text"), py::arg("nvars") = 0);

  m.def(
      "polar_map",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, std::size_t nvars) {
        return texts(weighted_polar_map(weighted(polys, weights, nvars, 0)).components());
      },
      "Components of the (weighted) polar map", py::arg("polys"), py::arg("weights") = py::none(),
      py::arg("nvars") = 0);

  m.def(
      "polar_degree",
      [](const std::vector<std::string>& polys, int i, std::optional<std::string> weights, std::size_t nvars,
         u64 prime, int trials, int retries, u64 seed) {
        const auto o = options(prime, trials, retries, seed);
        const auto w = weighted(polys, weights, nvars, seed);
        if (i < 0 || std::size_t(i) >= w.dimension()) throw DomainError("level out of range");
        return map_degree(lift_map(weighted_polar_map(w), o.field), i, o);
      },
      "deg_i of the weighted polar map", py::arg("polys"), py::arg("i") = 0, py::arg("weights") = py::none(),
      py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "polar_profile",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, std::size_t nvars, u64 prime,
         int trials, int retries, u64 seed) {
        return polar_degrees_profile(weighted(polys, weights, nvars, seed), options(prime, trials, retries, seed));
      },
      "(deg_0, ..., deg_{n-1}) of the weighted polar map", py::arg("polys"), py::arg("weights") = py::none(),
      py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "is_homaloidal",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, std::size_t nvars, u64 prime,
         int trials, int retries, u64 seed) {
        return homaloidal_check(weighted(polys, weights, nvars, seed), options(prime, trials, retries, seed));
      },
      "True when deg_0 is stably 1", py::arg("polys"), py::arg("weights") = py::none(), py::arg("nvars") = 0,
      POLARDEG_OPTS);

  m.def(
      "foliation",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, const std::string& kind,
         std::size_t nvars) {
        const auto fol = foliation_of(weighted(polys, weights, nvars, 0), kind);
        py::dict d;
        d["ambient"] = fol.ambient_dimension();
        d["degree"] = fol.degree();
        d["coefficients"] = texts(fol.coefficients());
        d["integrable"] = is_integrable(fol.coefficients());
        return d;
      },
      "Logarithmic foliation built from the factors", py::arg("polys"), py::arg("weights") = py::none(),
      py::arg("kind") = "auto", py::arg("nvars") = 0);

  m.def(
      "gauss_degree",
      [](const std::vector<std::string>& polys, std::size_t k, int i, std::optional<std::string> weights,
         const std::string& kind, std::size_t nvars, u64 prime, int trials, int retries, u64 seed) {
        const auto o = options(prime, trials, retries, seed);
        return e_degree(foliation_of(weighted(polys, weights, nvars, seed), kind), k, i, o);
      },
      "deg_i of the Gauss map of the restriction to a generic P^k", py::arg("polys"), py::arg("k"),
      py::arg("i") = 0, py::arg("weights") = py::none(), py::arg("kind") = "auto", py::arg("nvars") = 0,
      POLARDEG_OPTS);

  m.def(
      "sing_degree",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, const std::string& kind,
         std::size_t nvars) {
        return singular_scheme_degree_p2(foliation_of(weighted(polys, weights, nvars, 0), kind));
      },
      "Degree of the singular scheme of a foliation of P^2", py::arg("polys"), py::arg("weights") = py::none(),
      py::arg("kind") = "auto", py::arg("nvars") = 0);

  m.def(
      "verify_dolgachev", [](u64 prime, int trials, int retries, u64 seed) {
        return run_dolgachev_suite(options(prime, trials, retries, seed));
      },
      "Homaloidal plane curves and non-homaloidal controls", POLARDEG_OPTS);

  m.def(
      "verify_resonance",
      [](unsigned k, u64 prime, int trials, int retries, u64 seed) {
        return run_resonance_example(k, options(prime, trials, retries, seed));
      },
      "Resonant arrangement of k concurrent lines plus a line", py::arg("k"), POLARDEG_OPTS);

  m.def(
      "verify_gauss",
      [](const std::vector<std::string>& polys, std::optional<std::string> weights, std::size_t max_k,
         const std::string& kind, std::size_t nvars, u64 prime, int trials, int retries, u64 seed) {
        const auto o = options(prime, trials, retries, seed);
        return verify_gauss_all(foliation_of(weighted(polys, weights, nvars, seed), kind), max_k, o, "python");
      },
      "Gauss-map identities at every admissible (k, i)", py::arg("polys"), py::arg("weights") = py::none(),
      py::arg("max_k") = 4, py::arg("kind") = "auto", py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "verify_polar_relation",
      [](const std::vector<std::string>& polys, int i, std::optional<std::string> weights, std::size_t nvars,
         u64 prime, int trials, int retries, u64 seed) {
        return verify_polar_relation(weighted(polys, weights, nvars, seed), i,
                                     options(prime, trials, retries, seed));
      },
      "Gauss map of the associated foliation versus polar degrees", py::arg("polys"), py::arg("i"),
      py::arg("weights") = py::none(), py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "verify_corollary_deg",
      [](const std::vector<std::string>& polys, int i, std::optional<std::string> weights, std::size_t nvars,
         u64 prime, int trials, int retries, u64 seed) {
        return verify_corollary_deg(weighted(polys, weights, nvars, seed), i,
                                    options(prime, trials, retries, seed));
      },
      "deg_i versus e_0 of a restriction of the associated foliation", py::arg("polys"), py::arg("i"),
      py::arg("weights") = py::none(), py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "verify_invariance",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& weight_sets, bool allow_unverified,
         std::size_t nvars, u64 prime, int trials, int retries, u64 seed) {
        std::vector<std::vector<mpq_class>> ws;
        for (const auto& w : weight_sets) ws.push_back(parse_weights(w));
        return verify_invariance(parse_all(polys, nvars_of(polys, nvars)), ws,
                                 options(prime, trials, retries, seed), allow_unverified);
      },
      "Polar degrees do not depend on the weights", py::arg("polys"), py::arg("weight_sets"),
      py::arg("allow_unverified") = false, py::arg("nvars") = 0, POLARDEG_OPTS);

  m.def(
      "verify_product_bound",
      [](const std::string& f1, const std::string& f2, int i, std::size_t nvars, u64 prime, int trials,
         int retries, u64 seed) {
        const std::size_t n = nvars_of({f1, f2}, nvars);
        return verify_product_bound(parse_poly_q(f1, n), parse_poly_q(f2, n), i,
                                    options(prime, trials, retries, seed));
      },
      "deg_i of grad(F1 F2) is at least that of each factor", py::arg("f1"), py::arg("f2"), py::arg("i") = 0,
      py::arg("nvars") = 0, POLARDEG_OPTS);
}
