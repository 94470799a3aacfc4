#include "polardeg/corpus.hpp"

#include "polardeg/parser.hpp"

namespace polardeg::corpus {

PolyQ poly(const std::string& text, std::size_t nvars) { return parse_poly_q(text, nvars); }

WeightedFunction weighted(const std::vector<std::string>& factors, const std::string& weights,
                          std::size_t nvars) {
  std::vector<PolyQ> fs;
  for (const auto& f : factors) fs.push_back(poly(f, nvars));
  return WeightedFunction(std::move(fs), parse_weights(weights));
}

std::string fermat(unsigned d, std::size_t nvars) {
  std::string s;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i) s += " + ";
    s += "x" + std::to_string(i) + "^" + std::to_string(d);
  }
  return s;
}

std::vector<Instance> invariance_instances() {
  return {
      {"triangle", {"x0", "x1", "x2"}, {"2,5,11", "1/2,3,7/3"}},
      {"conic+tangent line", {"x1^2 - x0*x2", "x2"}, {"3,1", "2,7"}},
      {"conic+transversal line", {kConic, "x2"}, {"2,3", "5,1/3"}},
      {"cubic*conic", {fermat(3), "x0*x1 + x2^2"}, {"2,3", "5,1"}},
      {"4-line arrangement", {"x0", "x1", "x2", "x0 + x1 + x2"}, {"1,2,3,4", "7,1,3,2"}},
  };
}

std::vector<Instance> foliation_instances() {
  return {
      {"conic", {kConic}, {"1"}},
      {"triangle", {"x0", "x1", "x2"}, {"1,1,1"}},
      {"4-line arrangement", {"x0", "x1", "x2", "x0 + 2*x1 + 3*x2"}, {"1,1,1,1"}},
      {"Fermat cubic", {fermat(3)}, {"1"}},
      {"quadric surface", {fermat(2, 4)}, {"1"}, 4},
      {"tetrahedron", {"x0", "x1", "x2", "x3"}, {"1,2,3,4"}, 4},
  };
}

std::vector<std::pair<std::string, std::string>> product_pairs() {
  return {
      {"x1^2 - x0*x2", "x2"},
      {fermat(3), "x0 + 2*x1 + 3*x2"},
      {kConic, "x0^2 + 2*x1^2 + 3*x2^2"},
      {kConic, "x2"},
      {fermat(3), "x0*x1 + x2^2"},
      {"x0*x1", "x2"},
  };
}

std::vector<std::string> resonance_lines(unsigned k) {
  std::vector<std::string> lines{"x0", "x1"};
  for (unsigned j = 3; j <= k; ++j) lines.push_back("x0 + " + std::to_string(j - 2) + "*x1");
  lines.resize(k);
  lines.push_back("x2");
  return lines;
}

}  // namespace polardeg::corpus
