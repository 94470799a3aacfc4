#pragma once

#include <string>
#include <vector>

#include "polardeg/polar.hpp"

namespace polardeg::corpus {

/// A named weighted function on P^2 (or P^n) written as factor strings.
struct Instance {
  std::string name;
  std::vector<std::string> factors;
  std::vector<std::string> weights;  // one weight vector per entry, e.g. "1,1"
  std::size_t nvars = 3;
};

PolyQ poly(const std::string& text, std::size_t nvars = 3);
WeightedFunction weighted(const std::vector<std::string>& factors, const std::string& weights,
                          std::size_t nvars = 3);

inline const char* kConic = "x0^2 + x1^2 + x2^2";
inline const char* kTriangle = "x0*x1*x2";
inline const char* kConicTangentLine = "x2*(x1^2 - x0*x2)";
inline const char* kConicTransversalLine = "x2*(x0^2 + x1^2 + x2^2)";
inline const char* kConcurrentLines = "x0*x1*(x0 + x1)";

/// Fermat form x0^d + ... + x_{n}^d.
std::string fermat(unsigned d, std::size_t nvars = 3);

/// Instances for the weight-invariance theorem: factors plus at least two
/// positive weight vectors beyond the all-ones vector.
std::vector<Instance> invariance_instances();

/// Weighted functions whose associated foliations (on P^3 and P^4) make up
/// the Gauss-theorem corpus.
std::vector<Instance> foliation_instances();

/// Coprime pairs (F1, F2) for the product inequality.
std::vector<std::pair<std::string, std::string>> product_pairs();

/// Lines of the resonance example: k lines through [0:0:1], then x2.
std::vector<std::string> resonance_lines(unsigned k);

}  // namespace polardeg::corpus
