#include "polardeg/parser.hpp"

#include <cctype>

namespace polardeg {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, const VariableAliases& aliases)
      : text_(text), nvars_(nvars), aliases_(aliases) {}

  PolyQ parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    PolyQ p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  PolyQ expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    PolyQ acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PolyQ t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
        continue;
      }
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' || peek() == '_'))
        fail("missing '*' between factors");
      break;
    }
    return acc;
  }

  PolyQ factor() {
    PolyQ b = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (peek() == '-') fail("negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      mpz_class e = natural();
      if (e > 4096) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  PolyQ base() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos_;
      PolyQ inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(natural());
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        std::size_t at = pos_;
        mpz_class d = natural();
        if (d == 0) fail_at(at, "zero denominator");
        q /= d;
      }
      return PolyQ::constant(RationalField{}, nvars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  PolyQ variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    std::size_t index;
    if (auto it = aliases_.find(name); it != aliases_.end()) {
      index = it->second;
    } else if (name.size() > 1 && name[0] == 'x' &&
               name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      if (name.size() > 4) fail_at(start, "variable index too large");
      index = std::stoul(std::string(name.substr(1)));
    } else {
      fail_at(start, "unknown variable '" + std::string(name) + "'");
    }
    if (index >= nvars_)
      fail_at(start, "variable '" + std::string(name) + "' outside the " + std::to_string(nvars_) +
                         "-variable ring");
    return PolyQ::variable(RationalField{}, nvars_, index);
  }

  mpz_class natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  std::string_view text_;
  std::size_t nvars_;
  const VariableAliases& aliases_;
  std::size_t pos_ = 0;
};

std::string coefficient_text(const RationalField&, const mpq_class& c, bool& negative) {
  negative = sgn(c) < 0;
  mpq_class a = abs(c);
  return a.get_str();
}

std::string coefficient_text(const PrimeField& f, u64 c, bool& negative) {
  negative = c > f.modulus() / 2;
  return std::to_string(negative ? f.modulus() - c : c);
}

}  // namespace

PolyQ parse_poly_q(std::string_view text, std::size_t nvars, const VariableAliases& aliases) {
  return PolyParser(text, nvars, aliases).parse();
}

std::size_t infer_nvars(std::string_view text) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1 || j - i > 5) continue;
    n = std::max<std::size_t>(n, std::stoul(std::string(text.substr(i + 1, j - i - 1))) + 1);
  }
  return n;
}

std::vector<mpq_class> parse_weights(std::string_view text) {
  std::vector<mpq_class> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(',', start);
    std::string item(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    // trim
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    std::string tok = a == std::string::npos ? std::string() : item.substr(a, b - a + 1);
    std::size_t col = start + (a == std::string::npos ? 0 : a) + 1;
    bool ok = !tok.empty();
    std::size_t k = 0;
    if (ok && (tok[0] == '-' || tok[0] == '+')) k = 1;
    std::size_t slash = tok.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
      if (from >= to) return false;
      for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
      return true;
    };
    if (ok) ok = slash == std::string::npos ? digits(k, tok.size())
                                            : digits(k, slash) && digits(slash + 1, tok.size());
    if (!ok) throw ParseError("malformed rational weight '" + tok + "'", 1, col);
    mpz_class num(tok.substr(k, (slash == std::string::npos ? tok.size() : slash) - k));
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(tok.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in weight", 1, col);
    mpq_class q(num, den);
    q.canonicalize();
    if (tok[0] == '-') q = -q;
    if (q == 0) throw ParseError("weights must be nonzero", 1, col);
    out.push_back(q);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <class K>
std::string to_string(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = false;
    std::string c = coefficient_text(p.field(), t.coeff, negative);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      s += c;
    } else if (c == "1") {
      s += mono;
    } else {
      s += c + "*" + mono;
    }
  }
  return s;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

template std::string to_string(const MultiPoly<RationalField>&);
template std::string to_string(const MultiPoly<PrimeField>&);

}  // namespace polardeg
