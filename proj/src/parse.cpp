#include "kzaut/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "kzaut/errors.hpp"

namespace kzaut {

namespace {

struct Token {
  enum Kind { End, Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto here = [&](std::size_t pos) {
    // single-line input: columns advance with the offset
    return std::pair{line, column + pos};
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const auto [l, col] = here(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, std::string(s.substr(i, j - i)), l, col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), l, col});
      i = j;
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '/': k = Token::Slash; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default: throw ParseError(l, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), l, col});
      ++i;
    }
  }
  const auto [l, col] = here(s.size());
  out.push_back({Token::End, "", l, col});
  return out;
}

// Ops supplies constant(Scalar), generator(index) and the name list.
template <class Poly, class Ops>
class Parser {
 public:
  Parser(std::vector<Token> toks, const Ops& ops) : toks_(std::move(toks)), ops_(ops) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Token::End) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  Poly expr() {
    Poly acc = ops_.constant(ops_.field().zero());
    bool neg = false;
    if (accept(Token::Minus)) neg = true;
    else accept(Token::Plus);
    while (true) {
      Poly t = term();
      if (neg) acc -= t;
      else acc += t;
      if (accept(Token::Plus)) neg = false;
      else if (accept(Token::Minus)) neg = true;
      else return acc;
    }
  }

  bool starts_factor() const { return peek().kind == Token::Ident || peek().kind == Token::LParen; }

  Poly term() {
    std::optional<Poly> acc;
    if (peek().kind == Token::Int) {
      acc = ops_.constant(rational());
      if (accept(Token::Star) && !starts_factor()) fail(peek(), "expected a factor after '*'");
    } else if (!starts_factor()) {
      fail(peek(), peek().kind == Token::End ? "unexpected end of expression" : "unexpected '" + peek().text + "'");
    }
    while (starts_factor()) {
      Poly f = factor();
      acc = acc ? *acc * f : f;
      if (accept(Token::Star) && !starts_factor()) fail(peek(), "expected a factor after '*'");
    }
    return *acc;
  }

  unsigned exponent() {
    const Token& t = peek();
    if (t.kind != Token::Int) fail(t, "expected a non-negative integer exponent");
    if (t.text.size() > 6) fail(t, "exponent too large");
    ++pos_;
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Poly factor() {
    const Token& t = next();
    Poly base = ops_.constant(ops_.field().one());
    if (t.kind == Token::LParen) {
      base = expr();
      if (!accept(Token::RParen)) fail(peek(), "expected ')'");
    } else {
      // identifier: split into known names, the exponent binds to the last one
      std::vector<Poly> parts = split(t);
      for (std::size_t k = 0; k + 1 < parts.size(); ++k) base = base * parts[k];
      Poly last = parts.back();
      if (accept(Token::Caret)) last = last.pow(exponent());
      return base * last;
    }
    if (accept(Token::Caret)) base = base.pow(exponent());
    return base;
  }

  std::vector<Poly> split(const Token& t) {
    const auto& names = ops_.names();
    std::vector<Poly> out;
    std::size_t at = 0;
    while (at < t.text.size()) {
      std::size_t best = names.size(), len = 0;
      for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string& n = names[k];
        if (n.size() > len && t.text.compare(at, n.size(), n) == 0) {
          best = k;
          len = n.size();
        }
      }
      if (best == names.size()) {
        Token bad = t;
        bad.column += at;
        fail(bad, "unknown symbol '" + t.text + "'");
      }
      out.push_back(ops_.generator(best));
      at += len;
    }
    return out;
  }

  Scalar rational() {
    const Token& num = next();
    mpq_class q(mpz_class(num.text), 1);
    if (accept(Token::Slash)) {
      const Token& den = peek();
      if (den.kind != Token::Int) fail(den, "expected a denominator");
      ++pos_;
      const mpz_class d(den.text);
      if (d == 0) fail(den, "zero denominator");
      q = mpq_class(mpz_class(num.text), d);
      q.canonicalize();
    }
    try {
      return ops_.field().from_rational(q);
    } catch (const DomainError& e) {
      fail(num, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ops& ops_;
};

struct NCOps {
  AlgebraPtr alg;
  std::vector<std::string> all;
  explicit NCOps(AlgebraPtr a) : alg(std::move(a)), all(alg->x_names) { all.push_back(alg->z_name); }
  const Field& field() const { return alg->field; }
  const std::vector<std::string>& names() const { return all; }
  NCPoly constant(const Scalar& c) const { return NCPoly::constant(alg, c); }
  NCPoly generator(std::size_t k) const {
    return NCPoly::generator(alg, k == alg->n() ? kZ : static_cast<Letter>(k));
  }
};

struct CommOps {
  RingPtr ring;
  const Field& field() const { return ring->field; }
  const std::vector<std::string>& names() const { return ring->vars; }
  CommPoly constant(const Scalar& c) const { return CommPoly::constant(ring, c); }
  CommPoly generator(std::size_t k) const { return CommPoly::variable(ring, k); }
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead != nullptr) *lead = a;
  return s.substr(a, b - a);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (const char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const AlgebraPtr& alg, std::size_t line, std::size_t column) {
  NCOps ops(alg);
  return Parser<NCPoly, NCOps>(tokenize(text, line, column), ops).parse();
}

CommPoly parse_commpoly(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  CommOps ops{ring};
  return Parser<CommPoly, CommOps>(tokenize(text, line, column), ops).parse();
}

KzEndo parse_endo(std::string_view text, std::optional<Field> field_override) {
  std::vector<Line> lines;
  {
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      if (!trim(l).empty()) lines.push_back({number, l});
      start = end + 1;
      ++number;
    }
  }

  std::optional<std::vector<std::string>> vars;
  std::string fixed = "z";
  Field field;
  struct Body {
    std::size_t line;
    std::size_t lhs_col;
    std::string lhs;
    std::size_t rhs_col;
    std::string_view rhs;
  };
  std::vector<Body> body;

  for (const auto& [number, l] : lines) {
    const auto arrow = l.find("->");
    if (arrow == std::string_view::npos) {
      if (!body.empty()) throw ParseError(number, 1, "header line after the first generator line");
      // comma-separated key: value pairs
      std::size_t at = 0;
      while (at <= l.size()) {
        std::size_t comma = l.find(',', at);
        if (comma == std::string_view::npos) comma = l.size();
        const std::string_view item = l.substr(at, comma - at);
        const auto colon = item.find(':');
        std::size_t lead = 0;
        const std::string_view key = trim(item.substr(0, colon == std::string_view::npos ? item.size() : colon), &lead);
        const std::size_t col = at + lead + 1;
        if (colon == std::string_view::npos) throw ParseError(number, col, "expected 'key: value' or 'x -> expr'");
        const std::string value(trim(item.substr(colon + 1)));
        if (key == "vars") {
          if (vars) throw ParseError(number, col, "vars declared twice");
          std::istringstream is(value);
          std::vector<std::string> names;
          for (std::string n; is >> n;) {
            if (!is_identifier(n)) throw ParseError(number, col, "bad variable name '" + n + "'");
            names.push_back(n);
          }
          if (names.empty()) throw ParseError(number, col, "vars needs at least one name");
          vars = std::move(names);
        } else if (key == "fixed") {
          if (!is_identifier(value)) throw ParseError(number, col, "bad fixed variable name '" + value + "'");
          fixed = value;
        } else if (key == "field") {
          try {
            field = Field::parse(value);
          } catch (const std::exception& e) {
            throw ParseError(number, col, e.what());
          }
        } else {
          throw ParseError(number, col, "unknown header key '" + std::string(key) + "'");
        }
        at = comma + 1;
      }
      continue;
    }
    std::size_t lead = 0;
    const std::string lhs(trim(l.substr(0, arrow), &lead));
    std::size_t rlead = 0;
    const std::string_view rhs = trim(l.substr(arrow + 2), &rlead);
    if (!is_identifier(lhs)) throw ParseError(number, lead + 1, "expected a generator name before '->'");
    if (rhs.empty()) throw ParseError(number, arrow + 3, "missing image after '->'");
    body.push_back({number, lead + 1, lhs, arrow + 3 + rlead, rhs});
  }

  if (field_override) field = *field_override;
  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    for (const auto& b : body)
      if (b.lhs != fixed && std::find(names.begin(), names.end(), b.lhs) == names.end()) names.push_back(b.lhs);
  }
  if (names.empty()) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "no generator lines");

  AlgebraPtr alg;
  try {
    alg = make_algebra(names, fixed, field);
  } catch (const DomainError& e) {
    throw ParseError(lines.front().number, 1, e.what());
  }

  std::vector<std::optional<NCPoly>> images(alg->n());
  for (const auto& b : body) {
    if (b.lhs == fixed) throw ParseError(b.line, b.lhs_col, "the fixed variable '" + fixed + "' cannot be mapped");
    const auto letter = alg->letter(b.lhs);
    if (!letter) throw ParseError(b.line, b.lhs_col, "unknown symbol '" + b.lhs + "' on the left-hand side");
    if (images[*letter]) throw ParseError(b.line, b.lhs_col, "duplicate generator '" + b.lhs + "'");
    images[*letter] = parse_ncpoly(b.rhs, alg, b.line, b.rhs_col);
  }
  std::vector<NCPoly> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) throw ParseError(lines.back().number, 1, "missing image for generator '" + names[k] + "'");
    out.push_back(std::move(*images[k]));
  }
  return KzEndo(alg, std::move(out));
}

std::string print_endo(const KzEndo& phi) {
  const Algebra& alg = *phi.algebra();
  std::string s = "vars:";
  for (const auto& n : alg.x_names) s += ' ' + n;
  s += ", fixed: " + alg.z_name + "\n";
  s += "field: " + alg.field.to_string() + "\n";
  for (std::size_t j = 0; j < phi.n(); ++j) s += alg.x_names[j] + " -> " + phi.image(j).to_string() + "\n";
  return s;
}

}  // namespace kzaut
