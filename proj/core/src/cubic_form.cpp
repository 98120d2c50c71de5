#include "cubiccert/cubic_form.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>

#include "cubiccert/errors.hpp"

namespace cubiccert {

namespace {

struct Token {
  enum Kind { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Number, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) syntax_error(i, "variable 'x' needs an index");
      out.push_back({Token::Variable, std::string(text.substr(i + 1, j - i - 1)), i});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '/': kind = Token::Slash; break;
      case '^': kind = Token::Caret; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      default: syntax_error(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*      ('/' only between integer literals)
// factor := atom ['^' integer]
// atom   := number | variable | '(' expr ')'
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t arity) : tokens_(std::move(tokens)), arity_(arity) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Token::End) syntax_error(peek().pos, "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Polynomial expr() {
    bool negate = false;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) negate = next().kind == Token::Minus;
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      const bool minus = next().kind == Token::Minus;
      Polynomial t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      const Token& op = next();
      if (op.kind == Token::Slash) {
        const Token& den = next();
        if (den.kind != Token::Number) syntax_error(den.pos, "'/' must be followed by an integer");
        mpz_class d(den.text);
        if (d == 0) syntax_error(den.pos, "zero denominator");
        acc *= Scalar::rational(mpq_class(1, d));
      } else {
        acc *= factor();
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek().kind == Token::Caret) {
      next();
      const Token& e = next();
      if (e.kind != Token::Number) syntax_error(e.pos, "exponent must be a non-negative integer");
      if (e.text.size() > 3) syntax_error(e.pos, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Number:
        return Polynomial::constant(arity_, Scalar::rational(mpq_class(mpz_class(t.text))));
      case Token::Variable:
        return Polynomial::variable(arity_, Domain::rationals(), std::stoul(t.text));
      case Token::LParen: {
        Polynomial inner = expr();
        const Token& close = next();
        if (close.kind != Token::RParen) syntax_error(close.pos, "expected ')'");
        return inner;
      }
      default:
        syntax_error(t.pos, t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  auto tokens = tokenize(text);
  std::size_t arity = 0;
  for (const auto& t : tokens) {
    if (t.kind != Token::Variable) continue;
    if (t.text.size() > 4) syntax_error(t.pos, "variable index too large");
    arity = std::max<std::size_t>(arity, std::stoul(t.text) + 1);
  }
  return Parser(std::move(tokens), arity).parse();
}

CubicForm::CubicForm(Polynomial poly) : poly_(std::move(poly)) {
  if (!poly_.domain().is_rational()) throw Error(ErrorCode::DomainMismatch, "cubic forms have rational coefficients");
  if (poly_.is_zero() || poly_.total_degree() != 3 || !poly_.is_homogeneous()) {
    throw Error(ErrorCode::NotHomogeneousDegree3, poly_.to_string());
  }
  if (poly_.arity() == 0) throw Error(ErrorCode::NotHomogeneousDegree3, "form has no variables");
  const auto used = poly_.used_variables();
  if (used.size() != poly_.arity()) {
    for (std::size_t i = 0; i < poly_.arity(); ++i) {
      if (!std::binary_search(used.begin(), used.end(), i)) {
        throw Error(ErrorCode::UnusedVariableSlot, "x" + std::to_string(i) + " does not occur");
      }
    }
  }
}

CubicForm parse_form(std::string_view text) { return CubicForm(parse_polynomial(text)); }

Polynomial BlockDecomposition::reembed() const {
  Polynomial total(nvars, Domain::rationals());
  for (const auto& b : blocks) total += b.form.poly().embed(nvars, b.variables);
  return total;
}

BlockDecomposition decompose_blocks(const CubicForm& f) {
  const std::size_t n = f.nvars();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& [m, c] : f.poly().terms()) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (!first) {
        first = i;
      } else {
        const auto a = find(*first);
        const auto b = find(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(i);

  std::map<std::size_t, std::size_t> index_of_root;
  std::vector<std::size_t> local(n);
  std::vector<Polynomial> parts;
  for (const auto& [root, vars] : components) {
    for (std::size_t k = 0; k < vars.size(); ++k) local[vars[k]] = k;
    index_of_root[root] = parts.size();
    parts.emplace_back(vars.size(), Domain::rationals());
  }

  // Every term lies in exactly one component; bucket terms by it.
  for (const auto& [m, c] : f.poly().terms()) {
    std::size_t first = 0;
    while (m[first] == 0) ++first;
    Polynomial& part = parts[index_of_root.at(find(first))];
    Monomial lm(part.arity(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) lm[local[i]] = m[i];
    }
    part.add_term(lm, c);
  }

  BlockDecomposition d;
  d.nvars = n;
  std::size_t i = 0;
  for (const auto& [root, vars] : components) d.blocks.push_back(Block{vars, CubicForm(std::move(parts[i++]))});
  return d;
}

TypeSignature::TypeSignature(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < 1) throw Error(ErrorCode::InvalidArgument, "type entries must be positive");
  }
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

int TypeSignature::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

std::size_t TypeSignature::count(int size) const {
  return static_cast<std::size_t>(std::count(sizes_.begin(), sizes_.end(), size));
}

std::string TypeSignature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes_[i]);
  }
  return out + ")";
}

TypeSignature type_signature(const BlockDecomposition& d) {
  std::vector<int> sizes;
  for (const auto& b : d.blocks) sizes.push_back(static_cast<int>(b.variables.size()));
  return TypeSignature(std::move(sizes));
}

std::vector<TypeSignature> enumerate_signatures(int total, int max_entry) {
  std::vector<TypeSignature> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int s = std::min(cap, remaining); s >= 1; --s) {
      current.push_back(s);
      rec(remaining - s, s);
      current.pop_back();
    }
  };
  if (total > 0) rec(total, max_entry);
  return out;
}

}  // namespace cubiccert
