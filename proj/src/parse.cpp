#include "bocalc/parse.hpp"

#include <cctype>

namespace bocalc::parse {

namespace {

struct Token {
  enum Kind { Number, Name, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Name, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), i});
      ++i;
    } else {
      throw PresentationError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// Index of x<k> (k ≥ 1), or npos.
std::size_t default_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::string::npos;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::string::npos;
  return std::stoul(name.substr(1)) - 1;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> names, std::size_t nvars)
      : toks_(std::move(toks)), names_(std::move(names)), nvars_(nvars) {}

  Polynomial<Rat> parse() {
    Polynomial<Rat> p = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PresentationError(what + " at position " + std::to_string(peek().pos));
  }

  Polynomial<Rat> expr() {
    Polynomial<Rat> acc(nvars_);
    int sign = 1;
    if (accept("-")) sign = -1;
    else accept("+");
    for (;;) {
      const Polynomial<Rat> t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      if (accept("+")) sign = 1;
      else if (accept("-")) sign = -1;
      else return acc;
    }
  }

  Polynomial<Rat> term() {
    Polynomial<Rat> acc = power();
    while (accept("*")) acc = acc * power();
    return acc;
  }

  Polynomial<Rat> power() {
    Polynomial<Rat> b = base();
    if (accept("^")) {
      if (peek().kind != Token::Number) fail("expected a nonnegative integer exponent");
      const unsigned k = static_cast<unsigned>(std::stoul(toks_[pos_++].text));
      b = b.pow(k);
    }
    return b;
  }

  Polynomial<Rat> base() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      Rat v(Int(t.text));
      if (accept("/")) {
        if (peek().kind != Token::Number) fail("expected a denominator");
        const Int d(toks_[pos_++].text);
        if (sgn(d) == 0) fail("zero denominator");
        v /= Rat(d);
      }
      return Polynomial<Rat>(v, nvars_);
    }
    if (t.kind == Token::Name) {
      ++pos_;
      std::size_t idx = std::string::npos;
      if (names_.empty()) {
        idx = default_index(t.text);
      } else {
        for (std::size_t i = 0; i < names_.size(); ++i)
          if (names_[i] == t.text) idx = i;
      }
      if (idx == std::string::npos) throw PresentationError("unknown variable '" + t.text + "' at position " + std::to_string(t.pos));
      return Polynomial<Rat>::variable(nvars_, idx);
    }
    if (accept("(")) {
      Polynomial<Rat> inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    fail(t.kind == Token::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::vector<std::string> names_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<Rat> polynomial(std::string_view s, const std::vector<std::string>& names, std::size_t min_vars) {
  auto toks = tokenize(s);
  std::size_t nvars = std::max(min_vars, names.size());
  if (names.empty())
    for (const auto& t : toks)
      if (t.kind == Token::Name) {
        const std::size_t idx = default_index(t.text);
        if (idx != std::string::npos) nvars = std::max(nvars, idx + 1);
      }
  return Parser(std::move(toks), names, nvars).parse();
}

IntPoly int_polynomial(std::string_view s, const std::vector<std::string>& names, std::size_t min_vars) {
  const Polynomial<Rat> p = polynomial(s, names, min_vars);
  IntPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw PresentationError("non-integer coefficient " + c.get_str() + " in '" + std::string(s) + "'");
    out.add_term(e, c.get_num());
  }
  return out;
}

std::vector<int> int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    std::string item(s.substr(i, j - i));
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PresentationError("expected an integer, got '" + item + "'");
    }
    if (used != item.size()) throw PresentationError("expected an integer, got '" + item + "'");
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

}  // namespace bocalc::parse
