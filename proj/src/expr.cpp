#include "dquot/expr.hpp"

#include <cctype>

#include "dquot/error.hpp"

namespace dquot::expr {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Node parse_all() {
    Node n = parse_sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return n;
  }

  Node parse_sum() {
    Node sum{Node::Kind::Sum, {}, {}, 0, {}};
    sum.children.push_back(parse_signed_term());
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        sum.children.push_back(parse_term());
      } else if (peek('-')) {
        ++pos_;
        sum.children.push_back(negate(parse_term()));
      } else {
        break;
      }
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  bool at_end() {
    skip();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

 private:
  static Node negate(Node n) {
    Node neg{Node::Kind::Negate, {}, {}, 0, {}};
    neg.children.push_back(std::move(n));
    return neg;
  }

  Node parse_signed_term() {
    skip();
    if (peek('-')) {
      ++pos_;
      return negate(parse_term());
    }
    if (peek('+')) ++pos_;
    return parse_term();
  }

  Node parse_term() {
    Node prod{Node::Kind::Product, {}, {}, 0, {}};
    prod.children.push_back(parse_power());
    while (peek('*')) {
      ++pos_;
      prod.children.push_back(parse_power());
    }
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  Node parse_power() {
    Node base = parse_atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent after '^'");
    unsigned long e = std::stoul(text_.substr(start, pos_ - start));
    if (e > 4096) fail("exponent too large");
    Node pw{Node::Kind::Power, {}, {}, static_cast<unsigned>(e), {}};
    pw.children.push_back(std::move(base));
    return pw;
  }

  Node parse_atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node inner = parse_sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return negate(parse_power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Node{Node::Kind::Number, mpz_class(text_.substr(start, pos_ - start)), {}, 0, {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Node{Node::Kind::Symbol, {}, text_.substr(start, pos_ - start), 0, {}};
    }
    fail("unexpected character");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + text_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Node parse(const std::string& text) {
  Parser p(text);
  return p.parse_all();
}

Node parse_relation(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) return parse(text);
  if (text.find('=', eq + 1) != std::string::npos) throw ParseError("relation '" + text + "' has more than one '='");
  Node lhs = parse(text.substr(0, eq));
  Node rhs = parse(text.substr(eq + 1));
  Node neg{Node::Kind::Negate, {}, {}, 0, {}};
  neg.children.push_back(std::move(rhs));
  Node sum{Node::Kind::Sum, {}, {}, 0, {}};
  sum.children.push_back(std::move(lhs));
  sum.children.push_back(std::move(neg));
  return sum;
}

}  // namespace dquot::expr
