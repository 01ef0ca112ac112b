#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dquot::expr {

/// Parsed arithmetic expression over integers and named symbols, with
/// +, -, *, ^ (non-negative integer exponent) and parentheses.
struct Node {
  enum class Kind { Number, Symbol, Sum, Product, Negate, Power };
  Kind kind;
  mpz_class number;               // Number
  std::string symbol;             // Symbol
  unsigned exponent = 0;          // Power
  std::vector<Node> children;     // Sum / Product / Negate / Power
};

/// Throws ParseError with the offending position.
Node parse(const std::string& text);

/// Parses "lhs = rhs" as lhs - rhs; plain expressions pass through.
Node parse_relation(const std::string& text);

/// Folds a tree with a ring-like visitor providing
/// number(const mpz_class&), symbol(const std::string&), add, mul, neg.
template <class Ops>
auto evaluate(const Node& n, Ops& ops) -> decltype(ops.number(n.number)) {
  using Node = dquot::expr::Node;
  switch (n.kind) {
    case Node::Kind::Number:
      return ops.number(n.number);
    case Node::Kind::Symbol:
      return ops.symbol(n.symbol);
    case Node::Kind::Negate:
      return ops.neg(evaluate(n.children[0], ops));
    case Node::Kind::Sum: {
      auto acc = evaluate(n.children[0], ops);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = ops.add(acc, evaluate(n.children[i], ops));
      return acc;
    }
    case Node::Kind::Product: {
      auto acc = evaluate(n.children[0], ops);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = ops.mul(acc, evaluate(n.children[i], ops));
      return acc;
    }
    case Node::Kind::Power: {
      auto base = evaluate(n.children[0], ops);
      auto acc = ops.number(mpz_class(1));
      if (n.exponent > 0) acc = base;
      for (unsigned i = 1; i < n.exponent; ++i) acc = ops.mul(acc, base);
      return acc;
    }
  }
  return ops.number(mpz_class(0));
}

}  // namespace dquot::expr
