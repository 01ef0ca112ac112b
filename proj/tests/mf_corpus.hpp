#pragma once

#include <string>
#include <vector>

#include "dquot/matfac.hpp"

namespace dquot::testing {

struct MFCase {
  std::string name;
  Potential sigma;
  MatrixFactorization mf;
  std::size_t d;  // Krull dimension of R
};

inline MFCase mf_case(const std::string& name, std::vector<std::string> vars, const std::string& sigma,
                      std::vector<std::vector<std::string>> phi, std::vector<std::vector<std::string>> psi) {
  Potential p = Potential::parse(vars, sigma);
  auto mf = MatrixFactorization::parse(p, phi, psi);
  return MFCase{name, p, mf, vars.size() - 1};
}

inline std::vector<MFCase> mf_corpus() {
  return {
      mf_case("x^2 (x,x)", {"x"}, "x^2", {{"x"}}, {{"x"}}),
      mf_case("x^3 (x,x^2)", {"x"}, "x^3", {{"x"}}, {{"x^2"}}),
      mf_case("x^5 (x^2,x^3)", {"x"}, "x^5", {{"x^2"}}, {{"x^3"}}),
      mf_case("x^3 zero module", {"x"}, "x^3", {{"1"}}, {{"x^3"}}),
      mf_case("node (x,y)", {"x", "y"}, "x*y", {{"x"}}, {{"y"}}),
      mf_case("node (y,x)", {"x", "y"}, "x*y", {{"y"}}, {{"x"}}),
      mf_case("A2 surface", {"x", "y", "z"}, "x*y - z^3", {{"x", "z"}, {"z^2", "y"}}, {{"y", "-z"}, {"-z^2", "x"}}),
      mf_case("conifold", {"x", "y", "u", "v"}, "x*y - u*v", {{"x", "u"}, {"v", "y"}}, {{"y", "-u"}, {"-v", "x"}}),
  };
}

}  // namespace dquot::testing
