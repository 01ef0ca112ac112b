#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dquot/algebra.hpp"
#include "dquot/expr.hpp"

namespace dquot {

struct Arrow {
  std::string name;
  std::size_t source;  // 0-based vertex
  std::size_t target;
};

class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Index of the named arrow, or -1.
  long find(const std::string& name) const;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

/// A quiver with relations. Paths compose left to right: "a*b" follows a, then b.
struct QuiverPresentation {
  Quiver quiver;
  std::vector<std::string> relations;
  std::size_t degree_bound = 12;
  std::size_t max_paths = 200000;
  Field field = Field::rationals();
};

/// The quotient algebra together with its path basis.
struct PathBasisAlgebra {
  FinDimAlgebra algebra;
  Quiver quiver;
  std::vector<std::string> path_labels;
  std::vector<AlgebraElement> vertex_idempotents;
  /// Arrows removed by identification relations, with their value in the algebra.
  std::map<std::string, AlgebraElement> identified_arrows;

  /// Evaluates a path expression such as "x*y - 2*z" (arrow names, "e<i>" for
  /// 1-based vertex idempotents) in the algebra.
  AlgebraElement element(const std::string& expression) const;
};

/// Builds kQ/(I + paths of length >= degree_bound). Throws DegreeBoundInsufficient
/// unless every path of length degree_bound lies in the relation span.
PathBasisAlgebra build_algebra(const QuiverPresentation& p);

/// A / A e A for e the sum of the vertices in `kill` (0-based), computed from the
/// presentation with every arrow touching `kill` set to zero.
PathBasisAlgebra contraction_algebra(const QuiverPresentation& p, const std::set<std::size_t>& kill);

/// Sum of the vertex idempotents in `vertices` (0-based).
Idempotent vertex_idempotent(const PathBasisAlgebra& a, const std::set<std::size_t>& vertices);

}  // namespace dquot
