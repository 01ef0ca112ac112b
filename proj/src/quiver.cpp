#include "dquot/quiver.hpp"

#include <algorithm>
#include <tuple>

#include "dquot/error.hpp"

namespace dquot {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  std::set<std::string> names;
  for (auto& a : arrows_) {
    if (a.name.empty()) throw InputError("quiver: arrow with empty name");
    if (!names.insert(a.name).second) throw InputError("quiver: duplicate arrow name '" + a.name + "'");
    if (a.source >= vertex_count_ || a.target >= vertex_count_)
      throw InputError("quiver: arrow '" + a.name + "' has an endpoint out of range");
  }
}

long Quiver::find(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<long>(i);
  return -1;
}

namespace {

struct Path {
  std::size_t source;
  std::vector<std::uint32_t> arrows;

  friend bool operator<(const Path& a, const Path& b) {
    return std::tie(a.source, a.arrows) < std::tie(b.source, b.arrows);
  }
  friend bool operator==(const Path&, const Path&) = default;
};

using PathComb = std::map<Path, Scalar>;

std::size_t path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows()[p.arrows.back()].target;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (auto a : p.arrows) {
    if (!s.empty()) s += "*";
    s += q.arrows()[a].name;
  }
  return s;
}

void add_term(const Field& f, PathComb& c, const Path& p, const Scalar& x) {
  auto [it, fresh] = c.emplace(p, x);
  if (!fresh) it->second = f.add(it->second, x);
  if (is_zero(it->second)) c.erase(it);
}

PathComb concat(const Field& f, const Quiver& q, const PathComb& a, const PathComb& b) {
  PathComb out;
  for (auto& [p, x] : a)
    for (auto& [r, y] : b) {
      if (path_target(q, p) != r.source) continue;
      Path pr{p.source, p.arrows};
      pr.arrows.insert(pr.arrows.end(), r.arrows.begin(), r.arrows.end());
      add_term(f, out, pr, f.mul(x, y));
    }
  return out;
}

// Evaluates relation syntax trees into path combinations.
struct PathOps {
  const Field& f;
  const Quiver& q;
  const std::set<std::string>& killed;

  PathComb number(const mpz_class& z) {
    PathComb c;
    Scalar v = f.normalize(Scalar(z));
    if (is_zero(v)) return c;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) c[Path{i, {}}] = v;
    return c;
  }
  PathComb symbol(const std::string& name) {
    if (killed.count(name)) return {};
    long idx = q.find(name);
    if (idx < 0) throw ParseError("relation refers to unknown arrow '" + name + "'");
    const auto& a = q.arrows()[static_cast<std::size_t>(idx)];
    return PathComb{{Path{a.source, {static_cast<std::uint32_t>(idx)}}, Scalar(1)}};
  }
  PathComb add(const PathComb& a, const PathComb& b) {
    PathComb out = a;
    for (auto& [p, x] : b) add_term(f, out, p, x);
    return out;
  }
  PathComb neg(const PathComb& a) {
    PathComb out;
    for (auto& [p, x] : a) out[p] = f.neg(x);
    return out;
  }
  PathComb mul(const PathComb& a, const PathComb& b) { return concat(f, q, a, b); }
};

// Replaces arrow `arrow` by `value` in every path of `c`.
PathComb substitute(const Field& f, const Quiver& q, const PathComb& c, std::uint32_t arrow, const PathComb& value) {
  PathComb out;
  for (auto& [p, x] : c) {
    if (std::find(p.arrows.begin(), p.arrows.end(), arrow) == p.arrows.end()) {
      add_term(f, out, p, x);
      continue;
    }
    PathComb acc{{Path{p.source, {}}, x}};
    for (auto a : p.arrows) {
      PathComb factor = a == arrow ? value : PathComb{{Path{q.arrows()[a].source, {a}}, Scalar(1)}};
      acc = concat(f, q, acc, factor);
    }
    for (auto& [r, y] : acc) add_term(f, out, r, y);
  }
  return out;
}

PathComb reindex(const PathComb& c, const std::vector<long>& new_index) {
  PathComb out;
  for (auto& [p, x] : c) {
    Path r{p.source, {}};
    for (auto a : p.arrows) r.arrows.push_back(static_cast<std::uint32_t>(new_index[a]));
    out.emplace(std::move(r), x);
  }
  return out;
}

bool path_order(const Quiver& q, const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows.empty()) return a.source < b.source;
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    const auto& na = q.arrows()[a.arrows[i]].name;
    const auto& nb = q.arrows()[b.arrows[i]].name;
    if (na != nb) return na < nb;
  }
  return false;
}

PathBasisAlgebra build_from(const Field& f, const Quiver& full, const std::vector<std::string>& relation_text,
                            const std::set<std::string>& killed, std::size_t degree_bound, std::size_t max_paths) {
  const std::size_t L = degree_bound;
  if (L == 0) throw InputError("degree bound must be positive");
  PathOps ops{f, full, killed};
  std::vector<PathComb> relations;
  for (auto& text : relation_text) {
    PathComb r = expr::evaluate(expr::parse_relation(text), ops);
    if (!r.empty()) relations.push_back(std::move(r));
  }

  // Eliminate arrows identified with combinations of longer paths.
  std::vector<bool> eliminated(full.arrows().size(), false);
  std::map<std::uint32_t, PathComb> values;
  while (true) {
    std::size_t pick = relations.size();
    std::uint32_t a = 0;
    for (std::size_t i = 0; i < relations.size() && pick == relations.size(); ++i)
      for (auto& [p, x] : relations[i]) {
        if (p.arrows.empty())
          throw InputError("relation involves a vertex idempotent; only relations among paths of positive length are supported");
        if (p.arrows.size() == 1) {
          a = pick == i ? std::max(a, p.arrows[0]) : p.arrows[0];
          pick = i;
        }
      }
    if (pick == relations.size()) break;
    PathComb rel = std::move(relations[pick]);
    relations.erase(relations.begin() + static_cast<long>(pick));
    Path single{full.arrows()[a].source, {a}};
    Scalar c = rel.at(single);
    rel.erase(single);
    for (auto& [p, x] : rel)
      if (std::find(p.arrows.begin(), p.arrows.end(), a) != p.arrows.end())
        throw InputError("cannot eliminate arrow '" + full.arrows()[a].name + "': it occurs on both sides of its identification");
    PathComb value;
    Scalar scale = f.neg(f.inv(c));
    for (auto& [p, x] : rel) value[p] = f.mul(scale, x);
    for (auto& r : relations) r = substitute(f, full, r, a, value);
    for (auto& [b, v] : values) v = substitute(f, full, v, a, value);
    std::erase_if(relations, [](const PathComb& r) { return r.empty(); });
    values[a] = std::move(value);
    eliminated[a] = true;
  }

  // Reduced quiver without eliminated or killed arrows.
  std::vector<Arrow> kept;
  std::vector<long> new_index(full.arrows().size(), -1);
  for (std::size_t i = 0; i < full.arrows().size(); ++i) {
    if (eliminated[i] || killed.count(full.arrows()[i].name)) continue;
    new_index[i] = static_cast<long>(kept.size());
    kept.push_back(full.arrows()[i]);
  }
  Quiver q(full.vertex_count(), kept);
  for (auto& r : relations) r = reindex(r, new_index);
  for (auto& [a, v] : values) v = reindex(v, new_index);

  struct RelInfo {
    std::size_t source, target, min_len;
  };
  std::vector<RelInfo> info;
  for (auto& r : relations) {
    const Path& first = r.begin()->first;
    RelInfo ri{first.source, path_target(q, first), first.arrows.size()};
    for (auto& [p, x] : r) {
      if (p.source != ri.source || path_target(q, p) != ri.target)
        throw InputError("relation mixes paths with different endpoints");
      ri.min_len = std::min(ri.min_len, p.arrows.size());
    }
    info.push_back(ri);
  }

  // Enumerate paths of length <= L, stratified by length.
  std::vector<Path> paths;
  std::vector<std::vector<std::uint32_t>> out_arrows(q.vertex_count());
  for (std::uint32_t i = 0; i < q.arrows().size(); ++i) out_arrows[q.arrows()[i].source].push_back(i);
  std::size_t stratum_begin = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) paths.push_back(Path{v, {}});
  for (std::size_t len = 1; len <= L; ++len) {
    std::size_t stratum_end = paths.size();
    for (std::size_t k = stratum_begin; k < stratum_end; ++k)
      for (auto a : out_arrows[path_target(q, paths[k])]) {
        if (paths.size() >= max_paths)
          throw TooManyPaths("more than " + std::to_string(max_paths) + " paths of length <= " + std::to_string(L) +
                             "; lower the degree bound or check that the algebra is finite-dimensional");
        Path p = paths[k];
        p.arrows.push_back(a);
        paths.push_back(std::move(p));
      }
    std::sort(paths.begin() + static_cast<long>(stratum_end), paths.end(),
              [&](const Path& a, const Path& b) { return path_order(q, a, b); });
    stratum_begin = stratum_end;
  }
  const std::size_t n_paths = paths.size();
  std::map<Path, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n_paths; ++i) index.emplace(paths[i], i);
  // Columns run from the longest path down so that pivots land on long paths.
  auto column = [&](std::uint32_t i) { return static_cast<std::uint32_t>(n_paths - 1 - i); };

  std::vector<std::vector<std::uint32_t>> ending_at(q.vertex_count()), starting_at(q.vertex_count());
  for (std::uint32_t i = 0; i < n_paths; ++i) {
    ending_at[path_target(q, paths[i])].push_back(i);
    starting_at[paths[i].source].push_back(i);
  }

  SparseEchelon span(f, n_paths);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& ri = info[r];
    for (auto u : ending_at[ri.source]) {
      std::size_t lu = paths[u].arrows.size();
      if (lu + ri.min_len > L) continue;
      for (auto v : starting_at[ri.target]) {
        std::size_t lv = paths[v].arrows.size();
        if (lu + lv + ri.min_len > L) continue;
        std::vector<std::pair<std::uint32_t, Scalar>> terms;
        for (auto& [p, x] : relations[r]) {
          if (lu + p.arrows.size() + lv > L) continue;
          Path w{paths[u].source, paths[u].arrows};
          w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
          w.arrows.insert(w.arrows.end(), paths[v].arrows.begin(), paths[v].arrows.end());
          terms.emplace_back(column(index.at(w)), x);
        }
        span.insert(compress(f, std::move(terms)));
      }
    }
  }

  for (std::uint32_t i = 0; i < n_paths; ++i) {
    if (paths[i].arrows.size() != L) continue;
    if (!span.contains(SparseVec{{column(i), Scalar(1)}}))
      throw DegreeBoundInsufficient("path " + path_label(q, paths[i]) + " of length " + std::to_string(L) +
                                    " is not in the relation span: the algebra may be infinite-dimensional, or the degree bound " +
                                    std::to_string(L) + " is too small (try raising it)");
  }

  std::vector<std::uint32_t> basis;
  std::vector<long> basis_of_path(n_paths, -1);
  for (std::uint32_t i = 0; i < n_paths; ++i)
    if (!span.is_pivot(column(i))) {
      basis_of_path[i] = static_cast<long>(basis.size());
      basis.push_back(i);
    }
  const std::size_t dim = basis.size();

  auto normal_form = [&](const Path& p) -> SparseVec {
    if (p.arrows.size() >= L) return {};
    SparseVec red = span.reduce(SparseVec{{column(index.at(p)), Scalar(1)}});
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (auto& [c, x] : red) {
      auto path_idx = static_cast<std::uint32_t>(n_paths - 1 - c);
      terms.emplace_back(static_cast<std::uint32_t>(basis_of_path[path_idx]), x);
    }
    return compress(f, std::move(terms));
  };

  std::vector<std::string> labels;
  for (auto b : basis) labels.push_back(path_label(q, paths[b]));
  std::vector<std::vector<SparseVec>> mul(dim, std::vector<SparseVec>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& a = paths[basis[i]];
      const Path& b = paths[basis[j]];
      if (path_target(q, a) != b.source) continue;
      Path ab{a.source, a.arrows};
      ab.arrows.insert(ab.arrows.end(), b.arrows.begin(), b.arrows.end());
      mul[i][j] = normal_form(ab);
    }

  std::vector<AlgebraElement> idempotents;
  AlgebraElement unit(dim);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    AlgebraElement e = to_dense(normal_form(Path{v, {}}), dim);
    for (std::size_t i = 0; i < dim; ++i) unit[i] = f.add(unit[i], e[i]);
    idempotents.push_back(std::move(e));
  }

  auto to_element = [&](const PathComb& c) {
    AlgebraElement out(dim);
    for (auto& [p, x] : c)
      for (auto& [i, y] : normal_form(p)) f.axpy(out[i], x, y);
    return out;
  };
  std::map<std::string, AlgebraElement> identified;
  for (auto& [a, v] : values) identified.emplace(full.arrows()[a].name, to_element(v));

  FinDimAlgebra algebra(f, labels, std::move(unit), std::move(mul));
  return PathBasisAlgebra{std::move(algebra), q, labels, std::move(idempotents), std::move(identified)};
}

// Evaluates expressions directly in a built algebra.
struct ElementOps {
  const PathBasisAlgebra& a;

  AlgebraElement number(const mpz_class& z) {
    AlgebraElement out = a.algebra.unit();
    Scalar v = a.algebra.field().normalize(Scalar(z));
    for (auto& x : out) x = a.algebra.field().mul(x, v);
    return out;
  }
  AlgebraElement symbol(const std::string& name) {
    if (auto it = a.identified_arrows.find(name); it != a.identified_arrows.end()) return it->second;
    if (auto it = std::find(a.path_labels.begin(), a.path_labels.end(), name); it != a.path_labels.end())
      return a.algebra.basis_element(static_cast<std::size_t>(it - a.path_labels.begin()));
    if (name.size() > 1 && name[0] == 'e' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      std::size_t v = std::stoul(name.substr(1));
      if (v >= 1 && v <= a.vertex_idempotents.size()) return a.vertex_idempotents[v - 1];
    }
    if (a.quiver.find(name) < 0) throw ParseError("unknown arrow '" + name + "'");
    return AlgebraElement(a.algebra.dim());
  }
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.algebra.field().add(x[i], y[i]);
    return out;
  }
  AlgebraElement neg(const AlgebraElement& x) {
    AlgebraElement out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.algebra.field().neg(x[i]);
    return out;
  }
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return a.algebra.multiply(x, y); }
};

}  // namespace

AlgebraElement PathBasisAlgebra::element(const std::string& expression) const {
  ElementOps ops{*this};
  return expr::evaluate(expr::parse(expression), ops);
}

PathBasisAlgebra build_algebra(const QuiverPresentation& p) {
  return build_from(p.field, p.quiver, p.relations, {}, p.degree_bound, p.max_paths);
}

PathBasisAlgebra contraction_algebra(const QuiverPresentation& p, const std::set<std::size_t>& kill) {
  const std::size_t n = p.quiver.vertex_count();
  if (kill.empty() || kill.size() >= n) throw ImproperVertexSet("vertex set to kill must be a non-empty proper subset of the vertices");
  for (auto v : kill)
    if (v >= n) throw ImproperVertexSet("vertex " + std::to_string(v + 1) + " out of range");
  std::vector<long> vertex_map(n, -1);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!kill.count(v)) vertex_map[v] = static_cast<long>(next++);
  std::set<std::string> killed;
  std::vector<Arrow> kept;
  for (auto& a : p.quiver.arrows()) {
    if (kill.count(a.source) || kill.count(a.target)) {
      killed.insert(a.name);
      continue;
    }
    kept.push_back(Arrow{a.name, static_cast<std::size_t>(vertex_map[a.source]), static_cast<std::size_t>(vertex_map[a.target])});
  }
  // Relations still mention killed arrows; they evaluate to zero.
  Quiver reduced(next, kept);
  return build_from(p.field, reduced, p.relations, killed, p.degree_bound, p.max_paths);
}

Idempotent vertex_idempotent(const PathBasisAlgebra& a, const std::set<std::size_t>& vertices) {
  const Field& f = a.algebra.field();
  AlgebraElement e(a.algebra.dim());
  for (auto v : vertices) {
    if (v >= a.vertex_idempotents.size()) throw InputError("vertex " + std::to_string(v + 1) + " out of range");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.add(e[i], a.vertex_idempotents[v][i]);
  }
  return Idempotent(a.algebra, std::move(e));
}

}  // namespace dquot
