#pragma once
// Randomized corpus of (A, e) from small quivers with relations.

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dquot/quiver.hpp"

namespace dquot::testing {

struct Sample {
  std::string name;
  FinDimAlgebra a;
  Idempotent e;
  Idempotent conjugated;
};

// Kills every path of length 3, adds a commutativity relation between a pair of
// parallel length-2 paths when one exists.
inline QuiverPresentation random_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nv(2, 3);
  const std::size_t v = nv(rng);
  std::uniform_int_distribution<std::size_t> na(v, v + 2), vert(0, v - 1);
  std::vector<Arrow> arrows;
  const std::size_t count = na(rng);
  for (std::size_t i = 0; i < count; ++i) arrows.push_back({std::string(1, static_cast<char>('a' + i)), vert(rng), vert(rng)});
  std::vector<std::string> rels;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> length2;
  for (const auto& x : arrows)
    for (const auto& y : arrows) {
      if (x.target != y.source) continue;
      length2.push_back({x.name + "*" + y.name, {x.source, y.target}});
      for (const auto& z : arrows)
        if (y.target == z.source) rels.push_back(x.name + "*" + y.name + "*" + z.name);
    }
  for (std::size_t i = 0; i < length2.size(); ++i)
    for (std::size_t j = i + 1; j < length2.size(); ++j)
      if (length2[i].second == length2[j].second && rng() % 2 == 0) {
        rels.push_back(length2[i].first + " = " + length2[j].first);
        i = length2.size();
        break;
      }
  QuiverPresentation p{Quiver(v, arrows), rels};
  p.degree_bound = 4;
  return p;
}

inline std::vector<Sample> random_corpus(std::size_t size = 20) {
  std::mt19937 rng(20261018);
  std::vector<Sample> out;
  while (out.size() < size) {
    auto p = random_presentation(rng);
    auto alg = build_algebra(p);
    const auto& A = alg.algebra;
    const std::size_t v = p.quiver.vertex_count();
    std::set<std::size_t> verts;
    for (std::size_t i = 0; i < v; ++i)
      if (rng() % 2) verts.insert(i);
    if (verts.empty() || verts.size() == v) verts = {rng() % v};
    Idempotent e = vertex_idempotent(alg, verts);
    // keep B^-5 small: dim Ae * dim eA * (dim eAe)^4
    const std::size_t r = cornering(A, e).algebra.dim();
    if (A.dim() > 10 || r > 4 || left_module_span(A, e).dim() * right_module_span(A, e).dim() * r * r * r * r > 60000) continue;
    // u = 1 + r with r a radical element, u^{-1} = 1 - r + r^2 (r^3 = 0)
    Vec rad(A.dim());
    for (const auto& arrow : p.quiver.arrows()) {
      Vec x = alg.element(arrow.name);
      for (std::size_t k = 0; k < rad.size(); ++k) rad[k] += x[k] * static_cast<long>(rng() % 3);
    }
    Vec u = A.unit(), uinv = A.unit();
    Vec rad2 = A.multiply(rad, rad);
    for (std::size_t k = 0; k < rad.size(); ++k) {
      u[k] += rad[k];
      uinv[k] += rad2[k] - rad[k];
    }
    if (A.multiply(u, uinv) != A.unit()) throw std::logic_error("random corpus: unit inverse is wrong");
    Idempotent conj(A, A.multiply(A.multiply(u, e.element()), uinv));
    std::string name = "sample " + std::to_string(out.size()) + " (dim " + std::to_string(A.dim()) + ")";
    out.push_back({name, A, e, conj});
  }
  return out;
}

}  // namespace dquot::testing
