#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dquot/matrix.hpp"
#include "dquot/polynomial.hpp"

namespace dquot::testing {

// dim k[x]/(gens + m^N) by spanning every monomial multiple of every generator
// below degree N and taking one big rank.
inline std::size_t brute_quotient_dim(const std::vector<Polynomial>& gens, std::size_t nvars, std::size_t N) {
  std::vector<Monomial> monos;
  Monomial cur(nvars, 0);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t i, std::size_t left) {
    if (i == nvars) {
      monos.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      gen(i + 1, left - e);
    }
    cur[i] = 0;
  };
  gen(0, N - 1);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  const Field f = gens.front().field();
  std::vector<Vec> rows;
  for (const auto& g : gens)
    for (const auto& m : monos) {
      Vec row(monos.size());
      bool any = false;
      for (const auto& [t, c] : g.terms()) {
        Monomial prod(nvars);
        std::size_t deg = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
          prod[v] = static_cast<std::uint16_t>(t[v] + m[v]);
          deg += prod[v];
        }
        if (deg >= N) continue;
        row[index.at(prod)] = c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  if (rows.empty()) return monos.size();
  return monos.size() - rank(Mat(f, monos.size(), rows));
}

}  // namespace dquot::testing
