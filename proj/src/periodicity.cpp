#include "dquot/periodicity.hpp"

#include "dquot/error.hpp"

namespace dquot {

bool verifies_periodicity(const CohomologyReport& report, const Vec& eta, std::vector<std::size_t>* ranks) {
  const Field& f = report.field;
  const int lowest = -static_cast<int>(report.window);
  if (ranks) ranks->clear();
  bool ok = true;
  for (int j = 0; j - 2 >= lowest; --j) {
    const std::size_t src = report.dim(j), dst = report.dim(j - 2);
    Mat m(f, dst, src);
    for (std::size_t i = 0; i < src; ++i) {
      Vec x(src);
      x[i] = 1;
      Vec y = report.multiply(-2, eta, j, x);
      for (std::size_t k = 0; k < dst; ++k) m(k, i) = y[k];
    }
    std::size_t r = rank(m);
    if (ranks) ranks->push_back(r);
    if (src != dst || r != src) ok = false;
  }
  return ok;
}

PeriodicityClass find_eta(const CohomologyReport& report, std::optional<bool> local_hint) {
  if (report.window < 6) throw WindowExceedsDepth("find_eta needs a cohomology window reaching degree -6");
  const bool local = local_hint ? *local_hint : (report.dim(0) > 0 && is_local(report.h0_algebra()).local);
  if (!local) throw NotLocal("H^0 is not an Artinian local algebra");
  const Field& f = report.field;
  const std::size_t d2 = report.dim(-2), d0 = report.dim(0);

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < d2; ++i) {
    Vec b(d2);
    b[i] = 1;
    candidates.push_back(b);
  }
  if (d2 > 0) {
    Vec all(d2, Scalar(1));
    candidates.push_back(all);
  }
  // H^0 multiples of the basis
  const std::size_t basic = candidates.size();
  for (std::size_t c = 0; c < basic; ++c)
    for (std::size_t k = 0; k < d0; ++k) {
      Vec h(d0);
      h[k] = 1;
      candidates.push_back(report.multiply(0, h, -2, candidates[c]));
    }
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = i + 1; j < d2; ++j)
      for (int c : {2, -1, 3}) {
        Vec v(d2);
        v[i] = 1;
        v[j] = f.normalize(Scalar(c));
        candidates.push_back(v);
      }

  for (auto& eta : candidates) {
    if (std::all_of(eta.begin(), eta.end(), [](const Scalar& s) { return is_zero(s); })) continue;
    PeriodicityClass out{eta, 2 - static_cast<int>(report.window), {}};
    if (verifies_periodicity(report, eta, &out.ranks)) return out;
  }
  throw NoPeriodicityClass("no class in H^-2 acts invertibly on the window [-" + std::to_string(report.window) + ", 0]");
}

}  // namespace dquot
