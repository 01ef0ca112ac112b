#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dquot/polynomial.hpp"

namespace dquot {

/// A hypersurface germ sigma in the maximal ideal of k[x_1..x_n].
struct Potential {
  std::vector<std::string> variables;
  Polynomial sigma;

  /// Throws ZeroPotential or ConstantTerm when sigma is not a nonzero element of m.
  Potential(std::vector<std::string> variables, Polynomial sigma);
  static Potential parse(const std::vector<std::string>& variables, const std::string& text, Field field = Field::rationals());

  const Field& field() const { return sigma.field(); }
  std::size_t nvars() const { return variables.size(); }
  Polynomial jacobian(std::size_t i) const { return sigma.derivative(i); }
};

using Schedule = std::vector<std::size_t>;

inline const Schedule& default_singularity_schedule() {
  static const Schedule s{4, 6, 8, 12, 16};
  return s;
}

/// dim k[x]/(gens + m^N) along a schedule, stopped at the first N where every
/// monomial of degree N-1 lies in the ideal plus m^N; from there on the dimension
/// equals that of the local quotient k[[x]]/(gens).
struct LocalQuotientProbe {
  std::vector<Polynomial> generators;
  std::vector<std::pair<std::size_t, std::size_t>> dims_at_order;  // (N, dim)
  bool finite = false;
  std::size_t value = 0;
};

LocalQuotientProbe probe_local_quotient(Field field, std::size_t nvars, std::vector<Polynomial> gens, const Schedule& schedule);

/// Probes for the Milnor algebra k[[x]]/J and the Tjurina algebra k[[x]]/(sigma, J).
LocalQuotientProbe milnor_probe(const Potential& p, const Schedule& schedule = default_singularity_schedule());
LocalQuotientProbe tjurina_probe(const Potential& p, const Schedule& schedule = default_singularity_schedule());

/// NotIsolated when the schedule runs out before the witness holds.
std::size_t milnor_number(const Potential& p, const Schedule& schedule = default_singularity_schedule());
std::size_t tjurina_number(const Potential& p, const Schedule& schedule = default_singularity_schedule());

/// mu = tau, which holds whenever sigma lies in its Jacobian ideal.
bool is_quasi_homogeneous_consistent(const Potential& p, const Schedule& schedule = default_singularity_schedule());

/// Throws NotIsolated unless the Milnor number is finite along the schedule.
void require_isolated(const Potential& p, const Schedule& schedule = default_singularity_schedule());

}  // namespace dquot
