#include "dquot/singlocal.hpp"

#include "dquot/error.hpp"
#include "dquot/local_ring.hpp"

namespace dquot {

Potential::Potential(std::vector<std::string> vars, Polynomial s) : variables(std::move(vars)), sigma(std::move(s)) {
  if (sigma.nvars() != variables.size()) throw InputError("potential: variable count mismatch");
  if (sigma.is_zero()) throw ZeroPotential("the potential is zero");
  if (!is_zero(sigma.constant_term())) throw ConstantTerm("the potential has a nonzero constant term");
}

Potential Potential::parse(const std::vector<std::string>& variables, const std::string& text, Field field) {
  return Potential(variables, Polynomial::parse(field, variables, text));
}

LocalQuotientProbe probe_local_quotient(Field field, std::size_t nvars, std::vector<Polynomial> gens, const Schedule& schedule) {
  LocalQuotientProbe probe;
  probe.generators = gens;
  for (std::size_t N : schedule) {
    if (N == 0) throw InputError("schedule orders must be positive");
    TruncatedQuotient q(field, nvars, gens, N);
    probe.dims_at_order.emplace_back(N, q.dim());
    if (q.kills_degree(N - 1)) {
      probe.finite = true;
      probe.value = q.dim();
      break;
    }
  }
  return probe;
}

LocalQuotientProbe milnor_probe(const Potential& p, const Schedule& schedule) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < p.nvars(); ++i) gens.push_back(p.jacobian(i));
  return probe_local_quotient(p.field(), p.nvars(), gens, schedule);
}

LocalQuotientProbe tjurina_probe(const Potential& p, const Schedule& schedule) {
  std::vector<Polynomial> gens{p.sigma};
  for (std::size_t i = 0; i < p.nvars(); ++i) gens.push_back(p.jacobian(i));
  return probe_local_quotient(p.field(), p.nvars(), gens, schedule);
}

namespace {

std::size_t finite_value(const LocalQuotientProbe& probe, const char* what) {
  if (!probe.finite) {
    std::string dims;
    for (auto [n, d] : probe.dims_at_order) dims += " N=" + std::to_string(n) + ":" + std::to_string(d);
    throw NotIsolated(std::string(what) + " did not stabilize along the schedule (" + dims.substr(1) +
                      "); the singularity may not be isolated");
  }
  return probe.value;
}

}  // namespace

std::size_t milnor_number(const Potential& p, const Schedule& schedule) {
  return finite_value(milnor_probe(p, schedule), "the Milnor algebra");
}

std::size_t tjurina_number(const Potential& p, const Schedule& schedule) {
  return finite_value(tjurina_probe(p, schedule), "the Tjurina algebra");
}

bool is_quasi_homogeneous_consistent(const Potential& p, const Schedule& schedule) {
  return milnor_number(p, schedule) == tjurina_number(p, schedule);
}

void require_isolated(const Potential& p, const Schedule& schedule) { milnor_number(p, schedule); }

}  // namespace dquot
