#include "olp/lp.hpp"

#include <cmath>

namespace olp {

namespace {

void check_inputs(const Instance& instance, const Vec& b, const Vec& d) {
  const std::size_t m = instance.num_resources();
  const std::size_t n = instance.num_types();
  if (b.size() != m) throw InputError("solve_fluid: b must have length m");
  if (d.size() != n) throw InputError("solve_fluid: d must have length n");
  for (double x : b) {
    if (!std::isfinite(x)) throw InputError("solve_fluid: non-finite b");
    if (x < 0.0) throw InputError("solve_fluid: b must be nonnegative");
  }
  for (double x : d)
    if (!std::isfinite(x)) throw InputError("solve_fluid: non-finite d");
}

Vec clamp_nonneg(const Vec& d) {
  Vec out = d;
  for (double& x : out)
    if (x < 0.0) x = 0.0;
  return out;
}

}  // namespace

LpSolution solve_fluid(const Instance& instance, const Vec& b, const Vec& d) {
  check_inputs(instance, b, d);
  const Vec dc = clamp_nonneg(d);
  BoundedSimplex simplex(instance.consumption, b, instance.rewards, dc);
  SimplexSolution s = simplex.solve();

  LpSolution out;
  out.primal = std::move(s.x);
  out.objective = s.objective;
  out.duals = std::move(s.row_duals);
  out.duals.insert(out.duals.end(), s.bound_duals.begin(), s.bound_duals.end());
  out.status = LpStatus::Optimal;
  return out;
}

MaxCoordResult max_coord_point(const Instance& instance, const Vec& b, const Vec& d, std::size_t j) {
  check_inputs(instance, b, d);
  const std::size_t m = instance.num_resources();
  const std::size_t n = instance.num_types();
  if (j >= n) throw InputError("max_coord_over_optima: type index out of range");
  const Vec dc = clamp_nonneg(d);

  BoundedSimplex phi_solver(instance.consumption, b, instance.rewards, dc);
  SimplexSolution phi_sol = phi_solver.solve();
  const double phi = phi_sol.objective;

  // Pin the optimal face with one extra row  -r'y <= -(phi - eps)  and push
  // y_j as far as it goes. The phi basis plus the new row's slack is primal
  // feasible for the extended problem, so no phase-1 is needed.
  const double floor = phi - 1e-9 * (1.0 + std::abs(phi));
  Matrix G(m + 1, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) G(i, k) = instance.consumption(i, k);
  for (std::size_t k = 0; k < n; ++k) G(m, k) = -instance.rewards[k];
  Vec h = b;
  h.push_back(-floor);
  Vec c(n, 0.0);
  c[j] = 1.0;

  // Variable layout (structurals 0..n-1, then slacks in row order) is shared
  // by both problems, so the old basis carries over index-for-index.
  std::vector<int> basis = phi_sol.basis;
  basis.push_back(static_cast<int>(n + m));  // new row's slack joins the basis
  std::vector<VarStatus> status = phi_sol.status;
  status.push_back(VarStatus::Basic);

  BoundedSimplex probe(G, std::move(h), std::move(c), dc);
  SimplexSolution s = probe.solve_from(basis, status);

  MaxCoordResult out;
  out.value = s.x[j];
  out.attaining = std::move(s.x);
  return out;
}

double max_coord_over_optima(const Instance& instance, const Vec& b, const Vec& d, std::size_t j) {
  return max_coord_point(instance, b, d, j).value;
}

bool satisfies_optimality_certificate(const Instance& instance, const Vec& b, const Vec& d,
                                      const LpSolution& sol, double tol) {
  const std::size_t m = instance.num_resources();
  const std::size_t n = instance.num_types();
  if (sol.primal.size() != n || sol.duals.size() != m + n) return false;
  const Vec dc = [&] {
    Vec v = d;
    for (double& x : v)
      if (x < 0.0) x = 0.0;
    return v;
  }();
  const double scale = 1.0 + std::abs(sol.objective);

  // Primal feasibility.
  Vec row_use(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) row_use[i] += instance.consumption(i, k) * sol.primal[k];
  for (std::size_t i = 0; i < m; ++i)
    if (row_use[i] > b[i] + tol * (1.0 + std::abs(b[i]))) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (sol.primal[k] < -tol) return false;
    if (sol.primal[k] > dc[k] + tol * (1.0 + dc[k])) return false;
  }

  // Objective consistency.
  double obj = 0.0;
  for (std::size_t k = 0; k < n; ++k) obj += instance.rewards[k] * sol.primal[k];
  if (std::abs(obj - sol.objective) > 1e-9 * scale) return false;

  // Dual feasibility: pi, lambda >= 0 and r_j - pi'A_j - lambda_j <= 0.
  Vec reduced(n);
  for (std::size_t k = 0; k < n; ++k) {
    double v = instance.rewards[k];
    for (std::size_t i = 0; i < m; ++i) v -= sol.duals[i] * instance.consumption(i, k);
    v -= sol.duals[m + k];
    reduced[k] = v;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (sol.duals[i] < -tol) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (sol.duals[m + k] < -tol) return false;
    if (reduced[k] > tol * scale) return false;
  }

  // Complementary slackness.
  for (std::size_t i = 0; i < m; ++i)
    if (sol.duals[i] * (b[i] - row_use[i]) > tol * scale * (1.0 + std::abs(b[i]))) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (sol.duals[m + k] * (dc[k] - sol.primal[k]) > tol * scale * (1.0 + dc[k])) return false;
    if (sol.primal[k] * std::abs(reduced[k]) > tol * scale * (1.0 + dc[k])) return false;
  }

  // Strong duality.
  double dual_obj = 0.0;
  for (std::size_t i = 0; i < m; ++i) dual_obj += sol.duals[i] * b[i];
  for (std::size_t k = 0; k < n; ++k) dual_obj += sol.duals[m + k] * dc[k];
  return std::abs(dual_obj - sol.objective) <= tol * scale * 10.0;
}

}  // namespace olp
