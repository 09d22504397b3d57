#include "olp/types.hpp"

#include <cmath>

namespace olp {

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InputError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vec Instance::initial_inventory() const {
  Vec b(budget_rate.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<double>(horizon) * budget_rate[i];
  return b;
}

namespace {

void require_nonneg_finite(const Vec& v, const char* name) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InputError(std::string(name) + ": non-finite entry");
    if (x < 0.0) throw InputError(std::string(name) + ": negative entry");
  }
}

}  // namespace

void Instance::validate() const {
  const std::size_t m = num_resources();
  const std::size_t n = num_types();
  if (m == 0 || n == 0) throw InputError("Instance: m and n must be positive");
  if (horizon <= 0) throw InputError("Instance: horizon must be positive");
  if (consumption.rows() != m || consumption.cols() != n)
    throw InputError("Instance: consumption must be m x n");
  if (probabilities.size() != n) throw InputError("Instance: probabilities must have length n");
  require_nonneg_finite(rewards, "rewards");
  require_nonneg_finite(budget_rate, "budget_rate");
  require_nonneg_finite(probabilities, "probabilities");
  for (double a : consumption.data()) {
    if (!std::isfinite(a)) throw InputError("consumption: non-finite entry");
    if (a < 0.0) throw InputError("consumption: negative entry");
  }
  double sum = 0.0;
  for (double p : probabilities) sum += p;
  if (std::abs(sum - 1.0) > 1e-12) throw InputError("probabilities must sum to 1 within 1e-12");
}

Instance Instance::with_horizon(long long T) const {
  Instance out = *this;
  out.horizon = T;
  return out;
}

Instance Instance::with_budget_rate(Vec rho) const {
  Instance out = *this;
  out.budget_rate = std::move(rho);
  return out;
}

}  // namespace olp
