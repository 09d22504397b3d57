#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace olp {

using Vec = std::vector<double>;

/// Dense row-major matrix. Sizes here are tiny (m <= ~10 resources,
/// n <= ~50 customer types), so no sparsity and no fancy storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Build from nested initializer-style rows; throws on ragged input.
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy of column j.
  Vec col(std::size_t j) const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Problem data for one online allocation instance: rewards r, consumption
/// matrix A (column j = resource use of a type-j request), per-period budget
/// rho, horizon T and arrival probabilities p.
struct Instance {
  Vec rewards;         // length n
  Matrix consumption;  // m x n
  Vec budget_rate;     // length m
  long long horizon = 0;
  Vec probabilities;  // length n, sums to 1

  std::size_t num_resources() const { return budget_rate.size(); }
  std::size_t num_types() const { return rewards.size(); }

  /// Initial inventory T * rho.
  Vec initial_inventory() const;

  /// Throws std::invalid_argument when dimensions disagree, any entry is
  /// negative or non-finite, or probabilities do not sum to 1 within 1e-12.
  void validate() const;

  Instance with_horizon(long long T) const;
  Instance with_budget_rate(Vec rho) const;
};

/// Error type for malformed user input (dimension mismatches, bad
/// parameters, invalid configuration values).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace olp
