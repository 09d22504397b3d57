#include "olp/simplex.hpp"

#include <cmath>
#include <limits>

namespace olp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BoundedSimplex::BoundedSimplex(const Matrix& G, Vec h, Vec c, Vec upper)
    : m_(G.rows()), n_(G.cols()), nv_(G.rows() + G.cols()), G_(G), h_(std::move(h)),
      c_(std::move(c)), upper_(std::move(upper)) {
  if (h_.size() != m_ || c_.size() != n_ || upper_.size() != n_)
    throw InputError("BoundedSimplex: dimension mismatch");
  c_.resize(nv_, 0.0);
  upper_.resize(nv_, kInf);
  for (std::size_t j = 0; j < n_; ++j)
    if (upper_[j] < 0.0) upper_[j] = 0.0;
}

SimplexSolution BoundedSimplex::solve() {
  for (double hi : h_)
    if (hi < -kTol) throw InputError("BoundedSimplex::solve: needs h >= 0 for the cold start");
  basis_.resize(m_);
  status_.assign(nv_, VarStatus::AtLower);
  for (std::size_t i = 0; i < m_; ++i) {
    basis_[i] = static_cast<int>(n_ + i);
    status_[n_ + i] = VarStatus::Basic;
  }
  return run();
}

SimplexSolution BoundedSimplex::solve_from(const std::vector<int>& basis,
                                           const std::vector<VarStatus>& status) {
  if (basis.size() != m_ || status.size() != nv_)
    throw InputError("BoundedSimplex::solve_from: bad warm start shape");
  basis_ = basis;
  status_ = status;
  return run();
}

void BoundedSimplex::rebuild_tableau() {
  // Gauss-Jordan on [B | G I] so tab_ ends up as B^{-1}[G I].
  std::vector<double> B(m_ * m_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t k = 0; k < m_; ++k) {
      const int v = basis_[k];
      B[i * m_ + k] = v < static_cast<int>(n_) ? G_(i, v) : (v == static_cast<int>(n_ + i) ? 1.0 : 0.0);
    }
  }
  tab_.assign(m_ * nv_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) tab_[i * nv_ + j] = G_(i, j);
    tab_[i * nv_ + n_ + i] = 1.0;
  }
  for (std::size_t col = 0; col < m_; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m_; ++r)
      if (std::abs(B[r * m_ + col]) > std::abs(B[piv * m_ + col])) piv = r;
    if (std::abs(B[piv * m_ + col]) < 1e-12)
      throw std::runtime_error("BoundedSimplex: singular warm-start basis");
    if (piv != col) {
      // Row swaps are plain row operations; the column k <-> basis_[k]
      // association is untouched, and B == I at the end re-aligns rows.
      for (std::size_t k = 0; k < m_; ++k) std::swap(B[piv * m_ + k], B[col * m_ + k]);
      for (std::size_t k = 0; k < nv_; ++k) std::swap(tab_[piv * nv_ + k], tab_[col * nv_ + k]);
    }
    const double inv = 1.0 / B[col * m_ + col];
    for (std::size_t k = 0; k < m_; ++k) B[col * m_ + k] *= inv;
    for (std::size_t k = 0; k < nv_; ++k) tab_[col * nv_ + k] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == col) continue;
      const double f = B[r * m_ + col];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < m_; ++k) B[r * m_ + k] -= f * B[col * m_ + k];
      for (std::size_t k = 0; k < nv_; ++k) tab_[r * nv_ + k] -= f * tab_[col * nv_ + k];
    }
  }
  compute_basic_values();
}

void BoundedSimplex::compute_basic_values() {
  // x_B = B^{-1} h - sum_{j nonbasic at upper} B^{-1}a_j * u_j
  xb_.assign(m_, 0.0);
  Vec rhs = h_;
  for (std::size_t i = 0; i < m_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j)
      if (status_[j] == VarStatus::AtUpper) acc += G_(i, j) * upper_[j];
    rhs[i] -= acc;  // slacks never sit at an upper bound
  }
  // The slack block of tab_ holds B^{-1} itself, so xb = tab_slack * rhs.
  for (std::size_t i = 0; i < m_; ++i) {
    double v = 0.0;
    for (std::size_t k = 0; k < m_; ++k) v += tab_[i * nv_ + n_ + k] * rhs[k];
    xb_[i] = v;
  }
}

SimplexSolution BoundedSimplex::run() {
  rebuild_tableau();

  const long long max_iter = 2000LL * static_cast<long long>(nv_ + m_) + 10000;
  int iterations = 0;
  Vec red(nv_);

  for (long long iter = 0;; ++iter) {
    if (iter > max_iter) throw std::runtime_error("BoundedSimplex: iteration limit exceeded");

    // Reduced costs r_j = c_j - c_B' B^{-1} a_j, recomputed from scratch each
    // round; columns are few enough that drift control beats incremental cost.
    for (std::size_t j = 0; j < nv_; ++j) {
      double v = c_[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const double cb = c_[basis_[i]];
        if (cb != 0.0) v -= cb * tab_[i * nv_ + j];
      }
      red[j] = v;
    }

    // Bland: smallest-index eligible entering variable.
    int enter = -1;
    int dir = 0;  // +1 entering rises from lower, -1 falls from upper
    for (std::size_t j = 0; j < nv_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      if (upper_[j] <= kTol && j < n_) continue;  // fixed at zero
      if (status_[j] == VarStatus::AtLower && red[j] > kTol) {
        enter = static_cast<int>(j);
        dir = +1;
        break;
      }
      if (status_[j] == VarStatus::AtUpper && red[j] < -kTol) {
        enter = static_cast<int>(j);
        dir = -1;
        break;
      }
    }
    if (enter < 0) break;  // optimal

    // Ratio test: entering moves by delta >= 0 in direction dir; basic
    // variable i changes by -dir * tab[i][enter] * delta.
    double best = upper_[enter];  // own-bound flip distance (may be inf)
    int leave_row = -1;           // -1 means bound flip
    int leave_var = enter;
    int leave_to_upper = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = dir * tab_[i * nv_ + enter];
      const int bv = basis_[i];
      double cand = kInf;
      int to_upper = 0;
      if (a > kTol) {
        cand = xb_[i] / a;  // basic drops to lower bound 0
      } else if (a < -kTol && upper_[bv] < kInf) {
        cand = (upper_[bv] - xb_[i]) / (-a);  // basic climbs to its upper bound
        to_upper = 1;
      } else {
        continue;
      }
      if (cand < 0.0) cand = 0.0;
      if (cand < best - kTol || (cand < best + kTol && bv < leave_var)) {
        best = cand;
        leave_row = static_cast<int>(i);
        leave_var = bv;
        leave_to_upper = to_upper;
      }
    }
    if (best == kInf) throw std::runtime_error("BoundedSimplex: unbounded");

    ++iterations;
    if (leave_row < 0) {
      // Entering variable travels the full span between its own bounds.
      for (std::size_t i = 0; i < m_; ++i) xb_[i] -= dir * tab_[i * nv_ + enter] * best;
      status_[enter] = dir > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
      continue;
    }

    const double enter_val = dir > 0 ? best : upper_[enter] - best;
    for (std::size_t i = 0; i < m_; ++i) {
      if (static_cast<int>(i) == leave_row) continue;
      xb_[i] -= dir * tab_[i * nv_ + enter] * best;
    }
    status_[leave_var] = leave_to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
    status_[enter] = VarStatus::Basic;
    basis_[leave_row] = enter;
    xb_[leave_row] = enter_val;

    // Pivot tab_ on (leave_row, enter).
    double* prow = &tab_[static_cast<std::size_t>(leave_row) * nv_];
    const double pinv = 1.0 / prow[enter];
    for (std::size_t k = 0; k < nv_; ++k) prow[k] *= pinv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (static_cast<int>(i) == leave_row) continue;
      double* row = &tab_[i * nv_];
      const double f = row[enter];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < nv_; ++k) row[k] -= f * prow[k];
    }
  }

  SimplexSolution out;
  out.iterations = iterations;
  out.basis = basis_;
  out.status = status_;
  out.x.assign(n_, 0.0);
  for (std::size_t j = 0; j < n_; ++j)
    if (status_[j] == VarStatus::AtUpper) out.x[j] = upper_[j];
  for (std::size_t i = 0; i < m_; ++i) {
    const int bv = basis_[i];
    if (bv < static_cast<int>(n_)) out.x[bv] = std::max(0.0, xb_[i]);
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n_; ++j) obj += c_[j] * out.x[j];
  out.objective = obj;

  // Row dual  pi_i = -reduced_cost(slack_i); upper-bound dual of structural j
  // is its reduced cost when parked at the upper bound, else zero.
  out.row_duals.assign(m_, 0.0);
  out.bound_duals.assign(n_, 0.0);
  for (std::size_t j = 0; j < nv_; ++j) {
    double v = c_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = c_[basis_[i]];
      if (cb != 0.0) v -= cb * tab_[i * nv_ + j];
    }
    if (j >= n_) {
      out.row_duals[j - n_] = std::max(0.0, -v);
    } else if (status_[j] == VarStatus::AtUpper || upper_[j] <= kTol) {
      // Variables pinned by d_j = 0 sit on a degenerate upper bound; the
      // bound multiplier absorbs any positive reduced cost.
      out.bound_duals[j] = std::max(0.0, v);
    }
  }
  return out;
}

}  // namespace olp
