// Copyright 2026 The gwcoarsen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwc/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gwc/error.hpp"

namespace gwc {

double TransportPlan::marginal_error() const {
  double err = 0.0;
  const Vector rs = T.row_sums();
  const Vector cs = T.col_sums();
  for (std::size_t i = 0; i < rs.size(); ++i) err = std::max(err, std::abs(rs[i] - source_mass[i]));
  for (std::size_t j = 0; j < cs.size(); ++j) err = std::max(err, std::abs(cs[j] - target_mass[j]));
  for (double v : T.flat()) err = std::max(err, -v);
  return err;
}

void check_feasible(const TransportPlan& plan, std::span<const double> m1,
                    std::span<const double> m2, double tol) {
  require(plan.T.rows() == m1.size() && plan.T.cols() == m2.size(), ErrorKind::DimensionMismatch,
          "plan is " + std::to_string(plan.T.rows()) + "x" + std::to_string(plan.T.cols()) +
              ", marginals are " + std::to_string(m1.size()) + " and " +
              std::to_string(m2.size()));
  const Vector rs = plan.T.row_sums();
  const Vector cs = plan.T.col_sums();
  double err = 0.0;
  for (std::size_t i = 0; i < m1.size(); ++i) err = std::max(err, std::abs(rs[i] - m1[i]));
  for (std::size_t j = 0; j < m2.size(); ++j) err = std::max(err, std::abs(cs[j] - m2[j]));
  for (double v : plan.T.flat()) err = std::max(err, -v);
  require(err <= tol, ErrorKind::InfeasiblePlan,
          "marginal mismatch " + std::to_string(err) + " exceeds " + std::to_string(tol));
}

TransportPlan make_plan(Matrix T, std::span<const double> m1, std::span<const double> m2,
                        double tol) {
  TransportPlan p{std::move(T), Vector(m1.begin(), m1.end()), Vector(m2.begin(), m2.end())};
  check_feasible(p, m1, m2, tol);
  return p;
}

TransportPlan product_plan(std::span<const double> m1, std::span<const double> m2) {
  Matrix T(m1.size(), m2.size());
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j) T(i, j) = m1[i] * m2[j];
  return TransportPlan{std::move(T), Vector(m1.begin(), m1.end()), Vector(m2.begin(), m2.end())};
}

TransportPlan diagonal_plan(std::span<const double> m) {
  return TransportPlan{Matrix::diagonal(m), Vector(m.begin(), m.end()), Vector(m.begin(), m.end())};
}

namespace {

// Transportation simplex. Nodes 0..rows-1 are sources, rows..rows+cols-1 are
// sinks; the basis is a spanning tree of rows+cols-1 cells.
class TransportationSimplex {
 public:
  TransportationSimplex(const Matrix& cost, std::span<const double> a, std::span<const double> b)
      : cost_(cost),
        m_(cost.rows()),
        n_(cost.cols()),
        adj_(m_ + n_),
        basic_(m_ * n_, -1),
        pot_(m_ + n_),
        parent_cell_(m_ + n_),
        parent_node_(m_ + n_) {
    initial_basis(a, b);
    double cmax = 0.0;
    for (double c : cost.flat()) cmax = std::max(cmax, std::abs(c));
    eps_ = 1e-12 * cmax;
  }

  std::size_t solve() {
    const std::size_t max_pivots = 50 * (m_ + n_) * std::max(m_, n_) + 1000;
    std::size_t pivots = 0;
    std::size_t degenerate_run = 0;
    for (;;) {
      compute_potentials();
      const bool bland = degenerate_run > m_ + n_;
      const long entering = price(bland);
      if (entering < 0) return pivots;
      require(++pivots <= max_pivots, ErrorKind::Internal, "transportation simplex did not terminate");
      const bool degenerate = pivot(static_cast<std::size_t>(entering), bland);
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
    }
  }

  Matrix plan() const {
    Matrix T(m_, n_);
    for (const Cell& c : cells_) T(c.i, c.j) = std::max(0.0, c.x);
    return T;
  }

 private:
  struct Cell {
    std::size_t i;
    std::size_t j;
    double x;
  };

  // Least-cost rule; crossing out exactly one line per allocation yields a
  // spanning tree with rows+cols-1 cells.
  void initial_basis(std::span<const double> a, std::span<const double> b) {
    Vector supply(a.begin(), a.end());
    Vector demand(b.begin(), b.end());
    std::vector<std::size_t> order(m_ * n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return cost_.flat()[x] < cost_.flat()[y];
    });
    std::vector<char> row_done(m_, 0), col_done(n_, 0);
    std::size_t rows_left = m_, cols_left = n_;
    for (std::size_t idx : order) {
      if (rows_left == 0 || cols_left == 0) break;
      const std::size_t i = idx / n_, j = idx % n_;
      if (row_done[i] || col_done[j]) continue;
      const double x = std::min(supply[i], demand[j]);
      supply[i] -= x;
      demand[j] -= x;
      add_cell(i, j, x);
      bool cross_row;
      if (rows_left == 1 && cols_left == 1) {
        rows_left = cols_left = 0;
        break;
      } else if (rows_left == 1) {
        cross_row = false;
      } else if (cols_left == 1) {
        cross_row = true;
      } else {
        cross_row = supply[i] <= demand[j];
      }
      if (cross_row) {
        row_done[i] = 1;
        --rows_left;
      } else {
        col_done[j] = 1;
        --cols_left;
      }
    }
  }

  void add_cell(std::size_t i, std::size_t j, double x) {
    const std::size_t id = cells_.size();
    cells_.push_back({i, j, x});
    basic_[i * n_ + j] = static_cast<long>(id);
    adj_[i].push_back(id);
    adj_[m_ + j].push_back(id);
  }

  // Re-roots the tree at source node `root`, filling parents and potentials
  // (u_root = 0, u_i + v_j = c_ij on every basic cell).
  void traverse(std::size_t root) {
    std::fill(parent_node_.begin(), parent_node_.end(), kNone);
    stack_.clear();
    stack_.push_back(root);
    parent_node_[root] = root;
    pot_[root] = 0.0;
    while (!stack_.empty()) {
      const std::size_t u = stack_.back();
      stack_.pop_back();
      for (std::size_t cid : adj_[u]) {
        const Cell& c = cells_[cid];
        const std::size_t v = (u < m_) ? m_ + c.j : c.i;
        if (parent_node_[v] != kNone) continue;
        parent_node_[v] = u;
        parent_cell_[v] = cid;
        pot_[v] = cost_(c.i, c.j) - pot_[u];
        stack_.push_back(v);
      }
    }
  }

  void compute_potentials() { traverse(0); }

  long price(bool bland) const {
    long best = -1;
    double best_r = -eps_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double ui = pot_[i];
      const auto crow = cost_.row(i);
      for (std::size_t j = 0; j < n_; ++j) {
        if (basic_[i * n_ + j] >= 0) continue;
        const double r = crow[j] - ui - pot_[m_ + j];
        if (r < best_r) {
          best_r = r;
          best = static_cast<long>(i * n_ + j);
          if (bland) return best;
        }
      }
    }
    return best;
  }

  // Returns true when the pivot moved zero mass.
  bool pivot(std::size_t entering, bool bland) {
    const std::size_t ei = entering / n_, ej = entering % n_;
    traverse(ei);
    // Walk from the sink of the entering cell back to its source; cells on
    // this path alternate -, +, -, ... around the cycle.
    path_.clear();
    for (std::size_t v = m_ + ej; v != ei; v = parent_node_[v]) path_.push_back(parent_cell_[v]);

    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave_pos = 0;
    for (std::size_t k = 0; k < path_.size(); k += 2) {
      const Cell& c = cells_[path_[k]];
      const bool better =
          c.x < theta ||
          (bland && c.x == theta &&
           c.i * n_ + c.j < cells_[path_[leave_pos]].i * n_ + cells_[path_[leave_pos]].j);
      if (better) {
        theta = c.x;
        leave_pos = k;
      }
    }
    theta = std::max(theta, 0.0);
    for (std::size_t k = 0; k < path_.size(); ++k) cells_[path_[k]].x += (k % 2 == 0) ? -theta : theta;

    // Replace the leaving cell by the entering one in place.
    const std::size_t lid = path_[leave_pos];
    Cell& lc = cells_[lid];
    detach(lc.i, lid);
    detach(m_ + lc.j, lid);
    basic_[lc.i * n_ + lc.j] = -1;
    lc = Cell{ei, ej, theta};
    basic_[entering] = static_cast<long>(lid);
    adj_[ei].push_back(lid);
    adj_[m_ + ej].push_back(lid);
    return theta == 0.0;
  }

  void detach(std::size_t node, std::size_t cid) {
    auto& v = adj_[node];
    v.erase(std::find(v.begin(), v.end(), cid));
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const Matrix& cost_;
  std::size_t m_, n_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<long> basic_;
  Vector pot_;
  std::vector<std::size_t> parent_cell_;
  std::vector<std::size_t> parent_node_;
  std::vector<std::size_t> stack_;
  std::vector<std::size_t> path_;
  double eps_ = 0.0;
};

}  // namespace

OtSolution solve_inner_ot(const Matrix& cost, std::span<const double> m1,
                          std::span<const double> m2) {
  require(cost.rows() == m1.size() && cost.cols() == m2.size(), ErrorKind::DimensionMismatch,
          "cost matrix does not match marginals");
  require(!m1.empty() && !m2.empty(), ErrorKind::DimensionMismatch, "empty marginals");
  require(m1.size() <= kMaxExactOtSize && m2.size() <= kMaxExactOtSize, ErrorKind::SizeLimit,
          "exact OT limited to " + std::to_string(kMaxExactOtSize) + " points per side");
  for (double c : cost.flat())
    require(std::isfinite(c), ErrorKind::InvalidArgument, "non-finite transport cost");
  for (std::size_t i = 0; i < m1.size(); ++i)
    require(m1[i] > 0.0, ErrorKind::DegenerateMarginal, "source mass " + std::to_string(i) + " is not positive");
  for (std::size_t j = 0; j < m2.size(); ++j)
    require(m2[j] > 0.0, ErrorKind::DegenerateMarginal, "target mass " + std::to_string(j) + " is not positive");

  TransportationSimplex simplex(cost, m1, m2);
  OtSolution out;
  out.pivots = simplex.solve();
  out.plan = TransportPlan{simplex.plan(), Vector(m1.begin(), m1.end()), Vector(m2.begin(), m2.end())};
  out.objective = frobenius_dot(cost, out.plan.T);
  return out;
}

}  // namespace gwc
