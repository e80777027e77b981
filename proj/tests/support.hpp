#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's algorithmic code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace relgap::testing {

// Portable uniform draws (std distributions differ between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct EdgeListGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline EdgeListGraph random_graph(Rng& rng, std::size_t n, double p) {
  EdgeListGraph g;
  g.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(p)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

// Node names sort in index order.
inline std::string node_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "http://t/n%03zu", i);
  return buf;
}

inline std::vector<std::vector<bool>> adjacency_matrix(const EdgeListGraph& g) {
  std::vector<std::vector<bool>> m(g.n, std::vector<bool>(g.n, false));
  for (auto [a, b] : g.edges) m[a][b] = m[b][a] = true;
  return m;
}

inline std::size_t oracle_cn(const EdgeListGraph& g, std::size_t x, std::size_t y) {
  auto m = adjacency_matrix(g);
  std::size_t count = 0;
  for (std::size_t z = 0; z < g.n; ++z) {
    if (m[x][z] && m[y][z]) ++count;
  }
  return count;
}

inline double oracle_aa(const EdgeListGraph& g, std::size_t x, std::size_t y) {
  auto m = adjacency_matrix(g);
  double sum = 0.0;
  for (std::size_t z = 0; z < g.n; ++z) {
    if (!(m[x][z] && m[y][z])) continue;
    std::size_t degree = 0;
    for (std::size_t k = 0; k < g.n; ++k) degree += m[z][k] ? 1 : 0;
    sum += 1.0 / std::log(static_cast<double>(degree));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// SVM objective oracle.

struct Point {
  std::array<double, 3> x;
  int y;  // +1 / -1
};

// Fixed 50-point dataset with integer cn, aa tied to cn, and a noisy label.
inline std::vector<Point> svm_oracle_dataset() {
  Rng rng(20201016);
  std::vector<Point> pts;
  for (int i = 0; i < 50; ++i) {
    double cn = static_cast<double>(rng.below(6));
    double aa = cn > 0 ? cn * rng.uniform(0.5, 1.5) : 0.0;
    double glove = rng.uniform(-0.2, 0.9);
    double score = 0.5 * cn + 2.0 * glove + rng.uniform(-1.0, 1.0);
    pts.push_back({{cn, aa, glove}, score > 1.6 ? +1 : -1});
  }
  return pts;
}

// Two-pass mean and population standard deviation; zero std becomes 1.
inline std::pair<std::array<double, 3>, std::array<double, 3>> oracle_moments(
    const std::vector<std::array<double, 3>>& rows) {
  std::array<double, 3> mean{}, sd{};
  for (int d = 0; d < 3; ++d) {
    double s = 0.0;
    for (const auto& r : rows) s += r[d];
    mean[d] = s / static_cast<double>(rows.size());
    double ss = 0.0;
    for (const auto& r : rows) ss += (r[d] - mean[d]) * (r[d] - mean[d]);
    sd[d] = std::sqrt(ss / static_cast<double>(rows.size()));
    if (sd[d] == 0.0) sd[d] = 1.0;
  }
  return {mean, sd};
}

inline std::vector<Point> oracle_standardize(const std::vector<Point>& pts) {
  std::vector<std::array<double, 3>> rows;
  for (const auto& p : pts) rows.push_back(p.x);
  auto [mean, sd] = oracle_moments(rows);
  std::vector<Point> out;
  for (const auto& p : pts) {
    Point q = p;
    for (int d = 0; d < 3; ++d) q.x[d] = (p.x[d] - mean[d]) / sd[d];
    out.push_back(q);
  }
  return out;
}

inline double oracle_objective(const std::vector<Point>& std_pts,
                               const std::array<double, 4>& wb, double C) {
  double reg = 0.5 * (wb[0] * wb[0] + wb[1] * wb[1] + wb[2] * wb[2]);
  double loss = 0.0;
  for (const auto& p : std_pts) {
    double f = wb[0] * p.x[0] + wb[1] * p.x[1] + wb[2] * p.x[2] + wb[3];
    loss += std::max(0.0, 1.0 - p.y * f);
  }
  return reg + C * loss;
}

// Coarse-to-fine grid search over (w, b): a full 9^4 grid around the current
// best point, halving the box each level.
inline double oracle_min_objective(const std::vector<Point>& std_pts, double C) {
  std::array<double, 4> best{0, 0, 0, 0};
  double best_val = oracle_objective(std_pts, best, C);
  double half = 4.0;
  for (int level = 0; level < 40; ++level) {
    const double step = half / 4.0;
    std::array<double, 4> center = best;
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c)
          for (int d = -4; d <= 4; ++d) {
            std::array<double, 4> wb{center[0] + a * step, center[1] + b * step,
                                     center[2] + c * step, center[3] + d * step};
            double v = oracle_objective(std_pts, wb, C);
            if (v < best_val) {
              best_val = v;
              best = wb;
            }
          }
    half *= 0.5;
  }
  return best_val;
}

}  // namespace relgap::testing
