#pragma once

#include <random>
#include <vector>

#include "ultrafract/ball_tree.hpp"
#include "ultrafract/cover.hpp"
#include "ultrafract/metric_space.hpp"

namespace ufract::testing {

// Random ultrametric built from an explicit rooted tree with level-decreasing
// radii: d(x, y) = lambda^(level of the lowest common ancestor).  The tree is
// the independent oracle for ball-hierarchy tests.
struct RandomTree {
  FiniteMetricSpace<Rational> space;
  int max_children = 1;
  int depth = 0;
};

inline RandomTree random_ultrametric(std::mt19937_64& rng, int max_points, int max_children,
                                     const Rational& lambda) {
  struct Leaf {
    std::vector<int> path;  // child indices down the tree
  };
  std::vector<Leaf> leaves{{{}}};
  std::uniform_int_distribution<int> child_count(1, max_children);
  std::uniform_int_distribution<int> coin(0, 1);
  int depth = 0;
  // split leaves level by level until the budget is reached
  while (static_cast<int>(leaves.size()) < max_points && depth < 24) {
    std::vector<Leaf> next;
    bool split_any = false;
    for (const auto& leaf : leaves) {
      int c = child_count(rng);
      if (static_cast<int>(leaves.size()) + static_cast<int>(next.size()) + c - 1 > max_points) c = 1;
      if (c > 1) split_any = true;
      for (int i = 0; i < c; ++i) {
        Leaf l = leaf;
        l.path.push_back(i);
        next.push_back(std::move(l));
      }
    }
    leaves = std::move(next);
    ++depth;
    if (!split_any && coin(rng)) break;
  }
  std::size_t n = leaves.size();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  int maxc = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t lca = 0;
      while (lca < leaves[i].path.size() && lca < leaves[j].path.size() &&
             leaves[i].path[lca] == leaves[j].path[lca])
        ++lca;
      d[i][j] = d[j][i] = rational_pow(lambda, static_cast<long>(lca));
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string lab = "p";
    for (int c : leaves[i].path) lab += std::to_string(c);
    labels.push_back(lab);
  }
  RandomTree out{FiniteMetricSpace<Rational>(std::move(labels), std::move(d)), maxc, depth};
  // observed doubling bound: max child count in the ball hierarchy
  BallTree bt(out.space, lambda);
  out.max_children = bt.max_child_count();
  return out;
}

// Random metric via shortest paths on a random weighted graph; a legitimate
// metric that is often not Hilbert-embeddable.
inline FiniteMetricSpace<double> random_graph_metric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 1e18));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double x = w(rng);
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
      d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = x;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                         d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return FiniteMetricSpace<double>(std::move(labels), std::move(d));
}

inline FiniteMetricSpace<double> random_euclidean_metric(std::mt19937_64& rng, int n, int dim) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd p(dim);
    for (int k = 0; k < dim; ++k) p(k) = coord(rng);
    pts.push_back(p);
  }
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]).norm();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return FiniteMetricSpace<double>(std::move(labels), std::move(d));
}

// Independent minimum-cover oracle: subset DP over bitmasks; cover pieces are
// cliques of the threshold graph.
template <class T>
inline int min_cover_oracle(const FiniteMetricSpace<T>& space, const std::vector<int>& subset,
                            const T& threshold) {
  std::size_t m = subset.size();
  if (m == 0) return 0;
  if (m > 20) throw std::invalid_argument("min_cover_oracle: too large");
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (space.at(static_cast<std::size_t>(subset[a]), static_cast<std::size_t>(subset[b])) <= threshold)
        adj[a] |= (1u << b);
  std::uint32_t full = m == 32 ? 0xffffffffu : ((1u << m) - 1);
  std::vector<char> is_clique(full + 1, 0);
  is_clique[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    std::size_t v = static_cast<std::size_t>(__builtin_ctz(mask));
    std::uint32_t rest = mask ^ low;
    is_clique[mask] = is_clique[rest] && ((adj[v] & rest) == rest);
  }
  std::vector<int> dp(full + 1, 1 << 20);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    // iterate cliques inside mask containing the lowest vertex
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !is_clique[sub]) continue;
      dp[mask] = std::min(dp[mask], 1 + dp[mask ^ sub]);
    }
  }
  return dp[full];
}

}  // namespace ufract::testing
