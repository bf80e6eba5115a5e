#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ultrafract/metric_ops.hpp"

namespace ufract {

// The closed-ball hierarchy of an ultrametric space: level n partitions the
// points into balls of radius lambda^n; distinct level-n balls are at mutual
// distance > lambda^n and each ball has a unique parent one level up.
class BallTree {
 public:
  struct Node {
    int level = 0;
    std::vector<int> members;  // point indices, ascending
    int parent = -1;
    std::vector<int> children;
    int representative = 0;  // smallest-label member
  };

  BallTree(const FiniteMetricSpace<Rational>& space, const Rational& lambda, int max_levels = 64)
      : space_(&space), lambda_(lambda) {
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("BallTree: lambda must be in (0,1)");
    std::optional<TripleWitness<Rational>> witness;
    if (!is_ultrametric(space, Rational(0), &witness))
      throw std::invalid_argument("BallTree: space is not ultrametric (triple " +
                                  std::to_string(witness->i) + "," + std::to_string(witness->j) + "," +
                                  std::to_string(witness->k) + ")");
    if (space.diameter() > 1) throw std::invalid_argument("BallTree: normalize diameter to <= 1");
    build(max_levels);
  }

  const FiniteMetricSpace<Rational>& space() const { return *space_; }
  const Rational& lambda() const { return lambda_; }
  int levels() const { return levels_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int root() const { return 0; }

  // ball of point p at a given level
  int ball_of(int point, int level) const { return ball_at_[static_cast<std::size_t>(level)][static_cast<std::size_t>(point)]; }

  int max_child_count() const {
    int d = 1;
    for (const auto& n : nodes_) d = std::max(d, static_cast<int>(n.children.size()));
    return d;
  }

  // representative with the lexicographically smallest label, for ordering
  int rep_by_label(const Node& n) const {
    int best = n.members[0];
    for (int m : n.members)
      if (space_->label(static_cast<std::size_t>(m)) < space_->label(static_cast<std::size_t>(best))) best = m;
    return best;
  }

 private:
  void build(int max_levels) {
    std::size_t n = space_->size();
    Rational radius(1);
    std::vector<int> prev_ball(n, -1);
    for (int level = 0; level <= max_levels; ++level) {
      // partition: same ball iff distance <= lambda^level (an equivalence by
      // the strong triangle inequality)
      std::vector<int> ball(n, -1);
      std::vector<int> created;
      for (std::size_t i = 0; i < n; ++i) {
        if (ball[i] >= 0) continue;
        Node node;
        node.level = level;
        int id = static_cast<int>(nodes_.size());
        for (std::size_t j = i; j < n; ++j)
          if (ball[j] < 0 && space_->at(i, j) <= radius) {
            ball[j] = id;
            node.members.push_back(static_cast<int>(j));
          }
        node.representative = node.members[0];
        if (level > 0) {
          node.parent = prev_ball[i];
          nodes_[static_cast<std::size_t>(node.parent)].children.push_back(id);
        }
        nodes_.push_back(std::move(node));
        created.push_back(id);
      }
      ball_at_.push_back(ball);
      levels_ = level;
      bool all_single = true;
      for (int id : created)
        if (nodes_[static_cast<std::size_t>(id)].members.size() > 1) all_single = false;
      prev_ball = std::move(ball);
      if (all_single) break;
      radius *= lambda_;
    }
  }

  const FiniteMetricSpace<Rational>* space_;
  Rational lambda_;
  int levels_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> ball_at_;  // level -> point -> node id
};

}  // namespace ufract
