#pragma once

#include <map>
#include <string>

#include "ultrafract/ball_tree.hpp"

namespace ufract {

struct AlphaChoice {
  bool feasible = false;
  int k = 0;  // alpha = 1/2^k
  std::string message;
};

// Largest alpha of the form 1/2^k, k >= 0, with lambda^alpha < eps/((1+eps)D).
// Since lambda^alpha grows toward 1 as alpha shrinks, only alpha = 1 can
// succeed: when lambda >= eps/((1+eps)D) every smaller alpha is worse and the
// combination is reported infeasible (raise eps or improve D).
inline AlphaChoice choose_alpha(const Rational& lambda, const Rational& epsilon, int doubling) {
  if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("choose_alpha: lambda must be in (0,1)");
  if (!(epsilon > 0) || doubling < 1) throw std::invalid_argument("choose_alpha: need epsilon > 0, D >= 1");
  Rational bound = epsilon / ((1 + epsilon) * doubling);
  AlphaChoice out;
  for (int k = 0; k <= 8; ++k) {
    // lambda^(1/2^k) < bound  <=>  lambda < bound^(2^k)  (both sides positive)
    if (lambda < rational_pow(bound, 1L << k)) {
      out.feasible = true;
      out.k = k;
      return out;
    }
    if (k == 0) break;  // smaller alpha only increases lambda^alpha
  }
  out.message = "infeasible: lambda >= eps/((1+eps)D) already at alpha = 1; raise eps or lower D";
  return out;
}

// Nested interval family: diam(I_W) = lambda^(n alpha) with children laid
// left-to-right in representative-label order, separated by equal gaps
// (parent width - sum child widths)/(child count + 1).  Exact rationals;
// alpha = 1 is the only exactly-representable choice and the only one
// choose_alpha ever returns.
class IntervalAssignment {
 public:
  struct Interval {
    Rational lo, hi;
  };

  IntervalAssignment(const BallTree& tree, const AlphaChoice& alpha, const Rational& epsilon)
      : tree_(&tree), epsilon_(epsilon) {
    if (!alpha.feasible) throw std::invalid_argument("IntervalAssignment: infeasible alpha");
    if (alpha.k != 0)
      throw std::invalid_argument("IntervalAssignment: only alpha = 1 is exactly representable");
    build();
    verify();
  }

  const Interval& interval(int node) const { return iv_.at(node); }
  const Rational& epsilon() const { return epsilon_; }

  // the embedding: common point of the nested intervals along the lineage;
  // at finite depth, the left endpoint of the deepest interval
  Rational phi(int point) const {
    int deepest = tree_->ball_of(point, tree_->levels());
    return iv_.at(deepest).lo;
  }

 private:
  void build() {
    const Rational& lambda = tree_->lambda();
    iv_[tree_->root()] = {Rational(0), Rational(1)};
    // children in order of the lexicographically smallest member label
    for (std::size_t id = 0; id < tree_->nodes().size(); ++id) {
      const auto& node = tree_->node(static_cast<int>(id));
      if (node.children.empty()) continue;
      std::vector<int> kids = node.children;
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return tree_->space().label(static_cast<std::size_t>(tree_->rep_by_label(tree_->node(a)))) <
               tree_->space().label(static_cast<std::size_t>(tree_->rep_by_label(tree_->node(b))));
      });
      Interval parent = iv_.at(static_cast<int>(id));
      Rational w = rational_pow(lambda, node.level + 1);
      Rational total = parent.hi - parent.lo;
      Rational gap = (total - w * static_cast<int>(kids.size())) / (static_cast<int>(kids.size()) + 1);
      if (gap <= 0) throw std::logic_error("IntervalAssignment: children do not fit");
      Rational cursor = parent.lo;
      for (int kid : kids) {
        cursor += gap;
        iv_[kid] = {cursor, cursor + w};
        cursor += w;
      }
    }
  }

  void verify() const {
    const Rational& lambda = tree_->lambda();
    for (std::size_t id = 0; id < tree_->nodes().size(); ++id) {
      const auto& node = tree_->node(static_cast<int>(id));
      const Interval& iv = iv_.at(static_cast<int>(id));
      if (iv.hi - iv.lo != rational_pow(lambda, node.level))
        throw std::logic_error("IntervalAssignment: condition (a) violated");
      const Interval* parent = node.parent >= 0 ? &iv_.at(node.parent) : nullptr;
      if (parent && !(parent->lo <= iv.lo && iv.hi <= parent->hi))
        throw std::logic_error("IntervalAssignment: condition (b) violated");
      // sibling gaps > (lambda^alpha/eps) lambda^(n alpha), n = parent level
      Rational need = rational_pow(lambda, node.level + 1) / epsilon_;
      for (int sib : node.children) {
        for (int sib2 : node.children) {
          if (sib >= sib2) continue;
          const Interval& a = iv_.at(sib);
          const Interval& b = iv_.at(sib2);
          Rational dist = a.lo > b.hi ? a.lo - b.hi : (b.lo > a.hi ? b.lo - a.hi : Rational(0));
          if (!(dist > need)) throw std::logic_error("IntervalAssignment: condition (c) violated");
        }
      }
    }
  }

  const BallTree* tree_;
  Rational epsilon_;
  std::map<int, Interval> iv_;
};

struct PairBoundsCheck {
  bool all_hold = true;
  std::size_t pairs = 0;
  std::size_t failures = 0;
};

// Both displayed bounds: (lambda^a/eps) d^a <= |phi(x)-phi(y)| <= lambda^(-a) d^a.
inline PairBoundsCheck verify_embedding_bounds(const IntervalAssignment& asg, const BallTree& tree) {
  PairBoundsCheck out;
  const Rational& lambda = tree.lambda();
  const Rational& eps = asg.epsilon();
  std::size_t n = tree.space().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational d = tree.space().at(i, j);
      if (d == 0) continue;
      Rational gap = asg.phi(static_cast<int>(i)) - asg.phi(static_cast<int>(j));
      if (gap < 0) gap = -gap;
      ++out.pairs;
      bool lower = gap >= lambda * d / eps;
      bool upper = gap <= d / lambda;
      if (!lower || !upper) {
        out.all_hold = false;
        ++out.failures;
      }
    }
  return out;
}

// eps-Lipschitz extension of the conjugated map to the line: the lower
// envelope min_s [g(s) + eps |t - s|], clamped to the hull of the values.
class PiecewiseLinearMap {
 public:
  PiecewiseLinearMap(std::vector<std::pair<Rational, Rational>> graph, Rational eps)
      : graph_(std::move(graph)), eps_(std::move(eps)) {
    if (graph_.empty()) throw std::invalid_argument("PiecewiseLinearMap: empty graph");
    std::sort(graph_.begin(), graph_.end());
    lo_ = hi_ = graph_[0].second;
    for (const auto& [s, v] : graph_) {
      lo_ = std::min(lo_, v);
      hi_ = std::max(hi_, v);
    }
  }

  Rational eval(const Rational& t) const {
    bool first = true;
    Rational best(0);
    for (const auto& [s, v] : graph_) {
      Rational d = t > s ? t - s : s - t;
      Rational cand = v + eps_ * d;
      if (first || cand < best) { best = cand; first = false; }
    }
    return std::clamp(best, lo_, hi_);
  }

  // breakpoints for export: sample points plus cone crossings
  std::vector<std::pair<Rational, Rational>> breakpoints() const {
    std::vector<Rational> ts;
    for (const auto& [s, v] : graph_) ts.push_back(s);
    for (std::size_t i = 0; i + 1 < graph_.size(); ++i) {
      const auto& [si, vi] = graph_[i];
      const auto& [sj, vj] = graph_[i + 1];
      // crossing of v_i + eps(t - s_i) and v_j + eps(s_j - t)
      Rational t = (vj - vi + eps_ * (si + sj)) / (2 * eps_);
      if (t > si && t < sj) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& t : ts) out.emplace_back(t, eval(t));
    return out;
  }

 private:
  std::vector<std::pair<Rational, Rational>> graph_;
  Rational eps_;
  Rational lo_, hi_;
};

struct ConjugateResult {
  bool ok = false;
  std::size_t witness_i = 0, witness_j = 0;  // Lipschitz violation pair when !ok
  std::optional<PiecewiseLinearMap> map;
};

// phi o f o phi^{-1} for a self-map f (point index -> point index) with
// Lip(f) <= lambda under the ultrametric; verified eps-Lipschitz pairwise,
// then extended to the line.
inline ConjugateResult conjugate_contraction(const IntervalAssignment& asg, const BallTree& tree,
                                             const std::vector<int>& f) {
  ConjugateResult out;
  std::size_t n = tree.space().size();
  if (f.size() != n) throw std::invalid_argument("conjugate_contraction: map size mismatch");
  const Rational& lambda = tree.lambda();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational dxy = tree.space().at(i, j);
      Rational dfxy = tree.space().at(static_cast<std::size_t>(f[i]), static_cast<std::size_t>(f[j]));
      if (dfxy > lambda * dxy) {
        out.witness_i = i;
        out.witness_j = j;
        return out;
      }
    }
  const Rational& eps = asg.epsilon();
  std::vector<std::pair<Rational, Rational>> graph;
  for (std::size_t i = 0; i < n; ++i) graph.emplace_back(asg.phi(static_cast<int>(i)), asg.phi(f[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational ds = graph[i].first - graph[j].first;
      if (ds < 0) ds = -ds;
      Rational dv = graph[i].second - graph[j].second;
      if (dv < 0) dv = -dv;
      if (dv > eps * ds) {
        out.witness_i = i;
        out.witness_j = j;
        return out;
      }
    }
  out.ok = true;
  out.map.emplace(std::move(graph), eps);
  return out;
}

}  // namespace ufract
