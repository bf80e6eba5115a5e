#pragma once

#include <algorithm>
#include <queue>
#include <set>

#include "ultrafract/cylinder.hpp"
#include "ultrafract/rational.hpp"

namespace ufract {

struct ChainLink {
  AddressWord word;
  std::optional<int> order;  // nullopt = omega (weight 0)
  Rational weight;
};

// Result of a depth-bounded chain search.  The value is an upper bound on the
// true infimum, nonincreasing in depth; it is reported as an exact zero only
// when an omega-order cylinder contains both points.
struct KameyamaResult {
  Rational value;
  bool exact_zero = false;
  bool upper_bound = true;
  std::vector<ChainLink> chain;
  std::size_t unknown_memberships = 0;
  std::size_t unknown_overlaps = 0;
};

template <class Sem>
Rational node_weight(const CylinderLattice<Sem>& lat, std::size_t i, const Rational& lambda) {
  auto o = lat.order(i);
  if (!o) return Rational(0);
  return rational_pow(lambda, *o);
}

// Shortest node-weighted chain over the cylinder-overlap graph: x in the first
// image, y in the last, consecutive images intersect, cost = sum of lambda^o.
// Unknown overlaps are skipped (the value stays a sound upper bound) and
// counted in the result.
template <class Sem>
KameyamaResult kameyama_distance(const CylinderLattice<Sem>& lat, const Rational& lambda,
                                 const typename Sem::Point& x, const typename Sem::Point& y) {
  if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("kameyama_distance: lambda must be in (0,1)");
  std::size_t m = lat.node_count();
  std::size_t unknown_members = 0;
  std::vector<int> starts = lat.nodes_containing(x, &unknown_members);
  std::vector<int> targets = lat.nodes_containing(y, &unknown_members);
  if (starts.empty()) throw std::invalid_argument("kameyama_distance: point x not resolved in any cylinder");
  if (targets.empty()) throw std::invalid_argument("kameyama_distance: point y not resolved in any cylinder");

  std::vector<Rational> weight(m);
  for (std::size_t i = 0; i < m; ++i) weight[i] = node_weight(lat, i, lambda);

  std::vector<std::optional<Rational>> dist(m);
  std::vector<int> parent(m, -1);
  auto cmp = [&](const std::pair<Rational, int>& a, const std::pair<Rational, int>& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<std::pair<Rational, int>, std::vector<std::pair<Rational, int>>, decltype(cmp)> pq(cmp);
  for (int s : starts) {
    std::size_t i = static_cast<std::size_t>(s);
    if (!dist[i] || *dist[i] > weight[i]) {
      dist[i] = weight[i];
      pq.push({weight[i], s});
    }
  }
  std::vector<bool> done(m, false);
  std::size_t unknown_overlaps = 0;
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    std::size_t ui = static_cast<std::size_t>(u);
    if (done[ui]) continue;
    done[ui] = true;
    for (std::size_t v = 0; v < m; ++v) {
      if (v == ui) continue;
      Relation r = lat.relation(ui, v);
      if (r == Relation::Disjoint) continue;
      if (r == Relation::Unknown) { ++unknown_overlaps; continue; }
      Rational nd = d + weight[v];
      if (!dist[v] || *dist[v] > nd) {
        dist[v] = nd;
        parent[v] = u;
        pq.push({nd, static_cast<int>(v)});
      }
    }
  }

  int best = -1;
  for (int t : targets) {
    std::size_t ti = static_cast<std::size_t>(t);
    if (!dist[ti]) continue;
    if (best < 0 || *dist[ti] < *dist[static_cast<std::size_t>(best)]) best = t;
  }
  if (best < 0) throw std::logic_error("kameyama_distance: no chain found");

  KameyamaResult res;
  res.value = *dist[static_cast<std::size_t>(best)];
  res.unknown_memberships = unknown_members;
  res.unknown_overlaps = unknown_overlaps;
  for (int at = best; at >= 0; at = parent[static_cast<std::size_t>(at)]) {
    std::size_t i = static_cast<std::size_t>(at);
    res.chain.push_back({lat.node(i).witness, lat.order(i), weight[i]});
  }
  std::reverse(res.chain.begin(), res.chain.end());
  res.exact_zero = res.value == 0;
  res.upper_bound = !res.exact_zero;
  return res;
}

// Ultrafractal simplification: min lambda^o over single cylinders containing
// both points.  The lattice must have passed is_ultrafractal.
template <class Sem>
KameyamaResult kameyama_ultra_distance(const CylinderLattice<Sem>& lat, const Rational& lambda,
                                       const typename Sem::Point& x, const typename Sem::Point& y,
                                       bool verified_ultrafractal) {
  if (!verified_ultrafractal)
    throw std::invalid_argument("kameyama_ultra_distance: lattice not verified ultrafractal");
  std::size_t unknown_members = 0;
  std::vector<int> xs = lat.nodes_containing(x, &unknown_members);
  std::vector<int> ys = lat.nodes_containing(y, &unknown_members);
  if (xs.empty() || ys.empty())
    throw std::invalid_argument("kameyama_ultra_distance: point not resolved in any cylinder");
  std::set<int> yset(ys.begin(), ys.end());
  KameyamaResult res;
  bool found = false;
  for (int i : xs) {
    if (!yset.count(i)) continue;
    Rational w = node_weight(lat, static_cast<std::size_t>(i), lambda);
    if (!found || w < res.value) {
      found = true;
      res.value = w;
      res.chain = {{lat.node(static_cast<std::size_t>(i)).witness,
                    lat.order(static_cast<std::size_t>(i)), w}};
    }
  }
  if (!found) throw std::logic_error("kameyama_ultra_distance: no common cylinder within depth");
  res.unknown_memberships = unknown_members;
  res.exact_zero = res.value == 0;
  res.upper_bound = !res.exact_zero;
  return res;
}

// Thm-style cylinder cover of a sample set: the largest order-k cylinder
// through a base point, refined one level; |F| pieces of diameter bound
// lambda^(k+1) when diam(S) = lambda^k.
struct CylinderCoverCheck {
  bool covered = false;
  std::size_t pieces = 0;
  int k = 0;
};

template <class Sem>
CylinderCoverCheck cylinder_cover_check(const CylinderLattice<Sem>& lat, const Rational& lambda,
                                        const std::vector<typename Sem::Point>& sample) {
  CylinderCoverCheck out;
  if (sample.size() < 2) {
    out.covered = true;
    out.pieces = sample.empty() ? 0 : 1;
    return out;
  }
  // diam(S) under the ultrafractal Kameyama metric = lambda^k for some k
  Rational diam(0);
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      Rational d = kameyama_ultra_distance(lat, lambda, sample[i], sample[j], true).value;
      if (d > diam) diam = d;
    }
  if (diam == 0) {
    out.covered = true;
    out.pieces = 1;
    return out;
  }
  int k = 0;
  Rational probe(1);
  while (probe > diam && k < lat.depth()) {
    probe *= lambda;
    ++k;
  }
  if (probe != diam) return out;  // diameter not an exact power within depth
  out.k = k;
  // cylinders reachable at length k containing the base point form a nested
  // family; take the largest under the subset relation
  std::vector<int> through = lat.nodes_containing(sample[0]);
  int top = -1;
  for (int i : through) {
    if (!lat.node(static_cast<std::size_t>(i)).at_length[static_cast<std::size_t>(k)]) continue;
    if (top < 0 || lat.relation(static_cast<std::size_t>(top), static_cast<std::size_t>(i)) == Relation::Subset)
      top = i;
  }
  if (top < 0) return out;
  // refine one level: pieces f_top o f_j (X) have order >= k+1, hence
  // Kameyama diameter <= lambda^(k+1) = lambda * diam(S)
  std::vector<typename Sem::Desc> pieces;
  for (int j = 0; j < lat.semantics().alphabet(); ++j)
    pieces.push_back(lat.semantics().apply(j, lat.node(static_cast<std::size_t>(top)).desc));
  out.pieces = pieces.size();
  for (const auto& p : sample) {
    bool inside = false;
    for (const auto& piece : pieces)
      if (lat.semantics().contains(p, piece) == Tri::Yes) { inside = true; break; }
    if (!inside) return out;
  }
  out.covered = true;
  return out;
}

}  // namespace ufract
