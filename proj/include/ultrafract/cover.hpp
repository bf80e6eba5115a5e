#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ultrafract/metric_space.hpp"

namespace ufract {

// A set of diameter <= threshold is a clique of the graph with edges
// d(u,v) <= threshold, so a minimum cover by such sets is a minimum clique
// cover.  Vertices are processed in index order so results are deterministic.
namespace cover_detail {

struct CliqueCoverState {
  const std::vector<std::uint64_t>* adj;
  const std::vector<int>* verts;
  std::vector<std::uint64_t> cliques;
  int best;

  void search(std::size_t pos) {
    if (static_cast<int>(cliques.size()) >= best) return;
    if (pos == verts->size()) {
      best = static_cast<int>(cliques.size());
      return;
    }
    int v = (*verts)[pos];
    for (auto& c : cliques) {
      if ((c & ~(*adj)[static_cast<std::size_t>(v)]) == 0) {
        std::uint64_t saved = c;
        c |= (std::uint64_t{1} << v);
        search(pos + 1);
        c = saved;
      }
    }
    cliques.push_back(std::uint64_t{1} << v);
    search(pos + 1);
    cliques.pop_back();
  }
};

}  // namespace cover_detail

// Greedy clique cover (first-fit in index order); upper bound on the minimum.
template <class T>
int greedy_cover_size(const FiniteMetricSpace<T>& space, const std::vector<int>& subset, const T& threshold) {
  std::vector<std::vector<int>> cliques;
  for (int v : subset) {
    bool placed = false;
    for (auto& c : cliques) {
      bool ok = true;
      for (int u : c)
        if (space.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) > threshold) { ok = false; break; }
      if (ok) { c.push_back(v); placed = true; break; }
    }
    if (!placed) cliques.push_back({v});
  }
  return static_cast<int>(cliques.size());
}

struct CoverResult {
  int size = 0;
  bool exact = true;
};

// Minimum number of sets of diameter <= threshold covering the subset.
// Exact branch-and-bound up to exact_limit points, greedy upper bound beyond.
template <class T>
CoverResult min_diameter_cover(const FiniteMetricSpace<T>& space, const std::vector<int>& subset,
                               const T& threshold, int exact_limit = 18) {
  CoverResult r;
  if (subset.empty()) return r;
  int greedy = greedy_cover_size(space, subset, threshold);
  if (static_cast<int>(subset.size()) > exact_limit || subset.size() > 63) {
    r.size = greedy;
    r.exact = false;
    return r;
  }
  std::size_t m = subset.size();
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (space.at(static_cast<std::size_t>(subset[a]), static_cast<std::size_t>(subset[b])) <= threshold)
        adj[a] |= (std::uint64_t{1} << b);
  std::vector<int> verts(m);
  for (std::size_t i = 0; i < m; ++i) verts[i] = static_cast<int>(i);
  cover_detail::CliqueCoverState st{&adj, &verts, {}, greedy};
  st.search(0);
  r.size = st.best;
  r.exact = true;
  return r;
}

enum class SubsetFamily { Auto, Exhaustive, Balls };

struct DoublingReport {
  int value = 0;
  std::string family_used;       // "exhaustive" or "balls"
  bool exact = true;             // every cover solved exactly
  std::vector<int> witness;      // subset attaining the maximum
};

// Minimum N such that every subset S in the chosen family is covered by N sets
// of diameter <= shrink*diam(S).  Exhaustive enumeration up to 15 points by
// default; all metric balls beyond that.
template <class T>
DoublingReport doubling_number(const FiniteMetricSpace<T>& space, const T& shrink,
                               SubsetFamily family = SubsetFamily::Auto, int exhaustive_limit = 15) {
  if (space.size() == 0) throw std::invalid_argument("doubling_number: empty space");
  if (!(shrink > T{0} && shrink < T{1})) throw std::invalid_argument("doubling_number: shrink must be in (0,1)");
  std::size_t n = space.size();
  bool exhaustive = family == SubsetFamily::Exhaustive ||
                    (family == SubsetFamily::Auto && n <= static_cast<std::size_t>(exhaustive_limit));
  if (exhaustive && n > 22) throw std::invalid_argument("doubling_number: exhaustive family too large");

  DoublingReport report;
  report.family_used = exhaustive ? "exhaustive" : "balls";

  std::vector<std::vector<int>> subsets;
  if (exhaustive) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) s.push_back(static_cast<int>(i));
      subsets.push_back(std::move(s));
    }
  } else {
    std::vector<T> radii;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) radii.push_back(space.at(i, j));
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    std::vector<std::vector<int>> seen;
    for (std::size_t c = 0; c < n; ++c)
      for (const T& r : radii) {
        std::vector<int> s;
        for (std::size_t j = 0; j < n; ++j)
          if (space.at(c, j) <= r) s.push_back(static_cast<int>(j));
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
          seen.push_back(s);
          subsets.push_back(s);
        }
      }
  }

  for (auto& s : subsets) {
    T diam{0};
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const T& d = space.at(static_cast<std::size_t>(s[a]), static_cast<std::size_t>(s[b]));
        if (d > diam) diam = d;
      }
    CoverResult c = min_diameter_cover(space, s, shrink * diam);
    if (!c.exact) report.exact = false;
    if (c.size > report.value) {
      report.value = c.size;
      report.witness = s;
    }
  }
  return report;
}

}  // namespace ufract
