#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ultrafract/word.hpp"

namespace ufract {

enum class Relation { Equal, Disjoint, Subset, Superset, ProperOverlap, Unknown };

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Disjoint: return "disjoint";
    case Relation::Subset: return "subset";
    case Relation::Superset: return "superset";
    case Relation::ProperOverlap: return "proper-overlap";
    default: return "unknown";
  }
}

inline Relation flip(Relation r) {
  if (r == Relation::Subset) return Relation::Superset;
  if (r == Relation::Superset) return Relation::Subset;
  return r;
}

// All cylinder images f_w(X) for |w| <= depth, deduplicated by the semantics'
// canonical key, with the pairwise relation cache and per-image order data.
//
// A semantics type provides:
//   using Desc  = ...;   image descriptor (value type)
//   using Point = ...;   point representation
//   int alphabet() const;
//   Desc whole() const;                       image of the identity word
//   Desc apply(int letter, const Desc&) const;        set image under f_letter
//   std::string key(const Desc&) const;       canonical identity for merging
//   bool is_singleton(const Desc&) const;     image is one point (map constant)
//   Relation relate(const Desc&, const Desc&) const;
//   Tri contains(const Point&, const Desc&) const;
//   bool order_exact(const Desc&, int max_len, int depth) const;
template <class Sem>
class CylinderLattice {
 public:
  struct Node {
    typename Sem::Desc desc;
    AddressWord witness;          // shortest word reaching this image
    int min_len = 0;
    int max_len = 0;              // longest word <= depth reaching this image
    bool omega = false;           // constant map: order treated as infinite
    bool order_exact = false;
    std::vector<bool> at_length;  // reachable in F^(circ k), k <= depth
  };

  CylinderLattice(Sem sem, int depth) : sem_(std::move(sem)), depth_(depth) {
    if (depth < 1) throw std::invalid_argument("CylinderLattice: depth must be >= 1");
    build();
  }

  const Sem& semantics() const { return sem_; }
  int depth() const { return depth_; }
  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  int whole_id() const { return 0; }

  Relation relation(std::size_t i, std::size_t j) const { return rel_[i * nodes_.size() + j]; }

  // Order exponent: nullopt means omega (weight 0 downstream).
  std::optional<int> order(std::size_t i) const {
    if (nodes_[i].omega) return std::nullopt;
    return nodes_[i].max_len;
  }

  std::size_t unknown_relation_count() const { return unknown_relations_; }

  // Node id of a word's image, if the word length is within depth.
  int node_of_word(const AddressWord& w) const {
    if (static_cast<int>(w.size()) > depth_) throw std::invalid_argument("node_of_word: word longer than depth");
    typename Sem::Desc d = sem_.whole();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) d = sem_.apply(*it, d);
    auto found = index_.find(sem_.key(d));
    if (found == index_.end()) throw std::logic_error("node_of_word: image not in lattice");
    return found->second;
  }

  std::vector<int> nodes_containing(const typename Sem::Point& p, std::size_t* unknowns = nullptr) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Tri t = sem_.contains(p, nodes_[i].desc);
      if (t == Tri::Yes) out.push_back(static_cast<int>(i));
      else if (t == Tri::Unknown && unknowns) ++*unknowns;
    }
    return out;
  }

 private:
  void build() {
    int k = sem_.alphabet();
    // level-by-level image sets; every word is enumerated, images are merged
    std::vector<int> frontier;  // node ids reached at the current length
    auto intern = [&](typename Sem::Desc d, const AddressWord& w, int len) {
      std::string key = sem_.key(d);
      auto [it, fresh] = index_.try_emplace(key, static_cast<int>(nodes_.size()));
      if (fresh) {
        Node n;
        n.desc = std::move(d);
        n.witness = w;
        n.min_len = n.max_len = len;
        n.at_length.assign(static_cast<std::size_t>(depth_) + 1, false);
        n.at_length[static_cast<std::size_t>(len)] = true;
        nodes_.push_back(std::move(n));
      } else {
        Node& n = nodes_[static_cast<std::size_t>(it->second)];
        n.max_len = std::max(n.max_len, len);
        n.at_length[static_cast<std::size_t>(len)] = true;
      }
      return it->second;
    };

    intern(sem_.whole(), AddressWord{}, 0);
    std::vector<std::pair<int, AddressWord>> level = {{0, AddressWord{}}};
    for (int len = 1; len <= depth_; ++len) {
      std::vector<std::pair<int, AddressWord>> next;
      next.reserve(level.size() * static_cast<std::size_t>(k));
      for (const auto& [id, w] : level) {
        for (int letter = 0; letter < k; ++letter) {
          // prepend: f_{letter . w}(X) = f_letter(f_w(X))
          typename Sem::Desc d = sem_.apply(letter, nodes_[static_cast<std::size_t>(id)].desc);
          AddressWord nw;
          nw.letters.reserve(w.size() + 1);
          nw.letters.push_back(letter);
          nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.end());
          int nid = intern(std::move(d), nw, len);
          next.emplace_back(nid, std::move(nw));
        }
      }
      level = std::move(next);
      // words that dedup to the same node still fan out identically, so one
      // representative word per (node, length) suffices for further growth
      std::map<int, AddressWord> uniq;
      for (auto& [id, w] : level) uniq.try_emplace(id, std::move(w));
      level.clear();
      for (auto& [id, w] : uniq) level.emplace_back(id, std::move(w));
    }

    for (auto& n : nodes_) {
      n.omega = sem_.is_singleton(n.desc);
      n.order_exact = n.omega || sem_.order_exact(n.desc, n.max_len, depth_);
    }

    // pairwise relations: semantics first, then structural prefix subsets
    std::size_t m = nodes_.size();
    rel_.assign(m * m, Relation::Unknown);
    for (std::size_t i = 0; i < m; ++i) {
      rel_[i * m + i] = Relation::Equal;
      for (std::size_t j = i + 1; j < m; ++j) {
        Relation r = sem_.relate(nodes_[i].desc, nodes_[j].desc);
        rel_[i * m + j] = r;
        rel_[j * m + i] = flip(r);
      }
    }
    overlay_structural_subsets();
    unknown_relations_ = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (rel_[i * m + j] == Relation::Unknown) ++unknown_relations_;
  }

  // Word-structure containments: f_{uv}(X) lies inside f_u(X).  Derived as a
  // monotonicity closure: anything is inside the whole image, and S inside T
  // implies f_j(S) inside f_j(T).  Only needed when the semantics left
  // unresolved pairs (the numeric backend); exact backends skip it.
  void overlay_structural_subsets() {
    std::size_t m = nodes_.size();
    bool any_unknown = false;
    for (std::size_t i = 0; i < m * m && !any_unknown; ++i)
      if (rel_[i] == Relation::Unknown) any_unknown = true;
    if (!any_unknown) return;

    std::size_t k = static_cast<std::size_t>(sem_.alphabet());
    std::vector<int> apply_cache(m * k, -1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        auto it = index_.find(sem_.key(sem_.apply(static_cast<int>(j), nodes_[i].desc)));
        if (it != index_.end()) apply_cache[i * k + j] = it->second;
      }
    std::vector<bool> inside(m * m, false);  // inside[a*m+b]: image(a) within image(b)
    for (std::size_t a = 0; a < m; ++a) {
      inside[a * m + a] = true;
      inside[a * m + 0] = true;  // node 0 is the whole image
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (!inside[a * m + b] || a == b) continue;
          for (std::size_t j = 0; j < k; ++j) {
            int fa = apply_cache[a * k + j], fb = apply_cache[b * k + j];
            if (fa >= 0 && fb >= 0 && !inside[static_cast<std::size_t>(fa) * m + static_cast<std::size_t>(fb)]) {
              inside[static_cast<std::size_t>(fa) * m + static_cast<std::size_t>(fb)] = true;
              changed = true;
            }
          }
          for (std::size_t c = 0; c < m; ++c)
            if (inside[b * m + c] && !inside[a * m + c]) {
              inside[a * m + c] = true;
              changed = true;
            }
        }
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && inside[a * m + b] && rel_[a * m + b] == Relation::Unknown) {
          rel_[a * m + b] = Relation::Subset;
          rel_[b * m + a] = Relation::Superset;
        }
  }

  Sem sem_;
  int depth_;
  std::vector<Node> nodes_;
  std::map<std::string, int> index_;
  std::vector<Relation> rel_;
  std::size_t unknown_relations_ = 0;
};

}  // namespace ufract
