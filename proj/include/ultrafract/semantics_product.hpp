#pragma once

#include <algorithm>
#include <map>

#include "ultrafract/cylinder.hpp"
#include "ultrafract/rational.hpp"
#include "ultrafract/affine.hpp"

namespace ufract {

// Exact semantics for the product of a 1-D rational IFS with a finite discrete
// factor (levels 0..n-1), matching the product_structure maps: letter 0 shifts
// levels up, letter i+1 applies base map i on level 0 and collapses the rest.
//
// The base must have pairwise disjoint image intervals (hull-disjoint), which
// makes cylinder relations decidable by exact interval arithmetic.
class ProductSemantics {
 public:
  struct Interval {
    Rational lo, hi;
  };

  struct CylPart {
    std::vector<int> word;  // base-map word; image f_word(K) x {level}
    int level;
    friend auto operator<=>(const CylPart&, const CylPart&) = default;
  };
  struct PointPart {
    Rational x;
    int level;
    friend bool operator==(const PointPart&, const PointPart&) = default;
  };
  struct Desc {
    std::vector<CylPart> cyls;     // at most one cylinder per level
    std::vector<PointPart> points;
  };
  struct Point {
    Rational x;
    int level;
  };

  ProductSemantics(std::vector<RationalAffine1D> base, int levels)
      : base_(std::move(base)), levels_(levels) {
    if (base_.empty() || levels_ < 1) throw std::invalid_argument("ProductSemantics: bad arguments");
    Rational lo = base_[0].fixed_point(), hi = lo;
    for (const auto& f : base_) {
      Rational p = f.fixed_point();
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      if (!(f.a > 0 && f.a < 1)) throw std::invalid_argument("ProductSemantics: base slopes must be in (0,1)");
    }
    hull_ = {lo, hi};
    for (std::size_t i = 0; i < base_.size(); ++i)
      for (std::size_t j = i + 1; j < base_.size(); ++j) {
        Interval a = word_interval({static_cast<int>(i)});
        Interval b = word_interval({static_cast<int>(j)});
        if (!(a.hi < b.lo || b.hi < a.lo))
          throw std::invalid_argument("ProductSemantics: base image intervals overlap");
      }
  }

  int alphabet() const { return static_cast<int>(base_.size()) + 1; }
  int levels() const { return levels_; }

  Interval word_interval(const std::vector<int>& w) const {
    Interval iv = hull_;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& f = base_[static_cast<std::size_t>(*it)];
      iv = {f.apply(iv.lo), f.apply(iv.hi)};
    }
    return iv;
  }

  Desc whole() const {
    Desc d;
    for (int j = 0; j < levels_; ++j) d.cyls.push_back({{}, j});
    return d;
  }

  Desc apply(int letter, const Desc& d) const {
    Desc out;
    if (letter == 0) {
      for (const auto& c : d.cyls) {
        if (c.level < levels_ - 1) out.cyls.push_back({c.word, c.level + 1});
        else out.points.push_back({base_[0].fixed_point(), levels_ - 1});
      }
      for (const auto& p : d.points) {
        if (p.level < levels_ - 1) out.points.push_back({p.x, p.level + 1});
        else out.points.push_back({base_[0].fixed_point(), levels_ - 1});
      }
    } else {
      int i = letter - 1;
      bool collapsed = false;
      for (const auto& c : d.cyls) {
        if (c.level == 0) {
          std::vector<int> w = {i};
          w.insert(w.end(), c.word.begin(), c.word.end());
          out.cyls.push_back({std::move(w), 0});
        } else collapsed = true;
      }
      for (const auto& p : d.points) {
        if (p.level == 0) out.points.push_back({base_[static_cast<std::size_t>(i)].apply(p.x), 0});
        else collapsed = true;
      }
      if (collapsed) out.points.push_back({base_[static_cast<std::size_t>(i)].fixed_point(), 0});
    }
    normalize(out);
    return out;
  }

  std::string key(const Desc& d) const {
    std::string s;
    for (const auto& c : d.cyls) {
      s += "C" + std::to_string(c.level) + ":";
      for (int w : c.word) s += std::to_string(w) + ".";
      s += ";";
    }
    for (const auto& p : d.points) s += "P" + std::to_string(p.level) + ":" + format_rational(p.x) + ";";
    return s;
  }

  bool is_singleton(const Desc& d) const {
    return d.cyls.empty() && d.points.size() == 1;
  }

  Relation relate(const Desc& a, const Desc& b) const {
    bool ab = subset(a, b), ba = subset(b, a);
    if (ab && ba) return Relation::Equal;
    if (ab) return Relation::Subset;
    if (ba) return Relation::Superset;
    return intersects(a, b) ? Relation::ProperOverlap : Relation::Disjoint;
  }

  Tri contains(const Point& p, const Desc& d) const {
    return point_in(p.x, p.level, d) ? Tri::Yes : Tri::No;
  }

  bool order_exact(const Desc& d, int max_len, int depth) const {
    (void)max_len;
    (void)depth;
    if (is_singleton(d)) return true;
    // a non-singleton image is a single cylinder (base word u, level s) coming
    // only from words 0^s . v with base-word(v) = u; when all base slopes are
    // equal the scale pins |v| = |u|, so the length s + |u| is forced
    for (const auto& f : base_)
      if (f.a != base_[0].a) return false;
    return true;
  }

 private:
  void normalize(Desc& d) const {
    std::sort(d.cyls.begin(), d.cyls.end());
    d.cyls.erase(std::unique(d.cyls.begin(), d.cyls.end()), d.cyls.end());
    // drop points absorbed by cylinders, then deduplicate
    std::vector<PointPart> pts;
    for (const auto& p : d.points) {
      bool inside = false;
      for (const auto& c : d.cyls)
        if (c.level == p.level && in_interval(p.x, word_interval(c.word))) { inside = true; break; }
      if (!inside && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](const PointPart& a, const PointPart& b) {
      if (a.level != b.level) return a.level < b.level;
      return a.x < b.x;
    });
    d.points = std::move(pts);
  }

  static bool in_interval(const Rational& x, const Interval& iv) { return iv.lo <= x && x <= iv.hi; }

  static bool is_prefix(const std::vector<int>& p, const std::vector<int>& w) {
    if (p.size() > w.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin());
  }

  bool point_in(const Rational& x, int level, const Desc& d) const {
    for (const auto& c : d.cyls)
      if (c.level == level && in_interval(x, word_interval(c.word))) return true;
    for (const auto& p : d.points)
      if (p.level == level && p.x == x) return true;
    return false;
  }

  bool subset(const Desc& a, const Desc& b) const {
    for (const auto& c : a.cyls) {
      bool covered = false;
      for (const auto& cb : b.cyls)
        if (cb.level == c.level && is_prefix(cb.word, c.word)) { covered = true; break; }
      if (!covered) return false;
    }
    for (const auto& p : a.points)
      if (!point_in(p.x, p.level, b)) return false;
    return true;
  }

  bool intersects(const Desc& a, const Desc& b) const {
    for (const auto& ca : a.cyls)
      for (const auto& cb : b.cyls) {
        if (ca.level != cb.level) continue;
        Interval ia = word_interval(ca.word), ib = word_interval(cb.word);
        // hull-disjoint base: cylinders meet iff one word prefixes the other
        if (is_prefix(ca.word, cb.word) || is_prefix(cb.word, ca.word)) return true;
        (void)ia;
        (void)ib;
      }
    for (const auto& p : a.points)
      if (point_in(p.x, p.level, b)) return true;
    for (const auto& p : b.points)
      if (point_in(p.x, p.level, a)) return true;
    return false;
  }

  std::vector<RationalAffine1D> base_;
  int levels_;
  Interval hull_;
};

}  // namespace ufract
