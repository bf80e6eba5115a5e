#pragma once

#include "ultrafract/cylinder.hpp"
#include "ultrafract/semantics_affine.hpp"

namespace ufract {

// Composed-map view of a word: the affine composition, what its image looks
// like, and the order data the Kameyama pseudometric consumes.
struct ComposedCylinder {
  AddressWord word;
  AffineContraction map;
  enum class ImageKind { FullImage, Singleton, Symbolic } kind = ImageKind::Symbolic;
  std::optional<int> order;  // nullopt = omega
  bool order_exact = false;
};

inline ComposedCylinder compose(const Ifs& ifs, const AddressWord& w) {
  ComposedCylinder out;
  out.word = w;
  out.map = AffineContraction::identity(ifs.dim());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.map = ifs.map(static_cast<std::size_t>(*it)).compose(out.map);
  if (w.empty()) out.kind = ComposedCylinder::ImageKind::FullImage;
  else if (out.map.is_constant()) out.kind = ComposedCylinder::ImageKind::Singleton;
  else out.kind = ComposedCylinder::ImageKind::Symbolic;
  return out;
}

struct OrderResult {
  std::optional<int> order;  // nullopt = omega
  bool exact = false;
};

// o(f) = sup{n : f composes from n maps}.  A constant composition has order
// omega (padding on the right never changes a constant map).  Otherwise the
// order is the longest word within depth giving the same affine map, exact
// when the contraction factor bounds every representation inside the depth.
inline OrderResult order_of(const Ifs& ifs, const AddressWord& w, int depth) {
  if (depth < static_cast<int>(w.size())) throw std::invalid_argument("order_of: depth < |w|");
  OrderResult out;
  ComposedCylinder c = compose(ifs, w);
  if (!w.empty() && c.map.is_constant()) {
    out.order = std::nullopt;
    out.exact = true;
    return out;
  }
  if (w.empty()) {
    // the identity: images of nonempty compositions are proper subsets
    out.order = 0;
    out.exact = true;
    return out;
  }
  AffineSemantics sem(ifs);
  CylinderLattice<AffineSemantics> lat(sem, depth);
  int id = lat.node_of_word(w);
  out.order = lat.order(static_cast<std::size_t>(id));
  out.exact = lat.node(static_cast<std::size_t>(id)).order_exact;
  return out;
}

}  // namespace ufract
