#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ultrafract/rational.hpp"

namespace ufract {

// A binary sequence with an eventually-constant tail: the explicit bits
// followed by the tail bit repeated forever.  Denotes the Cantor point
// x = sum 2*b_n / 3^(n+1).  A plain finite word is the special case
// tail = 0 used for cylinder labels; the tail generalizes it so that
// fixed points like x_{111...} stay exactly representable.
class BinaryAddress {
 public:
  BinaryAddress() = default;
  explicit BinaryAddress(std::string_view bits, int tail = 0);
  static BinaryAddress zeros(std::size_t n);
  static BinaryAddress constant(int tail_bit);

  std::size_t size() const { return bits_.size(); }
  int tail() const { return tail_; }
  int bit(std::size_t i) const { return i < bits_.size() ? bits_[i] : tail_; }
  bool is_finite_word() const { return tail_ == 0; }

  // Canonical form: trailing bits equal to the tail are stripped.
  BinaryAddress normalized() const;
  bool same_point(const BinaryAddress& other) const;

  bool is_zero_point() const;
  // Point belongs to S0 = {0} u {x_{0^n 1}}.
  bool is_s0_point() const;
  // Index of the first 1 in the infinite sequence; throws on the zero point.
  std::size_t leading_zeros() const;

  Rational value() const;

  // First n bits as a finite word (reads into the tail when n > size()).
  BinaryAddress prefix(std::size_t n) const;
  // Drops the first n bits, keeping the tail.
  BinaryAddress suffix(std::size_t n) const;
  // True iff the denoted point lies in the cylinder K_w for the finite word w.
  bool starts_with(const BinaryAddress& word) const;
  // this must be a finite word; the result is this followed by rest.
  BinaryAddress append(const BinaryAddress& rest) const;
  BinaryAddress append_bit(int b) const;

  bool all_zero_word() const;  // explicit bits only

  BinaryAddress even_part() const;  // bits at positions 0,2,4,...
  BinaryAddress odd_part() const;   // bits at positions 1,3,5,...
  BinaryAddress iterated_even_part(int iterations) const;

  std::string to_string() const;

  // Lexicographic order on the denoted infinite sequences.
  std::strong_ordering point_order(const BinaryAddress& other) const;

  // Raw structural comparison (explicit bits + tail), usable as a map key.
  friend bool operator==(const BinaryAddress& a, const BinaryAddress& b) {
    return a.tail_ == b.tail_ && a.bits_ == b.bits_;
  }
  friend auto operator<=>(const BinaryAddress& a, const BinaryAddress& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.tail_ <=> b.tail_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  int tail_ = 0;
};

}  // namespace ufract
