#include "ultrafract/address.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufract {

BinaryAddress::BinaryAddress(std::string_view bits, int tail) : tail_(tail) {
  if (tail != 0 && tail != 1) throw std::invalid_argument("BinaryAddress: tail must be 0 or 1");
  bits_.reserve(bits.size());
  for (char c : bits) {
    if (c == '0') bits_.push_back(0);
    else if (c == '1') bits_.push_back(1);
    else throw std::invalid_argument("BinaryAddress: bad bit character");
  }
}

BinaryAddress BinaryAddress::zeros(std::size_t n) {
  BinaryAddress a;
  a.bits_.assign(n, 0);
  return a;
}

BinaryAddress BinaryAddress::constant(int tail_bit) {
  BinaryAddress a;
  a.tail_ = tail_bit;
  if (tail_bit != 0 && tail_bit != 1) throw std::invalid_argument("BinaryAddress: tail must be 0 or 1");
  return a;
}

BinaryAddress BinaryAddress::normalized() const {
  BinaryAddress a(*this);
  while (!a.bits_.empty() && a.bits_.back() == tail_) a.bits_.pop_back();
  return a;
}

bool BinaryAddress::same_point(const BinaryAddress& other) const {
  return normalized() == other.normalized();
}

bool BinaryAddress::is_zero_point() const {
  if (tail_ != 0) return false;
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

bool BinaryAddress::is_s0_point() const {
  if (is_zero_point()) return true;
  BinaryAddress n = normalized();
  if (n.tail_ != 0 || n.bits_.empty() || n.bits_.back() != 1) return false;
  return std::all_of(n.bits_.begin(), n.bits_.end() - 1, [](auto b) { return b == 0; });
}

std::size_t BinaryAddress::leading_zeros() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] == 1) return i;
  if (tail_ == 1) return bits_.size();
  throw std::logic_error("leading_zeros: zero point has no 1");
}

Rational BinaryAddress::value() const {
  Rational v(0);
  Rational p(1, 3);
  for (std::uint8_t b : bits_) {
    if (b) v += 2 * p;
    p /= 3;
  }
  // tail geometric part: sum_{n>=size} 2/3^(n+1) = 3^(-size)
  if (tail_ == 1) v += rational_pow(Rational(1, 3), static_cast<long>(bits_.size()));
  return v;
}

BinaryAddress BinaryAddress::prefix(std::size_t n) const {
  BinaryAddress a;
  a.bits_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a.bits_.push_back(static_cast<std::uint8_t>(bit(i)));
  return a;
}

BinaryAddress BinaryAddress::suffix(std::size_t n) const {
  BinaryAddress a;
  a.tail_ = tail_;
  if (n < bits_.size()) a.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(n), bits_.end());
  return a;
}

bool BinaryAddress::starts_with(const BinaryAddress& word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (bit(i) != word.bits_[i]) return false;
  return true;
}

BinaryAddress BinaryAddress::append(const BinaryAddress& rest) const {
  if (tail_ != 0) throw std::logic_error("append: left operand must be a finite word");
  BinaryAddress a;
  a.bits_ = bits_;
  a.bits_.insert(a.bits_.end(), rest.bits_.begin(), rest.bits_.end());
  a.tail_ = rest.tail_;
  return a;
}

BinaryAddress BinaryAddress::append_bit(int b) const {
  BinaryAddress a(*this);
  a.bits_.push_back(static_cast<std::uint8_t>(b));
  return a;
}

bool BinaryAddress::all_zero_word() const {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

BinaryAddress BinaryAddress::even_part() const {
  BinaryAddress a;
  a.tail_ = tail_;
  for (std::size_t i = 0; i < bits_.size(); i += 2) a.bits_.push_back(bits_[i]);
  return a;
}

BinaryAddress BinaryAddress::odd_part() const {
  BinaryAddress a;
  a.tail_ = tail_;
  for (std::size_t i = 1; i < bits_.size(); i += 2) a.bits_.push_back(bits_[i]);
  return a;
}

BinaryAddress BinaryAddress::iterated_even_part(int iterations) const {
  BinaryAddress a(*this);
  for (int i = 0; i < iterations; ++i) a = a.even_part();
  return a;
}

std::string BinaryAddress::to_string() const {
  std::string s;
  s.reserve(bits_.size() + 4);
  for (std::uint8_t b : bits_) s += static_cast<char>('0' + b);
  if (tail_ == 1) s += "(1)";
  return s;
}

std::strong_ordering BinaryAddress::point_order(const BinaryAddress& other) const {
  std::size_t n = std::max(bits_.size(), other.bits_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = bit(i) <=> other.bit(i); c != 0) return c;
  }
  return tail_ <=> other.tail_;
}

}  // namespace ufract
