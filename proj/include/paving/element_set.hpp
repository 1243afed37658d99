#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "paving/errors.hpp"

namespace paving {

/// Subset of a ground set {0, ..., n-1} with n <= 64, packed into one word.
/// Value type; all operations are O(1) unless noted.
class ElementSet {
 public:
  static constexpr int max_ground_size = 64;

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }

  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  static ElementSet from_indices(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  /// The full ground set {0, ..., n-1}.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static ElementSet single(int e) { return ElementSet().with(e); }

  constexpr std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }

  bool contains(int e) const { return e >= 0 && e < 64 && (bits_ >> e & 1) != 0; }

  ElementSet with(int e) const {
    check_index(e);
    return ElementSet(bits_ | std::uint64_t{1} << e);
  }

  ElementSet without(int e) const {
    check_index(e);
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }

  bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }

  ElementSet complement(int n) const { return full(n) - *this; }

  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }
  /// Numeric mask order; used as the canonical order on sets throughout.
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

  /// Smallest element, or -1 when empty.
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  /// Iterates elements in ascending order.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int e : *this) out.push_back(e);
    return out;
  }

  /// "{0, 2, 5}" — debugging / error messages.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ", ";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static void check_index(int e) {
    if (e < 0 || e >= max_ground_size)
      throw Error(ErrorCode::out_of_range,
                  "element index " + std::to_string(e) + " outside [0, 64)");
  }

  std::uint64_t bits_ = 0;
};

/// Next k-subset mask in ascending numeric order (Gosper). Caller stops when
/// the result no longer fits the ground mask.
inline std::uint64_t next_k_subset(std::uint64_t v) {
  std::uint64_t c = v & (~v + 1);
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

/// Calls fn(mask) for every k-subset of {0,...,n-1}, ascending numeric order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t limit = ElementSet::full(n).bits();
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (true) {
    fn(v);
    if (k == n) break;  // single subset; Gosper would shift past the word
    std::uint64_t nxt = next_k_subset(v);
    if (nxt > limit || nxt < v) break;
    v = nxt;
  }
}

/// Calls fn(sub) for every submask of `mask`, ascending numeric order
/// (includes 0 and mask itself).
template <typename Fn>
void for_each_submask(std::uint64_t mask, Fn fn) {
  std::uint64_t sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Exact binomial coefficient; n <= 64 keeps every value below 2^63.
/// The intermediate product needs 128 bits (e.g. C(63,31) * 64).
inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(c);
}

}  // namespace paving
