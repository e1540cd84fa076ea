#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nestcx {

/// Ground set {0, 1, ..., size-1}. The CLI and all human-readable output
/// render elements 1-based; JSON and the library API are 0-based.
struct GroundSet {
  int size = 0;

  explicit GroundSet(int n) : size(n) {
    if (n < 1) throw std::invalid_argument("ground set must be nonempty");
    if (n > kMaxSize) throw std::invalid_argument("ground set larger than supported width");
  }

  static constexpr int kMaxSize = 20;
};

/// Subset of a ground set, stored as a bit pattern. Element i present
/// iff bit i is set. The canonical order used everywhere for families
/// of subsets is (cardinality, bit pattern value).
class Subset {
 public:
  constexpr Subset() = default;
  explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s = s.with(e);
    return s;
  }
  static Subset single(int i) { return Subset(std::uint32_t{1} << i); }
  static Subset full(int n) { return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1); }

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int count() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool test(int i) const { return (bits_ >> i) & 1u; }
  [[nodiscard]] constexpr int min_element() const { return std::countr_zero(bits_); }
  [[nodiscard]] constexpr int max_element() const { return 31 - std::countl_zero(bits_); }

  [[nodiscard]] Subset with(int i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  [[nodiscard]] Subset without(int i) const { return Subset(bits_ & ~(std::uint32_t{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

  [[nodiscard]] constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  [[nodiscard]] constexpr bool disjoint_from(Subset other) const { return (bits_ & other.bits_) == 0; }

  /// Canonical order: by cardinality, ties broken by bit pattern value.
  friend constexpr bool operator<(Subset a, Subset b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.bits_ < b.bits_;
  }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Renders "{1,3}" style. one_based shifts labels for display.
  [[nodiscard]] std::string to_string(bool one_based = true) const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e + (one_based ? 1 : 0));
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Packs the elements of s (all inside mask) into positions 0..|mask|-1,
/// preserving order. Inverse of spread().
inline Subset compress(Subset s, Subset mask) {
  std::uint32_t out = 0;
  int pos = 0;
  for (std::uint32_t m = mask.bits(); m != 0; m &= m - 1, ++pos) {
    if (s.bits() & (m & -m)) out |= std::uint32_t{1} << pos;
  }
  return Subset(out);
}

/// Maps positions 0..|mask|-1 back onto the elements of mask.
inline Subset spread(Subset s, Subset mask) {
  std::uint32_t out = 0;
  int pos = 0;
  for (std::uint32_t m = mask.bits(); m != 0; m &= m - 1, ++pos) {
    if (s.test(pos)) out |= m & -m;
  }
  return Subset(out);
}

}  // namespace nestcx
