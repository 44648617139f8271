#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace framecover {

/// Fixed-length bit vector over positions [0, size). Bits above size() in the
/// last word are kept zero so word-wise comparisons stay exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters; position i is character i.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void reset(std::size_t i) { set(i, false); }
  void fill(bool value);

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Lowest set position, or size() when none.
  std::size_t first() const { return next(0); }
  /// Lowest set position >= from, or size() when none.
  std::size_t next(std::size_t from) const;
  std::vector<int> positions() const;

  BitVec& operator&=(const BitVec& o);
  BitVec& operator|=(const BitVec& o);
  BitVec& operator^=(const BitVec& o);
  BitVec operator~() const;
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool intersects(const BitVec& o) const;
  bool subset_of(const BitVec& o) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Orders by size, then lexicographically by position 0, 1, ...
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace framecover
