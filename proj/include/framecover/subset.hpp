#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace framecover {

inline constexpr int kMaxGround = 63;

/// A subset of the ground set [t] = {1, ..., t}, t <= 63. Element e lives in
/// bit e-1.
class SubsetMask {
 public:
  SubsetMask() = default;
  /// Throws ParameterError if t is out of range or bits has a bit above t.
  SubsetMask(std::uint64_t bits, int ground_size);

  static SubsetMask from_elements(int ground_size, std::span<const int> elements);
  static SubsetMask full(int ground_size);

  std::uint64_t bits() const { return bits_; }
  int ground_size() const { return ground_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int element) const { return element >= 1 && element <= ground_ && ((bits_ >> (element - 1)) & 1U); }
  int max_element() const;
  std::vector<int> elements() const;

  SubsetMask complement() const;
  SubsetMask with(int element) const;
  SubsetMask without(int element) const;
  bool intersects(const SubsetMask& o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(const SubsetMask& o) const { return (bits_ & ~o.bits_) == 0; }

  SubsetMask operator|(const SubsetMask& o) const { return {bits_ | o.bits_, ground_}; }
  SubsetMask operator&(const SubsetMask& o) const { return {bits_ & o.bits_, ground_}; }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  /// Colex order within one ground size.
  friend auto operator<=>(const SubsetMask& a, const SubsetMask& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// "{1,3,4}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
  int ground_ = 0;
};

/// C(n, k) for 0 <= k <= n; 0 outside that range. Throws ParameterError on
/// 64-bit overflow.
std::uint64_t binomial(int n, int k);

/// All k-subsets of [t] in colex order, i.e. increasing bit value.
std::vector<SubsetMask> enumerate_ksubsets(int t, int k);

/// All k-subsets of `of`, in colex order. Empty when k > |of|.
std::vector<SubsetMask> subsets_of(const SubsetMask& of, int k);

/// Position of a k-subset in enumerate_ksubsets(t, k).
std::uint64_t colex_rank(const SubsetMask& s);

/// Calls f with each k-combination of {0, ..., n-1} as a sorted index span,
/// in lexicographic order. Stops early when f returns false.
void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& f);

/// All nonempty combinations of {0..n-1} with size <= max_size, sorted
/// lexicographically as index tuples ({0} < {0,1} < {0,1,2} < {0,2} < {1} ...).
std::vector<std::vector<int>> combinations_up_to(int n, int max_size);

}  // namespace framecover
