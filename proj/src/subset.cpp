#include "framecover/subset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "framecover/errors.hpp"

namespace framecover {

namespace {

std::uint64_t low_bits(int t) { return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1; }

void check_ground(int t) {
  if (t < 0 || t > kMaxGround)
    throw ParameterError("ground set size " + std::to_string(t) + " outside [0, " + std::to_string(kMaxGround) + "]");
}

}  // namespace

SubsetMask::SubsetMask(std::uint64_t bits, int ground_size) : bits_(bits), ground_(ground_size) {
  check_ground(ground_size);
  if (bits & ~low_bits(ground_size)) throw ParameterError("subset has an element above the ground set size");
}

SubsetMask SubsetMask::from_elements(int ground_size, std::span<const int> elements) {
  check_ground(ground_size);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > ground_size)
      throw ParameterError("element " + std::to_string(e) + " outside [1, " + std::to_string(ground_size) + "]");
    bits |= std::uint64_t{1} << (e - 1);
  }
  return {bits, ground_size};
}

SubsetMask SubsetMask::full(int ground_size) {
  check_ground(ground_size);
  return {low_bits(ground_size), ground_size};
}

int SubsetMask::size() const { return std::popcount(bits_); }

int SubsetMask::max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

SubsetMask SubsetMask::complement() const { return {~bits_ & low_bits(ground_), ground_}; }

SubsetMask SubsetMask::with(int element) const {
  return {bits_ | (std::uint64_t{1} << (element - 1)), ground_};
}

SubsetMask SubsetMask::without(int element) const {
  return {bits_ & ~(std::uint64_t{1} << (element - 1)), ground_};
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw ParameterError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<SubsetMask> enumerate_ksubsets(int t, int k) {
  check_ground(t);
  if (k < 0 || k > t)
    throw ParameterError("subset size " + std::to_string(k) + " outside [0, " + std::to_string(t) + "]");
  std::vector<SubsetMask> out;
  out.reserve(binomial(t, k));
  if (k == 0) {
    out.emplace_back(0, t);
    return out;
  }
  // Gosper's hack walks same-popcount words in increasing order
  const std::uint64_t limit = low_bits(t);
  std::uint64_t x = low_bits(k);
  while (true) {
    out.emplace_back(x, t);
    if (x == (limit & ~low_bits(t - k))) break;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::vector<SubsetMask> subsets_of(const SubsetMask& of, int k) {
  const std::vector<int> elems = of.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<SubsetMask> out;
  if (k < 0 || k > m) return out;
  if (k == 0) {
    out.emplace_back(0, of.ground_size());
    return out;
  }
  // colex over the positions of `of` is colex over the ground set too
  for (const SubsetMask& idx : enumerate_ksubsets(m, k)) {
    std::uint64_t bits = 0;
    for (int p : idx.elements()) bits |= std::uint64_t{1} << (elems[p - 1] - 1);
    out.emplace_back(bits, of.ground_size());
  }
  return out;
}

std::uint64_t colex_rank(const SubsetMask& s) {
  std::uint64_t rank = 0;
  int j = 1;
  for (int e : s.elements()) rank += binomial(e - 1, j++);
  return rank;
}

void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!f(c)) return;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::vector<int>> combinations_up_to(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= std::min(n, max_size); ++k)
    for_each_combination(n, k, [&](std::span<const int> c) {
      out.emplace_back(c.begin(), c.end());
      return true;
    });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace framecover
