#include "framecover/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

#include "framecover/errors.hpp"

namespace framecover {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw ParameterError("bit string may only contain '0' and '1'");
  }
  return v;
}

void BitVec::fill(bool value) {
  std::fill(words_.begin(), words_.end(), value ? ~std::uint64_t{0} : 0);
  trim();
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return std::min(size_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<int> BitVec::positions() const {
  std::vector<int> out;
  for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(static_cast<int>(i));
  return out;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVec BitVec::operator~() const {
  BitVec r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

bool BitVec::intersects(const BitVec& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool BitVec::subset_of(const BitVec& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == b.words_[i]) continue;
    // lowest differing position decides; the vector holding a 1 there is larger
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    const std::uint64_t low = diff & (~diff + 1);
    return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

void BitVec::trim() {
  if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

}  // namespace framecover
