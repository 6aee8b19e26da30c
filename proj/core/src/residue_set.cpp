#include "sturdy/residue_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturdy {

ResidueSet::ResidueSet(std::uint32_t modulus)
    : n_(modulus), words_((static_cast<std::size_t>(modulus) + 63) / 64, 0) {
  if (modulus == 0) throw std::invalid_argument("ResidueSet: modulus must be positive");
}

void ResidueSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool ResidueSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t ResidueSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void ResidueSet::trim() {
  const std::uint32_t tail = n_ & 63;
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

// dst |= src << s, truncated to n bits.
void ResidueSet::or_shifted_up(const ResidueSet& src, std::uint32_t s) {
  const std::size_t W = words_.size();
  const std::size_t ws = s >> 6;
  const unsigned bs = s & 63;
  if (ws >= W) return;
  if (bs == 0) {
    for (std::size_t i = W; i-- > ws;) words_[i] |= src.words_[i - ws];
  } else {
    for (std::size_t i = W; i-- > ws + 1;) {
      words_[i] |= (src.words_[i - ws] << bs) | (src.words_[i - ws - 1] >> (64 - bs));
    }
    words_[ws] |= src.words_[0] << bs;
  }
  trim();
}

// dst |= src >> s.
void ResidueSet::or_shifted_down(const ResidueSet& src, std::uint32_t s) {
  const std::size_t W = words_.size();
  const std::size_t ws = s >> 6;
  const unsigned bs = s & 63;
  if (ws >= W) return;
  const std::size_t last = W - ws;  // number of destination words touched
  if (bs == 0) {
    for (std::size_t i = 0; i < last; ++i) words_[i] |= src.words_[i + ws];
  } else {
    for (std::size_t i = 0; i + 1 < last; ++i) {
      words_[i] |= (src.words_[i + ws] >> bs) | (src.words_[i + ws + 1] << (64 - bs));
    }
    words_[last - 1] |= src.words_[W - 1] >> bs;
  }
}

void ResidueSet::or_rotated(const ResidueSet& src, std::uint32_t shift) {
  if (src.n_ != n_) throw std::invalid_argument("ResidueSet: modulus mismatch");
  if (&src == this) {
    const ResidueSet copy = src;
    or_rotated(copy, shift);
    return;
  }
  shift %= n_;
  if (shift == 0) {
    *this |= src;
    return;
  }
  // x + shift < n moves up; x >= n - shift wraps to x - (n - shift).
  or_shifted_up(src, shift);
  or_shifted_down(src, n_ - shift);
}

void ResidueSet::assign_difference(const ResidueSet& a, const ResidueSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ResidueSet: modulus mismatch");
  n_ = a.n_;
  words_.resize(a.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & ~b.words_[i];
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("ResidueSet: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

}  // namespace sturdy
