#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "radix_search.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Ring buffer used as a deque. It grows by doubling, so memory follows the
// peak number of queued residues rather than the 2n worst case.
class RingDeque {
 public:
  bool empty() const { return size_ == 0; }
  void push_front(std::uint32_t v) {
    grow_if_full();
    head_ = (head_ + buf_.size() - 1) & (buf_.size() - 1);
    buf_[head_] = v;
    ++size_;
  }
  void push_back(std::uint32_t v) {
    grow_if_full();
    buf_[(head_ + size_) & (buf_.size() - 1)] = v;
    ++size_;
  }
  std::uint32_t pop_front() {
    const std::uint32_t v = buf_[head_];
    head_ = (head_ + 1) & (buf_.size() - 1);
    --size_;
    return v;
  }

 private:
  void grow_if_full() {
    if (size_ < buf_.size()) return;
    std::vector<std::uint32_t> bigger(buf_.size() * 2);
    for (std::size_t i = 0; i < size_; ++i) bigger[i] = buf_[(head_ + i) & (buf_.size() - 1)];
    buf_ = std::move(bigger);
    head_ = 0;
  }

  std::vector<std::uint32_t> buf_ = std::vector<std::uint32_t>(64);
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

constexpr std::uint8_t kDone = 0x80;
constexpr std::uint8_t kUnreached = 0x7f;

// The same search without a deque. Zero-weight edges x -> 2x permute the
// residues, so a residue's whole doubling orbit shares its distance: each
// level walks the orbits of the residues first reached at that level and
// marks their one-edges x -> 2x + 1 for the next level.
Bfs01Result bfs01_levels(std::uint32_t n, std::uint32_t s) {
  const std::size_t words = n / 64 + 1;
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::uint64_t> next(words, 0);
  next[0] = 2;  // residue 1 at distance 1
  Bfs01Result out;
  out.swm = s;
  out.character = Character::Sturdy;
  // Distances below s - 1 can still lead to a multiple with fewer than s ones.
  for (std::uint32_t d = 1; d + 1 < s; ++d) {
    std::vector<std::uint64_t> frontier(words, 0);
    frontier.swap(next);
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w] & ~visited[w];
      while (bits) {
        const auto seed = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if ((visited[seed >> 6] >> (seed & 63)) & 1) continue;
        any = true;
        std::uint64_t x = seed;
        do {
          visited[x >> 6] |= std::uint64_t{1} << (x & 63);
          x <<= 1;
          if (x >= n) x -= n;
          std::uint64_t y = x + 1;
          if (y == n) {
            out.swm = d + 1;
            out.character = Character::Flimsy;
            return out;
          }
          if (!((visited[y >> 6] >> (y & 63)) & 1)) next[y >> 6] |= std::uint64_t{1} << (y & 63);
        } while (x != seed);
      }
    }
    if (!any) break;
  }
  return out;
}

}  // namespace

Bfs01Result bfs01_solve(std::uint32_t n, bool want_witness, Bfs01Trace* trace) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("bfs01_solve: n must be odd and at least 3");
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  if (!want_witness && !trace) return bfs01_levels(n, s);

  // Low seven bits: tentative distance. High bit: finalised.
  std::vector<std::uint8_t> dist(n, kUnreached);
  std::vector<std::uint32_t> pred;
  std::vector<std::uint8_t> bit;
  if (want_witness) {
    pred.assign(n, kNone);
    bit.assign(n, 0);
  }
  if (trace) {
    trace->dequeued_distances.clear();
    trace->finalise_count.assign(n, 0);
  }

  RingDeque dq;
  dist[1] = 1;  // the source edge reads the leading 1
  dq.push_back(1);

  Bfs01Result out;
  out.swm = s;
  out.character = Character::Sturdy;
  while (!dq.empty()) {
    const std::uint32_t q = dq.pop_front();
    if (dist[q] & kDone) continue;  // stale copy
    const std::uint32_t d = dist[q];
    dist[q] |= kDone;
    if (trace) {
      trace->dequeued_distances.push_back(d);
      ++trace->finalise_count[q];
    }
    if (d >= s) break;
    if (q == 0) {
      out.swm = d;
      out.character = Character::Flimsy;
      break;
    }
    const std::uint64_t twice = 2 * static_cast<std::uint64_t>(q);
    const auto zero = static_cast<std::uint32_t>(twice % n);
    const auto one = static_cast<std::uint32_t>((twice + 1) % n);
    if (d < (dist[zero] & 0x7f) && !(dist[zero] & kDone)) {
      dist[zero] = static_cast<std::uint8_t>(d);
      if (want_witness) {
        pred[zero] = q;
        bit[zero] = 0;
      }
      dq.push_front(zero);
    }
    if (d + 1 < (dist[one] & 0x7f) && !(dist[one] & kDone)) {
      dist[one] = static_cast<std::uint8_t>(d + 1);
      if (want_witness) {
        pred[one] = q;
        bit[one] = 1;
      }
      dq.push_back(one);
    }
  }

  if (want_witness) {
    if (out.character == Character::Sturdy) {
      out.witness_multiple = BigUint(n);
    } else {
      std::string bits;
      for (std::uint32_t v = 0; v != 1; v = pred[v]) bits.push_back(bit[v] ? '1' : '0');
      bits.push_back('1');
      std::reverse(bits.begin(), bits.end());
      out.witness_multiple = BigUint::from_binary(bits);
    }
  }
  return out;
}

SturdyReport bfs01_then_least(std::uint32_t n, FieldSet wanted) {
  const bool need_witness = wanted.msw || wanted.mfw;
  const Bfs01Result first = bfs01_solve(n, need_witness);
  SturdyReport rep;
  rep.n = n;
  rep.algorithm = Algorithm::Bfs01;
  rep.character = first.character;
  rep.swm = first.swm;
  rep.witness_multiple = first.witness_multiple;
  if (first.character == Character::Sturdy) {
    if (wanted.msw) rep.msw = BigUint(1);
    return rep;
  }
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  if (wanted.msw) {
    // At most swm ones; the first accepting string has exactly swm of them.
    const auto res = detail::radix_least_multiples(n, first.swm, true);
    rep.witness_multiple = *res.first_accepted;
    rep.msw = *res.first_accepted / BigUint(n);
  }
  if (wanted.mfw) {
    if (first.swm == s - 1 && rep.msw) {
      rep.mfw = rep.msw;
    } else {
      const auto res = detail::radix_least_multiples(n, s - 1, true);
      rep.mfw = *res.first_accepted / BigUint(n);
    }
  }
  return rep;
}

}  // namespace sturdy
