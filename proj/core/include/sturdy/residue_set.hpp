#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sturdy {

/// Dense set of residues modulo n, one bit per residue.
///
/// The only non-obvious operation is the cyclic shift: or_rotated(src, p)
/// adds (x + p) mod n for every x in src, which is how the table-based
/// solvers add one power of two to a whole layer at once.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(std::uint32_t modulus);

  std::uint32_t modulus() const { return n_; }
  bool test(std::uint32_t r) const { return (words_[r >> 6] >> (r & 63)) & 1u; }
  void set(std::uint32_t r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  void reset(std::uint32_t r) { words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63)); }
  void clear();
  bool any() const;
  std::size_t count() const;

  /// this |= { (x + shift) mod n : x in src }.
  void or_rotated(const ResidueSet& src, std::uint32_t shift);

  /// this = a & ~b.
  void assign_difference(const ResidueSet& a, const ResidueSet& b);
  ResidueSet& operator|=(const ResidueSet& o);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  void or_shifted_up(const ResidueSet& src, std::uint32_t s);
  void or_shifted_down(const ResidueSet& src, std::uint32_t s);
  void trim();

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sturdy
