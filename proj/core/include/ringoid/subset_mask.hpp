#ifndef RINGOID_SUBSET_MASK_HPP_
#define RINGOID_SUBSET_MASK_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ringoid/cayley_table.hpp"

namespace ringoid {

/// A subset of the carrier {0, ..., n-1}, n <= 32.
class SubsetMask {
 public:
  static constexpr std::size_t kMaxSize = 32;

  explicit SubsetMask(std::size_t n, std::uint32_t bits = 0) : n_(n), bits_(bits) {
    if (n_ == 0 || n_ > kMaxSize) {
      throw std::invalid_argument("SubsetMask: carrier size must be in 1..32");
    }
    if ((bits_ & ~universe_bits()) != 0) {
      throw std::invalid_argument("SubsetMask: bits outside the carrier");
    }
  }

  static SubsetMask full(std::size_t n) {
    SubsetMask m(n);
    m.bits_ = m.universe_bits();
    return m;
  }
  static SubsetMask singleton(std::size_t n, Element x) {
    SubsetMask m(n);
    m.insert(x);
    return m;
  }
  static SubsetMask of(std::size_t n, std::vector<Element> const& xs) {
    SubsetMask m(n);
    for (Element x : xs) {
      m.insert(x);
    }
    return m;
  }

  std::size_t   universe_size() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t   size() const noexcept { return std::popcount(bits_); }
  bool          empty() const noexcept { return bits_ == 0; }
  bool          is_full() const noexcept { return bits_ == universe_bits(); }

  bool contains(std::size_t x) const noexcept { return (bits_ >> x) & 1U; }
  void insert(std::size_t x) {
    if (x >= n_) {
      throw std::invalid_argument("SubsetMask: element out of range");
    }
    bits_ |= std::uint32_t{1} << x;
  }

  SubsetMask complement() const { return SubsetMask(n_, ~bits_ & universe_bits()); }

  /// Members in increasing order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t x = 0; x < n_; ++x) {
      if (contains(x)) {
        out.push_back(static_cast<Element>(x));
      }
    }
    return out;
  }

  friend bool operator==(SubsetMask const&, SubsetMask const&) = default;
  friend auto operator<=>(SubsetMask const&, SubsetMask const&) = default;

 private:
  std::uint32_t universe_bits() const noexcept {
    return n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
  }

  std::size_t   n_;
  std::uint32_t bits_;
};

}  // namespace ringoid

#endif  // RINGOID_SUBSET_MASK_HPP_
