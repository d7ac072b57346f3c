#ifndef RINGOID_RINGOID_HPP_
#define RINGOID_RINGOID_HPP_

#include <cstddef>

#include "ringoid/cayley_table.hpp"

namespace ringoid {

/// Both distributive laws: a*(b+c) = a*b + a*c and (a+b)*c = a*c + b*c.
/// Throws std::invalid_argument if the carriers differ.
bool is_distributive(CayleyTable const& plus, CayleyTable const& times);

struct RingoidFlags {
  bool plus_commutative   = false;
  bool plus_associative   = false;
  bool plus_idempotent    = false;
  bool times_associative  = false;
  bool times_commutative  = false;
  bool times_quasigroup   = false;
  bool has_neutral_zero   = false;  // (S,+) has a neutral element
  bool has_absorbing_zero = false;  // ... which also absorbs under *

  /// Associative and commutative addition.
  bool semiring() const noexcept {
    return plus_commutative && plus_associative;
  }
  bool generalised_parasemifield() const noexcept { return times_quasigroup; }

  friend bool operator==(RingoidFlags const&, RingoidFlags const&) = default;
};

/// Flags by direct table scans; assumes nothing beyond equal carriers.
RingoidFlags classify(CayleyTable const& plus, CayleyTable const& times);

/// A carrier with addition and multiplication tied by distributivity.
/// Distributivity is verified on construction.
class Ringoid {
 public:
  /// Throws std::invalid_argument on size mismatch or a failed distributive
  /// law.
  Ringoid(CayleyTable plus, CayleyTable times);

  std::size_t         size() const noexcept { return plus_.size(); }
  CayleyTable const&  plus() const noexcept { return plus_; }
  CayleyTable const&  times() const noexcept { return times_; }
  RingoidFlags const& flags() const noexcept { return flags_; }

  Element add(std::size_t a, std::size_t b) const noexcept {
    return plus_(a, b);
  }
  Element mul(std::size_t a, std::size_t b) const noexcept {
    return times_(a, b);
  }

  /// The isomorphic copy renaming x to perm[x] in both tables.
  Ringoid relabel(std::span<Element const> perm) const;

  friend bool operator==(Ringoid const& lhs, Ringoid const& rhs) {
    return lhs.plus_ == rhs.plus_ && lhs.times_ == rhs.times_;
  }
  friend std::strong_ordering operator<=>(Ringoid const& lhs,
                                          Ringoid const& rhs) {
    if (auto c = lhs.plus_ <=> rhs.plus_; c != 0) {
      return c;
    }
    return lhs.times_ <=> rhs.times_;
  }

 private:
  CayleyTable  plus_;
  CayleyTable  times_;
  RingoidFlags flags_;
};

}  // namespace ringoid

#endif  // RINGOID_RINGOID_HPP_
