#include "ringoid/ringoid.hpp"

#include <stdexcept>
#include <utility>

namespace ringoid {

bool is_distributive(CayleyTable const& plus, CayleyTable const& times) {
  if (plus.size() != times.size()) {
    throw std::invalid_argument(
        "is_distributive: addition and multiplication differ in size");
  }
  std::size_t const n = plus.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Element const bc = plus(b, c);
        if (times(a, bc) != plus(times(a, b), times(a, c))) {
          return false;
        }
        if (times(bc, a) != plus(times(b, a), times(c, a))) {
          return false;
        }
      }
    }
  }
  return true;
}

RingoidFlags classify(CayleyTable const& plus, CayleyTable const& times) {
  if (plus.size() != times.size()) {
    throw std::invalid_argument("classify: size mismatch");
  }
  RingoidFlags f;
  f.plus_commutative  = is_commutative(plus);
  f.plus_associative  = is_associative(plus);
  f.plus_idempotent   = is_idempotent(plus);
  f.times_associative = is_associative(times);
  f.times_commutative = is_commutative(times);
  f.times_quasigroup  = is_quasigroup(times);
  if (auto zero = neutral_element(plus)) {
    f.has_neutral_zero = true;
    bool absorbs       = true;
    for (std::size_t x = 0; x < plus.size() && absorbs; ++x) {
      absorbs = times(*zero, x) == *zero && times(x, *zero) == *zero;
    }
    f.has_absorbing_zero = absorbs;
  }
  return f;
}

Ringoid::Ringoid(CayleyTable plus, CayleyTable times)
    : plus_(std::move(plus)), times_(std::move(times)) {
  if (plus_.size() != times_.size()) {
    throw std::invalid_argument(
        "Ringoid: addition and multiplication differ in size");
  }
  if (!is_distributive(plus_, times_)) {
    throw std::invalid_argument("Ringoid: distributive laws fail");
  }
  flags_ = classify(plus_, times_);
}

Ringoid Ringoid::relabel(std::span<Element const> perm) const {
  return Ringoid(plus_.relabel(perm), times_.relabel(perm));
}

}  // namespace ringoid
