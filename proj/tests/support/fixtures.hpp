#ifndef RINGOID_TESTS_FIXTURES_HPP_
#define RINGOID_TESTS_FIXTURES_HPP_

#include <vector>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"

namespace fixture {

using ringoid::CayleyTable;
using ringoid::Ringoid;

inline CayleyTable chain3() { return ringoid::chain_max(3); }

/// The five order-3 congruence-simple multiplications over chain3().
inline std::vector<CayleyTable> order3_times() {
  return {
      CayleyTable::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 2, 2}}),
      CayleyTable::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 2, 2}}),
      CayleyTable::from_rows({{0, 0, 0}, {0, 0, 2}, {0, 0, 2}}),
      CayleyTable::from_rows({{0, 0, 0}, {0, 0, 2}, {0, 1, 2}}),
      CayleyTable::from_rows({{0, 0, 0}, {0, 0, 2}, {0, 2, 2}}),
  };
}

inline std::vector<Ringoid> order3_semirings() {
  std::vector<Ringoid> out;
  for (auto const& t : order3_times()) {
    out.emplace_back(chain3(), t);
  }
  return out;
}

inline Ringoid zn_ring(std::size_t m) {
  return Ringoid(ringoid::cyclic_addition(m), ringoid::cyclic_multiplication(m));
}

/// Componentwise product; (a, b) is encoded as a * r2.size() + b.
inline Ringoid product(Ringoid const& r1, Ringoid const& r2) {
  std::size_t const m = r2.size();
  auto op = [&](bool add) {
    return CayleyTable::from_function(r1.size() * m, [&](std::size_t x, std::size_t y) {
      std::size_t const a = add ? r1.add(x / m, y / m) : r1.mul(x / m, y / m);
      std::size_t const b = add ? r2.add(x % m, y % m) : r2.mul(x % m, y % m);
      return a * m + b;
    });
  };
  return Ringoid(op(true), op(false));
}

}  // namespace fixture

#endif  // RINGOID_TESTS_FIXTURES_HPP_
