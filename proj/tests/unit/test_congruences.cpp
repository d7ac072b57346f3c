#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ringoid/congruences.hpp"
#include "ringoid/ideals.hpp"
#include "ringoid/symmetry.hpp"

using namespace ringoid;

namespace {

std::set<std::vector<Element>> library_congruences(Ringoid const& r) {
  std::set<std::vector<Element>> out;
  for (auto const& p : all_congruences(r)) {
    out.emplace(p.class_ids().begin(), p.class_ids().end());
  }
  return out;
}

std::vector<Ringoid> random_semirings(std::uint64_t seed, int count, bool idempotent) {
  std::mt19937_64      rng(seed);
  std::vector<Ringoid> out;
  for (int i = 0; i < count; ++i) {
    std::size_t const n    = 1 + i % 5;
    auto const        plus = oracle::random_plus(rng, n, idempotent);
    out.emplace_back(plus, oracle::random_times(rng, plus));
  }
  return out;
}

// 0 neutral, 1 + 1 = 2, everything else saturates at 2.
CayleyTable truncated_addition() {
  return CayleyTable::from_rows({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
}

}  // namespace

TEST_CASE("partition normalisation") {
  Partition const p({7, 3, 7, 9});
  CHECK(p.class_ids() == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(p == Partition({1, 0, 1, 5}));
  CHECK(p.num_classes() == 3);
  CHECK(Partition::identity(3).is_identity());
  CHECK(Partition::full(3).is_full());
  CHECK(all_partitions(4).size() == 15);
  CHECK(all_partitions(5).size() == 52);
}

TEST_CASE("principal congruence examples") {
  auto const ex = fixture::order3_semirings();
  CHECK(principal_congruence(ex[0], 1, 1).is_identity());
  CHECK(principal_congruence(ex[0], 0, 1).is_full());
  CHECK_THROWS_AS(principal_congruence(ex[0], 0, 3), std::out_of_range);

  auto const z2   = fixture::zn_ring(2);
  auto const prod = fixture::product(z2, z2);
  auto const pc   = principal_congruence(prod, 0, 2);  // (0,0) ~ (1,0)
  CHECK(pc.num_classes() == 2);
  CHECK(pc.related(0, 2));
  CHECK(pc.related(1, 3));
}

TEST_CASE("principal congruence is the least congruence containing the pair") {
  auto rings = random_semirings(21, 300, false);
  for (auto const& r : fixture::order3_semirings()) {
    rings.push_back(r);
  }
  rings.push_back(fixture::zn_ring(4));
  for (auto const& r : rings) {
    auto const all = oracle::congruences(r.plus(), r.times());
    CHECK(library_congruences(r) == all);
    std::size_t const n = r.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        auto const pc = principal_congruence(r, a, b);
        CHECK(pc.related(a, b));
        CHECK(is_congruence(r, pc));
        for (auto const& ids : all) {
          if (ids[a] == ids[b]) {
            Partition const c(std::vector<std::size_t>(ids.begin(), ids.end()));
            CHECK(pc.refines(c));
          }
        }
      }
    }
    bool const oracle_simple = oracle::congruence_simple(r.plus(), r.times());
    CHECK(is_congruence_simple(r) == oracle_simple);
    CHECK(congruence_witness(r).is_identity() == oracle_simple);
  }
}

TEST_CASE("congruence simplicity") {
  for (auto const& r : fixture::order3_semirings()) {
    CHECK(is_congruence_simple(r));
    CHECK(all_congruences(r).size() == 2);
  }
  for (Element c = 0; c < 2; ++c) {
    Ringoid const r(chain_max(2), constant_table(2, c));
    CHECK(is_congruence_simple(r) == oracle::congruence_simple(r.plus(), r.times()));
  }
  auto const z2 = fixture::zn_ring(2);
  auto const z3 = fixture::zn_ring(3);
  CHECK_FALSE(is_congruence_simple(fixture::product(z2, z3)));
  CHECK_FALSE(is_congruence_simple(fixture::product(fixture::order3_semirings()[0], z2)));

  CHECK(all_congruences(Ringoid(CayleyTable(1, {0}), CayleyTable(1, {0}))).size() == 1);
  CHECK(all_congruences(fixture::zn_ring(4)).size() == 3);
}

TEST_CASE("preorder congruence") {
  for (auto const& r : random_semirings(5, 1000, false)) {
    auto const rho = preorder_rho(r);
    CHECK(is_congruence(r, rho));
    for (Element a = 0; a < r.size(); ++a) {
      CHECK(rho.related(a, r.add(a, a)));
    }
  }
  for (auto const& r : random_semirings(6, 100, true)) {
    CHECK(preorder_rho(r).is_identity());
  }
  CHECK(preorder_rho(fixture::zn_ring(3)).is_full());
  Ringoid const nonassoc(midpoint_groupoid(3), cyclic_addition(3));
  CHECK_THROWS_AS(preorder_rho(nonassoc), std::invalid_argument);
}

TEST_CASE("congruence from an ideal") {
  for (auto const& r : random_semirings(8, 300, false)) {
    std::size_t const n = r.size();
    for (auto const& a : enumerate_ideals(r)) {
      auto const rho = rho_from_ideal(r, a);
      CHECK(is_congruence(r, rho));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          bool direct = false;
          for (Element u : a.elements()) {
            for (Element v : a.elements()) {
              direct = direct || r.add(x, u) == r.add(y, v);
            }
          }
          CHECK(rho.related(x, y) == direct);
        }
      }
      if (auto zero = neutral_element(r.plus()); zero && is_k_ideal(r, a)) {
        for (Element x = 0; x < n; ++x) {
          CHECK(rho.related(x, *zero) == a.contains(x));
        }
      }
    }
  }
  auto const ex = fixture::order3_semirings()[0];
  CHECK(rho_from_ideal(ex, SubsetMask::singleton(3, 0)).is_identity());
  CHECK(rho_from_ideal(ex, SubsetMask::full(3)).is_full());
  CHECK_THROWS_AS(rho_from_ideal(ex, SubsetMask::singleton(3, 2)), std::invalid_argument);
}

TEST_CASE("addition dichotomy with a neutral element") {
  CHECK(plus_dichotomy(fixture::order3_semirings()[0]) == PlusDichotomy::Idempotent);
  CHECK(plus_dichotomy(fixture::zn_ring(3)) == PlusDichotomy::Group);
  Ringoid const other(truncated_addition(), constant_table(3, 0));
  CHECK(plus_dichotomy(other) == PlusDichotomy::Other);
  CHECK_FALSE(is_congruence_simple(other));
}

TEST_CASE("dichotomy without a neutral element") {
  CHECK(no_neutral_dichotomy(Ringoid(constant_table(2, 1), constant_table(2, 1))) ==
        NoNeutralDichotomy::AbsorbingDoubling);

  // Every commutative semigroup of order 3 without neutral element and with
  // non-idempotent addition, made a semiring by a constant multiplication
  // onto one of its idempotents.
  std::size_t seen_neither = 0;
  std::size_t seen_absorbing = 0;
  std::vector<Element> cells(9);
  for (std::size_t code = 0; code < 729; ++code) {
    std::size_t c = code;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a; b < 3; ++b) {
        cells[a * 3 + b] = cells[b * 3 + a] = static_cast<Element>(c % 3);
        c /= 3;
      }
    }
    CayleyTable const plus(3, cells);
    if (!is_associative(plus) || is_idempotent(plus) || neutral_element(plus)) {
      continue;
    }
    std::optional<Element> idem;
    for (Element e = 0; e < 3 && !idem; ++e) {
      if (plus(e, e) == e) {
        idem = e;
      }
    }
    if (!idem) {
      continue;
    }
    Ringoid const r(plus, constant_table(3, *idem));
    auto const    o = absorbing_element(plus);
    bool doubling = o.has_value();
    for (Element x = 0; x < 3 && doubling; ++x) {
      doubling = plus(x, x) == *o;
    }
    auto const expected = is_cancellative(plus) ? NoNeutralDichotomy::Cancellative
                          : doubling            ? NoNeutralDichotomy::AbsorbingDoubling
                                                : NoNeutralDichotomy::Neither;
    CHECK(no_neutral_dichotomy(r) == expected);
    seen_neither += expected == NoNeutralDichotomy::Neither;
    seen_absorbing += expected == NoNeutralDichotomy::AbsorbingDoubling;
    if (expected == NoNeutralDichotomy::Neither) {
      CHECK_FALSE(oracle::congruence_simple(r.plus(), r.times()));
    }
  }
  CHECK(seen_neither > 0);
  CHECK(seen_absorbing > 0);
}
