#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ringoid/search.hpp"
#include "ringoid/symmetry.hpp"

using namespace ringoid;

namespace {

SearchSpec semiring_spec(std::size_t n, SimplicityFilter f) {
  SearchSpec s;
  s.order  = n;
  s.filter = f;
  return s;
}

oracle::Filter to_oracle(SimplicityFilter f) {
  switch (f) {
    case SimplicityFilter::CongruenceSimple:
      return oracle::Filter::CongruenceSimple;
    case SimplicityFilter::KIdealSimple:
      return oracle::Filter::KIdealSimple;
    case SimplicityFilter::IdealSimple:
      return oracle::Filter::IdealSimple;
    case SimplicityFilter::All:
      break;
  }
  return oracle::Filter::All;
}

std::set<std::vector<Element>> keys_of(std::vector<Ringoid> const& rs) {
  std::set<std::vector<Element>> out;
  for (auto const& r : rs) {
    out.insert(oracle::canonical_key({r.plus(), r.times()}, true));
  }
  return out;
}

constexpr SimplicityFilter kFilters[] = {SimplicityFilter::CongruenceSimple,
                                         SimplicityFilter::KIdealSimple,
                                         SimplicityFilter::IdealSimple, SimplicityFilter::All};

}  // namespace

TEST_CASE("additive skeletons match brute force") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<Element>> keys;
    for (auto const& t : oracle::labelled_skeletons(n)) {
      keys.insert(oracle::canonical_key({t}, true));
    }
    auto const skeletons = enumerate_additive_skeletons(n);
    CHECK(skeletons.size() == keys.size());
    for (auto const& t : skeletons) {
      CHECK(keys.count(oracle::canonical_key({t}, true)) == 1);
      Skeleton const s(t);
      CHECK(s.plus(0, s.top) == s.top);
      std::vector<Transformation> zero_fixing;
      for (auto const& f : oracle::endomorphisms(t)) {
        if (f[0] == 0) {
          zero_fixing.push_back(f);
        }
      }
      CHECK(s.endomorphisms == zero_fixing);
      CHECK(s.automorphisms.size() + 1 == oracle::automorphisms(t).size());
    }
  }
}

TEST_CASE("semiring enumeration matches brute force for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto f : kFilters) {
      CAPTURE(n);
      CAPTURE(to_string(f));
      auto const expected = oracle::semirings(n, to_oracle(f));
      auto const result   = enumerate(semiring_spec(n, f));
      auto const& rs      = *result.ringoids;
      if (n == 1 && f != SimplicityFilter::All) {
        CHECK(rs.empty());
        continue;
      }
      CHECK(result.counts.total == expected.total);
      CHECK(result.counts.commutative == expected.commutative);
      CHECK(result.counts.associative == expected.associative);
      CHECK(keys_of(rs) == expected.keys);
      CHECK(rs.size() == result.counts.total);
    }
  }
}

TEST_CASE("commutative order 5 matches brute force") {
  auto const expected = oracle::commutative_semirings(5, oracle::labelled_skeletons(5));
  auto       spec     = semiring_spec(5, SimplicityFilter::CongruenceSimple);
  spec.times_commutative = true;
  auto const result      = enumerate(spec);
  CHECK(result.counts.total == expected.total);
  CHECK(result.counts.associative == expected.associative);
  CHECK(keys_of(*result.ringoids) == expected.keys);
}

TEST_CASE("pruning does not change results") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto f : kFilters) {
      auto on      = semiring_spec(n, f);
      auto off     = on;
      off.prune    = false;
      auto const a = enumerate(on);
      auto const b = enumerate(off);
      CHECK(a.counts == b.counts);
      CHECK(*a.ringoids == *b.ringoids);
    }
  }
}

TEST_CASE("the five order-3 examples are exactly the order-3 output") {
  auto const result = enumerate(semiring_spec(3, SimplicityFilter::CongruenceSimple));
  std::set<Ringoid> produced;
  for (auto const& r : *result.ringoids) {
    produced.insert(canonical_form(r, false).first);
  }
  std::set<Ringoid> examples;
  for (auto const& r : fixture::order3_semirings()) {
    examples.insert(canonical_form(r, false).first);
  }
  CHECK(produced == examples);
}

TEST_CASE("times-class restrictions are consistent with the general run") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const general = enumerate(semiring_spec(n, SimplicityFilter::CongruenceSimple));
    auto       comm    = semiring_spec(n, SimplicityFilter::CongruenceSimple);
    comm.times_commutative = true;
    auto assoc             = semiring_spec(n, SimplicityFilter::CongruenceSimple);
    assoc.times_associative = true;
    CHECK(enumerate(comm).count() == general.counts.commutative);
    CHECK(enumerate(assoc).count() == general.counts.associative);
  }
}

TEST_CASE("work units and shards partition the search") {
  auto       spec  = semiring_spec(5, SimplicityFilter::CongruenceSimple);
  spec.count_only  = true;
  auto const whole = enumerate(spec);
  std::size_t const units = work_unit_count(spec);
  CHECK(units > 1);
  ClassCounts sum;
  for (std::size_t begin = 0; begin < units; begin += 7) {
    auto part   = spec;
    part.shard  = {begin, begin + 7};
    sum += enumerate(part).counts;
  }
  CHECK(sum == whole.counts);

  RunOptions parallel;
  parallel.jobs = 4;
  CHECK(enumerate(spec, parallel).counts == whole.counts);
}

TEST_CASE("per-skeleton completion agrees with the driver") {
  auto const spec = semiring_spec(4, SimplicityFilter::All);
  ClassCounts sum;
  std::size_t sunk = 0;
  for (auto const& t : enumerate_additive_skeletons(4)) {
    sum += complete_multiplications(t, spec, [&](CayleyTable const& times) {
      CHECK(is_distributive(t, times));
      ++sunk;
    });
  }
  CHECK(sum == enumerate(spec).counts);
  CHECK(sunk == sum.total);
}

TEST_CASE("resource ceiling") {
  auto       spec = semiring_spec(5, SimplicityFilter::CongruenceSimple);
  RunOptions tight;
  tight.work_ceiling = 10;
  CHECK(projected_branch_count(spec) > 10);
  CHECK_THROWS_AS(enumerate(spec, tight), ResourceCeilingExceeded);
  spec.count_only = true;
  CHECK_NOTHROW(enumerate(spec, tight));
}

TEST_CASE("groupoid enumeration") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::vector<Element>> keys;
    std::set<std::vector<Element>> comm_keys;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Element> cells(n * n);
      std::size_t c = code;
      for (auto& x : cells) {
        x = static_cast<Element>(c % n);
        c /= n;
      }
      CayleyTable const t(n, cells);
      auto key = oracle::canonical_key({t}, false);
      keys.insert(key);
      if (is_commutative(t)) {
        comm_keys.insert(key);
      }
    }
    CHECK(enumerate_groupoids(n, {}).size() == keys.size());
    GroupoidConstraints comm;
    comm.commutative = true;
    CHECK(enumerate_groupoids(n, comm).size() == comm_keys.size());
  }
  CHECK(enumerate_groupoids(2, {}).size() == 10);
  CHECK(enumerate_groupoids(3, {}).size() == 3330);
}

TEST_CASE("transitive groupoid scan") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::vector<Element>> keys;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Element> cells(n * n);
      std::size_t c = code;
      for (auto& x : cells) {
        x = static_cast<Element>(c % n);
        c /= n;
      }
      CayleyTable const t(n, cells);
      std::set<Element> images;
      for (auto const& p : oracle::automorphisms(t)) {
        images.insert(p[0]);
      }
      if (images.size() == n) {
        keys.insert(oracle::canonical_key({t}, false));
      }
    }
    auto const raw = scan_transitive_groupoids(n, {}, ScanMethod::RawTables);
    auto const inv = scan_transitive_groupoids(n, {}, ScanMethod::InvariantTables);
    CHECK(raw.tables.size() == keys.size());
    CHECK(raw.tables == inv.tables);
  }
}

TEST_CASE("generalised parasemifields of small order") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::set<std::vector<Element>> keys;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= n;
    }
    for (auto const& times : latin_squares(n)) {
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Element> cells(n * n);
        std::size_t c = code;
        for (auto& x : cells) {
          x = static_cast<Element>(c % n);
          c /= n;
        }
        CayleyTable const plus(n, cells);
        if (oracle::distributive(plus, times)) {
          keys.insert(oracle::canonical_key({plus, times}, false));
        }
      }
    }
    auto const report = scan_parasemifields(n);
    CHECK(report.found.size() == keys.size());
    CHECK(report.commutative_semigroup_plus == 0);
    CHECK(report.all_plus_transitive);
    CHECK(report.all_plus_without_neutral_or_absorbing);
    for (auto const& r : report.found) {
      CHECK(parasemifield_check_via_mult(r.plus(), r.times()));
      CHECK(keys.count(oracle::canonical_key({r.plus(), r.times()}, false)) == 1);
    }
  }
}

TEST_CASE("checkpoint header identifies the run") {
  auto a = semiring_spec(4, SimplicityFilter::CongruenceSimple);
  auto b = a;
  b.times_commutative = true;
  CHECK(checkpoint_header(a) != checkpoint_header(b));
  CHECK(checkpoint_header(a) == checkpoint_header(semiring_spec(4, SimplicityFilter::CongruenceSimple)));
}
