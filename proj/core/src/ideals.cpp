#include "ringoid/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace ringoid {

namespace {

void require_nonempty(SubsetMask const& a, Ringoid const& r, char const* what) {
  if (a.universe_size() != r.size()) {
    throw std::invalid_argument(std::string(what) + ": size mismatch");
  }
  if (a.empty()) {
    throw std::invalid_argument(std::string(what) + ": subset is empty");
  }
}

void require_idempotent_semiring(Ringoid const& r, char const* what) {
  if (!r.flags().semiring() || !r.flags().plus_idempotent) {
    throw std::invalid_argument(
        std::string(what) + ": requires a semiring with idempotent addition");
  }
}

// Elements outside `a` reachable in one step: A+A, S*A, A*S.
std::uint32_t one_step_closure(Ringoid const& r, SubsetMask const& a) {
  std::size_t const n   = r.size();
  std::uint32_t     out = a.bits();
  for (std::size_t x = 0; x < n; ++x) {
    if (!a.contains(x)) {
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (a.contains(y)) {
        out |= std::uint32_t{1} << r.add(x, y);
      }
      out |= std::uint32_t{1} << r.mul(y, x);
      out |= std::uint32_t{1} << r.mul(x, y);
    }
  }
  return out;
}

}  // namespace

bool is_ideal(Ringoid const& r, SubsetMask const& a) {
  require_nonempty(a, r, "is_ideal");
  return one_step_closure(r, a) == a.bits();
}

bool is_k_ideal(Ringoid const& r, SubsetMask const& a) {
  if (!is_ideal(r, a)) {
    return false;
  }
  std::size_t const n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!a.contains(x)) {
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!a.contains(y) && (a.contains(r.add(x, y)) || a.contains(r.add(y, x)))) {
        return false;
      }
    }
  }
  return true;
}

SubsetMask generated_ideal(Ringoid const& r, SubsetMask const& seed) {
  require_nonempty(seed, r, "generated_ideal");
  SubsetMask current = seed;
  while (true) {
    SubsetMask next(r.size(), one_step_closure(r, current));
    if (next == current) {
      return current;
    }
    current = next;
  }
}

std::vector<SubsetMask> enumerate_ideals_by_closure(Ringoid const& r,
                                                    bool         k_only) {
  std::size_t const n = r.size();
  if (n > kMaxIdealEnumeration) {
    throw std::length_error("enumerate_ideals: carrier too large");
  }
  std::set<std::uint32_t>  seen;
  std::deque<SubsetMask>   queue;
  auto visit = [&](SubsetMask const& ideal) {
    if (seen.insert(ideal.bits()).second) {
      queue.push_back(ideal);
    }
  };
  for (std::size_t x = 0; x < n; ++x) {
    visit(generated_ideal(r, SubsetMask::singleton(n, static_cast<Element>(x))));
  }
  // Every ideal A is reached: grow <a> inside A one member of A at a time.
  while (!queue.empty()) {
    SubsetMask const ideal = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (!ideal.contains(x)) {
        SubsetMask bigger = ideal;
        bigger.insert(x);
        visit(generated_ideal(r, bigger));
      }
    }
  }
  std::vector<SubsetMask> out;
  for (std::uint32_t bits : seen) {
    SubsetMask m(n, bits);
    if (!k_only || is_k_ideal(r, m)) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<SubsetMask> enumerate_ideals(Ringoid const& r, bool k_only) {
  std::size_t const n = r.size();
  if (n > kMaxSubsetScanOrder) {
    return enumerate_ideals_by_closure(r, k_only);
  }
  std::vector<SubsetMask> out;
  std::uint32_t const     limit = std::uint32_t{1} << n;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    SubsetMask m(n, bits);
    if (k_only ? is_k_ideal(r, m) : is_ideal(r, m)) {
      out.push_back(m);
    }
  }
  return out;
}

namespace {

bool has_proper_ideal(Ringoid const& r, bool k_only, std::size_t min_size) {
  for (auto const& a : enumerate_ideals(r, k_only)) {
    if (!a.is_full() && a.size() >= min_size) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_ideal_simple(Ringoid const& r) {
  return !has_proper_ideal(r, false, 2);
}

bool is_ideal_free(Ringoid const& r) {
  return !has_proper_ideal(r, false, 1);
}

bool is_k_ideal_simple(Ringoid const& r) {
  return !has_proper_ideal(r, true, 2);
}

Element top_element(Ringoid const& r) {
  require_idempotent_semiring(r, "top_element");
  Element top = 0;
  for (std::size_t a = 1; a < r.size(); ++a) {
    top = r.add(top, a);
  }
#ifndef NDEBUG
  Element reversed = static_cast<Element>(r.size() - 1);
  for (std::size_t a = r.size() - 1; a-- > 0;) {
    reversed = r.add(a, reversed);
  }
  assert(reversed == top);
#endif
  return top;
}

SubsetMask minimal_elements(Ringoid const& r) {
  require_idempotent_semiring(r, "minimal_elements");
  std::size_t const n = r.size();
  SubsetMask        m(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < n && minimal; ++y) {
      minimal = y == x || r.add(y, x) != x;
    }
    if (minimal) {
      m.insert(x);
    }
  }
  return m;
}

bool k_ideal_simple_fast(Ringoid const& r) {
  require_idempotent_semiring(r, "k_ideal_simple_fast");
  Element const    top     = top_element(r);
  SubsetMask const minimal = minimal_elements(r);
  auto leq = [&](Element a, Element b) { return r.add(a, b) == b; };
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (minimal.contains(x) || x == top) {
      continue;
    }
    auto const e = static_cast<Element>(x);
    if (leq(r.mul(top, e), e) && leq(r.mul(e, top), e)) {
      return false;
    }
  }
  return true;
}

SubsetMask down_set(Ringoid const& r, Element x) {
  require_idempotent_semiring(r, "down_set");
  if (x >= r.size()) {
    throw std::invalid_argument("down_set: element out of range");
  }
  SubsetMask m(r.size());
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (r.add(a, x) == x) {
      m.insert(a);
    }
  }
  return m;
}

bool is_group(CayleyTable const& t) {
  if (!is_associative(t)) {
    return false;
  }
  auto e = neutral_element(t);
  if (!e) {
    return false;
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < t.size() && !has_inverse; ++b) {
      has_inverse = t(a, b) == *e && t(b, a) == *e;
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

bool semigroup_group_criterion(CayleyTable const& t) {
  if (!is_associative(t)) {
    throw std::invalid_argument("semigroup_group_criterion: table not associative");
  }
  // Surjective translations on a finite carrier are permutations.
  if (!is_quasigroup(t)) {
    return false;
  }
  if (!is_group(t)) {
    throw std::logic_error(
        "semigroup_group_criterion: surjective translations without a group");
  }
  return true;
}

namespace {

// (S \ {o}, *) is a group, o absorbing.
bool is_group_with_absorbing(CayleyTable const& t) {
  auto o = absorbing_element(t);
  if (!o || t.size() < 2) {
    return false;
  }
  std::vector<Element> rest;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x != *o) {
      rest.push_back(static_cast<Element>(x));
    }
  }
  // Closed, and a quasigroup on the rest; with associativity that is a group.
  for (Element a : rest) {
    std::vector<bool> row_seen(t.size()), col_seen(t.size());
    for (Element b : rest) {
      Element const ab = t(a, b), ba = t(b, a);
      if (ab == *o || ba == *o || row_seen[ab] || col_seen[ba]) {
        return false;
      }
      row_seen[ab] = col_seen[ba] = true;
    }
  }
  return true;
}

}  // namespace

Trichotomy trichotomy(Ringoid const& r) {
  if (!r.flags().times_associative || !r.flags().times_commutative ||
      !is_ideal_simple(r)) {
    return Trichotomy::NotApplicable;
  }
  auto const&       times = r.times();
  std::size_t const n     = r.size();
  SubsetMask        squares(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      squares.insert(times(a, b));
    }
  }
  if (squares.size() == 1) {
    return Trichotomy::ConstantSquare;
  }
  if (semigroup_group_criterion(times)) {
    return Trichotomy::Group;
  }
  if (is_group_with_absorbing(times)) {
    return Trichotomy::GroupWithAbsorbing;
  }
  throw std::logic_error(
      "trichotomy: ideal-simple ringoid with associative commutative "
      "multiplication fits no case");
}

std::string_view to_string(Trichotomy t) noexcept {
  switch (t) {
    case Trichotomy::ConstantSquare:
      return "constant-square";
    case Trichotomy::Group:
      return "group";
    case Trichotomy::GroupWithAbsorbing:
      return "group-with-absorbing";
    case Trichotomy::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

}  // namespace ringoid
