#ifndef RINGOID_IDEALS_HPP_
#define RINGOID_IDEALS_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"
#include "ringoid/subset_mask.hpp"

namespace ringoid {

/// (A+A) u (S*A) u (A*S) is contained in A.  Throws std::invalid_argument
/// for an empty subset.
bool is_ideal(Ringoid const& r, SubsetMask const& a);

/// An ideal with (A + A^c) u (A^c + A) inside A^c.
bool is_k_ideal(Ringoid const& r, SubsetMask const& a);

/// Smallest ideal containing the (non-empty) seed.
SubsetMask generated_ideal(Ringoid const& r, SubsetMask const& seed);

inline constexpr std::size_t kMaxSubsetScanOrder  = 16;
inline constexpr std::size_t kMaxIdealEnumeration = 20;

/// All ideals (or all k-ideals), sorted by bit pattern.  Up to
/// kMaxSubsetScanOrder every subset is tested; above that ideals are grown
/// from generated ideals one element at a time.  Throws std::length_error
/// above kMaxIdealEnumeration.
std::vector<SubsetMask> enumerate_ideals(Ringoid const& r, bool k_only = false);

/// Same contract as enumerate_ideals but always uses the closure route.
std::vector<SubsetMask> enumerate_ideals_by_closure(Ringoid const& r,
                                                    bool k_only = false);

/// No proper ideal with at least two elements.
bool is_ideal_simple(Ringoid const& r);
/// No proper ideal at all.
bool is_ideal_free(Ringoid const& r);
/// No proper k-ideal with at least two elements.
bool is_k_ideal_simple(Ringoid const& r);

/// Sum of all elements under an idempotent semiring addition (left fold).
Element top_element(Ringoid const& r);

/// Minimal elements of the order a <= b iff a + b = b.
SubsetMask minimal_elements(Ringoid const& r);

/// k-ideal-simplicity of a finite additively idempotent semiring, decided
/// from the top element alone: for every x neither minimal nor top,
/// top*x is not below x or x*top is not below x.
/// Throws std::invalid_argument unless r is a semiring with idempotent plus.
bool k_ideal_simple_fast(Ringoid const& r);

/// {a : a + x = x}.  Same precondition as k_ideal_simple_fast.
SubsetMask down_set(Ringoid const& r, Element x);

/// S*a = S = a*S for every a.  For an associative table this is exactly the
/// group case; throws std::logic_error if the criterion holds but no group
/// structure is found, std::invalid_argument for non-associative input.
bool semigroup_group_criterion(CayleyTable const& t);

/// The table is associative with a neutral element and inverses.
bool is_group(CayleyTable const& t);

enum class Trichotomy { ConstantSquare, Group, GroupWithAbsorbing, NotApplicable };

/// For ideal-simple ringoids with associative commutative multiplication:
/// |S*S| = 1, (S,*) is a group, or (S,*) is a group with an adjoined
/// absorbing element.  NotApplicable when the hypotheses fail.  Throws
/// std::logic_error if the hypotheses hold and no case does.
Trichotomy trichotomy(Ringoid const& r);

std::string_view to_string(Trichotomy t) noexcept;

}  // namespace ringoid

#endif  // RINGOID_IDEALS_HPP_
