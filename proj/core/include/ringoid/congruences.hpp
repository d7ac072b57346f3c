#ifndef RINGOID_CONGRUENCES_HPP_
#define RINGOID_CONGRUENCES_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"
#include "ringoid/subset_mask.hpp"

namespace ringoid {

/// An equivalence relation on {0, ..., n-1}, stored as a class id per
/// element.  Ids are renumbered in order of first occurrence, so two
/// partitions compare equal iff they are the same set partition.
class Partition {
 public:
  /// Any labelling; elements with equal labels share a class.
  explicit Partition(std::vector<std::size_t> const& labels);

  static Partition identity(std::size_t n);
  static Partition full(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t class_of(std::size_t x) const noexcept { return class_of_[x]; }
  std::vector<std::size_t> const& class_ids() const noexcept { return class_of_; }
  bool related(std::size_t a, std::size_t b) const noexcept {
    return class_of_[a] == class_of_[b];
  }
  bool is_identity() const noexcept { return num_classes_ == size(); }
  bool is_full() const noexcept { return num_classes_ == 1; }

  /// Classes as sorted element lists, ordered by smallest member.
  std::vector<std::vector<Element>> classes() const;

  /// c1 refines c2: every class of *this lies inside a class of other.
  bool refines(Partition const& other) const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend auto operator<=>(Partition const&, Partition const&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t              num_classes_ = 0;
};

/// Compatibility with every left and right translation of the table.
bool is_congruence(CayleyTable const& t, Partition const& p);
/// A congruence of both the addition and the multiplication.
bool is_congruence(Ringoid const& r, Partition const& p);

/// Smallest congruence relating a and b.  Throws std::out_of_range for
/// elements outside the carrier.
Partition principal_congruence(Ringoid const& r, Element a, Element b);

/// True iff n = 1 or every pair of distinct elements generates the full
/// relation.
bool is_congruence_simple(Ringoid const& r);

/// First pair (a, b), a < b in lexicographic order, whose principal
/// congruence is proper; identity when the ringoid is congruence-simple.
Partition congruence_witness(Ringoid const& r);

inline constexpr std::size_t kMaxBruteForceCongruenceOrder = 8;

/// Every congruence, by filtering all set partitions of the carrier.
/// Throws std::length_error above kMaxBruteForceCongruenceOrder.
std::vector<Partition> all_congruences(Ringoid const& r);

/// All set partitions of {0, ..., n-1} in restricted-growth order.
std::vector<Partition> all_partitions(std::size_t n);

/// The multiples {k*b : k >= 1} of b, walked until the first repeat.
SubsetMask multiples(CayleyTable const& plus, Element b);

/// a <= b iff k*b = x + a for some k >= 1 and some x, as an n*n matrix
/// (row a, column b).  Requires a semiring.
std::vector<bool> additive_preorder(Ringoid const& r);

/// The symmetric part of additive_preorder, as a partition.  Requires a
/// semiring; throws std::invalid_argument otherwise.
Partition preorder_rho(Ringoid const& r);

/// Relates x and y iff x + a = y + b for some a, b in the ideal.  Throws
/// std::invalid_argument unless r is a semiring and ideal is an ideal, and
/// std::logic_error if the relation fails to be transitive.
Partition rho_from_ideal(Ringoid const& r, SubsetMask const& ideal);

enum class PlusDichotomy { Idempotent, Group, Other };
enum class NoNeutralDichotomy { Cancellative, AbsorbingDoubling, Neither };

/// Requires a semiring whose addition has a neutral element.
PlusDichotomy plus_dichotomy(Ringoid const& r);

/// Requires a semiring whose addition is neither idempotent nor has a
/// neutral element.
NoNeutralDichotomy no_neutral_dichotomy(Ringoid const& r);

std::string_view to_string(PlusDichotomy d) noexcept;
std::string_view to_string(NoNeutralDichotomy d) noexcept;

}  // namespace ringoid

#endif  // RINGOID_CONGRUENCES_HPP_
