#ifndef RINGOID_SYMMETRY_HPP_
#define RINGOID_SYMMETRY_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"

namespace ringoid {

/// A bijection on {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(Transformation images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Element     operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<Element const> images() const noexcept { return images_; }

  /// (*this o other)(x) = (*this)[other[x]].
  Permutation compose(Permutation const& other) const;
  Permutation inverse() const;
  bool        is_identity() const noexcept;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  Transformation images_;
};

/// A materialised set of permutations of one carrier (in practice a
/// subgroup of Sym(n)), kept sorted and duplicate-free.
class PermSet {
 public:
  PermSet(std::size_t n, std::vector<Permutation> elements);

  /// Closure of the generators (and the identity) under composition.
  static PermSet generated_by(std::size_t n, std::vector<Permutation> const& gens);

  std::size_t degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<Permutation> const& elements() const noexcept { return elements_; }
  bool contains(Permutation const& p) const;

  /// Contains the identity, closed under composition and inverses.
  bool is_group() const;

  /// Orbits on the carrier, each sorted, ordered by smallest member.
  std::vector<std::vector<Element>> orbits() const;

  friend bool operator==(PermSet const&, PermSet const&) = default;

 private:
  std::size_t              n_;
  std::vector<Permutation> elements_;
};

/// All permutations compatible with the table, by backtracking over images.
PermSet automorphisms(CayleyTable const& t);
/// Common automorphisms of both operations.
PermSet automorphisms(Ringoid const& r);

inline constexpr std::size_t kMaxEndomorphismOrder = 8;

/// All maps f with f(x o y) = f(x) o f(y), sorted.  Throws std::length_error
/// above kMaxEndomorphismOrder.
std::vector<Transformation> endomorphisms(CayleyTable const& t);

/// The monoid generated by all rows and columns of the table (as maps) and
/// the identity, sorted.
std::vector<Transformation> mult_monoid(CayleyTable const& t);

/// Every left and right translation of `times` is an endomorphism of `plus`.
/// Agrees with is_distributive.
bool ringoid_check_via_mult(CayleyTable const& plus, CayleyTable const& times);

/// `times` is a quasigroup and each of its translations is an automorphism
/// of `plus`.
bool parasemifield_check_via_mult(CayleyTable const& plus,
                                  CayleyTable const& times);

bool is_transitive(PermSet const& g);
/// Transitive on ordered triples of distinct elements; false when n < 3.
bool is_triply_transitive(PermSet const& g);

struct StatsLemmasReport {
  ElementStats common;              // stats of element 0
  bool         constant    = false;  // same stats for every element
  bool         nl_equals_ar = false;
  bool         al_equals_nr = false;
  bool         commutative  = false;
  bool         all_equal    = false;  // nl = nr = al = ar

  bool holds() const noexcept {
    return constant && nl_equals_ar && al_equals_nr && (!commutative || all_equal);
  }
};

/// Evaluates the counting identities that hold for groupoids with a
/// transitive automorphism group.  Throws std::invalid_argument if the
/// automorphism group is not transitive.
StatsLemmasReport stats_lemmas_check(CayleyTable const& t);

enum class FullAutType {
  RightZero,        // x o y = y
  LeftZero,         // x o y = x
  IdemQuasi3,       // the idempotent quasigroup of order 3
  TwoElemFlip,      // x o 0 = 1, x o 1 = 0
  TwoElemFlipAnti,  // 0 o x = 1, 1 o x = 0
  NotFull,
};

/// Which groupoid with Aut = Sym(n) the table is; NotFull when Aut is
/// smaller.  Throws std::logic_error for a table with Aut = Sym(n) that is
/// none of the listed types.
FullAutType full_aut_classification(CayleyTable const& t);

std::string_view to_string(FullAutType t) noexcept;

/// x o y = 2x + 2y (mod 3).
CayleyTable idempotent_quasigroup_3();
/// x o 0 = 1, x o 1 = 0.
CayleyTable two_element_flip();

/// a o b = (a + b) / 2 in Z_m.  Throws std::invalid_argument for even m.
CayleyTable midpoint_groupoid(std::size_t m);

/// The translations x -> x + c of Z_m.
PermSet cyclic_translations(std::size_t m);

struct CanonicalForm {
  std::vector<CayleyTable> tables;
  Permutation              relabel;       // original element -> canonical label
  PermSet                  automorphisms; // of the input (fixing 0 if asked)
};

/// Lexicographically least relabelling of the concatenated tables over all
/// permutations (those fixing 0 when `fix_zero`).
CanonicalForm canonical_tables(std::span<CayleyTable const> tables, bool fix_zero);

/// Canonical representative of the isomorphism class of r and its
/// automorphism group (the stabiliser).
std::pair<Ringoid, PermSet> canonical_form(Ringoid const& r, bool fix_zero);

}  // namespace ringoid

#endif  // RINGOID_SYMMETRY_HPP_
