#ifndef RINGOID_CAYLEY_TABLE_HPP_
#define RINGOID_CAYLEY_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ringoid {

/// Carrier elements are the integers 0, ..., n-1.
using Element = std::uint8_t;

/// A map on the carrier, stored as its image list.
using Transformation = std::vector<Element>;

inline constexpr std::size_t kMaxOrder = 255;

/// One binary operation on {0, ..., n-1}, stored row-major:
/// entry (a, b) is a o b.  Row a is the left translation L_a and
/// column b the right translation R_b.
class CayleyTable {
 public:
  /// Throws std::invalid_argument if n is 0, too large, the entry count is
  /// not n*n, or some entry lies outside the carrier.
  CayleyTable(std::size_t n, std::vector<Element> entries);

  static CayleyTable from_rows(std::vector<std::vector<int>> const& rows);

  template <typename F>
  static CayleyTable from_function(std::size_t n, F&& op) {
    std::vector<Element> entries(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        entries[a * n + b] = static_cast<Element>(op(a, b));
      }
    }
    return CayleyTable(n, std::move(entries));
  }

  std::size_t size() const noexcept { return n_; }

  Element operator()(std::size_t a, std::size_t b) const noexcept {
    return entries_[a * n_ + b];
  }

  std::span<Element const> entries() const noexcept { return entries_; }
  std::span<Element const> row(std::size_t a) const noexcept {
    return std::span<Element const>(entries_).subspan(a * n_, n_);
  }
  Transformation left_translation(std::size_t a) const;
  Transformation right_translation(std::size_t b) const;

  CayleyTable transpose() const;

  /// The table of the isomorphic copy obtained by renaming x to perm[x]:
  /// result(perm[a], perm[b]) = perm[a o b].
  CayleyTable relabel(std::span<Element const> perm) const;

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
  friend std::strong_ordering operator<=>(CayleyTable const& lhs,
                                          CayleyTable const& rhs) {
    if (auto c = lhs.n_ <=> rhs.n_; c != 0) {
      return c;
    }
    return lhs.entries_ <=> rhs.entries_;
  }

 private:
  std::size_t          n_;
  std::vector<Element> entries_;
};

// Named tables used throughout tests, demos and the CLI.

/// x o y = max(x, y): the join of the chain 0 < 1 < ... < n-1.
CayleyTable chain_max(std::size_t n);
/// x o y = y.
CayleyTable right_zero(std::size_t n);
/// x o y = x.
CayleyTable left_zero(std::size_t n);
CayleyTable constant_table(std::size_t n, Element c);
CayleyTable cyclic_addition(std::size_t m);
CayleyTable cyclic_multiplication(std::size_t m);

// Groupoid predicates, all by exhaustive scan.

bool is_associative(CayleyTable const& t);
bool is_commutative(CayleyTable const& t);
bool is_idempotent(CayleyTable const& t);
/// Every row and every column is a permutation (a Latin square).
bool is_quasigroup(CayleyTable const& t);
/// a o b = a o c implies b = c, and b o a = c o a implies b = c.
bool is_cancellative(CayleyTable const& t);

std::optional<Element> neutral_element(CayleyTable const& t);
std::optional<Element> absorbing_element(CayleyTable const& t);

/// Cardinalities of the sets of elements for which s is left-neutral,
/// right-neutral, left-absorbing and right-absorbing.
struct ElementStats {
  std::size_t nl = 0;
  std::size_t nr = 0;
  std::size_t al = 0;
  std::size_t ar = 0;

  friend bool operator==(ElementStats const&, ElementStats const&) = default;
};

ElementStats element_stats(CayleyTable const& t, Element s);

/// k-fold sum k*a = a + ... + a.  Requires an associative and commutative
/// table; throws std::invalid_argument for k = 0 or a non-semigroup table.
Element nfold_sum(CayleyTable const& plus, Element a, std::size_t k);

/// f(x o y) = f(x) o f(y) for all x, y.
bool is_endomorphism(CayleyTable const& t, std::span<Element const> f);

}  // namespace ringoid

#endif  // RINGOID_CAYLEY_TABLE_HPP_
