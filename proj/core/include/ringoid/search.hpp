#ifndef RINGOID_SEARCH_HPP_
#define RINGOID_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"
#include "ringoid/symmetry.hpp"

namespace ringoid {

inline constexpr std::string_view kEngineVersion = "ringoid-engine 1.0.0";

enum class StructureClass {
  IdempotentSemiringWithZero,  // idempotent addition, absorbing zero 0
  Groupoid,                    // single tables
  ParasemifieldCandidate,      // quasigroup multiplication
};

enum class TimesClass { General, Commutative, Associative };

enum class SimplicityFilter { CongruenceSimple, KIdealSimple, IdealSimple, All };

std::string_view to_string(StructureClass c) noexcept;
std::string_view to_string(TimesClass c) noexcept;
std::string_view to_string(SimplicityFilter f) noexcept;
std::optional<TimesClass>       parse_times_class(std::string_view s) noexcept;
std::optional<SimplicityFilter> parse_filter(std::string_view s) noexcept;

/// Half-open range of work-unit ids.
struct WorkRange {
  std::size_t begin = 0;
  std::size_t end   = std::numeric_limits<std::size_t>::max();
};

struct SearchSpec {
  std::size_t      order     = 1;
  StructureClass   structure = StructureClass::IdempotentSemiringWithZero;
  bool             times_commutative = false;
  bool             times_associative = false;
  SimplicityFilter filter            = SimplicityFilter::CongruenceSimple;
  bool             count_only        = false;
  bool             prune             = true;
  WorkRange        shard;

  TimesClass times_class() const noexcept {
    if (times_associative) {
      return TimesClass::Associative;
    }
    return times_commutative ? TimesClass::Commutative : TimesClass::General;
  }
};

/// Tallies of accepted structures.  `commutative` and `associative` count
/// the accepted structures whose multiplication has that property.
struct ClassCounts {
  std::uint64_t total       = 0;
  std::uint64_t commutative = 0;
  std::uint64_t associative = 0;

  ClassCounts& operator+=(ClassCounts const& o) noexcept {
    total += o.total;
    commutative += o.commutative;
    associative += o.associative;
    return *this;
  }
  std::uint64_t of(TimesClass c) const noexcept {
    switch (c) {
      case TimesClass::Commutative:
        return commutative;
      case TimesClass::Associative:
        return associative;
      case TimesClass::General:
        break;
    }
    return total;
  }
  friend bool operator==(ClassCounts const&, ClassCounts const&) = default;
};

struct Provenance {
  std::string engine_version{kEngineVersion};
  double      seconds       = 0.0;
  std::size_t units_run     = 0;
  std::size_t units_resumed = 0;
};

struct EnumerationResult {
  SearchSpec  spec;
  ClassCounts counts;
  /// Search leaves reached before filtering (depends on pruning).
  std::uint64_t leaves = 0;
  /// Materialised structures in sorted order, unless count_only.
  std::optional<std::vector<Ringoid>>     ringoids;
  std::optional<std::vector<CayleyTable>> groupoids;
  Provenance                              provenance;

  std::uint64_t count() const noexcept { return counts.of(spec.times_class()); }
};

/// Thrown when a run would exceed the configured branch ceiling without
/// count_only.
class ResourceCeilingExceeded : public std::runtime_error {
 public:
  ResourceCeilingExceeded(double projected, double ceiling);
  double projected() const noexcept { return projected_; }

 private:
  double projected_;
};

inline constexpr double kDefaultWorkCeiling = 1e10;

struct RunOptions {
  unsigned    jobs = 1;
  std::string checkpoint_path;  // empty: no checkpoint
  bool        resume       = false;
  double      work_ceiling = kDefaultWorkCeiling;
};

/// Join-semilattices on {0..n-1} with bottom 0 (commutative idempotent
/// monoids with neutral 0), one per isomorphism class, each in canonical
/// form, sorted.  Requires 1 <= n <= 8.
std::vector<CayleyTable> enumerate_additive_skeletons(std::size_t n);

/// Precomputed data for completing multiplications over one skeleton.
struct Skeleton {
  explicit Skeleton(CayleyTable plus);

  CayleyTable                 plus;
  std::size_t                 n;
  Element                     top;
  std::vector<Element>        order;           // linear extension of S \ {0}
  std::vector<bool>           join_irreducible;
  std::vector<Element>        lower_cover;     // for join-irreducibles
  std::vector<Transformation> endomorphisms;   // zero-preserving, sorted
  std::vector<Permutation>    automorphisms;   // non-identity only
  std::vector<bool>           minimal;

  bool leq(std::size_t a, std::size_t b) const noexcept { return plus(a, b) == b; }
};

/// Every multiplication table making (skeleton, times) a ringoid with 0
/// multiplicatively absorbing, one per orbit of Aut(skeleton), passing the
/// filter and multiplication constraints in `spec`.  `sink` (may be empty)
/// receives each accepted table.  Returns the per-class tallies.
ClassCounts complete_multiplications(
    CayleyTable const& skeleton, SearchSpec const& spec,
    std::function<void(CayleyTable const&)> const& sink);

/// One work unit: the branch fixing the column of the top element to the
/// `branch`-th zero-preserving endomorphism.
ClassCounts complete_multiplications_unit(
    Skeleton const& skeleton, SearchSpec const& spec, std::size_t branch,
    std::function<void(CayleyTable const&)> const& sink,
    std::uint64_t* leaves = nullptr);

/// Number of work units (semiring structure only).
std::size_t work_unit_count(SearchSpec const& spec);

/// Upper bound on search leaves used by the resource guard.
double projected_branch_count(SearchSpec const& spec);

/// Runs the whole search.
EnumerationResult enumerate(SearchSpec const& spec, RunOptions const& options = {});

struct GroupoidConstraints {
  bool commutative = false;
  bool associative = false;
  bool quasigroup  = false;
  bool idempotent  = false;

  bool admits(CayleyTable const& t) const;
};

/// All groupoids of order n (n <= 3) satisfying the constraints, one per
/// isomorphism class, canonical and sorted.
std::vector<CayleyTable> enumerate_groupoids(std::size_t n,
                                             GroupoidConstraints const& c);

/// Constant stats across elements, nl = ar, al = nr, and all four equal
/// when commutative.  Necessary for a transitive automorphism group.
bool passes_transitivity_prefilter(CayleyTable const& t);

enum class ScanMethod { Auto, RawTables, InvariantTables };

struct TransitiveScanResult {
  std::vector<CayleyTable> tables;  // canonical, sorted
  std::uint64_t            candidates  = 0;
  std::uint64_t            prefiltered = 0;  // rejected before Aut
  bool                     exhaustive  = true;
};

/// Groupoids with transitive automorphism group, up to isomorphism.
/// Exhaustive for n <= 5: a raw scan of all tables for n <= 3, otherwise
/// tables invariant under each transitive subgroup of Sym(n).  For n > 5,
/// `samples` random tables invariant under the n-cycle are drawn.
TransitiveScanResult scan_transitive_groupoids(std::size_t n,
                                               GroupoidConstraints const& c,
                                               ScanMethod    method  = ScanMethod::Auto,
                                               std::size_t   samples = 0,
                                               std::uint64_t seed    = 1);

/// All Latin squares of order n, in lexicographic order.
std::vector<CayleyTable> latin_squares(std::size_t n);

/// Tables invariant under every permutation of the group.
std::vector<CayleyTable> invariant_tables(PermSet const& g);

struct ParasemifieldScanReport {
  std::size_t          order              = 0;
  std::size_t          quasigroups        = 0;  // Latin squares examined
  std::vector<Ringoid> found;                  // canonical, sorted
  std::size_t          commutative_semigroup_plus = 0;
  std::size_t          associative_plus   = 0;
  std::size_t          commutative_plus   = 0;
  bool                 all_plus_transitive = true;
  bool                 all_plus_without_neutral_or_absorbing = true;
};

/// Every generalised parasemifield of order n <= 4 up to isomorphism.
ParasemifieldScanReport scan_parasemifields(std::size_t n);

/// First line of a checkpoint file; resume refuses a mismatch.
std::string checkpoint_header(SearchSpec const& spec);

}  // namespace ringoid

#endif  // RINGOID_SEARCH_HPP_
