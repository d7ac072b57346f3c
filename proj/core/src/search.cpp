#include "ringoid/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "ringoid/congruences.hpp"
#include "ringoid/ideals.hpp"

namespace ringoid {

std::string_view to_string(StructureClass c) noexcept {
  switch (c) {
    case StructureClass::IdempotentSemiringWithZero:
      return "semiring-idempotent-abszero";
    case StructureClass::Groupoid:
      return "groupoid";
    case StructureClass::ParasemifieldCandidate:
      return "generalised-parasemifield-candidate";
  }
  return "?";
}

std::string_view to_string(TimesClass c) noexcept {
  switch (c) {
    case TimesClass::General:
      return "general";
    case TimesClass::Commutative:
      return "commutative";
    case TimesClass::Associative:
      return "associative";
  }
  return "?";
}

std::string_view to_string(SimplicityFilter f) noexcept {
  switch (f) {
    case SimplicityFilter::CongruenceSimple:
      return "congruence-simple";
    case SimplicityFilter::KIdealSimple:
      return "k-ideal-simple";
    case SimplicityFilter::IdealSimple:
      return "ideal-simple";
    case SimplicityFilter::All:
      return "all";
  }
  return "?";
}

std::optional<TimesClass> parse_times_class(std::string_view s) noexcept {
  for (auto c : {TimesClass::General, TimesClass::Commutative,
                 TimesClass::Associative}) {
    if (s == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<SimplicityFilter> parse_filter(std::string_view s) noexcept {
  for (auto f : {SimplicityFilter::CongruenceSimple, SimplicityFilter::KIdealSimple,
                 SimplicityFilter::IdealSimple, SimplicityFilter::All}) {
    if (s == to_string(f)) {
      return f;
    }
  }
  return std::nullopt;
}

ResourceCeilingExceeded::ResourceCeilingExceeded(double projected, double ceiling)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "projected branch count " << projected << " exceeds the ceiling "
           << ceiling << "; rerun with --count-only or raise RINGOID_WORK_CEILING";
        return os.str();
      }()),
      projected_(projected) {}

namespace {

constexpr std::size_t kMaxSkeletonOrder = 8;

using Mask = std::uint32_t;

bool bit(Mask m, std::size_t i) { return (m >> i) & 1U; }

// Greatest element of `set` under the strict down-sets, if any.
bool has_greatest(Mask set, std::vector<Mask> const& below, std::size_t k) {
  for (std::size_t g = 0; g < k; ++g) {
    if (bit(set, g) && (set & ~(below[g] | (Mask{1} << g))) == 0) {
      return true;
    }
  }
  return false;
}

class SkeletonGenerator {
 public:
  explicit SkeletonGenerator(std::size_t n) : n_(n), below_(n, 0) {}

  std::vector<CayleyTable> run() {
    if (n_ == 1) {
      return {CayleyTable(1, {0})};
    }
    extend(1);
    return {found_.begin(), found_.end()};
  }

 private:
  // Element k gets a strict down-set: a down-closed subset of {0..k-1}
  // containing 0.  Labels follow non-decreasing down-set size, which is a
  // linear extension of every poset.
  void extend(std::size_t k) {
    if (k == n_) {
      finish();
      return;
    }
    Mask const limit = Mask{1} << k;
    for (Mask d = 1; d < limit; d += 2) {
      if (k >= 2 && std::popcount(d) < std::popcount(below_[k - 1])) {
        continue;
      }
      bool closed = true;
      for (std::size_t y = 0; y < k && closed; ++y) {
        closed = !bit(d, y) || (below_[y] & ~d) == 0;
      }
      if (!closed) {
        continue;
      }
      // Down-closed subsets of a lattice are meet-semilattices.
      bool meets = true;
      for (std::size_t x = 1; x < k && meets; ++x) {
        meets = has_greatest(d & (below_[x] | (Mask{1} << x)), below_, k);
      }
      if (!meets) {
        continue;
      }
      below_[k] = d;
      extend(k + 1);
    }
    below_[k] = 0;
  }

  void finish() {
    std::vector<Element> entries(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        // Least upper bound: an upper bound below every other upper bound.
        Mask upper = 0;
        for (std::size_t c = 0; c < n_; ++c) {
          bool const above_a = c == a || bit(below_[c], a);
          bool const above_b = c == b || bit(below_[c], b);
          if (above_a && above_b) {
            upper |= Mask{1} << c;
          }
        }
        int join = -1;
        for (std::size_t c = 0; c < n_ && join < 0; ++c) {
          bool least = bit(upper, c);
          for (std::size_t u = 0; u < n_ && least; ++u) {
            least = !bit(upper, u) || u == c || bit(below_[u], c);
          }
          if (least) {
            join = static_cast<int>(c);
          }
        }
        if (join < 0) {
          return;
        }
        entries[a * n_ + b] = static_cast<Element>(join);
      }
    }
    CayleyTable const plus(n_, std::move(entries));
    CayleyTable const tables[] = {plus};
    found_.insert(std::move(canonical_tables(tables, true).tables.front()));
  }

  std::size_t           n_;
  std::vector<Mask>     below_;
  std::set<CayleyTable> found_;
};

}  // namespace

std::vector<CayleyTable> enumerate_additive_skeletons(std::size_t n) {
  if (n == 0 || n > kMaxSkeletonOrder) {
    throw std::invalid_argument("enumerate_additive_skeletons: order must be in 1..8");
  }
  return SkeletonGenerator(n).run();
}

Skeleton::Skeleton(CayleyTable p) : plus(std::move(p)), n(plus.size()), top(0) {
  if (n > kMaxSkeletonOrder) {
    throw std::invalid_argument("Skeleton: order must be at most 8");
  }
  if (!is_commutative(plus) || !is_associative(plus) || !is_idempotent(plus) ||
      neutral_element(plus) != Element{0}) {
    throw std::invalid_argument(
        "Skeleton: addition must be a semilattice with neutral element 0");
  }
  for (std::size_t a = 1; a < n; ++a) {
    top = plus(top, a);
  }
  std::vector<std::size_t> down_size(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      down_size[a] += leq(b, a);
    }
  }
  for (std::size_t a = 1; a < n; ++a) {
    order.push_back(static_cast<Element>(a));
  }
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    return down_size[x] < down_size[y];
  });
  join_irreducible.assign(n, false);
  lower_cover.assign(n, 0);
  minimal.assign(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Element> covers;
    bool                 is_minimal = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || !leq(y, x)) {
        continue;
      }
      is_minimal = false;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) {
        cover = z == x || z == y || !(leq(y, z) && leq(z, x));
      }
      if (cover) {
        covers.push_back(static_cast<Element>(y));
      }
    }
    minimal[x] = is_minimal;
    if (x != 0 && covers.size() == 1) {
      join_irreducible[x] = true;
      lower_cover[x]      = covers.front();
    }
  }
  for (auto& f : ringoid::endomorphisms(plus)) {
    if (f[0] == 0) {
      endomorphisms.push_back(std::move(f));
    }
  }
  auto const group = ringoid::automorphisms(plus);
  for (auto const& g : group.elements()) {
    if (!g.is_identity()) {
      automorphisms.push_back(g);
    }
  }
}

namespace {

using Row = std::array<Element, kMaxSkeletonOrder>;

// Depth-first completion of the multiplication over one skeleton.  Rows are
// zero-preserving endomorphisms of the addition (left distributivity); the
// map a -> L_a must preserve joins (right distributivity), so rows of
// join-irreducible elements are branched on and the rest are joins.
class Completion {
 public:
  Completion(Skeleton const& sk, SearchSpec const& spec,
             std::function<void(CayleyTable const&)> const& sink)
      : sk_(sk),
        spec_(spec),
        sink_(sink),
        n_(sk.n),
        top_(sk.top),
        materialise_(static_cast<bool>(sink)) {
    prune_ = spec.prune && spec.filter != SimplicityFilter::All;
    for (auto const& gperm : sk_.automorphisms) {
      auto inv = gperm.inverse();
      autos_.emplace_back(Transformation(gperm.images().begin(), gperm.images().end()),
                          Transformation(inv.images().begin(), inv.images().end()));
    }
  }

  void run_branch(std::size_t branch) {
    auto const& column = sk_.endomorphisms.at(branch);
    std::copy(column.begin(), column.end(), top_column_.begin());
    rows_[0].fill(0);
    known_.fill(false);
    known_[0] = true;
    for (auto const& candidate : sk_.endomorphisms) {
      if (spec_.times_commutative ? candidate != column
                                  : candidate[top_] != column[top_]) {
        continue;
      }
      if (prune_ && top_prunes(candidate)) {
        continue;
      }
      std::copy(candidate.begin(), candidate.end(), rows_[top_].begin());
      known_[top_] = true;
      if (associative_ok()) {
        extend(0);
      }
      known_[top_] = false;
    }
  }

  ClassCounts const& counts() const noexcept { return counts_; }
  std::uint64_t      leaves() const noexcept { return leaves_; }

 private:
  bool leq(Element a, Element b) const noexcept { return sk_.plus(a, b) == b; }

  // Some x outside the minimal elements and the top has top*x <= x and
  // x*top <= x: then down(x) is a proper k-ideal with two or more elements.
  bool top_prunes(Transformation const& top_row) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == top_ || sk_.minimal[x]) {
        continue;
      }
      auto const e = static_cast<Element>(x);
      if (leq(top_row[x], e) && leq(top_column_[x], e)) {
        return true;
      }
    }
    return false;
  }

  Element join(Element a, Element b) const noexcept { return sk_.plus(a, b); }

  bool row_equals_join(std::size_t d, std::size_t b, std::size_t c) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (rows_[d][x] != join(rows_[b][x], rows_[c][x])) {
        return false;
      }
    }
    return true;
  }

  // Constraints between the freshly set row a and every known row.
  bool row_ok(std::size_t a) const {
    auto const& row = rows_[a];
    if (row[top_] != top_column_[a]) {
      return false;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      if (!leq(row[x], rows_[top_][x])) {
        return false;
      }
    }
    if (spec_.times_commutative) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (known_[b] && rows_[b][a] != row[b]) {
          return false;
        }
      }
    }
    // L_{b+c} = L_b v L_c for every triple that just became fully known.
    for (std::size_t b = 1; b < n_; ++b) {
      if (b == a || !known_[b]) {
        continue;
      }
      std::size_t const d = sk_.plus(a, b);
      if (known_[d] && !row_equals_join(d, a, b)) {
        return false;
      }
      for (std::size_t c = b + 1; c < n_; ++c) {
        if (c != a && known_[c] && sk_.plus(b, c) == a && !row_equals_join(a, b, c)) {
          return false;
        }
      }
    }
    return associative_ok();
  }

  bool associative_ok() const {
    if (!spec_.times_associative) {
      return true;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      if (!known_[x]) {
        continue;
      }
      for (std::size_t y = 0; y < n_; ++y) {
        if (!known_[y]) {
          continue;
        }
        Element const xy = rows_[x][y];
        if (!known_[xy]) {
          continue;
        }
        for (std::size_t z = 0; z < n_; ++z) {
          if (rows_[xy][z] != rows_[x][rows_[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void extend(std::size_t pos) {
    if (pos == sk_.order.size()) {
      leaf();
      return;
    }
    std::size_t const a = sk_.order[pos];
    if (a == top_) {
      // Preset; only the join constraints with the top remain.
      known_[a] = false;
      bool const ok = (known_[a] = true, row_ok(a));
      if (ok) {
        extend(pos + 1);
      }
      return;
    }
    if (sk_.join_irreducible[a]) {
      auto const& below = rows_[sk_.lower_cover[a]];
      for (auto const& candidate : sk_.endomorphisms) {
        bool monotone = true;
        for (std::size_t x = 0; x < n_ && monotone; ++x) {
          monotone = leq(below[x], candidate[x]);
        }
        if (!monotone) {
          continue;
        }
        std::copy(candidate.begin(), candidate.end(), rows_[a].begin());
        known_[a] = true;
        if (row_ok(a)) {
          extend(pos + 1);
        }
        known_[a] = false;
      }
      return;
    }
    // Not join-irreducible: the join of the rows of its lower elements.
    Row forced{};
    for (std::size_t b = 1; b < n_; ++b) {
      if (b != a && leq(static_cast<Element>(b), static_cast<Element>(a))) {
        for (std::size_t x = 0; x < n_; ++x) {
          forced[x] = join(forced[x], rows_[b][x]);
        }
      }
    }
    rows_[a]  = forced;
    known_[a] = true;
    if (row_ok(a)) {
      extend(pos + 1);
    }
    known_[a] = false;
  }

  // Lexicographically minimal among its images under Aut(skeleton).
  bool orbit_minimal() const {
    for (auto const& [g, ginv] : autos_) {
      int cmp = 0;
      for (std::size_t i = 0; i < n_ && cmp == 0; ++i) {
        for (std::size_t j = 0; j < n_ && cmp == 0; ++j) {
          Element const mine  = rows_[i][j];
          Element const image = g[rows_[ginv[i]][ginv[j]]];
          cmp                 = (image < mine) - (mine < image);
        }
      }
      if (cmp > 0) {
        return false;
      }
    }
    return true;
  }

  bool accepted(Ringoid const& r) const {
    if (n_ == 1) {
      return spec_.filter == SimplicityFilter::All;
    }
    switch (spec_.filter) {
      case SimplicityFilter::All:
        return true;
      case SimplicityFilter::IdealSimple:
        return is_ideal_simple(r);
      case SimplicityFilter::KIdealSimple:
        return spec_.prune ? k_ideal_simple_fast(r) : is_k_ideal_simple(r);
      case SimplicityFilter::CongruenceSimple:
        return (!spec_.prune || k_ideal_simple_fast(r)) && is_congruence_simple(r);
    }
    return false;
  }

  void leaf() {
    ++leaves_;
    if (!orbit_minimal()) {
      return;
    }
    std::vector<Element> entries(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::copy_n(rows_[i].begin(), n_, entries.begin() + i * n_);
    }
    CayleyTable times(n_, std::move(entries));
    if (spec_.times_commutative && !is_commutative(times)) {
      throw std::logic_error("complete_multiplications: commutativity lost");
    }
    // Independent re-verification of distributivity.
    Ringoid const r = [&] {
      try {
        return Ringoid(sk_.plus, times);
      } catch (std::invalid_argument const&) {
        throw std::logic_error("complete_multiplications: emitted a non-ringoid");
      }
    }();
    if (spec_.times_associative && !r.flags().times_associative) {
      throw std::logic_error("complete_multiplications: associativity lost");
    }
    if (!accepted(r)) {
      return;
    }
    ++counts_.total;
    counts_.commutative += r.flags().times_commutative;
    counts_.associative += r.flags().times_associative;
    if (materialise_) {
      sink_(times);
    }
  }

  Skeleton const&                                sk_;
  SearchSpec const&                              spec_;
  std::function<void(CayleyTable const&)> const& sink_;
  std::size_t                                    n_;
  std::size_t                                    top_;
  bool                                           materialise_;
  bool                                           prune_ = true;
  std::vector<std::pair<Transformation, Transformation>> autos_;
  std::array<Row, kMaxSkeletonOrder>             rows_{};
  std::array<bool, kMaxSkeletonOrder>            known_{};
  Row                                            top_column_{};
  ClassCounts                                    counts_;
  std::uint64_t                                  leaves_ = 0;
};

void require_semiring_structure(SearchSpec const& spec) {
  if (spec.structure != StructureClass::IdempotentSemiringWithZero) {
    throw std::invalid_argument("semiring search requested for another structure");
  }
  if (spec.order == 0 || spec.order > kMaxSkeletonOrder) {
    throw std::invalid_argument("semiring search: order must be in 1..8");
  }
}

}  // namespace

ClassCounts complete_multiplications_unit(
    Skeleton const& skeleton, SearchSpec const& spec, std::size_t branch,
    std::function<void(CayleyTable const&)> const& sink, std::uint64_t* leaves) {
  Completion c(skeleton, spec, sink);
  c.run_branch(branch);
  if (leaves != nullptr) {
    *leaves += c.leaves();
  }
  return c.counts();
}

ClassCounts complete_multiplications(
    CayleyTable const& skeleton, SearchSpec const& spec,
    std::function<void(CayleyTable const&)> const& sink) {
  Skeleton const sk(skeleton);
  ClassCounts    total;
  for (std::size_t b = 0; b < sk.endomorphisms.size(); ++b) {
    total += complete_multiplications_unit(sk, spec, b, sink);
  }
  return total;
}

std::size_t work_unit_count(SearchSpec const& spec) {
  require_semiring_structure(spec);
  std::size_t units = 0;
  for (auto const& plus : enumerate_additive_skeletons(spec.order)) {
    units += Skeleton(plus).endomorphisms.size();
  }
  return units;
}

namespace {

double projected_for(std::vector<Skeleton> const& skeletons) {
  double total = 0;
  for (auto const& sk : skeletons) {
    auto const irreducibles = static_cast<double>(
        std::count(sk.join_irreducible.begin(), sk.join_irreducible.end(), true));
    total += std::pow(static_cast<double>(sk.endomorphisms.size()), irreducibles + 1);
  }
  return total;
}

std::vector<Skeleton> prepare_skeletons(std::size_t n) {
  std::vector<Skeleton> out;
  for (auto& plus : enumerate_additive_skeletons(n)) {
    out.emplace_back(std::move(plus));
  }
  return out;
}

}  // namespace

double projected_branch_count(SearchSpec const& spec) {
  require_semiring_structure(spec);
  return projected_for(prepare_skeletons(spec.order));
}

std::string checkpoint_header(SearchSpec const& spec) {
  std::ostringstream os;
  os << "# ringoid-checkpoint v1 order=" << spec.order
     << " structure=" << to_string(spec.structure)
     << " class=" << to_string(spec.times_class())
     << " filter=" << to_string(spec.filter)
     << " prune=" << (spec.prune ? "on" : "off") << " shard=" << spec.shard.begin
     << "-";
  if (spec.shard.end == WorkRange{}.end) {
    os << "end";
  } else {
    os << spec.shard.end;
  }
  return os.str();
}

namespace {

struct UnitResult {
  ClassCounts              counts;
  std::uint64_t            leaves = 0;
  std::vector<CayleyTable> times;
  bool                     done = false;
};

std::map<std::size_t, UnitResult> read_checkpoint(std::string const& path,
                                                  SearchSpec const&  spec) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open checkpoint " + path);
  }
  std::string header;
  std::getline(in, header);
  if (header != checkpoint_header(spec)) {
    throw std::runtime_error("checkpoint " + path +
                             " was written for a different run: " + header);
  }
  std::map<std::size_t, UnitResult> done;
  std::string                       line;
  std::size_t                       lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::istringstream is(line);
    std::size_t        unit = 0;
    UnitResult         r;
    if (!(is >> unit >> r.counts.total >> r.counts.commutative >>
          r.counts.associative >> r.leaves)) {
      // A torn final line from an interrupted run is dropped.
      if (in.peek() == std::char_traits<char>::eof()) {
        break;
      }
      throw std::runtime_error("checkpoint " + path + ": malformed line " +
                               std::to_string(lineno));
    }
    r.done     = true;
    done[unit] = std::move(r);
  }
  return done;
}

EnumerationResult enumerate_semirings(SearchSpec const& spec,
                                      RunOptions const& options) {
  require_semiring_structure(spec);
  auto const start     = std::chrono::steady_clock::now();
  auto const skeletons = prepare_skeletons(spec.order);

  if (!spec.count_only) {
    double const projected = projected_for(skeletons);
    if (projected > options.work_ceiling) {
      throw ResourceCeilingExceeded(projected, options.work_ceiling);
    }
    if (options.resume) {
      throw std::invalid_argument(
          "resume restores counts only; combine it with count_only");
    }
  }

  struct Unit {
    std::size_t skeleton;
    std::size_t branch;
  };
  std::vector<Unit> units;
  for (std::size_t s = 0; s < skeletons.size(); ++s) {
    for (std::size_t b = 0; b < skeletons[s].endomorphisms.size(); ++b) {
      units.push_back({s, b});
    }
  }
  std::size_t const first = std::min(spec.shard.begin, units.size());
  std::size_t const last  = std::min(spec.shard.end, units.size());

  std::vector<UnitResult> results(units.size());
  std::size_t             resumed = 0;
  std::map<std::size_t, UnitResult> restored;
  if (options.resume && !options.checkpoint_path.empty()) {
    restored = read_checkpoint(options.checkpoint_path, spec);
    for (auto const& [id, r] : restored) {
      if (id >= first && id < last) {
        results[id] = r;
        ++resumed;
      }
    }
  }

  // Rewritten rather than appended to, so a torn tail cannot merge with the
  // next record.
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    checkpoint.open(options.checkpoint_path, std::ios::trunc);
    checkpoint << checkpoint_header(spec) << '\n';
    for (auto const& [id, r] : restored) {
      checkpoint << id << ' ' << r.counts.total << ' ' << r.counts.commutative << ' '
                 << r.counts.associative << ' ' << r.leaves << '\n';
    }
    checkpoint << std::flush;
    if (!checkpoint) {
      throw std::runtime_error("cannot write checkpoint " + options.checkpoint_path);
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t id = first; id < last; ++id) {
    if (!results[id].done) {
      pending.push_back(id);
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex               io_mutex;
  std::exception_ptr       failure;
  auto worker = [&] {
    try {
      while (true) {
        std::size_t const k = next.fetch_add(1);
        if (k >= pending.size()) {
          return;
        }
        std::size_t const id   = pending[k];
        auto const&       unit = units[id];
        UnitResult        r;
        std::function<void(CayleyTable const&)> sink;
        if (!spec.count_only) {
          sink = [&r](CayleyTable const& t) { r.times.push_back(t); };
        }
        r.counts = complete_multiplications_unit(skeletons[unit.skeleton], spec,
                                                 unit.branch, sink, &r.leaves);
        r.done   = true;
        std::lock_guard lock(io_mutex);
        if (checkpoint.is_open()) {
          checkpoint << id << ' ' << r.counts.total << ' ' << r.counts.commutative
                     << ' ' << r.counts.associative << ' ' << r.leaves << '\n'
                     << std::flush;
        }
        results[id] = std::move(r);
      }
    } catch (...) {
      std::lock_guard lock(io_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      next = pending.size();
    }
  };

  unsigned const jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
      threads.emplace_back(worker);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  EnumerationResult out;
  out.spec = spec;
  if (!spec.count_only) {
    out.ringoids.emplace();
  }
  for (std::size_t id = first; id < last; ++id) {
    auto& r = results[id];
    out.counts += r.counts;
    out.leaves += r.leaves;
    if (out.ringoids) {
      for (auto& t : r.times) {
        out.ringoids->emplace_back(skeletons[units[id].skeleton].plus, std::move(t));
      }
    }
  }
  if (out.ringoids) {
    std::sort(out.ringoids->begin(), out.ringoids->end());
  }
  out.provenance.units_run     = pending.size();
  out.provenance.units_resumed = resumed;
  out.provenance.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

bool GroupoidConstraints::admits(CayleyTable const& t) const {
  return (!commutative || is_commutative(t)) && (!associative || is_associative(t)) &&
         (!quasigroup || is_quasigroup(t)) && (!idempotent || is_idempotent(t));
}

namespace {

constexpr std::size_t kMaxRawScanOrder = 3;

template <typename F>
void for_each_table(std::size_t n, F&& visit) {
  std::size_t const    cells = n * n;
  std::vector<Element> entries(cells, 0);
  while (true) {
    visit(CayleyTable(n, entries));
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++entries[i] < n) {
        break;
      }
      entries[i] = 0;
      if (i == 0) {
        return;
      }
    }
  }
}

CayleyTable canonical_groupoid(CayleyTable const& t) {
  CayleyTable const tables[] = {t};
  return std::move(canonical_tables(tables, false).tables.front());
}

}  // namespace

std::vector<CayleyTable> enumerate_groupoids(std::size_t n,
                                             GroupoidConstraints const& c) {
  if (n == 0 || n > kMaxRawScanOrder) {
    throw std::length_error("enumerate_groupoids: order must be in 1..3");
  }
  std::set<CayleyTable> found;
  for_each_table(n, [&](CayleyTable const& t) {
    if (c.admits(t)) {
      found.insert(canonical_groupoid(t));
    }
  });
  return {found.begin(), found.end()};
}

bool passes_transitivity_prefilter(CayleyTable const& t) {
  ElementStats const first = element_stats(t, 0);
  for (std::size_t s = 1; s < t.size(); ++s) {
    if (!(element_stats(t, static_cast<Element>(s)) == first)) {
      return false;
    }
  }
  if (first.nl != first.ar || first.al != first.nr) {
    return false;
  }
  if (is_commutative(t) && first.nl != first.al) {
    return false;
  }
  return true;
}

namespace {

struct PairOrbits {
  std::size_t                                     n;
  std::vector<std::pair<Element, Element>>        reps;
  std::vector<std::vector<Element>>               allowed;  // values per orbit
};

PairOrbits pair_orbits(PermSet const& g) {
  std::size_t const n = g.degree();
  PairOrbits        po{n, {}, {}};
  std::vector<bool> seen(n * n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[x * n + y]) {
        continue;
      }
      po.reps.emplace_back(x, y);
      std::vector<Permutation const*> stab;
      for (auto const& p : g.elements()) {
        seen[p[x] * n + p[y]] = true;
        if (p[x] == x && p[y] == y) {
          stab.push_back(&p);
        }
      }
      std::vector<Element> values;
      for (std::size_t v = 0; v < n; ++v) {
        bool fixed = true;
        for (auto const* p : stab) {
          fixed = fixed && (*p)[v] == v;
        }
        if (fixed) {
          values.push_back(static_cast<Element>(v));
        }
      }
      po.allowed.push_back(std::move(values));
    }
  }
  return po;
}

CayleyTable table_from_orbit_values(PermSet const& g, PairOrbits const& po,
                                    std::vector<std::size_t> const& choice) {
  std::size_t const    n = po.n;
  std::vector<Element> entries(n * n);
  for (std::size_t o = 0; o < po.reps.size(); ++o) {
    auto const [x, y] = po.reps[o];
    Element const v   = po.allowed[o][choice[o]];
    for (auto const& p : g.elements()) {
      entries[p[x] * n + p[y]] = p[v];
    }
  }
  return CayleyTable(n, std::move(entries));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Transformation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Transitive subgroups of Sym(n) generated by at most two elements; for
// n <= 5 that is every transitive subgroup.
std::vector<PermSet> transitive_subgroups(std::size_t n) {
  auto const                         perms = all_permutations(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermSet>               out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i; j < perms.size(); ++j) {
      auto g = PermSet::generated_by(n, {perms[i], perms[j]});
      if (is_transitive(g) && seen.insert(g.elements()).second) {
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CayleyTable> invariant_tables(PermSet const& g) {
  auto const               po = pair_orbits(g);
  std::vector<CayleyTable> out;
  std::vector<std::size_t> choice(po.reps.size(), 0);
  for (auto const& values : po.allowed) {
    if (values.empty()) {
      return out;
    }
  }
  while (true) {
    out.push_back(table_from_orbit_values(g, po, choice));
    std::size_t i = choice.size();
    while (true) {
      if (i == 0) {
        return out;
      }
      --i;
      if (++choice[i] < po.allowed[i].size()) {
        break;
      }
      choice[i] = 0;
    }
  }
}

TransitiveScanResult scan_transitive_groupoids(std::size_t n,
                                               GroupoidConstraints const& c,
                                               ScanMethod method, std::size_t samples,
                                               std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("scan_transitive_groupoids: order must be positive");
  }
  TransitiveScanResult  out;
  std::set<CayleyTable> found;
  auto consider = [&](CayleyTable const& t) {
    ++out.candidates;
    if (!c.admits(t)) {
      return;
    }
    if (!passes_transitivity_prefilter(t)) {
      ++out.prefiltered;
      return;
    }
    if (is_transitive(automorphisms(t))) {
      found.insert(canonical_groupoid(t));
    }
  };

  if (n > 5) {
    out.exhaustive = false;
    auto const                 g  = cyclic_translations(n);
    auto const                 po = pair_orbits(g);
    std::mt19937_64            rng(seed);
    std::vector<std::size_t>   choice(po.reps.size());
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t o = 0; o < choice.size(); ++o) {
        choice[o] = std::uniform_int_distribution<std::size_t>(
            0, po.allowed[o].size() - 1)(rng);
      }
      consider(table_from_orbit_values(g, po, choice));
    }
  } else {
    if (method == ScanMethod::Auto) {
      method = n <= kMaxRawScanOrder ? ScanMethod::RawTables : ScanMethod::InvariantTables;
    }
    if (method == ScanMethod::RawTables) {
      if (n > kMaxRawScanOrder) {
        throw std::length_error("scan_transitive_groupoids: raw scan limited to n <= 3");
      }
      for_each_table(n, consider);
    } else {
      for (auto const& g : transitive_subgroups(n)) {
        for (auto const& t : invariant_tables(g)) {
          consider(t);
        }
      }
    }
  }
  out.tables.assign(found.begin(), found.end());
  return out;
}

std::vector<CayleyTable> latin_squares(std::size_t n) {
  if (n == 0 || n > 6) {
    throw std::length_error("latin_squares: order must be in 1..6");
  }
  std::vector<CayleyTable> out;
  std::vector<Element>     cells(n * n);
  std::vector<Mask>        row_used(n, 0), col_used(n, 0);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == n * n) {
      out.emplace_back(n, cells);
      return;
    }
    std::size_t const r = k / n, c = k % n;
    for (std::size_t v = 0; v < n; ++v) {
      Mask const b = Mask{1} << v;
      if ((row_used[r] & b) || (col_used[c] & b)) {
        continue;
      }
      cells[k] = static_cast<Element>(v);
      row_used[r] |= b;
      col_used[c] |= b;
      self(self, k + 1);
      row_used[r] &= ~b;
      col_used[c] &= ~b;
    }
  };
  fill(fill, 0);
  return out;
}

ParasemifieldScanReport scan_parasemifields(std::size_t n) {
  if (n == 0 || n > 4) {
    throw std::length_error("scan_parasemifields: order must be in 1..4");
  }
  ParasemifieldScanReport rep;
  rep.order = n;
  std::set<Ringoid> found;
  for (auto const& times : latin_squares(n)) {
    ++rep.quasigroups;
    std::vector<Permutation> gens;
    for (std::size_t a = 0; a < n; ++a) {
      gens.emplace_back(times.left_translation(a));
      gens.emplace_back(times.right_translation(a));
    }
    // Every translation of the multiplication must be an automorphism of the
    // addition, so the addition is invariant under the group they generate.
    auto const g = PermSet::generated_by(n, gens);
    for (auto const& plus : invariant_tables(g)) {
      if (!parasemifield_check_via_mult(plus, times)) {
        throw std::logic_error("scan_parasemifields: invariant addition not compatible");
      }
      found.insert(canonical_form(Ringoid(plus, times), false).first);
    }
  }
  for (auto const& r : found) {
    auto const& f = r.flags();
    rep.commutative_semigroup_plus += f.plus_commutative && f.plus_associative;
    rep.associative_plus += f.plus_associative;
    rep.commutative_plus += f.plus_commutative;
    rep.all_plus_transitive =
        rep.all_plus_transitive && is_transitive(automorphisms(r.plus()));
    if (n > 1) {
      rep.all_plus_without_neutral_or_absorbing =
          rep.all_plus_without_neutral_or_absorbing && !neutral_element(r.plus()) &&
          !absorbing_element(r.plus());
    }
  }
  rep.found.assign(found.begin(), found.end());
  return rep;
}

EnumerationResult enumerate(SearchSpec const& spec, RunOptions const& options) {
  auto const start = std::chrono::steady_clock::now();
  auto       stamp = [&](EnumerationResult& r) {
    r.provenance.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  switch (spec.structure) {
    case StructureClass::IdempotentSemiringWithZero:
      return enumerate_semirings(spec, options);
    case StructureClass::Groupoid: {
      EnumerationResult r;
      r.spec = spec;
      auto tables =
          enumerate_groupoids(spec.order, {spec.times_commutative, spec.times_associative});
      for (auto const& t : tables) {
        ++r.counts.total;
        r.counts.commutative += is_commutative(t);
        r.counts.associative += is_associative(t);
      }
      if (!spec.count_only) {
        r.groupoids = std::move(tables);
      }
      stamp(r);
      return r;
    }
    case StructureClass::ParasemifieldCandidate: {
      EnumerationResult r;
      r.spec    = spec;
      auto rep  = scan_parasemifields(spec.order);
      for (auto const& ring : rep.found) {
        if (spec.times_commutative && !ring.flags().times_commutative) {
          continue;
        }
        if (spec.times_associative && !ring.flags().times_associative) {
          continue;
        }
        ++r.counts.total;
        r.counts.commutative += ring.flags().times_commutative;
        r.counts.associative += ring.flags().times_associative;
        if (!spec.count_only) {
          if (!r.ringoids) {
            r.ringoids.emplace();
          }
          r.ringoids->push_back(ring);
        }
      }
      if (!spec.count_only && !r.ringoids) {
        r.ringoids.emplace();
      }
      stamp(r);
      return r;
    }
  }
  throw std::invalid_argument("enumerate: unknown structure class");
}

}  // namespace ringoid
