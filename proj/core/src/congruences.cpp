#include "ringoid/congruences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "ringoid/ideals.hpp"

namespace ringoid {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  std::size_t components() const noexcept { return components_; }

  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = find(x);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t              components_ = parent_.size();
};

// Closes the pair (a, b) under all translations of both tables.  Returns the
// union-find; stops early once everything is in one class if `stop_at_full`.
UnionFind close_pair(Ringoid const& r, Element a, Element b, bool stop_at_full) {
  std::size_t const n = r.size();
  UnionFind         uf(n);
  std::vector<std::pair<Element, Element>> work;
  if (uf.unite(a, b)) {
    work.emplace_back(a, b);
  }
  auto const& plus  = r.plus();
  auto const& times = r.times();
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (std::size_t s = 0; s < n; ++s) {
      std::pair<Element, Element> const images[] = {
          {plus(s, u), plus(s, v)},
          {plus(u, s), plus(v, s)},
          {times(s, u), times(s, v)},
          {times(u, s), times(v, s)},
      };
      for (auto [x, y] : images) {
        if (uf.unite(x, y)) {
          if (stop_at_full && uf.components() == 1) {
            return uf;
          }
          work.emplace_back(x, y);
        }
      }
    }
  }
  return uf;
}

}  // namespace

Partition::Partition(std::vector<std::size_t> const& labels)
    : class_of_(labels.size()) {
  if (labels.empty()) {
    throw std::invalid_argument("Partition: carrier must be non-empty");
  }
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> id
  for (std::size_t x = 0; x < labels.size(); ++x) {
    std::size_t id = seen.size();
    for (auto const& [label, cid] : seen) {
      if (label == labels[x]) {
        id = cid;
        break;
      }
    }
    if (id == seen.size()) {
      seen.emplace_back(labels[x], id);
    }
    class_of_[x] = id;
  }
  num_classes_ = seen.size();
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return Partition(labels);
}

Partition Partition::full(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<Element>> Partition::classes() const {
  std::vector<std::vector<Element>> out(num_classes_);
  for (std::size_t x = 0; x < size(); ++x) {
    out[class_of_[x]].push_back(static_cast<Element>(x));
  }
  return out;
}

bool Partition::refines(Partition const& other) const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (related(a, b) && !other.related(a, b)) {
        return false;
      }
    }
  }
  return true;
}

bool is_congruence(CayleyTable const& t, Partition const& p) {
  std::size_t const n = t.size();
  if (p.size() != n) {
    throw std::invalid_argument("is_congruence: size mismatch");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!p.related(a, b)) {
        continue;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!p.related(t(x, a), t(x, b)) || !p.related(t(a, x), t(b, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_congruence(Ringoid const& r, Partition const& p) {
  return is_congruence(r.plus(), p) && is_congruence(r.times(), p);
}

Partition principal_congruence(Ringoid const& r, Element a, Element b) {
  if (a >= r.size() || b >= r.size()) {
    throw std::out_of_range("principal_congruence: element out of range");
  }
  return Partition(close_pair(r, a, b, false).labels());
}

bool is_congruence_simple(Ringoid const& r) {
  std::size_t const n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto uf = close_pair(r, static_cast<Element>(a), static_cast<Element>(b),
                           true);
      if (uf.components() != 1) {
        return false;
      }
    }
  }
  return true;
}

Partition congruence_witness(Ringoid const& r) {
  std::size_t const n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto p = principal_congruence(r, static_cast<Element>(a),
                                    static_cast<Element>(b));
      if (!p.is_full()) {
        return p;
      }
    }
  }
  return Partition::identity(n);
}

namespace {

// Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
void extend_rgs(std::size_t i, std::size_t max_label,
                std::vector<std::size_t>& rgs, std::vector<Partition>& out) {
  if (i == rgs.size()) {
    out.emplace_back(rgs);
    return;
  }
  for (std::size_t v = 0; v <= max_label + 1; ++v) {
    rgs[i] = v;
    extend_rgs(i + 1, std::max(max_label, v), rgs, out);
  }
}

}  // namespace

std::vector<Partition> all_partitions(std::size_t n) {
  if (n == 0 || n > kMaxBruteForceCongruenceOrder + 2) {
    throw std::length_error("all_partitions: carrier size " + std::to_string(n) +
                            " outside supported range");
  }
  std::vector<Partition>   out;
  std::vector<std::size_t> rgs(n, 0);
  extend_rgs(1, 0, rgs, out);
  return out;
}

std::vector<Partition> all_congruences(Ringoid const& r) {
  if (r.size() > kMaxBruteForceCongruenceOrder) {
    throw std::length_error("all_congruences: carrier too large for brute force");
  }
  std::vector<Partition> out;
  for (auto& p : all_partitions(r.size())) {
    if (is_congruence(r, p)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

void require_semiring(Ringoid const& r, char const* what) {
  if (!r.flags().semiring()) {
    throw std::invalid_argument(std::string(what) +
                                ": addition must be associative and commutative");
  }
}

}  // namespace

SubsetMask multiples(CayleyTable const& plus, Element b) {
  SubsetMask seen(plus.size());
  Element    kb = b;
  while (!seen.contains(kb)) {
    seen.insert(kb);
    kb = plus(kb, b);
  }
  return seen;
}

std::vector<bool> additive_preorder(Ringoid const& r) {
  require_semiring(r, "additive_preorder");
  std::size_t const       n = r.size();
  std::vector<SubsetMask> translates;  // S + a
  translates.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    SubsetMask m(n);
    for (std::size_t x = 0; x < n; ++x) {
      m.insert(r.add(x, a));
    }
    translates.push_back(m);
  }
  std::vector<bool> below(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    auto const mb = multiples(r.plus(), static_cast<Element>(b));
    for (std::size_t a = 0; a < n; ++a) {
      below[a * n + b] = (mb.bits() & translates[a].bits()) != 0;
    }
  }
  return below;
}

Partition preorder_rho(Ringoid const& r) {
  std::size_t const n     = r.size();
  auto const        below = additive_preorder(r);
  std::vector<std::size_t> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a;
    for (std::size_t b = 0; b < a; ++b) {
      if (below[a * n + b] && below[b * n + a]) {
        labels[a] = labels[b];
        break;
      }
    }
  }
  Partition rho(labels);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool const mutual = below[a * n + b] && below[b * n + a];
      if (mutual != rho.related(a, b)) {
        throw std::logic_error("preorder_rho: relation is not transitive");
      }
    }
  }
  return rho;
}

Partition rho_from_ideal(Ringoid const& r, SubsetMask const& ideal) {
  require_semiring(r, "rho_from_ideal");
  if (ideal.universe_size() != r.size() || !is_ideal(r, ideal)) {
    throw std::invalid_argument("rho_from_ideal: subset is not an ideal");
  }
  std::size_t const       n = r.size();
  std::vector<SubsetMask> shifted;  // x + A
  shifted.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    SubsetMask m(n);
    for (Element a : ideal.elements()) {
      m.insert(r.add(x, a));
    }
    shifted.push_back(m);
  }
  auto related = [&](std::size_t x, std::size_t y) {
    return (shifted[x].bits() & shifted[y].bits()) != 0;
  };
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (related(x, y)) {
        uf.unite(x, y);
      }
    }
  }
  Partition rho(uf.labels());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rho.related(x, y) != related(x, y)) {
        throw std::logic_error(
            "rho_from_ideal: transitive closure added pairs");
      }
    }
  }
  return rho;
}

PlusDichotomy plus_dichotomy(Ringoid const& r) {
  require_semiring(r, "plus_dichotomy");
  auto zero = neutral_element(r.plus());
  if (!zero) {
    throw std::invalid_argument("plus_dichotomy: addition has no neutral element");
  }
  if (r.flags().plus_idempotent) {
    return PlusDichotomy::Idempotent;
  }
  std::size_t const n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t x = 0; x < n && !has_inverse; ++x) {
      has_inverse = r.add(a, x) == *zero;
    }
    if (!has_inverse) {
      return PlusDichotomy::Other;
    }
  }
  return PlusDichotomy::Group;
}

NoNeutralDichotomy no_neutral_dichotomy(Ringoid const& r) {
  require_semiring(r, "no_neutral_dichotomy");
  if (neutral_element(r.plus())) {
    throw std::invalid_argument(
        "no_neutral_dichotomy: addition has a neutral element");
  }
  if (r.flags().plus_idempotent) {
    throw std::invalid_argument("no_neutral_dichotomy: addition is idempotent");
  }
  if (is_cancellative(r.plus())) {
    return NoNeutralDichotomy::Cancellative;
  }
  if (auto o = absorbing_element(r.plus())) {
    bool doubling = true;
    for (std::size_t x = 0; x < r.size() && doubling; ++x) {
      doubling = r.add(x, x) == *o;
    }
    if (doubling) {
      return NoNeutralDichotomy::AbsorbingDoubling;
    }
  }
  return NoNeutralDichotomy::Neither;
}

std::string_view to_string(PlusDichotomy d) noexcept {
  switch (d) {
    case PlusDichotomy::Idempotent:
      return "idempotent";
    case PlusDichotomy::Group:
      return "group";
    case PlusDichotomy::Other:
      return "other";
  }
  return "?";
}

std::string_view to_string(NoNeutralDichotomy d) noexcept {
  switch (d) {
    case NoNeutralDichotomy::Cancellative:
      return "cancellative";
    case NoNeutralDichotomy::AbsorbingDoubling:
      return "absorbing-doubling";
    case NoNeutralDichotomy::Neither:
      return "neither";
  }
  return "?";
}

}  // namespace ringoid
