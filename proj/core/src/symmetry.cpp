#include "ringoid/symmetry.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ringoid {

Permutation::Permutation(Transformation images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size());
  for (Element x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Transformation id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return Permutation(std::move(id));
}

Permutation Permutation::compose(Permutation const& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Permutation::compose: degree mismatch");
  }
  Transformation out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    out[x] = images_[other.images_[x]];
  }
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  Transformation out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    out[images_[x]] = static_cast<Element>(x);
  }
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < size(); ++x) {
    if (images_[x] != x) {
      return false;
    }
  }
  return true;
}

PermSet::PermSet(std::size_t n, std::vector<Permutation> elements)
    : n_(n), elements_(std::move(elements)) {
  for (auto const& p : elements_) {
    if (p.size() != n_) {
      throw std::invalid_argument("PermSet: degree mismatch");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

PermSet PermSet::generated_by(std::size_t n, std::vector<Permutation> const& gens) {
  std::set<Permutation>   seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation const p = queue.front();
    queue.pop_front();
    for (auto const& g : gens) {
      auto q = p.compose(g);
      if (seen.insert(q).second) {
        queue.push_back(std::move(q));
      }
    }
  }
  return PermSet(n, std::vector<Permutation>(seen.begin(), seen.end()));
}

bool PermSet::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermSet::is_group() const {
  if (!contains(Permutation::identity(n_))) {
    return false;
  }
  for (auto const& p : elements_) {
    if (!contains(p.inverse())) {
      return false;
    }
    for (auto const& q : elements_) {
      if (!contains(p.compose(q))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Element>> PermSet::orbits() const {
  std::vector<std::size_t> label(n_);
  std::iota(label.begin(), label.end(), std::size_t{0});
  // Orbit of x is {p[x]}; the set is a group in every use, so one pass of
  // images suffices, but iterate to a fixpoint to stay correct for any set.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& p : elements_) {
      for (std::size_t x = 0; x < n_; ++x) {
        std::size_t const lo = std::min(label[x], label[p[x]]);
        if (label[x] != lo || label[p[x]] != lo) {
          label[x] = label[p[x]] = lo;
          changed                = true;
        }
      }
    }
  }
  std::vector<std::vector<Element>> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (label[x] == x) {
      out.emplace_back();
      for (std::size_t y = x; y < n_; ++y) {
        if (label[y] == x) {
          out.back().push_back(static_cast<Element>(y));
        }
      }
    }
  }
  return out;
}

namespace {

constexpr int kUnset = -1;

// Backtracking over images of 0, 1, ..., n-1 for maps compatible with every
// table.  Bijective mode prunes on injectivity as well.
class HomSearch {
 public:
  HomSearch(std::vector<CayleyTable const*> tables, bool bijective)
      : tables_(std::move(tables)),
        n_(tables_.front()->size()),
        image_(n_, kUnset),
        used_(n_, false),
        bijective_(bijective) {}

  std::vector<Transformation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool consistent(std::size_t k) const {
    for (auto const* t : tables_) {
      for (std::size_t x = 0; x <= k; ++x) {
        for (std::size_t y = 0; y <= k; ++y) {
          std::size_t const z      = (*t)(x, y);
          Element const     target = (*t)(image_[x], image_[y]);
          if (z <= k) {
            if (image_[z] != target) {
              return false;
            }
          } else if (bijective_ && used_[target]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (k == n_) {
      found_.emplace_back(image_.begin(), image_.end());
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (bijective_ && used_[v]) {
        continue;
      }
      image_[k] = static_cast<int>(v);
      used_[v]  = bijective_;
      if (consistent(k)) {
        extend(k + 1);
      }
      used_[v]  = false;
      image_[k] = kUnset;
    }
  }

  std::vector<CayleyTable const*> tables_;
  std::size_t                     n_;
  std::vector<int>                image_;
  std::vector<bool>               used_;
  bool                            bijective_;
  std::vector<Transformation>     found_;
};

PermSet to_permset(std::size_t n, std::vector<Transformation> maps) {
  std::vector<Permutation> perms;
  perms.reserve(maps.size());
  for (auto& m : maps) {
    perms.emplace_back(std::move(m));
  }
  return PermSet(n, std::move(perms));
}

}  // namespace

PermSet automorphisms(CayleyTable const& t) {
  return to_permset(t.size(), HomSearch({&t}, true).run());
}

PermSet automorphisms(Ringoid const& r) {
  return to_permset(r.size(), HomSearch({&r.plus(), &r.times()}, true).run());
}

std::vector<Transformation> endomorphisms(CayleyTable const& t) {
  if (t.size() > kMaxEndomorphismOrder) {
    throw std::length_error("endomorphisms: carrier size " +
                            std::to_string(t.size()) + " too large");
  }
  auto maps = HomSearch({&t}, false).run();
  std::sort(maps.begin(), maps.end());
  return maps;
}

std::vector<Transformation> mult_monoid(CayleyTable const& t) {
  std::size_t const           n = t.size();
  std::vector<Transformation> gens;
  for (std::size_t a = 0; a < n; ++a) {
    gens.push_back(t.left_translation(a));
    gens.push_back(t.right_translation(a));
  }
  Transformation id(n);
  std::iota(id.begin(), id.end(), Element{0});
  std::set<Transformation>   seen{id};
  std::deque<Transformation> queue{id};
  while (!queue.empty()) {
    Transformation const f = queue.front();
    queue.pop_front();
    for (auto const& g : gens) {
      Transformation fg(n);
      for (std::size_t x = 0; x < n; ++x) {
        fg[x] = f[g[x]];
      }
      if (seen.insert(fg).second) {
        queue.push_back(std::move(fg));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool ringoid_check_via_mult(CayleyTable const& plus, CayleyTable const& times) {
  if (plus.size() != times.size()) {
    throw std::invalid_argument("ringoid_check_via_mult: size mismatch");
  }
  for (std::size_t a = 0; a < times.size(); ++a) {
    if (!is_endomorphism(plus, times.left_translation(a)) ||
        !is_endomorphism(plus, times.right_translation(a))) {
      return false;
    }
  }
  return true;
}

bool parasemifield_check_via_mult(CayleyTable const& plus,
                                  CayleyTable const& times) {
  return is_quasigroup(times) && ringoid_check_via_mult(plus, times);
}

bool is_transitive(PermSet const& g) {
  return g.orbits().size() == 1;
}

bool is_triply_transitive(PermSet const& g) {
  std::size_t const n = g.degree();
  if (n < 3) {
    return false;
  }
  std::set<std::array<Element, 3>> images;
  for (auto const& p : g.elements()) {
    images.insert({p[0], p[1], p[2]});
  }
  return images.size() == n * (n - 1) * (n - 2);
}

StatsLemmasReport stats_lemmas_check(CayleyTable const& t) {
  if (!is_transitive(automorphisms(t))) {
    throw std::invalid_argument(
        "stats_lemmas_check: automorphism group is not transitive");
  }
  StatsLemmasReport rep;
  rep.common   = element_stats(t, 0);
  rep.constant = true;
  for (std::size_t s = 1; s < t.size(); ++s) {
    rep.constant = rep.constant && element_stats(t, static_cast<Element>(s)) == rep.common;
  }
  auto const& c    = rep.common;
  rep.nl_equals_ar = c.nl == c.ar;
  rep.al_equals_nr = c.al == c.nr;
  rep.commutative  = is_commutative(t);
  rep.all_equal    = c.nl == c.nr && c.nr == c.al && c.al == c.ar;
  return rep;
}

CayleyTable idempotent_quasigroup_3() {
  return CayleyTable::from_function(
      3, [](std::size_t a, std::size_t b) { return (2 * a + 2 * b) % 3; });
}

CayleyTable two_element_flip() {
  return CayleyTable::from_function(
      2, [](std::size_t, std::size_t b) { return 1 - b; });
}

FullAutType full_aut_classification(CayleyTable const& t) {
  std::size_t const n         = t.size();
  std::size_t       factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    factorial *= k;
  }
  if (automorphisms(t).size() != factorial) {
    return FullAutType::NotFull;
  }
  // Each listed type has Aut = Sym, so it is its own only relabelling and
  // isomorphism reduces to equality.
  if (t == right_zero(n)) {
    return FullAutType::RightZero;
  }
  if (t == left_zero(n)) {
    return FullAutType::LeftZero;
  }
  if (n == 3 && t == idempotent_quasigroup_3()) {
    return FullAutType::IdemQuasi3;
  }
  if (n == 2 && t == two_element_flip()) {
    return FullAutType::TwoElemFlip;
  }
  if (n == 2 && t == two_element_flip().transpose()) {
    return FullAutType::TwoElemFlipAnti;
  }
  throw std::logic_error(
      "full_aut_classification: full automorphism group outside the known list");
}

std::string_view to_string(FullAutType t) noexcept {
  switch (t) {
    case FullAutType::RightZero:
      return "right-zero";
    case FullAutType::LeftZero:
      return "left-zero";
    case FullAutType::IdemQuasi3:
      return "idempotent-quasigroup-3";
    case FullAutType::TwoElemFlip:
      return "two-element-flip";
    case FullAutType::TwoElemFlipAnti:
      return "two-element-flip-anti";
    case FullAutType::NotFull:
      return "not-full";
  }
  return "?";
}

CayleyTable midpoint_groupoid(std::size_t m) {
  if (m % 2 == 0) {
    throw std::invalid_argument("midpoint_groupoid: modulus must be odd");
  }
  std::size_t const half = (m + 1) / 2;  // 2 * half = 1 (mod m)
  return CayleyTable::from_function(m, [m, half](std::size_t a, std::size_t b) {
    return (half * (a + b)) % m;
  });
}

PermSet cyclic_translations(std::size_t m) {
  std::vector<Permutation> perms;
  for (std::size_t c = 0; c < m; ++c) {
    Transformation shift(m);
    for (std::size_t x = 0; x < m; ++x) {
      shift[x] = static_cast<Element>((x + c) % m);
    }
    perms.emplace_back(std::move(shift));
  }
  return PermSet(m, std::move(perms));
}

namespace {

// Branch and bound over sigma = pi^-1: label k goes to original sigma[k].
class CanonicalSearch {
 public:
  CanonicalSearch(std::span<CayleyTable const> tables, bool fix_zero)
      : tables_(tables),
        n_(tables.front().size()),
        sigma_(n_),
        label_(n_, kUnset),
        fix_zero_(fix_zero) {
    for (auto const& t : tables_) {
      if (t.size() != n_) {
        throw std::invalid_argument("canonical_tables: size mismatch");
      }
    }
  }

  CanonicalForm run() {
    extend(0);
    Permutation const best_pi(best_pi_);
    Permutation const best_inv = best_pi.inverse();
    std::vector<Permutation> autos;
    for (auto& pi : optimal_) {
      autos.push_back(best_inv.compose(Permutation(std::move(pi))));
    }
    std::vector<CayleyTable> out;
    std::size_t              offset = 0;
    for (std::size_t t = 0; t < tables_.size(); ++t) {
      out.emplace_back(n_, std::vector<Element>(best_.begin() + offset,
                                                best_.begin() + offset + n_ * n_));
      offset += n_ * n_;
    }
    return CanonicalForm{std::move(out), best_pi, PermSet(n_, std::move(autos))};
  }

 private:
  // Compares the determined prefix of the partial relabelling against the
  // incumbent.  Returns true if the branch cannot beat or tie it.
  bool dominated(std::size_t assigned) const {
    if (best_.empty()) {
      return false;
    }
    auto const& t0 = tables_.front();
    for (std::size_t j = 0; j < n_; ++j) {
      if (assigned == 0 || j >= assigned) {
        return false;
      }
      int const orig  = t0(sigma_[0], sigma_[j]);
      int const known = label_[orig];
      int const best  = best_[j];
      if (known == kUnset) {
        return static_cast<int>(assigned) > best;
      }
      if (known != best) {
        return known > best;
      }
    }
    return false;
  }

  void leaf() {
    std::vector<Element> cand;
    cand.reserve(tables_.size() * n_ * n_);
    for (auto const& t : tables_) {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          cand.push_back(static_cast<Element>(label_[t(sigma_[i], sigma_[j])]));
        }
      }
    }
    Transformation pi(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      pi[x] = static_cast<Element>(label_[x]);
    }
    if (best_.empty() || cand < best_) {
      best_    = std::move(cand);
      best_pi_ = pi;
      optimal_.clear();
      optimal_.push_back(std::move(pi));
    } else if (cand == best_) {
      optimal_.push_back(std::move(pi));
    }
  }

  void extend(std::size_t k) {
    if (k == n_) {
      leaf();
      return;
    }
    for (std::size_t orig = 0; orig < n_; ++orig) {
      if (label_[orig] != kUnset || (fix_zero_ && (k == 0) != (orig == 0))) {
        continue;
      }
      sigma_[k]     = static_cast<Element>(orig);
      label_[orig]  = static_cast<int>(k);
      if (!dominated(k + 1)) {
        extend(k + 1);
      }
      label_[orig] = kUnset;
    }
  }

  std::span<CayleyTable const> tables_;
  std::size_t                  n_;
  std::vector<Element>         sigma_;
  std::vector<int>             label_;
  bool                         fix_zero_;
  std::vector<Element>         best_;
  Transformation               best_pi_;
  std::vector<Transformation>  optimal_;
};

}  // namespace

CanonicalForm canonical_tables(std::span<CayleyTable const> tables, bool fix_zero) {
  if (tables.empty()) {
    throw std::invalid_argument("canonical_tables: no tables");
  }
  return CanonicalSearch(tables, fix_zero).run();
}

std::pair<Ringoid, PermSet> canonical_form(Ringoid const& r, bool fix_zero) {
  CayleyTable const tables[] = {r.plus(), r.times()};
  auto              cf       = canonical_tables(tables, fix_zero);
  return {Ringoid(std::move(cf.tables[0]), std::move(cf.tables[1])),
          std::move(cf.automorphisms)};
}

}  // namespace ringoid
