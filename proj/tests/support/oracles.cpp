#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

bool distributive(CayleyTable const& p, CayleyTable const& t) {
  std::size_t const n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t(a, p(b, c)) != p(t(a, b), t(a, c)) || t(p(b, c), a) != p(t(b, a), t(c, a))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool congruence_simple(CayleyTable const& p, CayleyTable const& t) {
  std::size_t const        n = p.size();
  std::vector<std::size_t> v(n, 0);
  while (true) {
    std::set<std::size_t> const labels(v.begin(), v.end());
    if (labels.size() > 1 && labels.size() < n) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = a + 1; b < n && ok; ++b) {
          if (v[a] != v[b]) {
            continue;
          }
          for (std::size_t c = 0; c < n && ok; ++c) {
            ok = v[p(a, c)] == v[p(b, c)] && v[p(c, a)] == v[p(c, b)] &&
                 v[t(a, c)] == v[t(b, c)] && v[t(c, a)] == v[t(c, b)];
          }
        }
      }
      if (ok) {
        return false;
      }
    }
    std::size_t i = 0;
    while (i < n && ++v[i] == n) {
      v[i++] = 0;
    }
    if (i == n) {
      return true;
    }
  }
}

std::set<std::vector<Element>> congruences(CayleyTable const& p, CayleyTable const& t) {
  std::size_t const              n = p.size();
  std::set<std::vector<Element>> out;
  std::vector<std::size_t>       v(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if (v[a] != v[b]) {
          continue;
        }
        for (std::size_t c = 0; c < n && ok; ++c) {
          ok = v[p(a, c)] == v[p(b, c)] && v[p(c, a)] == v[p(c, b)] &&
               v[t(a, c)] == v[t(b, c)] && v[t(c, a)] == v[t(c, b)];
        }
      }
    }
    if (ok) {
      std::vector<Element>     ids(n);
      std::vector<std::size_t> seen;
      for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find(seen.begin(), seen.end(), v[x]);
        if (it == seen.end()) {
          seen.push_back(v[x]);
          it = seen.end() - 1;
        }
        ids[x] = static_cast<Element>(it - seen.begin());
      }
      out.insert(ids);
    }
    std::size_t i = 0;
    while (i < n && ++v[i] == n) {
      v[i++] = 0;
    }
    if (i == n) {
      return out;
    }
  }
}

namespace {

bool is_ideal_bits(CayleyTable const& p, CayleyTable const& t, std::uint32_t a) {
  std::size_t const n  = p.size();
  auto              in = [&](std::size_t x) { return (a >> x) & 1U; };
  for (std::size_t x = 0; x < n; ++x) {
    if (!in(x)) {
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if ((in(y) && !in(p(x, y))) || !in(t(x, y)) || !in(t(y, x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_k_bits(CayleyTable const& p, CayleyTable const& t, std::uint32_t a) {
  if (!is_ideal_bits(p, t, a)) {
    return false;
  }
  std::size_t const n  = p.size();
  auto              in = [&](std::size_t x) { return (a >> x) & 1U; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (in(x) && !in(y) && in(p(x, y))) {
        return false;
      }
    }
  }
  return true;
}

template <typename Pred>
bool no_proper(CayleyTable const& p, CayleyTable const& t, int min_size, Pred pred) {
  std::uint32_t const full = (std::uint32_t{1} << p.size()) - 1;
  for (std::uint32_t a = 1; a < full; ++a) {
    if (std::popcount(a) >= min_size && pred(p, t, a)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool ideal_simple(CayleyTable const& p, CayleyTable const& t) {
  return no_proper(p, t, 2, is_ideal_bits);
}
bool ideal_free(CayleyTable const& p, CayleyTable const& t) {
  return no_proper(p, t, 1, is_ideal_bits);
}
bool k_ideal_simple(CayleyTable const& p, CayleyTable const& t) {
  return no_proper(p, t, 2, is_k_bits);
}

std::vector<std::vector<Element>> permutations(std::size_t n, bool fix_zero) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    if (!fix_zero || p[0] == 0) {
      out.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

bool hom(CayleyTable const& t, std::vector<Element> const& f) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (f[t(a, b)] != t(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Element>> automorphisms(CayleyTable const& t) {
  std::vector<std::vector<Element>> out;
  for (auto const& p : permutations(t.size(), false)) {
    if (hom(t, p)) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<std::vector<Element>> endomorphisms(CayleyTable const& t) {
  std::size_t const                 n = t.size();
  std::vector<Element>              f(n, 0);
  std::vector<std::vector<Element>> out;
  while (true) {
    if (hom(t, f)) {
      out.push_back(f);
    }
    std::size_t i = n;
    while (i > 0 && ++f[i - 1] == n) {
      f[--i] = 0;
    }
    if (i == 0) {
      return out;
    }
  }
}

std::vector<Element> canonical_key(std::vector<CayleyTable> const& tables, bool fix_zero) {
  std::size_t const    n = tables.front().size();
  std::vector<Element> best;
  for (auto const& p : permutations(n, fix_zero)) {
    std::vector<Element> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      inv[p[i]] = static_cast<Element>(i);
    }
    std::vector<Element> key;
    for (auto const& t : tables) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          key.push_back(p[t(inv[a], inv[b])]);
        }
      }
    }
    if (best.empty() || key < best) {
      best = std::move(key);
    }
  }
  return best;
}

std::vector<CayleyTable> labelled_skeletons(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::size_t combos = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    combos *= n;
  }
  std::vector<CayleyTable> out;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Element> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i]         = static_cast<Element>(i);
      e[i * n]     = static_cast<Element>(i);
      e[i * n + i] = static_cast<Element>(i);
    }
    std::size_t c = code;
    for (auto [i, j] : cells) {
      e[i * n + j] = e[j * n + i] = static_cast<Element>(c % n);
      c /= n;
    }
    CayleyTable t(n, e);
    if (ringoid::is_associative(t)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

bool passes(Filter f, CayleyTable const& p, CayleyTable const& t) {
  if (p.size() == 1) {
    return f == Filter::All;
  }
  switch (f) {
    case Filter::CongruenceSimple:
      return congruence_simple(p, t);
    case Filter::KIdealSimple:
      return k_ideal_simple(p, t);
    case Filter::IdealSimple:
      return ideal_simple(p, t);
    case Filter::All:
      return true;
  }
  return false;
}

void tally(SemiringCounts& c, CayleyTable const& p, CayleyTable const& t) {
  if (c.keys.insert(canonical_key({p, t}, true)).second) {
    ++c.total;
    c.commutative += ringoid::is_commutative(t);
    c.associative += ringoid::is_associative(t);
  }
}

}  // namespace

SemiringCounts semirings(std::size_t n, Filter f) {
  if (n > 4) {
    throw std::length_error("oracle::semirings: n <= 4");
  }
  std::size_t const free  = (n - 1) * (n - 1);
  std::size_t       total = 1;
  for (std::size_t i = 0; i < free; ++i) {
    total *= n;
  }
  SemiringCounts out;
  for (auto const& p : labelled_skeletons(n)) {
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Element> e(n * n, 0);
      std::size_t          c = code;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
          e[i * n + j] = static_cast<Element>(c % n);
          c /= n;
        }
      }
      CayleyTable t(n, std::move(e));
      if (distributive(p, t) && passes(f, p, t)) {
        tally(out, p, t);
      }
    }
  }
  return out;
}

SemiringCounts commutative_semirings(std::size_t n, std::vector<CayleyTable> const& pluses) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    total *= n;
  }
  SemiringCounts out;
  for (auto const& p : pluses) {
    std::vector<Element> e(n * n, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto [i, j] : cells) {
        e[i * n + j] = e[j * n + i] = static_cast<Element>(c % n);
        c /= n;
      }
      // Commutative: left distributivity suffices.
      bool ok = true;
      for (std::size_t a = 1; a < n && ok; ++a) {
        for (std::size_t b = 1; b < n && ok; ++b) {
          for (std::size_t d = b + 1; d < n && ok; ++d) {
            ok = e[a * n + p(b, d)] == p(e[a * n + b], e[a * n + d]);
          }
        }
      }
      if (!ok) {
        continue;
      }
      CayleyTable t(n, e);
      if (congruence_simple(p, t)) {
        tally(out, p, t);
      }
    }
  }
  return out;
}

namespace {

constexpr Element kUnset = 255;

template <typename Consistent>
bool random_fill(std::mt19937_64& rng, std::vector<Element>& cells,
                 std::vector<std::size_t> const& order, std::size_t n, std::size_t k,
                 std::size_t& budget, Consistent const& consistent) {
  if (k == order.size()) {
    return true;
  }
  if (budget == 0) {
    return false;
  }
  --budget;
  std::vector<Element> values(n);
  std::iota(values.begin(), values.end(), Element{0});
  std::shuffle(values.begin(), values.end(), rng);
  for (Element v : values) {
    cells[order[k]] = v;
    if (consistent(cells) && random_fill(rng, cells, order, n, k + 1, budget, consistent)) {
      return true;
    }
  }
  cells[order[k]] = kUnset;
  return false;
}

}  // namespace

CayleyTable random_plus(std::mt19937_64& rng, std::size_t n, bool idempotent) {
  while (true) {
    std::vector<Element>     e(n * n, kUnset);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (i == j && idempotent) {
          e[i * n + i] = static_cast<Element>(i);
        } else {
          order.push_back(i * n + j);
        }
      }
    }
    std::shuffle(order.begin(), order.end(), rng);
    auto get = [&](std::vector<Element> const& c, std::size_t a, std::size_t b) {
      return a <= b ? c[a * n + b] : c[b * n + a];
    };
    auto consistent = [&](std::vector<Element> const& c) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Element const xy = get(c, x, y);
          if (xy == kUnset) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            Element const yz = get(c, y, z);
            if (yz == kUnset) {
              continue;
            }
            Element const l = get(c, xy, z), r = get(c, x, yz);
            if (l != kUnset && r != kUnset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::size_t budget = 2000;
    if (random_fill(rng, e, order, n, 0, budget, consistent)) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          e[i * n + j] = e[j * n + i];
        }
      }
      return CayleyTable(n, std::move(e));
    }
  }
}

CayleyTable random_times(std::mt19937_64& rng, CayleyTable const& p) {
  std::size_t const n = p.size();
  while (true) {
    std::vector<Element>     e(n * n, kUnset);
    std::vector<std::size_t> order(n * n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    auto consistent = [&](std::vector<Element> const& c) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = y + 1; z < n; ++z) {
            std::size_t const yz = p(y, z);
            Element const     a = c[x * n + y], b = c[x * n + z], s = c[x * n + yz];
            if (a != kUnset && b != kUnset && s != kUnset && s != p(a, b)) {
              return false;
            }
            Element const a2 = c[y * n + x], b2 = c[z * n + x], s2 = c[yz * n + x];
            if (a2 != kUnset && b2 != kUnset && s2 != kUnset && s2 != p(a2, b2)) {
              return false;
            }
          }
          // y = z: x*(y+y) = x*y + x*y.
          std::size_t const yy = p(y, y);
          Element const     a = c[x * n + y], s = c[x * n + yy];
          if (a != kUnset && s != kUnset && s != p(a, a)) {
            return false;
          }
          Element const a2 = c[y * n + x], s2 = c[yy * n + x];
          if (a2 != kUnset && s2 != kUnset && s2 != p(a2, a2)) {
            return false;
          }
        }
      }
      return true;
    };
    std::size_t budget = 5000;
    if (random_fill(rng, e, order, n, 0, budget, consistent)) {
      return CayleyTable(n, std::move(e));
    }
  }
}

}  // namespace oracle
