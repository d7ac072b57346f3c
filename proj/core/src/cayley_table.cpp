#include "ringoid/cayley_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ringoid {

CayleyTable::CayleyTable(std::size_t n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw std::invalid_argument("CayleyTable: carrier must be non-empty");
  }
  if (n_ > kMaxOrder) {
    throw std::invalid_argument("CayleyTable: carrier size " +
                                std::to_string(n_) + " exceeds " +
                                std::to_string(kMaxOrder));
  }
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("CayleyTable: expected " +
                                std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n_) {
      throw std::invalid_argument(
          "CayleyTable: entry (" + std::to_string(i / n_) + ", " +
          std::to_string(i % n_) + ") = " + std::to_string(entries_[i]) +
          " is not in the carrier");
    }
  }
}

CayleyTable CayleyTable::from_rows(std::vector<std::vector<int>> const& rows) {
  std::size_t const    n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (auto const& row : rows) {
    if (row.size() != n) {
      throw std::invalid_argument("CayleyTable: table is not square");
    }
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw std::invalid_argument("CayleyTable: entry " + std::to_string(v) +
                                    " is not in the carrier");
      }
      entries.push_back(static_cast<Element>(v));
    }
  }
  return CayleyTable(n, std::move(entries));
}

Transformation CayleyTable::left_translation(std::size_t a) const {
  auto r = row(a);
  return Transformation(r.begin(), r.end());
}

Transformation CayleyTable::right_translation(std::size_t b) const {
  Transformation col(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    col[x] = (*this)(x, b);
  }
  return col;
}

CayleyTable CayleyTable::transpose() const {
  return from_function(n_, [this](std::size_t a, std::size_t b) {
    return (*this)(b, a);
  });
}

CayleyTable CayleyTable::relabel(std::span<Element const> perm) const {
  std::vector<Element> out(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      out[perm[a] * n_ + perm[b]] = perm[(*this)(a, b)];
    }
  }
  return CayleyTable(n_, std::move(out));
}

CayleyTable chain_max(std::size_t n) {
  return CayleyTable::from_function(
      n, [](std::size_t a, std::size_t b) { return a < b ? b : a; });
}

CayleyTable right_zero(std::size_t n) {
  return CayleyTable::from_function(n,
                                    [](std::size_t, std::size_t b) { return b; });
}

CayleyTable left_zero(std::size_t n) {
  return CayleyTable::from_function(n,
                                    [](std::size_t a, std::size_t) { return a; });
}

CayleyTable constant_table(std::size_t n, Element c) {
  return CayleyTable::from_function(n,
                                    [c](std::size_t, std::size_t) { return c; });
}

CayleyTable cyclic_addition(std::size_t m) {
  return CayleyTable::from_function(
      m, [m](std::size_t a, std::size_t b) { return (a + b) % m; });
}

CayleyTable cyclic_multiplication(std::size_t m) {
  return CayleyTable::from_function(
      m, [m](std::size_t a, std::size_t b) { return (a * b) % m; });
}

bool is_associative(CayleyTable const& t) {
  std::size_t const n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element const ab = t(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_commutative(CayleyTable const& t) {
  std::size_t const n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (t(a, b) != t(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool is_idempotent(CayleyTable const& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t(a, a) != a) {
      return false;
    }
  }
  return true;
}

namespace {

bool rows_injective(CayleyTable const& t) {
  std::size_t const n = t.size();
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[t(a, b)]) {
        return false;
      }
      seen[t(a, b)] = true;
    }
  }
  return true;
}

bool columns_injective(CayleyTable const& t) {
  std::size_t const n = t.size();
  std::vector<bool> seen(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[t(a, b)]) {
        return false;
      }
      seen[t(a, b)] = true;
    }
  }
  return true;
}

}  // namespace

// On a finite carrier injective translations are bijections, so quasigroups
// and cancellative groupoids coincide.
bool is_quasigroup(CayleyTable const& t) {
  return rows_injective(t) && columns_injective(t);
}

bool is_cancellative(CayleyTable const& t) {
  return is_quasigroup(t);
}

std::optional<Element> neutral_element(CayleyTable const& t) {
  std::size_t const n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = t(e, x) == x && t(x, e) == x;
    }
    if (ok) {
      return static_cast<Element>(e);
    }
  }
  return std::nullopt;
}

std::optional<Element> absorbing_element(CayleyTable const& t) {
  std::size_t const n = t.size();
  for (std::size_t o = 0; o < n; ++o) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = t(o, x) == o && t(x, o) == o;
    }
    if (ok) {
      return static_cast<Element>(o);
    }
  }
  return std::nullopt;
}

ElementStats element_stats(CayleyTable const& t, Element s) {
  if (s >= t.size()) {
    throw std::invalid_argument("element_stats: element out of range");
  }
  ElementStats st;
  for (std::size_t x = 0; x < t.size(); ++x) {
    st.nl += t(s, x) == x;
    st.nr += t(x, s) == x;
    st.al += t(s, x) == s;
    st.ar += t(x, s) == s;
  }
  return st;
}

Element nfold_sum(CayleyTable const& plus, Element a, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("nfold_sum: k must be positive");
  }
  if (a >= plus.size()) {
    throw std::invalid_argument("nfold_sum: element out of range");
  }
  if (!is_associative(plus) || !is_commutative(plus)) {
    throw std::invalid_argument(
        "nfold_sum: addition must be associative and commutative");
  }
  Element sum = a;
  for (std::size_t i = 1; i < k; ++i) {
    sum = plus(sum, a);
  }
  return sum;
}

bool is_endomorphism(CayleyTable const& t, std::span<Element const> f) {
  std::size_t const n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (f[t(x, y)] != t(f[x], f[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ringoid
