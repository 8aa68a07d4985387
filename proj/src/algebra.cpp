#include "ciq/algebra.hpp"

#include <algorithm>
#include <cstdint>

namespace ciq {

CayleyTable make_table(int order, std::vector<element_t> entries) {
  if (order < 1) {
    throw Error("make_table: order must be positive, got " +
                std::to_string(order));
  }
  if (order > kMaxOrder) {
    throw OrderTooLarge("make_table: order " + std::to_string(order) +
                        " exceeds the maximum " + std::to_string(kMaxOrder));
  }
  const auto expected = static_cast<std::size_t>(order) * order;
  if (entries.size() != expected) {
    throw WrongLength("make_table: expected " + std::to_string(expected) +
                      " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] >= order) {
      throw EntryOutOfRange("make_table: entry " + std::to_string(entries[i]) +
                            " at cell " + std::to_string(i) +
                            " is outside [0, " + std::to_string(order) + ")");
    }
  }
  return CayleyTable{order, std::move(entries)};
}

TotalMap identity_map(int n) {
  TotalMap m;
  m.image.resize(n);
  for (int i = 0; i < n; ++i) m.image[i] = i;
  return m;
}

TotalMap left_translation(const CayleyTable& t, element_t a) {
  TotalMap m;
  m.image.assign(t.cells.begin() + static_cast<std::size_t>(a) * t.n,
                 t.cells.begin() + static_cast<std::size_t>(a + 1) * t.n);
  return m;
}

TotalMap right_translation(const CayleyTable& t, element_t a) {
  TotalMap m;
  m.image.resize(t.n);
  for (int y = 0; y < t.n; ++y) m.image[y] = t.at(y, a);
  return m;
}

CayleyTable transpose(const CayleyTable& t) {
  CayleyTable r;
  r.n = t.n;
  r.cells.resize(t.cells.size());
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) r.cells[y * t.n + x] = t.at(x, y);
  return r;
}

bool is_bijective(const TotalMap& m) {
  const int n = m.order();
  std::uint64_t seen = 0;
  for (element_t v : m.image) {
    if (v < 0 || v >= n) return false;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

TotalMap compose(const TotalMap& f, const TotalMap& g) {
  if (f.order() != g.order()) {
    throw OrderMismatch("compose: orders " + std::to_string(f.order()) +
                        " and " + std::to_string(g.order()) + " differ");
  }
  TotalMap r;
  r.image.resize(f.order());
  for (int x = 0; x < f.order(); ++x) r.image[x] = f(g(x));
  return r;
}

Permutation invert(const Permutation& p) {
  if (!is_bijective(p)) {
    throw NotBijective("invert: map is not a bijection");
  }
  Permutation r;
  r.image.resize(p.order());
  for (int x = 0; x < p.order(); ++x) r.image[p(x)] = x;
  return r;
}

namespace {

bool row_is_permutation(const CayleyTable& t, int x) {
  std::uint64_t seen = 0;
  for (int y = 0; y < t.n; ++y) {
    const std::uint64_t bit = std::uint64_t{1} << t.at(x, y);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool column_is_permutation(const CayleyTable& t, int y) {
  std::uint64_t seen = 0;
  for (int x = 0; x < t.n; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << t.at(x, y);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

}  // namespace

bool is_left_quasigroup(const CayleyTable& t) {
  for (int x = 0; x < t.n; ++x)
    if (!row_is_permutation(t, x)) return false;
  return true;
}

bool is_right_quasigroup(const CayleyTable& t) {
  for (int y = 0; y < t.n; ++y)
    if (!column_is_permutation(t, y)) return false;
  return true;
}

bool is_quasigroup(const CayleyTable& t) {
  return is_left_quasigroup(t) && is_right_quasigroup(t);
}

std::optional<element_t> identity_element(const CayleyTable& t) {
  for (element_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (element_t x = 0; x < t.n && ok; ++x) {
      ok = t.at(e, x) == x && t.at(x, e) == x;
    }
    if (ok) return e;  // two-sided identities are unique
  }
  return std::nullopt;
}

bool is_automorphism(const CayleyTable& t, const TotalMap& m) {
  if (m.order() != t.n || !is_bijective(m)) return false;
  for (element_t x = 0; x < t.n; ++x)
    for (element_t y = 0; y < t.n; ++y)
      if (m(t.at(x, y)) != t.at(m(x), m(y))) return false;
  return true;
}

}  // namespace ciq
