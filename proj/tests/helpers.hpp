#pragma once
// Table builders and independent test-side oracles shared by the test
// suites. Everything here deliberately avoids the library code paths it
// is used to check.

#include <random>
#include <vector>

#include "ciq/algebra.hpp"

namespace ciq::testing {

// x*y = x + y (mod n)
inline CayleyTable zn_table(int n) {
  std::vector<element_t> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x * n + y] = (x + y) % n;
  return CayleyTable{n, std::move(cells)};
}

// x*y = a*x + b*y + c (mod n)
inline CayleyTable affine_table(int n, int a, int b, int c) {
  std::vector<element_t> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x * n + y] = (a * x + b * y + c) % n;
  return CayleyTable{n, std::move(cells)};
}

// x*y = y - x (mod 3): a quasigroup that is not left CI.
inline CayleyTable y_minus_x_mod3() {
  return CayleyTable{3, {0, 1, 2, 2, 0, 1, 1, 2, 0}};
}

inline CayleyTable constant_table(int n, element_t c) {
  return CayleyTable{n, std::vector<element_t>(static_cast<std::size_t>(n) * n, c)};
}

inline CayleyTable table_from_rows(const std::vector<std::vector<element_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<element_t> cells;
  for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
  return CayleyTable{n, std::move(cells)};
}

// Independent Latin-square predicate: counts symbol occurrences per row
// and per column instead of going through the translation machinery.
inline bool latin_by_counting(const CayleyTable& t) {
  for (int x = 0; x < t.n; ++x) {
    std::vector<int> row_count(t.n, 0), col_count(t.n, 0);
    for (int y = 0; y < t.n; ++y) {
      ++row_count[t.at(x, y)];
      ++col_count[t.at(y, x)];
    }
    for (int v = 0; v < t.n; ++v) {
      if (row_count[v] != 1 || col_count[v] != 1) return false;
    }
  }
  return true;
}

namespace detail {
inline void all_latin_rec(int n, int idx, std::vector<element_t>& cells,
                          std::vector<unsigned>& row_free,
                          std::vector<unsigned>& col_free,
                          std::vector<CayleyTable>& out) {
  if (idx == n * n) {
    out.push_back(CayleyTable{n, cells});
    return;
  }
  const int x = idx / n, y = idx % n;
  unsigned avail = row_free[x] & col_free[y];
  while (avail) {
    const int v = __builtin_ctz(avail);
    avail &= avail - 1;
    cells[idx] = v;
    row_free[x] ^= 1u << v;
    col_free[y] ^= 1u << v;
    all_latin_rec(n, idx + 1, cells, row_free, col_free, out);
    row_free[x] ^= 1u << v;
    col_free[y] ^= 1u << v;
  }
}
}  // namespace detail

// Every Latin square of order n, by direct cell-major backtracking.
// Usable up to n = 5 (161280 squares).
inline std::vector<CayleyTable> all_latin_squares(int n) {
  std::vector<CayleyTable> out;
  std::vector<element_t> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<unsigned> row_free(n, (1u << n) - 1u), col_free(n, (1u << n) - 1u);
  detail::all_latin_rec(n, 0, cells, row_free, col_free, out);
  return out;
}

inline CayleyTable random_table(std::mt19937& rng, int n) {
  std::vector<element_t> cells(static_cast<std::size_t>(n) * n);
  for (auto& c : cells) c = static_cast<element_t>(rng() % n);
  return CayleyTable{n, std::move(cells)};
}

inline TotalMap random_map(std::mt19937& rng, int n) {
  TotalMap m;
  m.image.resize(n);
  for (auto& v : m.image) v = static_cast<element_t>(rng() % n);
  return m;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(p.image[i], p.image[rng() % (i + 1)]);
  }
  return p;
}

}  // namespace ciq::testing
