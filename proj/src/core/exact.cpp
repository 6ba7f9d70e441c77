#include "core/exact.hpp"

#include <utility>

namespace gf4relax {

std::int64_t integer_determinant(std::vector<std::int64_t> a, int n) {
  if (n == 0) return 1;
  int sign = 1;
  __int128 prev = 1;
  std::vector<__int128> m(a.begin(), a.end());
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        m[i * n + j] = v / prev;
        const __int128 lim = __int128{1} << 100;
        if (m[i * n + j] > lim || m[i * n + j] < -lim) throw DomainError("integer determinant overflow");
      }
    }
    prev = m[k * n + k];
  }
  const __int128 d = m[(n - 1) * n + (n - 1)] * sign;
  if (d > INT64_MAX || d < INT64_MIN) throw DomainError("integer determinant overflow");
  return static_cast<std::int64_t>(d);
}

int determinant_mod_p(std::vector<std::int64_t> a, int n, int p) {
  for (auto& x : a) x = ((x % p) + p) % p;
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::int64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = (p - det) % p;
    }
    det = det * a[c * n + c] % p;
    const std::int64_t iv = inv(a[c * n + c]);
    for (int i = c + 1; i < n; ++i) {
      const std::int64_t f = a[i * n + c] * iv % p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a[i * n + j] = ((a[i * n + j] - f * a[c * n + j]) % p + p) % p;
    }
  }
  return static_cast<int>(det);
}

Matroid column_matroid(const std::vector<std::vector<std::int64_t>>& columns, int rows, int p,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(columns.size());
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != rows) throw DomainError("column length does not match row count");
  std::vector<Subset> bases;
  for_each_k_subset(n, rows, [&](Subset s) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(rows) * rows);
    int j = 0;
    for (int e : elements_of(s)) {
      for (int i = 0; i < rows; ++i) a[i * rows + j] = columns[e][i];
      ++j;
    }
    const bool nonzero = p == 0 ? integer_determinant(a, rows) != 0 : determinant_mod_p(a, rows, p) != 0;
    if (nonzero) bases.push_back(s);
  });
  if (bases.empty()) throw DomainError("matrix rows are dependent; drop rows to reach full rank");
  return Matroid::from_bases(n, std::move(bases), std::move(labels));
}

}  // namespace gf4relax
