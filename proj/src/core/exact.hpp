#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/matroid.hpp"

namespace gf4relax {

/// Exact determinant of an n x n integer matrix (row-major) by Bareiss
/// elimination. Throws DomainError on intermediate overflow.
std::int64_t integer_determinant(std::vector<std::int64_t> a, int n);

/// Determinant modulo a small prime p, result in [0, p).
int determinant_mod_p(std::vector<std::int64_t> a, int n, int p);

/// Column matroid of an integer matrix with `rows` rows, over the rationals
/// (p == 0) or over GF(p).
Matroid column_matroid(const std::vector<std::vector<std::int64_t>>& columns, int rows, int p = 0,
                       std::vector<std::string> labels = {});

}  // namespace gf4relax
