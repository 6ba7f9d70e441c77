#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/gf4.hpp"
#include "core/matroid.hpp"

namespace gf4relax {

/// A reduced representation [I | d]: row i stands for basis element
/// row_elems[i], column j for the non-basis element col_elems[j].
struct StandardRep {
  Gf4Matrix d;
  std::vector<int> row_elems;
  std::vector<int> col_elems;
};

/// Matroid of [I | rep.d] on n elements.
Matroid matroid_from_rep(const StandardRep& rep, int n, std::vector<std::string> labels = {});

/// Matroid of [I | a]: rows become elements 0..p-1 and columns p..p+q-1.
/// Labels come from the matrix when it carries both row and column labels.
Matroid from_gf4_matrix(const Gf4Matrix& a);

/// Re-expresses rep over another basis. new_rows/new_cols fix the row and
/// column order of the result. Throws DomainError if new_rows is not a basis.
StandardRep pivot(const StandardRep& rep, std::vector<int> new_rows, std::vector<int> new_cols);

bool realizes(const StandardRep& rep, const Matroid& m);

/// Backtracking completion of a partially filled matrix so that every square
/// submatrix is singular exactly when the target says so.
struct CompletionProblem {
  int rows = 0;
  int cols = 0;
  std::vector<int> fixed;                           // rows*cols, value bits or -1 if free
  std::vector<std::vector<std::uint8_t>> domains;   // per free cell, in assignment order
  std::vector<int> order;                           // free cells as i*cols+j
  std::function<bool(Subset row_set, Subset col_set)> nonsingular;
};

/// Calls on_solution with each full assignment (row-major bits) until it
/// returns false. Returns the number of solutions reported.
std::size_t complete(const CompletionProblem& p,
                     const std::function<bool(const std::vector<std::uint8_t>&)>& on_solution);

struct RepresentOptions {
  int max_elements = 12;
  /// Basis to build the representation over; the first basis when unset.
  std::optional<Subset> basis;
};

/// Complete GF(4)-representability test. The zero pattern of D is forced by
/// fundamental circuits, a spanning forest of its support is scaled to 1, and
/// the rest is searched over {1, w, w^2}. Throws ScaleError above max_elements.
std::optional<StandardRep> representable_gf4(const Matroid& m, const RepresentOptions& opts = {});

}  // namespace gf4relax
