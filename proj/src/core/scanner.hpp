#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/gf4.hpp"

namespace gf4relax {

/// A small symbolic matrix over {0, x, y, z}; distinct symbols stand for
/// distinct nonzero field elements.
struct PatternTemplate {
  std::string id;
  int rows = 0;
  int cols = 0;
  std::vector<char> cells;  // row-major, each '0', 'x', 'y' or 'z'
  std::vector<char> symbols() const;
};

/// The fifteen forbidden templates, P01..P15.
const std::vector<PatternTemplate>& pattern_catalog();

/// Every instantiation of a template (one per injective symbol assignment).
std::vector<Gf4Matrix> instantiations(const PatternTemplate& t);

enum class Orientation { A, AT };

/// A template occurrence. Row and column indices are 0-based indices of the
/// oriented matrix (for AT, rows are columns of A and vice versa).
struct ScanMatch {
  std::string pattern;
  Orientation orientation = Orientation::A;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::pair<char, Gf4>> assignment;
};

/// The least match in (pattern, orientation, rows, cols) order, if any.
std::optional<ScanMatch> scan(const Gf4Matrix& a);

/// One-line form, e.g. "P04 A rows=0,1 cols=1,2 x=1 y=w z=v".
std::string format_match(const ScanMatch& m);

}  // namespace gf4relax
