#pragma once

#include <optional>
#include <vector>

#include "core/gf4.hpp"
#include "core/matroid.hpp"
#include "core/representation.hpp"
#include "core/scanner.hpp"

namespace gf4relax {

/// Raised when an operation needs a GF(4)-representable input and did not get one.
class NotRepresentableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Adds the circuit-hyperplane x to the bases. Throws DomainError otherwise.
Matroid relax(const Matroid& m, Subset x);

/// Bordered block form C = [[A, 1], [1^T, 0]] of a matroid with a
/// circuit-hyperplane x over the basis (x - e) + f. C has rows a_rows then f
/// and columns a_cols then e.
struct ReducedRepresentation {
  Subset x = 0;
  int e = -1;
  int f = -1;
  Gf4Matrix a;
  Gf4Matrix c;
  std::vector<int> a_rows;
  std::vector<int> a_cols;

  StandardRep standard() const;
  /// The same layout with the corner replaced, as a representation of a relaxation.
  StandardRep standard_with(const Gf4Matrix& interior, Gf4 corner) const;
};

struct BuiltRepresentation {
  Matroid m;
  ReducedRepresentation rr;
};

/// Matroid of the bordered matrix with interior a (p x q, both at least 1).
/// Elements: x1..xp (rows of a), e, f, y1..yq (columns of a).
BuiltRepresentation build_reduced_representation(const Gf4Matrix& a);

/// Scales raw (rows (x - e) + f, columns (E - x - f) + e, in that order) so
/// that column e and row f are all ones. Throws DomainError if the border has
/// the wrong zero pattern for a circuit-hyperplane.
ReducedRepresentation normalize_to_block_form(const StandardRep& raw, Subset x, int e, int f);

struct RelaxationVerdict {
  bool representable = false;
  std::optional<Gf4Matrix> c_prime;  // full bordered C' when found by search
  std::optional<ScanMatch> match;    // forbidden submatrix when found by the scanner
};

struct OmegaSearchOptions {
  Gf4 corner = Gf4::omega();
  /// Search every cell over all of GF(4) instead of {1, corner} on supp(A).
  bool full_alphabet = false;
  bool enumerate_all = false;
};

struct OmegaSearchResult {
  RelaxationVerdict verdict;
  std::vector<Gf4Matrix> witnesses;  // interiors A' (all of them with enumerate_all)
};

/// Looks for C' = [[A', 1], [1^T, corner]] with M[I|C'] = relax(M, x).
OmegaSearchResult omega_corner_search(const ReducedRepresentation& rr, const OmegaSearchOptions& opts = {});

/// Scanner decision: representable iff no forbidden submatrix occurs in A or A^T.
RelaxationVerdict verdict(const ReducedRepresentation& rr);

struct PipelineEntry {
  Subset x = 0;
  ReducedRepresentation rr;
  RelaxationVerdict scan;
  std::optional<RelaxationVerdict> omega;
  std::optional<bool> generic;
};

struct PipelineOptions {
  bool run_oracles = false;
  RepresentOptions represent;
};

/// Every circuit-hyperplane of m with its scanner verdict (and the two
/// search oracles on request). Throws NotRepresentableError if m is not
/// GF(4)-representable.
std::vector<PipelineEntry> relaxation_pipeline(const Matroid& m, const PipelineOptions& opts = {});

/// Reduced representation of m for circuit-hyperplane x using the least
/// valid (e, f), or the given pair.
std::optional<ReducedRepresentation> reduced_representation(const Matroid& m, Subset x,
                                                            std::optional<std::pair<int, int>> ef = {},
                                                            const RepresentOptions& ropts = {});

}  // namespace gf4relax
