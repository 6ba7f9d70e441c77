#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/gf4.hpp"

namespace gf4relax {

/// Subsets of the ground set as bitmasks; bit i is element i.
using Subset = std::uint32_t;

/// Hard ceiling for explicit matroids. Intermediate constructions (a
/// generalized parallel connection before its deletion) may need up to this
/// many elements; catalog and sweep matroids stay at 14 or fewer.
inline constexpr int kMaxElements = 20;

inline int popcount(Subset s) { return std::popcount(s); }
inline Subset bit(int i) { return Subset{1} << i; }
inline Subset full_set(int n) { return n == 0 ? 0 : (n >= 32 ? ~Subset{0} : (bit(n) - 1)); }
inline bool contains(Subset s, int i) { return (s >> i) & 1u; }
std::vector<int> elements_of(Subset s);
Subset subset_of(std::span<const int> elements);

/// Calls f(S) for every k-subset S of an n-set, in increasing numeric order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Subset{0});
    return;
  }
  Subset s = full_set(k);
  const Subset limit = bit(n);
  while (s < limit) {
    f(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// A matroid given by its basis family. The rank of every subset is
/// tabulated at construction, so all queries below are table lookups.
class Matroid {
 public:
  /// The empty matroid (no elements, rank 0).
  Matroid();

  /// Builds from an explicit basis family. Throws DomainError if the family
  /// is empty, mixes sizes, or (when validation is on) violates basis exchange.
  static Matroid from_bases(int n, std::vector<Subset> bases, std::vector<std::string> labels = {});

  /// Builds from a rank table of size 2^n. The table is trusted; pass
  /// validate=true to check it is a matroid rank function.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> rank,
                                 std::vector<std::string> labels = {}, bool validate = false);

  int size() const { return n_; }
  int rank() const { return r_; }
  Subset ground() const { return full_set(n_); }
  const std::vector<Subset>& bases() const { return bases_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  /// Index of the element with this label, or -1.
  int index_of(std::string_view label) const;
  /// Subset of the named elements; throws DomainError on an unknown label.
  Subset subset_named(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Subset s) const;

  int rank_of(Subset s) const { return rank_[s]; }
  int corank_of(Subset s) const { return popcount(s) + rank_[ground() & ~s] - r_; }
  bool is_independent(Subset s) const { return rank_[s] == popcount(s); }
  bool is_basis(Subset s) const { return popcount(s) == r_ && rank_[s] == r_; }
  bool is_circuit(Subset s) const;

  Subset closure(Subset s) const;
  Subset coclosure(Subset s) const;
  /// Least set containing s that is closed in both M and M*.
  Subset full_closure(Subset s) const;

  Matroid dual() const;
  Matroid delete_set(Subset s) const;
  Matroid contract_set(Subset s) const;
  Matroid restrict_to(Subset s) const { return delete_set(ground() & ~s); }
  Matroid delete_element(int e) const { return delete_set(bit(e)); }
  Matroid contract_element(int e) const { return contract_set(bit(e)); }

  Matroid with_labels(std::vector<std::string> labels) const;
  /// Element i of the result is element order[i] of this matroid.
  Matroid reordered(std::span<const int> order) const;
  /// Same matroid with elements permuted so labels appear in `labels` order.
  Matroid reordered_by_labels(std::span<const std::string> labels) const;

  /// Exact equality: same labels in the same order and the same bases.
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_ && a.labels_ == b.labels_;
  }

  /// Local submodularity and unit-increase check of the rank table.
  bool rank_table_is_matroid() const;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::string> labels_;
};

/// Validation of the exchange axiom on every construction. On by default.
void set_validation(bool on);
bool validation_enabled();

std::vector<std::string> default_labels(int n);

/// Same ground set by label (any order) and the same bases.
bool equal_labeled(const Matroid& a, const Matroid& b);

// Set systems derived from the rank table.
std::vector<Subset> circuits(const Matroid& m);
std::vector<Subset> cocircuits(const Matroid& m);
std::vector<Subset> flats(const Matroid& m);
std::vector<Subset> hyperplanes(const Matroid& m);
std::vector<Subset> circuit_hyperplanes(const Matroid& m);
bool is_circuit_hyperplane(const Matroid& m, Subset x);
bool is_flat(const Matroid& m, Subset s);
Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

/// A separating set and its connectivity value.
struct SeparationReport {
  Subset side = 0;
  int lambda = 0;
  int order = 0;  // k of the k-separation
};

int lambda(const Matroid& m, Subset s);
/// A k-separation (lambda <= k-1, both sides >= k) if one exists.
std::optional<SeparationReport> find_separation(const Matroid& m, int k);
bool is_connected(const Matroid& m);
bool is_3_connected(const Matroid& m);
bool is_3connected_up_to_sp(const Matroid& m);
/// Classes of pairwise-parallel non-loop elements (singletons included).
std::vector<Subset> parallel_classes(const Matroid& m);
/// Classes of pairwise-series non-coloop elements (singletons included).
std::vector<Subset> series_classes(const Matroid& m);
/// Connected components (separators that are minimal and nonempty).
std::vector<Subset> components(const Matroid& m);

/// An ordering all of whose prefixes are 3-separating, if one exists.
std::optional<std::vector<int>> path_width_3_ordering(const Matroid& m);

/// Disjoint union; labels must be disjoint.
Matroid direct_sum(const Matroid& a, const Matroid& b);
/// 2-sum along the shared element `basepoint`, via the theta rank formula.
Matroid two_sum(const Matroid& a, const Matroid& b, std::string_view basepoint);

/// Text format: "n r" then one basis per line as sorted 0-based indices.
Matroid parse_matroid(std::string_view text);
std::string format_matroid(const Matroid& m);

}  // namespace gf4relax
