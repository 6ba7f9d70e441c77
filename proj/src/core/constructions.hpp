#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/matroid.hpp"
#include "core/minors.hpp"

namespace gf4relax {

Matroid uniform(int r, int n);

/// Cycle matroid of a multigraph on vertices 0..vertices-1. Loops allowed.
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                std::vector<std::string> labels = {});

/// M(W_r): hub plus an r-cycle. Elements s1..sr (spokes) then t1..tr (rim);
/// the triangles are {s_i, t_i, s_{i+1}}. r = 2 gives the doubled-edge graph.
Matroid wheel(int r);
/// wheel(r) with the rim relaxed. whirl(2) is U24.
Matroid whirl(int r);

/// Theta_k over the rationals, k in {3, 4}. Elements a1..ak then b1..bk;
/// {a1..ak} is a modular k-point line and a_i lies in the span of B - b_i.
Matroid theta(int k);

/// P_A(m1, m2) where A is the set of shared labels. A must be a modular flat
/// of m1 and both restrictions to A must agree. Elements: those of m2 in
/// order, then the rest of m1 in order.
Matroid generalized_parallel_connection(const Matroid& m1, const Matroid& m2);

/// Generalized Delta-Y exchange on a coindependent segment a, 2 <= |a| <= 4.
/// The new elements take the labels and positions of a.
Matroid delta_y(const Matroid& m, Subset a);
/// (delta_y(m*, a))* for an independent cosegment a.
Matroid nabla_y(const Matroid& m, Subset a);

/// P_T(m, N) \ x where N is wheel(r) with its triangle {s1, t1, s2} renamed
/// (a, b, c) and its other elements renamed prefix + label. x must contain b.
/// Elements: m minus x in order, then the new wheel elements.
Matroid glue_wheel(const Matroid& m, const std::vector<std::string>& triple, int r,
                   const std::vector<std::string>& x, std::string_view prefix);

/// `count` new elements parallel to e, labeled fresh or from `labels`.
Matroid parallel_extension(const Matroid& m, int e, int count, std::vector<std::string> labels = {});
Matroid series_extension(const Matroid& m, int e, int count, std::vector<std::string> labels = {});

/// Parallel extension along an allowable segment: multiplicities[i] copies of
/// the i-th element of the segment, each of which must be deletable.
Matroid allowable_parallel_extension(const Matroid& m, Subset segment, const std::vector<int>& multiplicities,
                                     const TargetSet& targets, std::vector<std::string> labels = {});
Matroid allowable_series_extension(const Matroid& m, Subset cosegment, const std::vector<int>& multiplicities,
                                   const TargetSet& targets, std::vector<std::string> labels = {});

/// prefix + k for the first `count` values of k >= 1 not already a label of m.
std::vector<std::string> fresh_labels(const Matroid& m, std::string_view prefix, int count);

/// Names: P6, F7, F7-, F7=, P8, P8-, X8, Y8, M71, M99, plus U<r>,<n>,
/// W<r> (wheel), Whirl<r> and Theta<k>. Throws DomainError on unknown names.
Matroid named(std::string_view name);
std::vector<std::string> named_list();

// X8 as built: S = {s1..s4} is the segment, C = {c1..c4} the cosegment.
Matroid x8();
// Every Y-Delta on an allowable triad of X8; all results are isomorphic.
std::vector<Matroid> y8_candidates();
Matroid y8();
// [I4 | D] over GF(4), elements 1..9; D has rows 11111, 1wv00, 110ww, 11001.
Matroid m99();
// Rank 3 on 1,2,3,b,d,f,g with lines {b,2,d}, {1,f,g}, {2,1,3}, {d,f,3}.
Matroid m71();

struct PathSequenceStep {
  enum class Kind { delta_nabla, glue_wheel };
  Kind kind = Kind::delta_nabla;
  char axis = 'S';
  // delta_nabla: either per-element multiplicities over the axis set (label
  // order), or a total spread round-robin over its deletable elements.
  int count = 0;
  std::vector<int> multiplicities;
  // glue_wheel
  int wheel_size = 3;
  std::vector<std::string> triple;  // empty: first allowable 3-subset
  std::string remove = "b";         // subset of "abc" containing b
};

struct PathState {
  Matroid m;
  std::vector<std::string> s, c;
};

PathState path_start();
/// Applies one step; throws DomainError if its preconditions fail.
PathState apply_step(const PathState& st, const PathSequenceStep& step);
Matroid run_path_sequence(const std::vector<PathSequenceStep>& steps);

/// One line per step: "dn S 2", "dn C m=1,0,1,0", "gw C r=4 X=ab [T=x,y,z]".
/// Blank lines and '#' comments are skipped.
std::vector<PathSequenceStep> parse_path_sequence(std::string_view text);
std::string format_step(const PathSequenceStep& step);

struct DescribedMatroid {
  std::string key;
  Matroid m;
  std::vector<PathSequenceStep> steps;
};

/// Isomorph-free list of matroids described by path sequences with at most
/// max_elements elements, sorted by (size, key).
std::vector<DescribedMatroid> enumerate_path_sequences(int max_elements);

}  // namespace gf4relax
