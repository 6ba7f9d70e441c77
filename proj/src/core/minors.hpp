#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/matroid.hpp"

namespace gf4relax {

/// A minor target with its precomputed isomorphism key.
struct MinorTarget {
  Matroid matroid;
  std::string key;
  std::size_t basis_count = 0;
  bool uniform = false;
};

/// A family N of excluded/target minors, e.g. {U25, U35}.
class TargetSet {
 public:
  TargetSet(std::string name, const std::vector<Matroid>& members);
  const std::string& name() const { return name_; }
  const std::vector<MinorTarget>& members() const { return members_; }

 private:
  std::string name_;
  std::vector<MinorTarget> members_;
};

const TargetSet& u24_targets();
const TargetSet& u25u35_targets();

/// M / contracted \ deleted is isomorphic to target `target`.
struct MinorWitness {
  Subset contracted = 0;
  Subset deleted = 0;
  int target = 0;
};

/// Contracts an independent set and deletes a coindependent one, trying
/// every split whose sizes match the target's rank and corank.
std::optional<MinorWitness> find_minor(const Matroid& m, const TargetSet& targets);
std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& target);
bool has_minor(const Matroid& m, const TargetSet& targets);
bool has_minor(const Matroid& m, const Matroid& target);

struct FragilityReport {
  std::vector<bool> deletable;     // M\e keeps an N-minor
  std::vector<bool> contractible;  // M/e keeps an N-minor
  bool has_minor = false;
  bool fragile = false;
};

FragilityReport fragility_report(const Matroid& m, const TargetSet& targets);
/// The same report with the roles of deletion and contraction swapped, as
/// for the dual matroid against a dual-closed family.
FragilityReport dual_report(const FragilityReport& r);

/// Sets of size >= 3 in which every 3-subset is a triangle.
std::vector<Subset> segments(const Matroid& m);
std::vector<Subset> cosegments(const Matroid& m);
/// Coindependent segments containing an element that is not deletable.
std::vector<Subset> allowable_segments(const Matroid& m, const FragilityReport& r);
/// Independent cosegments containing an element that is not contractible.
std::vector<Subset> allowable_cosegments(const Matroid& m, const FragilityReport& r);
bool is_allowable_segment(const Matroid& m, const FragilityReport& r, Subset s);
bool is_allowable_cosegment(const Matroid& m, const FragilityReport& r, Subset s);

/// Every element of basis x is nondeletable and every element outside it is
/// noncontractible. Throws DomainError if x is not a basis.
bool check_nondeletable_basis(const Matroid& m, Subset x, const FragilityReport& r);

}  // namespace gf4relax
