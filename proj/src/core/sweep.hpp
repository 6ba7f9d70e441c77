#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/gf4.hpp"
#include "core/matroid.hpp"

namespace gf4relax {

/// Candidate sets for the outcomes of the relaxation structure theorem:
/// (a) whirl, (b) M99 or its dual, (c) and (d) wheels glued onto U25,
/// (e) a wheel glued onto M71, (f) described by a path sequence.
class StructureMatcher {
 public:
  explicit StructureMatcher(int max_elements);
  int max_elements() const { return max_; }
  /// Letters of every outcome that applies, in order; empty if none.
  std::string outcomes(const Matroid& m) const;
  std::size_t candidate_count(char outcome) const { return keys_.at(outcome - 'a').size(); }

 private:
  int max_;
  std::array<std::set<std::string>, 6> keys_;
};

/// Every matroid (as canonical keys) obtained from base by gluing wheels onto
/// the ordered triangles, for each subset of them, up to max_elements. A
/// spoke is only deleted when no later glued triangle uses it.
std::set<std::string> glued_family(const Matroid& base, const std::vector<std::vector<std::string>>& triangles,
                                   int max_elements);

struct SweepRecord {
  Gf4Matrix a;
  std::string scan = "ok";  // pattern id of the least match, or "ok"
  bool omega = false;
  bool generic = false;
  bool m_connected = false;
  bool mp_3connected = false;
  bool pw3 = false;
  bool mp_nonbinary = false;
  std::string fragile = "n/a";  // u24, u25u35, no, n/a
  bool basis_ok = false;        // X nondeletable basis, E-X noncontractible cobasis
  std::string outcome;          // structure letters when checked
  bool agree() const { return (scan == "ok") == omega && omega == generic; }
  /// M connected, M' 3-connected and GF(4)-representable.
  bool hypotheses() const { return m_connected && mp_3connected && generic; }
};

/// "A=..|scan=..|omega=ok|generic=ok|pw3=y|fragile=u25u35"
std::string format_record(const SweepRecord& r);

struct SweepOptions {
  int rows = 2;
  int cols = 2;
  std::uint64_t sample = 0;  // 0: every interior
  std::uint64_t seed = 1;
  bool properties = true;
  const StructureMatcher* matcher = nullptr;
};

struct SweepSummary {
  std::uint64_t total = 0;
  std::uint64_t agree = 0;
  std::uint64_t scan_ok = 0, omega_ok = 0, generic_ok = 0;
  std::uint64_t scan_ok_oracles_no = 0, scan_no_oracles_ok = 0, omega_generic_differ = 0;
  std::uint64_t pw3_checked = 0, pw3_fail = 0;
  std::uint64_t pairs = 0, fragile_fail = 0, basis_fail = 0;
  std::uint64_t nonbinary_checked = 0, nonbinary_fail = 0;
  std::uint64_t structure_checked = 0, unmatched = 0;
  std::map<char, std::uint64_t> outcome_first;
  std::size_t classes = 0;  // distinct M' up to isomorphism among the pairs
};

/// Runs the three verdicts (and the derived properties) on every interior of
/// the given shape, or on a seeded random sample of them.
SweepSummary run_sweep(const SweepOptions& opts, const std::function<void(const SweepRecord&)>& on_record = {});

/// Interior number `code` of a rows x cols shape; entry (i, j) is base-4
/// digit i * cols + j.
Gf4Matrix interior_from_code(int rows, int cols, std::uint64_t code);

}  // namespace gf4relax
