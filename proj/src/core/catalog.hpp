#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/matroid.hpp"
#include "core/minors.hpp"
#include "core/representation.hpp"

namespace gf4relax {

/// {P8-, F7=, (F7=)*}.
const TargetSet& bad_minor_targets();
/// {X8, Y8, Y8*}.
const TargetSet& xy_targets();

struct CatalogFlags {
  bool three_connected = false;
  bool representable = false;
  bool fragile = false;  // {U25, U35}
  bool u24_fragile = false;
  bool bad_minor = false;
  bool xy_minor = false;
};

CatalogFlags compute_flags(const Matroid& m);

struct CatalogEntry {
  std::string key;
  Matroid m;
  StandardRep rep;
  CatalogFlags flags;
  std::string parent;  // key of the parent, empty for the seeds
  std::string op;      // "ext <column>" or "coext <column>"
};

/// 3-connected, {U25, U35}-fragile and free of the bad minors. The caller
/// vouches for GF(4)-representability.
bool in_class(const Matroid& m);

/// Isomorph-free class members with at most max_elements elements, grown
/// from U25 and U35 by single-element extensions and coextensions of a
/// fixed GF(4) representation. Sorted by (size, key).
std::vector<CatalogEntry> generate_catalog(int max_elements);

/// Class members among the single-element extensions and coextensions of e,
/// one per isomorphism class. With exclude_xy, members with an
/// {X8, Y8, Y8*}-minor are left out.
std::vector<CatalogEntry> class_children(const CatalogEntry& e, bool exclude_xy = false);
bool splitter_check(const CatalogEntry& e, bool exclude_xy = false);

/// Rank-4, 9-element entries without an {X8, Y8, Y8*}-minor that are
/// splitters for the members without one.
std::vector<const CatalogEntry*> m99_candidates(const std::vector<CatalogEntry>& catalog);

/// Stable printable id of a canonical key (FNV-1a, 64 bits, hex).
std::string key_id(const std::string& key);

/// One entry per line: id, n, r, bases, flags, parent id and operation.
std::string format_catalog(const std::vector<CatalogEntry>& catalog);

StandardRep dual_rep(const StandardRep& rep);

}  // namespace gf4relax
