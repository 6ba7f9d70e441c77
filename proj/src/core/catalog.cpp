#include "core/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "core/canonical.hpp"
#include "core/constructions.hpp"

namespace gf4relax {

const TargetSet& bad_minor_targets() {
  static const TargetSet t("bad", {named("P8-"), named("F7="), named("F7=").dual()});
  return t;
}

const TargetSet& xy_targets() {
  static const TargetSet t("xy", {x8(), y8(), y8().dual()});
  return t;
}

CatalogFlags compute_flags(const Matroid& m) {
  CatalogFlags f;
  f.three_connected = is_3_connected(m);
  f.representable = m.size() <= 12 ? representable_gf4(m).has_value() : false;
  f.fragile = fragility_report(m, u25u35_targets()).fragile;
  f.u24_fragile = fragility_report(m, u24_targets()).fragile;
  f.bad_minor = has_minor(m, bad_minor_targets());
  f.xy_minor = has_minor(m, xy_targets());
  return f;
}

bool in_class(const Matroid& m) {
  return is_3_connected(m) && fragility_report(m, u25u35_targets()).fragile && !has_minor(m, bad_minor_targets());
}

StandardRep dual_rep(const StandardRep& rep) { return {rep.d.transpose(), rep.col_elems, rep.row_elems}; }

namespace {

// Nonzero vectors of length r whose first nonzero entry is 1.
std::vector<std::vector<Gf4>> projective_points(int r) {
  std::vector<std::vector<Gf4>> out;
  const int total = 1 << (2 * r);
  for (int code = 1; code < total; ++code) {
    std::vector<Gf4> v(r);
    for (int i = 0; i < r; ++i) v[i] = Gf4::from_bits(static_cast<std::uint8_t>((code >> (2 * i)) & 3));
    const auto first = std::find_if(v.begin(), v.end(), [](Gf4 x) { return !x.is_zero(); });
    if (*first == Gf4::one()) out.push_back(std::move(v));
  }
  return out;
}

bool parallel_to_existing(const StandardRep& rep, const std::vector<Gf4>& v) {
  const int p = static_cast<int>(rep.row_elems.size());
  if (std::count_if(v.begin(), v.end(), [](Gf4 x) { return !x.is_zero(); }) == 1) return true;
  for (std::size_t j = 0; j < rep.d.cols(); ++j) {
    Gf4 ratio;
    bool ok = true;
    for (int i = 0; i < p && ok; ++i) {
      const Gf4 a = rep.d.at(i, j);
      if (a.is_zero() != v[i].is_zero()) ok = false;
      else if (!a.is_zero()) {
        const Gf4 r = v[i] / a;
        if (ratio.is_zero()) ratio = r;
        else if (ratio != r) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

StandardRep add_column(const StandardRep& rep, const std::vector<Gf4>& v, int element) {
  const std::size_t p = rep.d.rows(), q = rep.d.cols();
  std::vector<Gf4> data;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) data.push_back(rep.d.at(i, j));
    data.push_back(v[i]);
  }
  StandardRep out{Gf4Matrix(p, q + 1, std::move(data)), rep.row_elems, rep.col_elems};
  out.col_elems.push_back(element);
  return out;
}

std::string column_text(const std::vector<Gf4>& v) {
  std::string s;
  for (Gf4 x : v) s += to_token(x);
  return s;
}

struct Child {
  Matroid m;
  StandardRep rep;
  std::string op;
};

template <class F>
void for_each_child(const CatalogEntry& e, F&& f) {
  const int n = e.m.size();
  for (int side = 0; side < 2; ++side) {
    const StandardRep base = side == 0 ? e.rep : dual_rep(e.rep);
    const int r = static_cast<int>(base.row_elems.size());
    if (r == 0) continue;
    for (const auto& v : projective_points(r)) {
      if (parallel_to_existing(base, v)) continue;
      const StandardRep ext = add_column(base, v, n);
      Matroid m = matroid_from_rep(ext, n + 1);
      if (side == 0) {
        f(Child{std::move(m), ext, "ext " + column_text(v)});
      } else {
        f(Child{m.dual(), dual_rep(ext), "coext " + column_text(v)});
      }
    }
  }
}

CatalogEntry seed(const Gf4Matrix& d, bool dual) {
  StandardRep rep{d, {0, 1}, {2, 3, 4}};
  if (dual) rep = dual_rep(rep);
  Matroid m = matroid_from_rep(rep, 5);
  CatalogEntry e{canonical_key(m), m, rep, {}, "", dual ? "U35" : "U25"};
  e.flags = compute_flags(m);
  return e;
}

}  // namespace

std::vector<CatalogEntry> generate_catalog(int max_elements) {
  if (max_elements > 12) throw ScaleError("unsupported scale: the catalog is generated up to 12 elements");
  const bool was = validation_enabled();
  set_validation(false);
  const Gf4Matrix d = Gf4Matrix::from_rows({{Gf4::one(), Gf4::one(), Gf4::one()},
                                            {Gf4::one(), Gf4::omega(), Gf4::omega2()}});
  std::vector<CatalogEntry> out;
  if (max_elements >= 5) {
    out.push_back(seed(d, false));
    out.push_back(seed(d, true));
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
  std::set<std::string> seen;
  for (const auto& e : out) seen.insert(e.key);
  std::vector<CatalogEntry> level = out;
  for (int n = 6; n <= max_elements && !level.empty(); ++n) {
    std::map<std::string, CatalogEntry> next;
    for (const auto& parent : level) {
      for_each_child(parent, [&](Child c) {
        std::string key = canonical_key(c.m);
        if (!seen.insert(key).second) return;
        if (!in_class(c.m)) return;
        CatalogEntry e{key, std::move(c.m), std::move(c.rep), {}, parent.key, std::move(c.op)};
        e.flags = compute_flags(e.m);
        next.emplace(key, std::move(e));
      });
    }
    level.clear();
    for (auto& [k, e] : next) level.push_back(std::move(e));
    out.insert(out.end(), level.begin(), level.end());
  }
  set_validation(was);
  return out;
}

std::vector<CatalogEntry> class_children(const CatalogEntry& e, bool exclude_xy) {
  const bool was = validation_enabled();
  set_validation(false);
  std::map<std::string, CatalogEntry> found;
  std::set<std::string> seen;
  for_each_child(e, [&](Child c) {
    std::string key = canonical_key(c.m);
    if (!seen.insert(key).second || !in_class(c.m)) return;
    if (exclude_xy && has_minor(c.m, xy_targets())) return;
    found.emplace(key, CatalogEntry{key, std::move(c.m), std::move(c.rep), {}, e.key, std::move(c.op)});
  });
  set_validation(was);
  std::vector<CatalogEntry> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

bool splitter_check(const CatalogEntry& e, bool exclude_xy) { return class_children(e, exclude_xy).empty(); }

std::vector<const CatalogEntry*> m99_candidates(const std::vector<CatalogEntry>& catalog) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog)
    if (e.m.size() == 9 && e.m.rank() == 4 && !e.flags.xy_minor && splitter_check(e, true)) out.push_back(&e);
  return out;
}

std::string key_id(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_catalog(const std::vector<CatalogEntry>& catalog) {
  std::string out;
  for (const auto& e : catalog) {
    out += key_id(e.key) + " n=" + std::to_string(e.m.size()) + " r=" + std::to_string(e.m.rank()) + " bases=";
    bool first = true;
    for (Subset b : e.m.bases()) {
      if (!first) out += ',';
      first = false;
      for (int i : elements_of(b)) out += static_cast<char>(i < 10 ? '0' + i : 'a' + i - 10);
    }
    const auto& f = e.flags;
    out += std::string(" flags=") + (f.three_connected ? "3c" : "-") + "," + (f.representable ? "gf4" : "-") + "," +
           (f.fragile ? "u25u35" : "-") + "," + (f.u24_fragile ? "u24" : "-") + "," + (f.bad_minor ? "bad" : "-") +
           "," + (f.xy_minor ? "xy" : "-");
    out += " from=" + (e.parent.empty() ? std::string("-") : key_id(e.parent)) + " op=" + e.op + "\n";
  }
  return out;
}

}  // namespace gf4relax
