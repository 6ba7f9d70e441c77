#include "core/sweep.hpp"

#include <random>
#include <unordered_map>

#include "core/canonical.hpp"
#include "core/constructions.hpp"
#include "core/minors.hpp"
#include "core/relaxation.hpp"
#include "core/representation.hpp"

namespace gf4relax {

namespace {

void glue_rec(const Matroid& m, const std::vector<std::vector<std::string>>& tri, std::size_t at, int max_elements,
              std::set<std::string>& out) {
  if (at == tri.size()) {
    out.insert(canonical_key(m));
    return;
  }
  const auto& t = tri[at];
  std::vector<std::string> free_spokes;
  for (int s : {0, 2}) {
    bool later = false;
    for (std::size_t k = at + 1; k < tri.size(); ++k)
      for (const auto& l : tri[k])
        if (l == t[s]) later = true;
    if (!later) free_spokes.push_back(t[s]);
  }
  const std::string prefix = "g" + std::to_string(at + 1);
  for (Subset pick = 0; pick < bit(static_cast<int>(free_spokes.size())); ++pick) {
    std::vector<std::string> x = {t[1]};
    for (int i : elements_of(pick)) x.push_back(free_spokes[i]);
    const int removed = static_cast<int>(x.size());
    for (int r = 3; m.size() + 2 * r - 3 - removed <= max_elements; ++r)
      glue_rec(glue_wheel(m, t, r, x, prefix), tri, at + 1, max_elements, out);
  }
}

}  // namespace

std::set<std::string> glued_family(const Matroid& base, const std::vector<std::vector<std::string>>& triangles,
                                   int max_elements) {
  std::set<std::string> out;
  const int k = static_cast<int>(triangles.size());
  for (Subset j = 0; j < bit(k); ++j) {
    std::vector<std::vector<std::string>> chosen;
    for (int i : elements_of(j)) chosen.push_back(triangles[i]);
    if (base.size() <= max_elements) glue_rec(base, chosen, 0, max_elements, out);
  }
  return out;
}

StructureMatcher::StructureMatcher(int max_elements) : max_(max_elements) {
  const bool was = validation_enabled();
  set_validation(false);
  for (int r = 2; 2 * r <= max_elements; ++r) keys_[0].insert(canonical_key(whirl(r)));
  if (max_elements >= 9) {
    keys_[1].insert(canonical_key(m99()));
    keys_[1].insert(canonical_key(m99().dual()));
  }
  const Matroid u = uniform(2, 5).with_labels({"a", "b", "c", "d", "e"});
  keys_[2] = glued_family(u, {{"a", "c", "b"}, {"a", "d", "b"}}, max_elements);
  keys_[3] = glued_family(u, {{"a", "b", "c"}, {"c", "d", "e"}}, max_elements);
  keys_[4] = glued_family(m71(), {{"1", "3", "2"}}, max_elements);
  for (const auto& d : enumerate_path_sequences(max_elements)) keys_[5].insert(d.key);
  set_validation(was);
}

std::string StructureMatcher::outcomes(const Matroid& m) const {
  const std::string k = canonical_key(m);
  const std::string kd = canonical_key(m.dual());
  std::string out;
  for (int i = 0; i < 6; ++i) {
    const bool dual_ok = i >= 2 && i <= 4;
    if (keys_[i].count(k) || (dual_ok && keys_[i].count(kd))) out += static_cast<char>('a' + i);
  }
  return out;
}

std::string format_record(const SweepRecord& r) {
  return "A=" + format_matrix_inline(r.a) + "|scan=" + r.scan + "|omega=" + (r.omega ? "ok" : "no") +
         "|generic=" + (r.generic ? "ok" : "no") + "|pw3=" + (r.pw3 ? "y" : "n") + "|fragile=" + r.fragile;
}

Gf4Matrix interior_from_code(int rows, int cols, std::uint64_t code) {
  std::vector<Gf4> data(static_cast<std::size_t>(rows) * cols);
  for (auto& x : data) {
    x = Gf4::from_bits(static_cast<std::uint8_t>(code & 3));
    code >>= 2;
  }
  return Gf4Matrix(rows, cols, std::move(data));
}

namespace {

// Fragility of M' in canonical element order, and its structure outcome.
struct ClassInfo {
  bool fragile_known = false;
  bool u24 = false, u25u35 = false;
  FragilityReport r24, r25;
  std::optional<std::string> outcome;
};

}  // namespace

SweepSummary run_sweep(const SweepOptions& opts, const std::function<void(const SweepRecord&)>& on_record) {
  if (opts.rows < 1 || opts.cols < 1) throw DomainError("sweep shape needs at least one row and column");
  const int cells = opts.rows * opts.cols;
  if (cells > 16) throw ScaleError("unsupported scale: sweeps go up to 16 interior cells");
  if (opts.sample == 0 && cells > 9) throw ScaleError("unsupported scale: exhaustive sweeps go up to 3 x 3");
  const bool was = validation_enabled();
  set_validation(false);
  SweepSummary sum;
  std::unordered_map<std::string, ClassInfo> cache;
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t space = std::uint64_t{1} << (2 * cells);
  const std::uint64_t count = opts.sample ? opts.sample : space;
  const RepresentOptions ropts{14, std::nullopt};
  for (std::uint64_t it = 0; it < count; ++it) {
    const std::uint64_t code = opts.sample ? (rng() & (space - 1)) : it;
    SweepRecord rec;
    rec.a = interior_from_code(opts.rows, opts.cols, code);
    const BuiltRepresentation b = build_reduced_representation(rec.a);
    const RelaxationVerdict sv = verdict(b.rr);
    if (sv.match) rec.scan = sv.match->pattern;
    rec.omega = omega_corner_search(b.rr).verdict.representable;
    const Matroid mp = relax(b.m, b.rr.x);
    rec.generic = representable_gf4(mp, ropts).has_value();
    ++sum.total;
    if (rec.agree()) ++sum.agree;
    sum.scan_ok += rec.scan == "ok";
    sum.omega_ok += rec.omega;
    sum.generic_ok += rec.generic;
    const bool oracles = rec.omega && rec.generic;
    if (rec.omega != rec.generic) ++sum.omega_generic_differ;
    else if (rec.scan == "ok" && !oracles) ++sum.scan_ok_oracles_no;
    else if (rec.scan != "ok" && oracles) ++sum.scan_no_oracles_ok;

    if (opts.properties) {
      rec.m_connected = is_connected(b.m);
      rec.mp_3connected = is_3_connected(mp);
      rec.pw3 = path_width_3_ordering(mp).has_value();
      if (rec.generic) {
        ++sum.pw3_checked;
        if (!rec.pw3) ++sum.pw3_fail;
      }
      if (rec.m_connected) {
        rec.mp_nonbinary = has_minor(mp, u24_targets());
        ++sum.nonbinary_checked;
        if (!rec.mp_nonbinary) ++sum.nonbinary_fail;
      }
      if (rec.hypotheses()) {
        const CanonicalForm cf = canonical_form(mp);
        ClassInfo& info = cache[cf.key];
        if (!info.fragile_known) {
          const Matroid canon = mp.reordered(cf.order);
          info.r24 = fragility_report(canon, u24_targets());
          info.r25 = fragility_report(canon, u25u35_targets());
          info.u24 = info.r24.fragile;
          info.u25u35 = info.r25.fragile;
          info.fragile_known = true;
        }
        ++sum.pairs;
        rec.fragile = info.u24 ? "u24" : info.u25u35 ? "u25u35" : "no";
        if (!info.u24 && !info.u25u35) ++sum.fragile_fail;
        // X in canonical positions
        Subset xc = 0;
        for (std::size_t i = 0; i < cf.order.size(); ++i)
          if (contains(b.rr.x, cf.order[i])) xc |= bit(static_cast<int>(i));
        const Matroid canon = mp.reordered(cf.order);
        rec.basis_ok = (info.u24 && check_nondeletable_basis(canon, xc, info.r24)) ||
                       (info.u25u35 && check_nondeletable_basis(canon, xc, info.r25));
        if (!rec.basis_ok) ++sum.basis_fail;
        if (opts.matcher && mp.size() <= opts.matcher->max_elements()) {
          if (!info.outcome) info.outcome = opts.matcher->outcomes(mp);
          rec.outcome = *info.outcome;
          ++sum.structure_checked;
          if (rec.outcome.empty())
            ++sum.unmatched;
          else
            ++sum.outcome_first[rec.outcome[0]];
        }
      }
    }
    if (on_record) on_record(rec);
  }
  sum.classes = cache.size();
  set_validation(was);
  return sum;
}

}  // namespace gf4relax
