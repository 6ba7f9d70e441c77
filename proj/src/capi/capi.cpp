#include "gf4relax/gf4relax.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "core/canonical.hpp"
#include "core/catalog.hpp"
#include "core/constructions.hpp"
#include "core/relaxation.hpp"
#include "core/representation.hpp"
#include "core/scanner.hpp"
#include "core/sweep.hpp"

struct gf4r_matrix {
  gf4relax::Gf4Matrix m;
};

struct gf4r_matroid {
  gf4relax::Matroid m;
};

struct gf4r_catalog {
  std::vector<gf4relax::CatalogEntry> entries;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gf4r_status fail(gf4r_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
gf4r_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const gf4relax::ParseError& e) {
    return fail(GF4R_PARSE_ERROR, e.what());
  } catch (const gf4relax::NotRepresentableError& e) {
    return fail(GF4R_NOT_REPRESENTABLE, e.what());
  } catch (const gf4relax::ScaleError& e) {
    return fail(GF4R_SCALE_ERROR, e.what());
  } catch (const gf4relax::DomainError& e) {
    return fail(GF4R_DOMAIN_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GF4R_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(GF4R_INTERNAL_ERROR, e.what());
  }
}

gf4r_status null_arg(const char* name) { return fail(GF4R_INVALID_ARGUMENT, std::string(name) + " is null"); }

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

gf4r_status wrap(gf4relax::Matroid m, gf4r_matroid** out) {
  *out = new gf4r_matroid{std::move(m)};
  return GF4R_OK;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

}  // namespace

extern "C" {

const char* gf4r_version(void) { return "1.0.0"; }

const char* gf4r_status_name(gf4r_status s) {
  switch (s) {
    case GF4R_OK: return "ok";
    case GF4R_NOT_REPRESENTABLE: return "not representable";
    case GF4R_DOMAIN_ERROR: return "domain error";
    case GF4R_PARSE_ERROR: return "parse error";
    case GF4R_SCALE_ERROR: return "scale error";
    case GF4R_INVALID_ARGUMENT: return "invalid argument";
    case GF4R_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* gf4r_last_error(void) { return last_error.c_str(); }

void gf4r_string_free(char* s) { std::free(s); }

gf4r_status gf4r_matrix_parse(const char* text, gf4r_matrix** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new gf4r_matrix{gf4relax::parse_matrix(text)};
    return GF4R_OK;
  });
}

gf4r_status gf4r_matrix_format(const gf4r_matrix* m, char** out) {
  if (!m) return null_arg("matrix");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = dup(gf4relax::format_matrix(m->m));
    return GF4R_OK;
  });
}

size_t gf4r_matrix_rows(const gf4r_matrix* m) { return m ? m->m.rows() : 0; }
size_t gf4r_matrix_cols(const gf4r_matrix* m) { return m ? m->m.cols() : 0; }
void gf4r_matrix_free(gf4r_matrix* m) { delete m; }

gf4r_status gf4r_matroid_parse(const char* text, gf4r_matroid** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] { return wrap(gf4relax::parse_matroid(text), out); });
}

gf4r_status gf4r_matroid_named(const char* name, gf4r_matroid** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  return guard([&] { return wrap(gf4relax::named(name), out); });
}

gf4r_status gf4r_matroid_from_path_sequence(const char* text, gf4r_matroid** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] { return wrap(gf4relax::run_path_sequence(gf4relax::parse_path_sequence(text)), out); });
}

gf4r_status gf4r_matroid_from_interior(const gf4r_matrix* a, gf4r_matroid** out) {
  if (!a) return null_arg("matrix");
  if (!out) return null_arg("out");
  return guard([&] { return wrap(gf4relax::build_reduced_representation(a->m).m, out); });
}

gf4r_status gf4r_matroid_dual(const gf4r_matroid* m, gf4r_matroid** out) {
  if (!m) return null_arg("matroid");
  if (!out) return null_arg("out");
  return guard([&] { return wrap(m->m.dual(), out); });
}

gf4r_status gf4r_matroid_format(const gf4r_matroid* m, char** out) {
  if (!m) return null_arg("matroid");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = dup(gf4relax::format_matroid(m->m));
    return GF4R_OK;
  });
}

gf4r_status gf4r_matroid_labels(const gf4r_matroid* m, char** out) {
  if (!m) return null_arg("matroid");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = dup(join(m->m.labels(), " "));
    return GF4R_OK;
  });
}

int gf4r_matroid_size(const gf4r_matroid* m) { return m ? m->m.size() : -1; }
int gf4r_matroid_rank(const gf4r_matroid* m) { return m ? m->m.rank() : -1; }

gf4r_status gf4r_matroid_isomorphic(const gf4r_matroid* a, const gf4r_matroid* b, int* out) {
  if (!a || !b) return null_arg("matroid");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = gf4relax::isomorphic(a->m, b->m) ? 1 : 0;
    return GF4R_OK;
  });
}

void gf4r_matroid_free(gf4r_matroid* m) { delete m; }

const char* gf4r_named_list(void) {
  static const std::string s = join(gf4relax::named_list(), " ");
  return s.c_str();
}

gf4r_status gf4r_scan(const gf4r_matrix* a, int* found, char** match) {
  if (!a) return null_arg("matrix");
  if (!found) return null_arg("found");
  return guard([&] {
    const auto m = gf4relax::scan(a->m);
    *found = m ? 1 : 0;
    if (match) *match = m ? dup(gf4relax::format_match(*m)) : nullptr;
    return GF4R_OK;
  });
}

gf4r_status gf4r_relax(const gf4r_matrix* a, gf4r_relax_result* out, char** report) {
  using namespace gf4relax;
  if (!a) return null_arg("matrix");
  if (!out) return null_arg("out");
  return guard([&] {
    const BuiltRepresentation b = build_reduced_representation(a->m);
    const RelaxationVerdict sv = verdict(b.rr);
    const OmegaSearchResult om = omega_corner_search(b.rr);
    const Matroid mp = relax(b.m, b.rr.x);
    const auto gen = representable_gf4(mp, RepresentOptions{14, std::nullopt});
    out->scan_representable = sv.representable ? 1 : 0;
    out->omega_representable = om.verdict.representable ? 1 : 0;
    out->generic_representable = gen ? 1 : 0;
    out->m_connected = is_connected(b.m) ? 1 : 0;
    out->relaxed_3_connected = is_3_connected(mp) ? 1 : 0;
    if (report) {
      std::ostringstream s;
      s << "M: n=" << b.m.size() << " r=" << b.m.rank() << " labels=" << join(b.m.labels(), ",") << "\n";
      s << "X: " << join(b.m.names_of(b.rr.x), ",") << "\n";
      s << "relaxed: bases=" << mp.bases().size() << (out->relaxed_3_connected ? " 3-connected" : "") << "\n";
      s << "scanner: "
        << (sv.match ? "NOT-REPRESENTABLE " + format_match(*sv.match) : std::string("REPRESENTABLE")) << "\n";
      s << "omega: " << (om.verdict.representable ? "REPRESENTABLE" : "NOT-REPRESENTABLE");
      if (om.verdict.representable && !om.witnesses.empty()) s << " A'=" << format_matrix_inline(om.witnesses.front());
      s << "\n";
      s << "generic: " << (gen ? "REPRESENTABLE" : "NOT-REPRESENTABLE") << "\n";
      *report = dup(s.str());
    }
    return GF4R_OK;
  });
}

gf4r_status gf4r_represent(const gf4r_matroid* m, char** out) {
  using namespace gf4relax;
  if (!m) return null_arg("matroid");
  return guard([&] {
    const auto rep = representable_gf4(m->m);
    if (!rep) return fail(GF4R_NOT_REPRESENTABLE, "matroid is not GF(4)-representable");
    std::ostringstream s;
    s << "rows:";
    for (int e : rep->row_elems) s << ' ' << m->m.label(e);
    s << "\ncols:";
    for (int e : rep->col_elems) s << ' ' << m->m.label(e);
    s << "\n" << format_matrix(rep->d);
    put(out, s.str());
    return GF4R_OK;
  });
}

gf4r_status gf4r_fragility(const gf4r_matroid* m, const char* targets, int* has_minor, int* fragile, char** table) {
  using namespace gf4relax;
  if (!m) return null_arg("matroid");
  if (!targets) return null_arg("targets");
  return guard([&] {
    const std::string t = targets;
    const TargetSet* ts = nullptr;
    if (t == "u24") ts = &u24_targets();
    else if (t == "u25,u35" || t == "u35,u25") ts = &u25u35_targets();
    else return fail(GF4R_INVALID_ARGUMENT, "targets must be u24 or u25,u35");
    const FragilityReport r = fragility_report(m->m, *ts);
    if (has_minor) *has_minor = r.has_minor ? 1 : 0;
    if (fragile) *fragile = r.fragile ? 1 : 0;
    if (table) {
      std::ostringstream s;
      for (int i = 0; i < m->m.size(); ++i) {
        s << m->m.label(i) << ' ';
        if (!r.has_minor) s << "-";
        else if (r.deletable[i] && r.contractible[i]) s << "dc";
        else if (r.deletable[i]) s << "d";
        else if (r.contractible[i]) s << "c";
        else s << "-";
        s << "\n";
      }
      *table = dup(s.str());
    }
    return GF4R_OK;
  });
}

gf4r_status gf4r_catalog_generate(int max_elements, gf4r_catalog** out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new gf4r_catalog{gf4relax::generate_catalog(max_elements)};
    return GF4R_OK;
  });
}

size_t gf4r_catalog_size(const gf4r_catalog* c) { return c ? c->entries.size() : 0; }

gf4r_status gf4r_catalog_format(const gf4r_catalog* c, char** out) {
  if (!c) return null_arg("catalog");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = dup(gf4relax::format_catalog(c->entries));
    return GF4R_OK;
  });
}

gf4r_status gf4r_catalog_entry(const gf4r_catalog* c, size_t i, gf4r_matroid** out) {
  if (!c) return null_arg("catalog");
  if (!out) return null_arg("out");
  if (i >= c->entries.size()) return fail(GF4R_INVALID_ARGUMENT, "catalog index out of range");
  return guard([&] { return wrap(c->entries[i].m, out); });
}

gf4r_status gf4r_catalog_splitters(const gf4r_catalog* c, int size, char** out) {
  using namespace gf4relax;
  if (!c) return null_arg("catalog");
  if (!out) return null_arg("out");
  return guard([&] {
    std::ostringstream s;
    for (const auto& e : c->entries) {
      if (e.m.size() != size) continue;
      s << key_id(e.key) << " r=" << e.m.rank() << " xy=" << (e.flags.xy_minor ? "y" : "n")
        << " splitter=" << (splitter_check(e) ? "y" : "n");
      if (!e.flags.xy_minor) s << " splitter_no_xy=" << (splitter_check(e, true) ? "y" : "n");
      s << "\n";
    }
    *out = dup(s.str());
    return GF4R_OK;
  });
}

void gf4r_catalog_free(gf4r_catalog* c) { delete c; }

gf4r_status gf4r_sweep(const gf4r_sweep_options* opts, gf4r_record_fn on_record, void* user,
                       gf4r_sweep_summary* out) {
  using namespace gf4relax;
  if (!opts) return null_arg("options");
  if (!out) return null_arg("out");
  return guard([&] {
    std::unique_ptr<StructureMatcher> matcher;
    if (opts->structure_max > 0) matcher = std::make_unique<StructureMatcher>(opts->structure_max);
    SweepOptions so;
    so.rows = opts->rows;
    so.cols = opts->cols;
    so.sample = opts->sample;
    so.seed = opts->seed;
    so.matcher = matcher.get();
    std::function<void(const SweepRecord&)> cb;
    if (on_record)
      cb = [&](const SweepRecord& r) {
        on_record(format_record(r).c_str(), r.agree() ? 1 : 0, r.outcome.c_str(), user);
      };
    *out = gf4r_sweep_summary{};
    const SweepSummary s = run_sweep(so, cb);
    out->total = s.total;
    out->agree = s.agree;
    out->scan_ok_oracles_no = s.scan_ok_oracles_no;
    out->scan_no_oracles_ok = s.scan_no_oracles_ok;
    out->omega_generic_differ = s.omega_generic_differ;
    out->pw3_checked = s.pw3_checked;
    out->pw3_fail = s.pw3_fail;
    out->pairs = s.pairs;
    out->fragile_fail = s.fragile_fail;
    out->basis_fail = s.basis_fail;
    out->nonbinary_checked = s.nonbinary_checked;
    out->nonbinary_fail = s.nonbinary_fail;
    out->structure_checked = s.structure_checked;
    out->unmatched = s.unmatched;
    for (const auto& [k, v] : s.outcome_first) out->outcome_first[k - 'a'] = v;
    out->classes = s.classes;
    return GF4R_OK;
  });
}

}  // extern "C"
