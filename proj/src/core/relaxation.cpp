#include "core/relaxation.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace gf4relax {

namespace {

std::vector<std::string> block_labels(int p, int q) {
  std::vector<std::string> l;
  for (int i = 0; i < p; ++i) l.push_back("x" + std::to_string(i + 1));
  l.push_back("e");
  l.push_back("f");
  for (int j = 0; j < q; ++j) l.push_back("y" + std::to_string(j + 1));
  return l;
}

Gf4Matrix bordered(const Gf4Matrix& a, Gf4 corner) {
  const std::size_t p = a.rows(), q = a.cols();
  std::vector<Gf4> e;
  e.reserve((p + 1) * (q + 1));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) e.push_back(a.at(i, j));
    e.push_back(Gf4::one());
  }
  for (std::size_t j = 0; j < q; ++j) e.push_back(Gf4::one());
  e.push_back(corner);
  return Gf4Matrix(p + 1, q + 1, std::move(e));
}

}  // namespace

Matroid relax(const Matroid& m, Subset x) {
  if (!is_circuit_hyperplane(m, x)) throw DomainError("relaxation needs a circuit-hyperplane");
  std::vector<Subset> b = m.bases();
  b.push_back(x);
  return Matroid::from_bases(m.size(), std::move(b), m.labels());
}

StandardRep ReducedRepresentation::standard() const {
  StandardRep s{c, a_rows, a_cols};
  s.row_elems.push_back(f);
  s.col_elems.push_back(e);
  return s;
}

StandardRep ReducedRepresentation::standard_with(const Gf4Matrix& interior, Gf4 corner) const {
  StandardRep s = standard();
  s.d = bordered(interior, corner);
  return s;
}

BuiltRepresentation build_reduced_representation(const Gf4Matrix& a) {
  const int p = static_cast<int>(a.rows());
  const int q = static_cast<int>(a.cols());
  if (p < 1 || q < 1) throw DomainError("interior matrix must have at least one row and one column");
  if (p + q + 2 > kMaxElements) throw DomainError("interior matrix too large");
  ReducedRepresentation rr;
  rr.e = p;
  rr.f = p + 1;
  rr.x = full_set(p + 1);
  rr.a = Gf4Matrix(a.rows(), a.cols(), a.entries());
  rr.c = bordered(rr.a, Gf4::zero());
  for (int i = 0; i < p; ++i) rr.a_rows.push_back(i);
  for (int j = 0; j < q; ++j) rr.a_cols.push_back(p + 2 + j);
  Matroid m = matroid_from_rep(rr.standard(), p + q + 2, block_labels(p, q));
  if (!is_circuit_hyperplane(m, rr.x)) throw DomainError("block form did not produce a circuit-hyperplane");
  return {std::move(m), std::move(rr)};
}

ReducedRepresentation normalize_to_block_form(const StandardRep& raw, Subset x, int e, int f) {
  const int p = static_cast<int>(raw.row_elems.size()) - 1;
  const int q = static_cast<int>(raw.col_elems.size()) - 1;
  if (p < 0 || q < 0 || raw.row_elems.back() != f || raw.col_elems.back() != e)
    throw DomainError("raw representation must end with row f and column e");
  if (!contains(x, e) || contains(x, f)) throw DomainError("e must lie in X and f outside it");
  Subset rows = 0;
  for (int i = 0; i < p; ++i) rows |= bit(raw.row_elems[i]);
  if (rows != (x & ~bit(e))) throw DomainError("rows of the raw representation must be X - e and f");
  for (int j = 0; j < q; ++j)
    if (contains(x, raw.col_elems[j])) throw DomainError("columns of the raw representation must avoid X - e");
  const Gf4Matrix& d = raw.d;
  if (!d.at(p, q).is_zero()) throw DomainError("(X - e) + f is not a basis for this circuit-hyperplane");
  std::vector<Gf4> rs(p), cs(q);
  for (int i = 0; i < p; ++i) {
    if (d.at(i, q).is_zero()) throw DomainError("column e must be nonzero on X - e");
    rs[i] = d.at(i, q).inverse();
  }
  for (int j = 0; j < q; ++j) {
    if (d.at(p, j).is_zero()) throw DomainError("row f must be nonzero off e");
    cs[j] = d.at(p, j).inverse();
  }
  std::vector<Gf4> ae;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) ae.push_back(rs[i] * d.at(i, j) * cs[j]);
  ReducedRepresentation rr;
  rr.x = x;
  rr.e = e;
  rr.f = f;
  rr.a = Gf4Matrix(p, q, std::move(ae));
  rr.c = bordered(rr.a, Gf4::zero());
  rr.a_rows.assign(raw.row_elems.begin(), raw.row_elems.end() - 1);
  rr.a_cols.assign(raw.col_elems.begin(), raw.col_elems.end() - 1);
  return rr;
}

OmegaSearchResult omega_corner_search(const ReducedRepresentation& rr, const OmegaSearchOptions& opts) {
  if (opts.corner.is_zero()) throw DomainError("corner must be nonzero");
  const int p = static_cast<int>(rr.a.rows());
  const int q = static_cast<int>(rr.a.cols());
  const int cols = q + 1;
  // Bases of relax(M[I|C], X): the bases of M[I|C] plus X itself, which is
  // the basis swapping row f for column e.
  auto source_nonzero = [&](Subset rs, Subset cs) {
    const auto ri = elements_of(rs), ci = elements_of(cs);
    const int k = static_cast<int>(ri.size());
    std::uint8_t buf[256];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) buf[i * k + j] = rr.c.at(ri[i], ci[j]).bits();
    return det_in_place(buf, k) != 0;
  };
  CompletionProblem prob;
  prob.rows = p + 1;
  prob.cols = cols;
  prob.fixed.assign((p + 1) * cols, 1);
  prob.fixed[p * cols + q] = opts.corner.bits();
  const std::uint8_t c = opts.corner.bits();
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const int cell = i * cols + j;
      if (opts.full_alphabet) {
        prob.fixed[cell] = -1;
        prob.order.push_back(cell);
        prob.domains.push_back({0, 1, 2, 3});
      } else if (rr.a.at(i, j).is_zero()) {
        prob.fixed[cell] = 0;
      } else {
        prob.fixed[cell] = -1;
        prob.order.push_back(cell);
        prob.domains.push_back({1, c});
      }
    }
  const Subset frow = bit(p), ecol = bit(q);
  prob.nonsingular = [&](Subset rs, Subset cs) { return (rs == frow && cs == ecol) || source_nonzero(rs, cs); };
  OmegaSearchResult out;
  complete(prob, [&](const std::vector<std::uint8_t>& v) {
    std::vector<Gf4> ae;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) ae.push_back(Gf4::from_bits(v[i * cols + j]));
    Gf4Matrix interior(p, q, std::move(ae));
    if (!out.verdict.representable) {
      out.verdict.representable = true;
      out.verdict.c_prime = bordered(interior, opts.corner);
    }
    out.witnesses.push_back(std::move(interior));
    return opts.enumerate_all;
  });
  return out;
}

RelaxationVerdict verdict(const ReducedRepresentation& rr) {
  RelaxationVerdict v;
  v.match = scan(rr.a);
  v.representable = !v.match.has_value();
  return v;
}

std::optional<ReducedRepresentation> reduced_representation(const Matroid& m, Subset x,
                                                            std::optional<std::pair<int, int>> ef,
                                                            const RepresentOptions& ropts) {
  if (!is_circuit_hyperplane(m, x)) throw DomainError("not a circuit-hyperplane");
  int e = -1, f = -1;
  if (ef) {
    std::tie(e, f) = *ef;
    if (e < 0 || f < 0 || e >= m.size() || f >= m.size() || !contains(x, e) || contains(x, f))
      throw DomainError("e must lie in X and f outside it");
  } else {
    for (int a : elements_of(x)) {
      for (int b : elements_of(m.ground() & ~x))
        if (m.is_basis((x & ~bit(a)) | bit(b))) {
          e = a;
          f = b;
          break;
        }
      if (e >= 0) break;
    }
  }
  const Subset basis = (x & ~bit(e)) | bit(f);
  if (e < 0 || !m.is_basis(basis)) throw DomainError("(X - e) + f is not a basis");
  RepresentOptions opts = ropts;
  opts.basis = basis;
  const auto rep = representable_gf4(m, opts);
  if (!rep) return std::nullopt;
  std::vector<int> rows = elements_of(x & ~bit(e));
  rows.push_back(f);
  std::vector<int> cols = elements_of(m.ground() & ~x & ~bit(f));
  cols.push_back(e);
  return normalize_to_block_form(pivot(*rep, rows, cols), x, e, f);
}

std::vector<PipelineEntry> relaxation_pipeline(const Matroid& m, const PipelineOptions& opts) {
  if (!representable_gf4(m, opts.represent)) throw NotRepresentableError("matroid is not GF(4)-representable");
  std::vector<PipelineEntry> out;
  for (Subset x : circuit_hyperplanes(m)) {
    PipelineEntry entry;
    entry.x = x;
    auto rr = reduced_representation(m, x, std::nullopt, opts.represent);
    if (!rr) throw NotRepresentableError("matroid is not GF(4)-representable");
    entry.rr = std::move(*rr);
    entry.scan = verdict(entry.rr);
    if (opts.run_oracles) {
      entry.omega = omega_corner_search(entry.rr).verdict;
      entry.generic = representable_gf4(relax(m, x), opts.represent).has_value();
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const PipelineEntry& a, const PipelineEntry& b) { return a.x < b.x; });
  return out;
}

}  // namespace gf4relax
