#include "core/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "core/canonical.hpp"
#include "core/exact.hpp"
#include "core/relaxation.hpp"
#include "core/representation.hpp"

namespace gf4relax {

namespace {

bool is_segment_set(const Matroid& m, Subset s) {
  if (popcount(s) < 2 || m.rank_of(s) != 2) return false;
  const auto el = elements_of(s);
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (m.rank_of(bit(el[i]) | bit(el[j])) != 2) return false;
  return true;
}

Matroid relabel(const Matroid& m, const std::map<std::string, std::string>& to) {
  std::vector<std::string> labels = m.labels();
  for (auto& l : labels) {
    auto it = to.find(l);
    if (it != to.end()) l = it->second;
  }
  return m.with_labels(std::move(labels));
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw DomainError("bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Theta_k from a_i = q_i p - p_i q with p = ones and q = (1, 2, 4, ...).
Matroid theta_rational(int k) {
  std::vector<std::vector<std::int64_t>> cols;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> a(k);
    for (int j = 0; j < k; ++j) a[j] = (std::int64_t{1} << i) - (std::int64_t{1} << j);
    cols.push_back(a);
    labels.push_back("a" + std::to_string(i + 1));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> b(k, 0);
    b[i] = 1;
    cols.push_back(b);
    labels.push_back("b" + std::to_string(i + 1));
  }
  Matroid t = column_matroid(cols, k, 0, labels);
  const Subset a = full_set(k);
  if (t.rank() != k || (k >= 3 && (!is_segment_set(t, a) || t.closure(a) != a)))
    throw std::logic_error("theta construction is degenerate");
  return t;
}

bool is_modular_flat(const Matroid& m, Subset a) {
  if (m.closure(a) != a) return false;
  const int ra = m.rank_of(a);
  for (Subset f : flats(m))
    if (ra + m.rank_of(f) != m.rank_of(a | f) + m.rank_of(a & f)) return false;
  return true;
}

}  // namespace

Matroid uniform(int r, int n) {
  if (r < 0 || n < r || n > kMaxElements) throw DomainError("uniform matroid needs 0 <= r <= n <= 20");
  std::vector<Subset> b;
  for_each_k_subset(n, r, [&](Subset s) { b.push_back(s); });
  return Matroid::from_bases(n, std::move(b));
}

Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels) {
  const int n = static_cast<int>(edges.size());
  if (n > kMaxElements) throw ScaleError("unsupported scale: graph has more than 20 edges");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw DomainError("edge endpoint out of range");
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset s = 1; s <= full_set(n) && s != 0; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int r = 0;
    for (int e : elements_of(s)) {
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    rank[s] = static_cast<std::uint8_t>(r);
    if (s == full_set(n)) break;
  }
  return Matroid::from_rank_table(n, std::move(rank), std::move(labels));
}

Matroid wheel(int r) {
  if (r < 2) throw DomainError("wheel needs r >= 2");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    labels.push_back("s" + std::to_string(i));
  }
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(i, i % r + 1);
    labels.push_back("t" + std::to_string(i));
  }
  return graphic(r + 1, edges, labels);
}

Matroid whirl(int r) {
  const Matroid w = wheel(r);
  return relax(w, full_set(2 * r) & ~full_set(r));
}

Matroid theta(int k) {
  if (k != 3 && k != 4) throw DomainError("theta is only built for k = 3 or 4");
  return theta_rational(k);
}

Matroid generalized_parallel_connection(const Matroid& m1, const Matroid& m2) {
  std::vector<int> to2(m1.size(), -1);
  Subset a1 = 0, a2 = 0;
  for (int i = 0; i < m1.size(); ++i) {
    to2[i] = m2.index_of(m1.label(i));
    if (to2[i] >= 0) {
      a1 |= bit(i);
      a2 |= bit(to2[i]);
    }
  }
  if (!equal_labeled(m1.restrict_to(a1), m2.restrict_to(a2)))
    throw DomainError("parallel connection parts disagree on the shared set");
  if (!is_modular_flat(m1, a1)) throw DomainError("shared set is not a modular flat of the first part");

  const int n2 = m2.size();
  std::vector<int> extra;  // m1 elements outside A
  for (int i = 0; i < m1.size(); ++i)
    if (to2[i] < 0) extra.push_back(i);
  const int n = n2 + static_cast<int>(extra.size());
  if (n > kMaxElements) throw ScaleError("unsupported scale: parallel connection exceeds 20 elements");

  // Trace on m1 of a result set: low bits map through A, high bits are extras.
  std::vector<Subset> low_to1(Subset{1} << n2, 0);
  for (int i = 0; i < m1.size(); ++i)
    if (to2[i] >= 0)
      for (Subset s = 0; s < low_to1.size(); ++s)
        if (contains(s, to2[i])) low_to1[s] |= bit(i);
  const int nx = static_cast<int>(extra.size());
  std::vector<Subset> high_to1(Subset{1} << nx, 0);
  for (int j = 0; j < nx; ++j)
    for (Subset s = 0; s < high_to1.size(); ++s)
      if (contains(s, j)) high_to1[s] |= bit(extra[j]);

  const Subset full = full_set(n);
  const Subset low_mask = full_set(n2);
  std::vector<Subset> cl(std::size_t{1} << n);
  for (Subset s = full;; --s) {
    const Subset lo = s & low_mask;
    const Subset t1 = low_to1[lo] | high_to1[s >> n2];
    if (m2.closure(lo) == lo && m1.closure(t1) == t1) {
      cl[s] = s;
    } else {
      Subset c = full;
      for (Subset t = full & ~s; t; t &= t - 1) c &= cl[s | (t & (~t + 1))];
      cl[s] = c;
    }
    if (s == 0) break;
  }
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  for (Subset s = 1; s <= full && s != 0; ++s) {
    const Subset low = s & (~s + 1);
    const Subset rest = s & ~low;
    rank[s] = static_cast<std::uint8_t>(rank[rest] + ((cl[rest] & low) ? 0 : 1));
    if (s == full) break;
  }
  std::vector<std::string> labels = m2.labels();
  for (int i : extra) labels.push_back(m1.label(i));
  const int expect = m1.rank() + m2.rank() - m1.rank_of(a1);
  if (rank[full] != expect) throw std::logic_error("parallel connection rank mismatch");
  return Matroid::from_rank_table(n, std::move(rank), std::move(labels));
}

Matroid delta_y(const Matroid& m, Subset a) {
  const int k = popcount(a);
  if (k < 2 || k > 4) throw DomainError("Delta-Y needs a segment of 2 to 4 elements");
  if (!is_segment_set(m, a)) throw DomainError("Delta-Y set is not a segment");
  if (m.corank_of(a) != k) throw DomainError("Delta-Y segment is not coindependent");
  const auto el = elements_of(a);
  if (k == 2) {
    // Theta_2 is two parallel pairs, a_i parallel to b_j for j != i, so the
    // exchange only swaps the two labels.
    std::vector<std::string> l = m.labels();
    std::swap(l[el[0]], l[el[1]]);
    return m.with_labels(std::move(l)).reordered_by_labels(m.labels());
  }
  std::map<std::string, std::string> to;
  for (int i = 0; i < k; ++i) {
    to["a" + std::to_string(i + 1)] = m.label(el[i]);
    to["b" + std::to_string(i + 1)] = "\x01" + std::to_string(i);
  }
  const Matroid t = relabel(theta_rational(k), to);
  const Matroid p = generalized_parallel_connection(t, m);
  Matroid d = p.delete_set(a);
  std::map<std::string, std::string> back;
  for (int i = 0; i < k; ++i) back["\x01" + std::to_string(i)] = m.label(el[i]);
  d = relabel(d, back);
  return d.reordered_by_labels(m.labels());
}

Matroid nabla_y(const Matroid& m, Subset a) { return delta_y(m.dual(), a).dual(); }

Matroid glue_wheel(const Matroid& m, const std::vector<std::string>& triple, int r,
                   const std::vector<std::string>& x, std::string_view prefix) {
  if (r < 3) throw DomainError("glued wheels need r >= 3");
  if (triple.size() != 3) throw DomainError("gluing needs an ordered triple");
  const Subset t = m.subset_named(triple);
  if (popcount(t) != 3 || !m.is_circuit(t)) throw DomainError("gluing triple is not a triangle");
  if (std::find(x.begin(), x.end(), triple[1]) == x.end()) throw DomainError("deleted set must contain b");
  for (const auto& l : x)
    if (std::find(triple.begin(), triple.end(), l) == triple.end())
      throw DomainError("deleted set must lie in the triple");
  const Matroid w = wheel(r);
  std::map<std::string, std::string> to;
  for (const auto& l : w.labels()) to[l] = std::string(prefix) + l;
  to["s1"] = triple[0];
  to["t1"] = triple[1];
  to["s2"] = triple[2];
  const Matroid n = relabel(w, to);
  for (int i = 0; i < n.size(); ++i)
    if (m.index_of(n.label(i)) >= 0 && std::find(triple.begin(), triple.end(), n.label(i)) == triple.end())
      throw DomainError("wheel label '" + n.label(i) + "' clashes with the matroid");
  const Matroid p = generalized_parallel_connection(n, m);
  if (p.rank() != m.rank() + r - 2) throw std::logic_error("glued wheel has the wrong rank");
  return p.delete_set(p.subset_named(x));
}

std::vector<std::string> fresh_labels(const Matroid& m, std::string_view prefix, int count) {
  std::vector<std::string> out;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    std::string l = std::string(prefix) + std::to_string(k);
    if (m.index_of(l) < 0) out.push_back(std::move(l));
  }
  return out;
}

Matroid parallel_extension(const Matroid& m, int e, int count, std::vector<std::string> labels) {
  if (e < 0 || e >= m.size()) throw DomainError("no such element");
  if (count < 0) throw DomainError("negative extension count");
  const int n = m.size() + count;
  if (n > kMaxElements) throw ScaleError("unsupported scale: extension exceeds 20 elements");
  if (labels.empty()) labels = fresh_labels(m, "z", count);
  if (static_cast<int>(labels.size()) != count) throw DomainError("wrong number of labels for the extension");
  std::vector<std::uint8_t> rank(std::size_t{1} << n);
  const Subset old = m.ground();
  for (Subset s = 0;; ++s) {
    Subset p = s & old;
    if (s & ~old) p |= bit(e);
    rank[s] = static_cast<std::uint8_t>(m.rank_of(p));
    if (s == full_set(n)) break;
  }
  std::vector<std::string> all = m.labels();
  all.insert(all.end(), labels.begin(), labels.end());
  return Matroid::from_rank_table(n, std::move(rank), std::move(all));
}

Matroid series_extension(const Matroid& m, int e, int count, std::vector<std::string> labels) {
  return parallel_extension(m.dual(), e, count, std::move(labels)).dual();
}

Matroid allowable_parallel_extension(const Matroid& m, Subset segment, const std::vector<int>& multiplicities,
                                     const TargetSet& targets, std::vector<std::string> labels) {
  const auto el = elements_of(segment);
  if (multiplicities.size() != el.size()) throw DomainError("one multiplicity per segment element");
  const FragilityReport r = fragility_report(m, targets);
  if (!is_segment_set(m, segment) || popcount(segment) < 3 || !r.has_minor || !is_allowable_segment(m, r, segment))
    throw DomainError("extension set is not an allowable segment");
  int total = 0;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (multiplicities[i] < 0) throw DomainError("negative multiplicity");
    if (multiplicities[i] > 0 && !r.deletable[el[i]])
      throw DomainError("element '" + m.label(el[i]) + "' is not deletable");
    total += multiplicities[i];
  }
  if (labels.empty()) labels = fresh_labels(m, "z", total);
  if (static_cast<int>(labels.size()) != total) throw DomainError("wrong number of labels for the extension");
  Matroid out = m;
  std::size_t used = 0;
  for (std::size_t i = 0; i < el.size(); ++i) {
    std::vector<std::string> part(labels.begin() + used, labels.begin() + used + multiplicities[i]);
    used += multiplicities[i];
    out = parallel_extension(out, el[i], multiplicities[i], std::move(part));
  }
  return out;
}

Matroid allowable_series_extension(const Matroid& m, Subset cosegment, const std::vector<int>& multiplicities,
                                   const TargetSet& targets, std::vector<std::string> labels) {
  return allowable_parallel_extension(m.dual(), cosegment, multiplicities, targets, std::move(labels)).dual();
}

Matroid x8() {
  Matroid m = uniform(2, 5).with_labels({"c1", "c2", "c3", "c4", "s4"});
  for (int i = 0; i < 3; ++i) m = parallel_extension(m, i, 1, {"s" + std::to_string(i + 1)});
  const std::vector<std::string> c = {"c1", "c2", "c3", "c4"};
  m = delta_y(m, m.subset_named(c));
  return m.reordered_by_labels(std::vector<std::string>{"s1", "s2", "s3", "s4", "c1", "c2", "c3", "c4"});
}

std::vector<Matroid> y8_candidates() {
  const Matroid x = x8();
  const FragilityReport r = fragility_report(x, u25u35_targets());
  std::vector<Matroid> out;
  for_each_k_subset(x.size(), 3, [&](Subset t) {
    if (x.corank_of(t) == 2 && x.dual().is_circuit(t) && is_allowable_cosegment(x, r, t)) out.push_back(nabla_y(x, t));
  });
  return out;
}

Matroid y8() {
  const auto c = y8_candidates();
  if (c.empty()) throw std::logic_error("X8 has no allowable triad");
  return c.front();
}

Matroid m71() {
  const std::vector<std::string> labels = {"1", "2", "3", "b", "d", "f", "g"};
  Matroid tmp = uniform(3, 7).with_labels(labels);
  const std::vector<std::vector<std::string>> lines = {{"b", "2", "d"}, {"1", "f", "g"}, {"2", "1", "3"}, {"d", "f", "3"}};
  std::set<Subset> dependent;
  for (const auto& l : lines) dependent.insert(tmp.subset_named(l));
  std::vector<Subset> b;
  for (Subset s : tmp.bases())
    if (!dependent.count(s)) b.push_back(s);
  return Matroid::from_bases(7, std::move(b), labels);
}

Matroid m99() {
  const Gf4 o = Gf4::one(), z = Gf4::zero(), w = Gf4::omega(), v = Gf4::omega2();
  Gf4Matrix d = Gf4Matrix::from_rows({{o, o, o, o, o}, {o, w, v, z, z}, {o, o, z, w, w}, {o, o, z, z, o}});
  return from_gf4_matrix(d).with_labels({"1", "2", "3", "4", "5", "6", "7", "8", "9"});
}

namespace {

Matroid fano() {
  std::vector<std::vector<std::int64_t>> cols;
  for (int v = 1; v < 8; ++v) cols.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1});
  return column_matroid(cols, 3, 2);
}

Matroid relax_first(const Matroid& m) {
  const auto ch = circuit_hyperplanes(m);
  if (ch.empty()) throw std::logic_error("no circuit-hyperplane to relax");
  return relax(m, ch.front());
}

Matroid p8() {
  const std::int64_t d[4][4] = {{0, 1, 1, -1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {-1, 1, 1, 0}};
  std::vector<std::vector<std::int64_t>> cols;
  for (int i = 0; i < 4; ++i) {
    std::vector<std::int64_t> c(4, 0);
    c[i] = 1;
    cols.push_back(c);
  }
  for (int j = 0; j < 4; ++j) cols.push_back({d[0][j], d[1][j], d[2][j], d[3][j]});
  return column_matroid(cols, 4, 3);
}

Matroid p8_minus() {
  const Matroid p = p8();
  const auto ch = circuit_hyperplanes(p);
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j)
      if ((ch[i] & ch[j]) == 0) return relax(p, ch[i]);
  throw std::logic_error("P8 has no disjoint circuit-hyperplanes");
}

Matroid p6() {
  std::vector<Subset> b;
  for_each_k_subset(6, 3, [&](Subset s) {
    if (s != 0b111) b.push_back(s);
  });
  return Matroid::from_bases(6, std::move(b));
}

std::optional<int> suffix_int(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
  try {
    return parse_int(name.substr(prefix.size()));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

Matroid named(std::string_view name) {
  if (name == "P6") return p6();
  if (name == "F7") return fano();
  if (name == "F7-") return relax_first(fano());
  if (name == "F7=") return relax_first(relax_first(fano()));
  if (name == "P8") return p8();
  if (name == "P8-") return p8_minus();
  if (name == "X8") return x8();
  if (name == "Y8") return y8();
  if (name == "M71") return m71();
  if (name == "M99") return m99();
  if (name.size() > 1 && name[0] == 'U') {
    const auto parts = split(name.substr(1), ',');
    if (parts.size() == 2) return uniform(parse_int(parts[0]), parse_int(parts[1]));
  }
  if (auto r = suffix_int(name, "Whirl")) return whirl(*r);
  if (auto r = suffix_int(name, "Theta")) return theta(*r);
  if (auto r = suffix_int(name, "W")) return wheel(*r);
  throw DomainError("unknown matroid name '" + std::string(name) + "'");
}

std::vector<std::string> named_list() {
  return {"P6", "F7", "F7-", "F7=", "P8", "P8-", "X8", "Y8", "M71", "M99", "U<r>,<n>", "W<r>", "Whirl<r>", "Theta<k>"};
}

PathState path_start() {
  return {x8(), {"s1", "s2", "s3", "s4"}, {"c1", "c2", "c3", "c4"}};
}

namespace {

struct Axis {
  Matroid work;  // A is an allowable segment of work
  FragilityReport report;
  Subset a = 0;
  bool dual = false;
};

// Resolves the axis set of a step to a path-generating allowable segment of
// M or M*; nullopt if neither applies.
std::optional<Axis> resolve_axis(const Matroid& m, const FragilityReport& r, const std::vector<std::string>& names) {
  if (names.size() != 4) return std::nullopt;
  const Subset a = m.subset_named(names);
  if (lambda(m, a) > 2 || m.full_closure(a) != m.ground()) return std::nullopt;
  if (is_segment_set(m, a) && is_allowable_segment(m, r, a)) return Axis{m, r, a, false};
  const Matroid d = m.dual();
  if (is_segment_set(d, a)) {
    const FragilityReport dr = dual_report(r);
    if (is_allowable_segment(d, dr, a)) return Axis{d, dr, a, true};
  }
  return std::nullopt;
}

void drop_labels(std::vector<std::string>& v, const std::vector<std::string>& gone) {
  v.erase(std::remove_if(v.begin(), v.end(),
                         [&](const std::string& l) { return std::find(gone.begin(), gone.end(), l) != gone.end(); }),
          v.end());
}

std::string glue_prefix(const Matroid& m) {
  for (int k = 1;; ++k) {
    const std::string p = "g" + std::to_string(k);
    bool used = false;
    for (const auto& l : m.labels())
      if (l.compare(0, p.size(), p) == 0) used = true;
    if (!used) return p;
  }
}

}  // namespace

PathState apply_step(const PathState& st, const PathSequenceStep& step) {
  if (step.axis != 'S' && step.axis != 'C') throw DomainError("step axis must be S or C");
  const auto& names = step.axis == 'S' ? st.s : st.c;
  const FragilityReport r = fragility_report(st.m, u25u35_targets());
  if (!r.fragile) throw DomainError("path sequence left the fragile class");
  const auto ax = resolve_axis(st.m, r, names);
  if (!ax) throw DomainError(std::string("axis ") + step.axis + " is not a path-generating allowable segment or cosegment");
  const auto el = elements_of(ax->a);
  PathState out = st;
  if (step.kind == PathSequenceStep::Kind::delta_nabla) {
    std::vector<int> mult = step.multiplicities;
    if (mult.empty()) {
      std::vector<int> ok;
      for (std::size_t i = 0; i < el.size(); ++i)
        if (ax->report.deletable[el[i]]) ok.push_back(static_cast<int>(i));
      if (ok.empty()) throw DomainError("no deletable element to extend along");
      mult.assign(el.size(), 0);
      for (int i = 0; i < step.count; ++i) ++mult[ok[i % ok.size()]];
    }
    // multiplicities follow the axis label order; el follows index order
    std::vector<int> by_index(el.size(), 0);
    if (mult.size() != names.size()) throw DomainError("one multiplicity per axis element");
    for (std::size_t i = 0; i < names.size(); ++i) {
      const int e = ax->work.index_of(names[i]);
      by_index[std::find(el.begin(), el.end(), e) - el.begin()] = mult[i];
    }
    const int total = std::accumulate(by_index.begin(), by_index.end(), 0);
    if (total < 1) throw DomainError("a Delta-nabla step needs a non-empty extension");
    Matroid w = allowable_parallel_extension(ax->work, ax->a, by_index, u25u35_targets());
    w = delta_y(w, ax->a);
    out.m = ax->dual ? w.dual() : w;
    return out;
  }
  if (step.wheel_size < 3) throw DomainError("glued wheels need r >= 3");
  std::vector<std::string> triple = step.triple;
  if (triple.empty()) {
    for_each_k_subset(static_cast<int>(el.size()), 3, [&](Subset pick) {
      if (!triple.empty()) return;
      Subset t = 0;
      for (int i : elements_of(pick)) t |= bit(el[i]);
      if (!is_allowable_segment(ax->work, ax->report, t)) return;
      std::vector<int> te = elements_of(t);
      const auto b = std::find_if(te.begin(), te.end(), [&](int e) { return !ax->report.deletable[e]; });
      const int bi = *b;
      te.erase(b);
      triple = {ax->work.label(te[0]), ax->work.label(bi), ax->work.label(te[1])};
    });
    if (triple.empty()) throw DomainError("axis has no allowable 3-subset");
  } else {
    if (triple.size() != 3) throw DomainError("gluing triple needs three labels");
    const Subset t = ax->work.subset_named(triple);
    if (popcount(t) != 3 || (t & ~ax->a) || !is_segment_set(ax->work, t) || !is_allowable_segment(ax->work, ax->report, t))
      throw DomainError("gluing triple is not an allowable subset of the axis");
    if (ax->report.deletable[ax->work.index_of(triple[1])]) throw DomainError("middle of the gluing triple must be nondeletable");
  }
  std::vector<std::string> x;
  for (char ch : step.remove) {
    if (ch < 'a' || ch > 'c') throw DomainError("deleted set uses letters a, b, c");
    x.push_back(triple[ch - 'a']);
  }
  Matroid w = glue_wheel(ax->work, triple, step.wheel_size, x, glue_prefix(ax->work));
  out.m = ax->dual ? w.dual() : w;
  drop_labels(out.s, x);
  drop_labels(out.c, x);
  return out;
}

Matroid run_path_sequence(const std::vector<PathSequenceStep>& steps) {
  PathState st = path_start();
  for (const auto& s : steps) st = apply_step(st, s);
  return st.m;
}

std::vector<PathSequenceStep> parse_path_sequence(std::string_view text) {
  std::vector<PathSequenceStep> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) { throw ParseError(why, lineno, 1); };
    if (tok.size() < 3) fail("step needs a kind, an axis and parameters");
    PathSequenceStep s;
    if (tok[1] != "S" && tok[1] != "C") fail("axis must be S or C");
    s.axis = tok[1][0];
    try {
      if (tok[0] == "dn") {
        s.kind = PathSequenceStep::Kind::delta_nabla;
        if (tok.size() != 3) fail("dn takes one parameter");
        if (tok[2].rfind("m=", 0) == 0) {
          for (const auto& p : split(std::string_view(tok[2]).substr(2), ',')) s.multiplicities.push_back(parse_int(p));
        } else {
          s.count = parse_int(tok[2]);
        }
        int total = s.count;
        for (int v : s.multiplicities) {
          if (v < 0) fail("negative multiplicity");
          total += v;
        }
        if (total <= 0) fail("dn needs a non-empty extension");
      } else if (tok[0] == "gw") {
        s.kind = PathSequenceStep::Kind::glue_wheel;
        s.remove.clear();
        for (std::size_t i = 2; i < tok.size(); ++i) {
          const std::string& t = tok[i];
          if (t.rfind("r=", 0) == 0) {
            s.wheel_size = parse_int(std::string_view(t).substr(2));
            if (s.wheel_size < 3) fail("glued wheels need r >= 3");
          }
          else if (t.rfind("X=", 0) == 0)
            s.remove = t.substr(2);
          else if (t.rfind("T=", 0) == 0)
            s.triple = split(std::string_view(t).substr(2), ',');
          else
            fail("unknown gw parameter '" + t + "'");
        }
        if (s.remove.find('b') == std::string::npos) fail("X must contain b");
      } else {
        fail("unknown step kind '" + tok[0] + "'");
      }
    } catch (const DomainError& e) {
      fail(e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_step(const PathSequenceStep& s) {
  std::string out;
  if (s.kind == PathSequenceStep::Kind::delta_nabla) {
    out = std::string("dn ") + s.axis + " ";
    if (s.multiplicities.empty()) return out + std::to_string(s.count);
    out += "m=";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
      out += (i ? "," : "") + std::to_string(s.multiplicities[i]);
    return out;
  }
  out = std::string("gw ") + s.axis + " r=" + std::to_string(s.wheel_size) + " X=" + s.remove;
  if (!s.triple.empty()) out += " T=" + s.triple[0] + "," + s.triple[1] + "," + s.triple[2];
  return out;
}

std::vector<DescribedMatroid> enumerate_path_sequences(int max_elements) {
  if (max_elements > 14) throw ScaleError("unsupported scale: path sequences are enumerated up to 14 elements");
  struct Node {
    PathState st;
    std::vector<PathSequenceStep> steps;
  };
  auto colored_key = [](const PathState& st) {
    std::vector<int> colors(st.m.size(), 0);
    for (const auto& l : st.s) colors[st.m.index_of(l)] = 1;
    for (const auto& l : st.c) colors[st.m.index_of(l)] |= 2;
    return canonical_key(st.m, colors);
  };
  std::map<std::string, DescribedMatroid> found;
  std::set<std::string> seen;
  std::deque<Node> todo;
  Node root{path_start(), {}};
  if (root.st.m.size() > max_elements) return {};
  seen.insert(colored_key(root.st));
  todo.push_back(root);
  while (!todo.empty()) {
    Node node = std::move(todo.front());
    todo.pop_front();
    const std::string key = canonical_key(node.st.m);
    if (!found.count(key)) found.emplace(key, DescribedMatroid{key, node.st.m, node.steps});
    const int n = node.st.m.size();
    const FragilityReport r = fragility_report(node.st.m, u25u35_targets());
    std::vector<PathSequenceStep> moves;
    for (char axis : {'S', 'C'}) {
      const auto& names = axis == 'S' ? node.st.s : node.st.c;
      const auto ax = resolve_axis(node.st.m, r, names);
      if (!ax) continue;
      std::vector<int> ok;  // positions in names order
      for (std::size_t i = 0; i < names.size(); ++i)
        if (ax->report.deletable[ax->work.index_of(names[i])]) ok.push_back(static_cast<int>(i));
      // every multiplicity vector on deletable positions with 1 <= total <= room
      const int room = max_elements - n;
      std::vector<int> mult(4, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == ok.size()) {
          if (left < room) {
            PathSequenceStep s;
            s.kind = PathSequenceStep::Kind::delta_nabla;
            s.axis = axis;
            s.multiplicities = mult;
            moves.push_back(s);
          }
          return;
        }
        for (int v = 0; v <= left; ++v) {
          mult[ok[i]] = v;
          rec(i + 1, left - v);
        }
        mult[ok[i]] = 0;
      };
      if (room >= 1) rec(0, room);
      const auto el = elements_of(ax->a);
      for_each_k_subset(4, 3, [&](Subset pick) {
        Subset t = 0;
        for (int i : elements_of(pick)) t |= bit(el[i]);
        if (!is_allowable_segment(ax->work, ax->report, t)) return;
        const auto te = elements_of(t);
        for (int b : te) {
          if (ax->report.deletable[b]) continue;
          std::vector<int> ac;
          for (int e : te)
            if (e != b) ac.push_back(e);
          const std::vector<std::string> triple = {ax->work.label(ac[0]), ax->work.label(b), ax->work.label(ac[1])};
          for (const char* rm : {"b", "ab", "bc", "abc"}) {
            const int removed = static_cast<int>(std::string_view(rm).size());
            for (int w = 3; n + 2 * w - 3 - removed <= max_elements; ++w) {
              PathSequenceStep s;
              s.kind = PathSequenceStep::Kind::glue_wheel;
              s.axis = axis;
              s.wheel_size = w;
              s.triple = triple;
              s.remove = rm;
              moves.push_back(s);
            }
          }
        }
      });
    }
    for (const auto& mv : moves) {
      PathState next = apply_step(node.st, mv);
      if (next.m.size() > max_elements) continue;
      if (!seen.insert(colored_key(next)).second) continue;
      Node child{std::move(next), node.steps};
      child.steps.push_back(mv);
      todo.push_back(std::move(child));
    }
  }
  std::vector<DescribedMatroid> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::stable_sort(out.begin(), out.end(),
                   [](const DescribedMatroid& a, const DescribedMatroid& b) { return a.m.size() < b.m.size(); });
  return out;
}

}  // namespace gf4relax
