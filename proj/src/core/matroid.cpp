#include "core/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace gf4relax {

namespace {
std::atomic<bool> g_validate{true};

// expand[T] = image of the local subset T when local element i maps to map[i].
std::vector<Subset> expansion_table(std::span<const int> map) {
  const int k = static_cast<int>(map.size());
  std::vector<Subset> out(std::size_t{1} << k);
  for (Subset t = 1; t < out.size(); ++t)
    out[t] = out[t & (t - 1)] | bit(map[std::countr_zero(t)]);
  return out;
}

void check_size(int n) {
  if (n < 0 || n > kMaxElements)
    throw DomainError("matroid size " + std::to_string(n) + " outside supported range 0.." +
                      std::to_string(kMaxElements));
}
}  // namespace

void set_validation(bool on) { g_validate = on; }
bool validation_enabled() { return g_validate; }

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) s |= bit(e);
  return s;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

Matroid::Matroid() : bases_{0}, rank_{0} {}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases, std::vector<std::string> labels) {
  check_size(n);
  if (bases.empty()) throw DomainError("a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = popcount(bases.front());
  for (Subset b : bases) {
    if (popcount(b) != r) throw DomainError("bases of different sizes");
    if (b & ~full_set(n)) throw DomainError("basis uses an element outside the ground set");
  }
  const std::size_t N = std::size_t{1} << n;
  std::vector<std::uint8_t> ind(N, 0);
  for (Subset b : bases) ind[b] = 1;
  for (std::size_t s = N; s-- > 0;) {
    if (!ind[s]) continue;
    for (Subset t = static_cast<Subset>(s); t; t &= t - 1) ind[s & ~(t & (~t + 1))] = 1;
  }
  std::vector<std::uint8_t> rk(N, 0);
  for (std::size_t s = 1; s < N; ++s) {
    if (ind[s]) {
      rk[s] = static_cast<std::uint8_t>(popcount(static_cast<Subset>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset t = static_cast<Subset>(s); t; t &= t - 1) {
      const std::uint8_t v = rk[s & ~(t & (~t + 1))];
      if (v > best) best = v;
    }
    rk[s] = best;
  }
  Matroid m;
  m.n_ = n;
  m.r_ = r;
  m.bases_ = std::move(bases);
  m.rank_ = std::move(rk);
  m.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(m.labels_.size()) != n) throw DomainError("label count does not match size");
  if (g_validate && !m.rank_table_is_matroid())
    throw DomainError("basis family violates the exchange axiom");
  return m;
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> rank,
                                 std::vector<std::string> labels, bool validate) {
  check_size(n);
  if (rank.size() != (std::size_t{1} << n)) throw DomainError("rank table has wrong size");
  Matroid m;
  m.n_ = n;
  m.r_ = rank[full_set(n)];
  m.rank_ = std::move(rank);
  m.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(m.labels_.size()) != n) throw DomainError("label count does not match size");
  m.bases_.clear();
  for_each_k_subset(n, m.r_, [&](Subset s) {
    if (m.rank_[s] == m.r_) m.bases_.push_back(s);
  });
  if (validate && !m.rank_table_is_matroid()) throw DomainError("rank table is not a matroid");
  return m;
}

bool Matroid::rank_table_is_matroid() const {
  if (rank_[0] != 0) return false;
  const Subset E = ground();
  for (Subset s = 0;; ++s) {
    const int rs = rank_[s];
    const Subset out = E & ~s;
    for (Subset t = out; t; t &= t - 1) {
      const Subset e = t & (~t + 1);
      const int d = rank_[s | e] - rs;
      if (d < 0 || d > 1) return false;
      for (Subset u = t & (t - 1); u; u &= u - 1) {
        const Subset f = u & (~u + 1);
        if (rank_[s | e] + rank_[s | f] < rank_[s | e | f] + rs) return false;
      }
    }
    if (s == E) break;
  }
  return true;
}

int Matroid::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Subset Matroid::subset_named(std::span<const std::string> names) const {
  Subset s = 0;
  for (const auto& nm : names) {
    const int i = index_of(nm);
    if (i < 0) throw DomainError("unknown element '" + nm + "'");
    s |= bit(i);
  }
  return s;
}

std::vector<std::string> Matroid::names_of(Subset s) const {
  std::vector<std::string> out;
  for (int e : elements_of(s)) out.push_back(labels_[e]);
  return out;
}

bool Matroid::is_circuit(Subset s) const {
  const int k = popcount(s);
  if (k == 0 || rank_[s] != k - 1) return false;
  for (Subset t = s; t; t &= t - 1)
    if (rank_[s & ~(t & (~t + 1))] != k - 1) return false;
  return true;
}

Subset Matroid::closure(Subset s) const {
  Subset out = s;
  const int rs = rank_[s];
  for (Subset t = ground() & ~s; t; t &= t - 1) {
    const Subset e = t & (~t + 1);
    if (rank_[s | e] == rs) out |= e;
  }
  return out;
}

Subset Matroid::coclosure(Subset s) const {
  Subset out = s;
  const int rs = corank_of(s);
  for (Subset t = ground() & ~s; t; t &= t - 1) {
    const Subset e = t & (~t + 1);
    if (corank_of(s | e) == rs) out |= e;
  }
  return out;
}

Subset Matroid::full_closure(Subset s) const {
  for (;;) {
    const Subset next = coclosure(closure(s));
    if (next == s) return s;
    s = next;
  }
}

Matroid Matroid::dual() const {
  const std::size_t N = rank_.size();
  std::vector<std::uint8_t> rk(N);
  const Subset E = ground();
  for (std::size_t s = 0; s < N; ++s)
    rk[s] = static_cast<std::uint8_t>(popcount(static_cast<Subset>(s)) + rank_[E & ~static_cast<Subset>(s)] - r_);
  Matroid m;
  m.n_ = n_;
  m.r_ = n_ - r_;
  m.rank_ = std::move(rk);
  m.labels_ = labels_;
  m.bases_.clear();
  m.bases_.reserve(bases_.size());
  for (Subset b : bases_) m.bases_.push_back(E & ~b);
  std::sort(m.bases_.begin(), m.bases_.end());
  return m;
}

Matroid Matroid::delete_set(Subset s) const {
  const std::vector<int> keep = elements_of(ground() & ~s);
  const auto exp = expansion_table(keep);
  std::vector<std::uint8_t> rk(exp.size());
  for (std::size_t t = 0; t < exp.size(); ++t) rk[t] = rank_[exp[t]];
  std::vector<std::string> lab;
  for (int e : keep) lab.push_back(labels_[e]);
  return from_rank_table(static_cast<int>(keep.size()), std::move(rk), std::move(lab));
}

Matroid Matroid::contract_set(Subset s) const {
  s &= ground();
  const std::vector<int> keep = elements_of(ground() & ~s);
  const auto exp = expansion_table(keep);
  const int rs = rank_[s];
  std::vector<std::uint8_t> rk(exp.size());
  for (std::size_t t = 0; t < exp.size(); ++t) rk[t] = static_cast<std::uint8_t>(rank_[exp[t] | s] - rs);
  std::vector<std::string> lab;
  for (int e : keep) lab.push_back(labels_[e]);
  return from_rank_table(static_cast<int>(keep.size()), std::move(rk), std::move(lab));
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw DomainError("label count does not match size");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (labels[i] == labels[j]) throw DomainError("duplicate label '" + labels[i] + "'");
  Matroid m = *this;
  m.labels_ = std::move(labels);
  return m;
}

Matroid Matroid::reordered(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != n_) throw DomainError("reorder needs a permutation");
  Subset seen = 0;
  for (int e : order) {
    if (e < 0 || e >= n_ || contains(seen, e)) throw DomainError("reorder needs a permutation");
    seen |= bit(e);
  }
  const auto exp = expansion_table(order);
  std::vector<std::uint8_t> rk(exp.size());
  for (std::size_t t = 0; t < exp.size(); ++t) rk[t] = rank_[exp[t]];
  std::vector<std::string> lab;
  for (int e : order) lab.push_back(labels_[e]);
  return from_rank_table(n_, std::move(rk), std::move(lab));
}

Matroid Matroid::reordered_by_labels(std::span<const std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw DomainError("label lists differ in size");
  std::vector<int> order;
  for (const auto& l : labels) {
    const int i = index_of(l);
    if (i < 0) throw DomainError("unknown element '" + l + "'");
    order.push_back(i);
  }
  return reordered(order);
}

bool equal_labeled(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size())
    return false;
  for (const auto& l : a.labels())
    if (b.index_of(l) < 0) return false;
  return a.reordered_by_labels(b.labels()) == b;
}

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 1; s <= m.ground() && s != 0; ++s) {
    if (m.is_circuit(s)) out.push_back(s);
    if (s == m.ground()) break;
  }
  return out;
}

std::vector<Subset> cocircuits(const Matroid& m) { return circuits(m.dual()); }

bool is_flat(const Matroid& m, Subset s) { return m.closure(s) == s; }

std::vector<Subset> flats(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0;; ++s) {
    if (is_flat(m, s)) out.push_back(s);
    if (s == m.ground()) break;
  }
  return out;
}

std::vector<Subset> hyperplanes(const Matroid& m) {
  std::vector<Subset> out;
  if (m.rank() == 0) return out;
  for (Subset s = 0;; ++s) {
    if (m.rank_of(s) == m.rank() - 1 && is_flat(m, s)) out.push_back(s);
    if (s == m.ground()) break;
  }
  return out;
}

bool is_circuit_hyperplane(const Matroid& m, Subset x) {
  return m.rank() > 0 && m.is_circuit(x) && m.rank_of(x) == m.rank() - 1 && is_flat(m, x);
}

std::vector<Subset> circuit_hyperplanes(const Matroid& m) {
  std::vector<Subset> out;
  for_each_k_subset(m.size(), m.rank(), [&](Subset s) {
    if (is_circuit_hyperplane(m, s)) out.push_back(s);
  });
  return out;
}

Subset loops(const Matroid& m) { return m.closure(0); }

Subset coloops(const Matroid& m) { return m.coclosure(0); }

int lambda(const Matroid& m, Subset s) {
  return m.rank_of(s) + m.rank_of(m.ground() & ~s) - m.rank();
}

std::optional<SeparationReport> find_separation(const Matroid& m, int k) {
  const int n = m.size();
  if (n < 2 * k) return std::nullopt;
  const Subset E = m.ground();
  for (Subset s = 1; s < E; ++s) {
    const int a = popcount(s);
    if (a < k || n - a < k) continue;
    const int l = lambda(m, s);
    if (l <= k - 1) return SeparationReport{s, l, k};
  }
  return std::nullopt;
}

std::vector<Subset> components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : circuits(m)) {
    const int first = std::countr_zero(c);
    for (int e : elements_of(c)) parent[find(e)] = find(first);
  }
  std::vector<Subset> out;
  std::unordered_map<int, std::size_t> where;
  for (int e = 0; e < n; ++e) {
    const int root = find(e);
    auto [it, fresh] = where.emplace(root, out.size());
    if (fresh) out.push_back(0);
    out[it->second] |= bit(e);
  }
  return out;
}

bool is_connected(const Matroid& m) { return m.size() <= 1 || components(m).size() == 1; }

bool is_3_connected(const Matroid& m) {
  return is_connected(m) && !find_separation(m, 2).has_value();
}

std::vector<Subset> parallel_classes(const Matroid& m) {
  const Subset lp = loops(m);
  std::vector<Subset> out;
  Subset done = lp;
  for (int e = 0; e < m.size(); ++e) {
    if (contains(done, e)) continue;
    Subset cls = bit(e);
    for (int f = e + 1; f < m.size(); ++f)
      if (!contains(done, f) && m.rank_of(bit(e) | bit(f)) == 1) cls |= bit(f);
    done |= cls;
    out.push_back(cls);
  }
  return out;
}

std::vector<Subset> series_classes(const Matroid& m) {
  const Subset cl = coloops(m);
  std::vector<Subset> out;
  Subset done = cl;
  for (int e = 0; e < m.size(); ++e) {
    if (contains(done, e)) continue;
    Subset cls = bit(e);
    for (int f = e + 1; f < m.size(); ++f)
      if (!contains(done, f) && m.corank_of(bit(e) | bit(f)) == 1) cls |= bit(f);
    done |= cls;
    out.push_back(cls);
  }
  return out;
}

bool is_3connected_up_to_sp(const Matroid& m) {
  if (!is_connected(m)) return false;
  const auto par = parallel_classes(m);
  const auto ser = series_classes(m);
  auto is_class = [&](Subset s) {
    return std::find(par.begin(), par.end(), s) != par.end() ||
           std::find(ser.begin(), ser.end(), s) != ser.end();
  };
  const Subset E = m.ground();
  const int n = m.size();
  for (Subset s = 1; s < E; ++s) {
    const int a = popcount(s);
    if (a < 2 || n - a < 2 || lambda(m, s) > 1) continue;
    if (!is_class(s) && !is_class(E & ~s)) return false;
  }
  return true;
}

std::optional<std::vector<int>> path_width_3_ordering(const Matroid& m) {
  const int n = m.size();
  const std::size_t N = std::size_t{1} << n;
  // parent[S] = element appended last on some valid path to S, or -1.
  std::vector<std::int8_t> parent(N, -1);
  std::vector<std::uint8_t> ok(N, 0);
  ok[0] = 1;
  for (std::size_t s = 1; s < N; ++s) {
    const Subset S = static_cast<Subset>(s);
    if (lambda(m, S) > 2) continue;
    for (Subset t = S; t; t &= t - 1) {
      const int e = std::countr_zero(t);
      if (ok[S & ~bit(e)]) {
        ok[s] = 1;
        parent[s] = static_cast<std::int8_t>(e);
        break;
      }
    }
  }
  if (!ok[N - 1]) return std::nullopt;
  std::vector<int> order(n);
  Subset s = m.ground();
  for (int i = n - 1; i >= 0; --i) {
    order[i] = parent[s];
    s &= ~bit(order[i]);
  }
  return order;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  for (const auto& l : a.labels())
    if (b.index_of(l) >= 0) throw DomainError("direct sum needs disjoint ground sets");
  const int na = a.size();
  std::vector<Subset> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Subset x : a.bases())
    for (Subset y : b.bases()) bases.push_back(x | (y << na));
  std::vector<std::string> lab = a.labels();
  lab.insert(lab.end(), b.labels().begin(), b.labels().end());
  return Matroid::from_bases(na + b.size(), std::move(bases), std::move(lab));
}

Matroid two_sum(const Matroid& a, const Matroid& b, std::string_view basepoint) {
  const int pa = a.index_of(basepoint);
  const int pb = b.index_of(basepoint);
  if (pa < 0 || pb < 0) throw DomainError("basepoint missing from one of the 2-sum parts");
  for (const auto& l : a.labels())
    if (l != basepoint && b.index_of(l) >= 0)
      throw DomainError("2-sum parts share an element other than the basepoint");
  if (a.size() < 2 || b.size() < 2) throw DomainError("2-sum parts need at least two elements");
  for (const Matroid* m : {&a, &b}) {
    const int p = m == &a ? pa : pb;
    if (contains(loops(*m), p) || contains(coloops(*m), p))
      throw DomainError("2-sum basepoint is a loop or coloop");
  }
  std::vector<int> ka, kb;
  for (int i = 0; i < a.size(); ++i)
    if (i != pa) ka.push_back(i);
  for (int i = 0; i < b.size(); ++i)
    if (i != pb) kb.push_back(i);
  const auto ea = expansion_table(ka);
  const auto eb = expansion_table(kb);
  const int na = static_cast<int>(ka.size());
  const int n = na + static_cast<int>(kb.size());
  auto theta = [&](Subset x, Subset y) {
    return (a.rank_of(x | bit(pa)) == a.rank_of(x) && b.rank_of(y | bit(pb)) == b.rank_of(y)) ? 1 : 0;
  };
  const int theta0 = theta(0, 0);
  std::vector<std::uint8_t> rk(std::size_t{1} << n);
  for (std::size_t t = 0; t < rk.size(); ++t) {
    const Subset x = ea[t & full_set(na)];
    const Subset y = eb[t >> na];
    rk[t] = static_cast<std::uint8_t>(a.rank_of(x) + b.rank_of(y) - theta(x, y) + theta0);
  }
  std::vector<std::string> lab;
  for (int i : ka) lab.push_back(a.label(i));
  for (int i : kb) lab.push_back(b.label(i));
  return Matroid::from_rank_table(n, std::move(rk), std::move(lab), validation_enabled());
}

Matroid parse_matroid(std::string_view text) {
  std::vector<std::vector<int>> lines;
  std::vector<int> line_numbers;
  int line_no = 0;
  std::size_t pos = 0;
  bool header_done = false;
  int n = -1, r = -1;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<int> nums;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      int v = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (p != line.data() + line.size() && *p != ' ' && *p != '\t' && *p != '\r'))
        throw ParseError("expected a non-negative integer", line_no, static_cast<int>(i) + 1);
      nums.push_back(v);
      i = static_cast<std::size_t>(p - line.data());
    }
    if (!header_done) {
      if (!nums.empty()) {
        if (nums.size() != 2) throw ParseError("header must be \"n r\"", line_no, 1);
        n = nums[0];
        r = nums[1];
        if (n > kMaxElements || r > n || r < 0)
          throw ParseError("unsupported size or rank in header", line_no, 1);
        header_done = true;
      }
    } else if (!nums.empty()) {
      lines.push_back(std::move(nums));
      line_numbers.push_back(line_no);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (!header_done) throw ParseError("missing header", 1, 1);
  std::vector<Subset> bases;
  if (r == 0) bases.push_back(0);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    Subset b = 0;
    for (int e : lines[k]) {
      if (e < 0 || e >= n) throw ParseError("element index out of range", line_numbers[k], 1);
      if (contains(b, e)) throw ParseError("repeated element in basis", line_numbers[k], 1);
      b |= bit(e);
    }
    if (popcount(b) != r) throw ParseError("basis has the wrong size", line_numbers[k], 1);
    bases.push_back(b);
  }
  if (bases.empty()) throw ParseError("no bases listed", line_no, 1);
  const bool was = validation_enabled();
  set_validation(true);
  try {
    Matroid m = Matroid::from_bases(n, std::move(bases));
    set_validation(was);
    return m;
  } catch (...) {
    set_validation(was);
    throw;
  }
}

std::string format_matroid(const Matroid& m) {
  std::ostringstream os;
  os << m.size() << ' ' << m.rank() << '\n';
  for (Subset b : m.bases()) {
    bool first = true;
    for (int e : elements_of(b)) {
      if (!first) os << ' ';
      os << e;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gf4relax
