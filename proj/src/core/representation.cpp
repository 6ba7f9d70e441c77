#include "core/representation.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace gf4relax {

namespace {

bool nonzero_minor(const Gf4Matrix& d, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::uint8_t buf[256];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) buf[i * k + j] = d.at(rows[i], cols[j]).bits();
  return det_in_place(buf, k) != 0;
}

}  // namespace

Matroid matroid_from_rep(const StandardRep& rep, int n, std::vector<std::string> labels) {
  const int p = static_cast<int>(rep.row_elems.size());
  const int q = static_cast<int>(rep.col_elems.size());
  if (rep.d.rows() != static_cast<std::size_t>(p) || rep.d.cols() != static_cast<std::size_t>(q) || p + q != n)
    throw DomainError("representation shape does not match its element lists");
  Subset seen = 0;
  for (int e : rep.row_elems) seen |= bit(e);
  for (int e : rep.col_elems) seen |= bit(e);
  if (seen != full_set(n) || popcount(seen) != n) throw DomainError("representation elements must partition the ground set");
  std::vector<Subset> bases;
  std::vector<int> rr, kk;
  for_each_k_subset(n, p, [&](Subset b) {
    rr.clear();
    kk.clear();
    for (int i = 0; i < p; ++i)
      if (!contains(b, rep.row_elems[i])) rr.push_back(i);
    for (int j = 0; j < q; ++j)
      if (contains(b, rep.col_elems[j])) kk.push_back(j);
    if (rr.empty() || nonzero_minor(rep.d, rr, kk)) bases.push_back(b);
  });
  return Matroid::from_bases(n, std::move(bases), std::move(labels));
}

Matroid from_gf4_matrix(const Gf4Matrix& a) {
  const int p = static_cast<int>(a.rows());
  const int q = static_cast<int>(a.cols());
  StandardRep rep{a, {}, {}};
  for (int i = 0; i < p; ++i) rep.row_elems.push_back(i);
  for (int j = 0; j < q; ++j) rep.col_elems.push_back(p + j);
  std::vector<std::string> labels;
  if (!a.row_labels().empty() && !a.col_labels().empty()) {
    labels = a.row_labels();
    labels.insert(labels.end(), a.col_labels().begin(), a.col_labels().end());
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) throw DomainError("duplicate label '" + labels[i] + "'");
  }
  return matroid_from_rep(rep, p + q, std::move(labels));
}

StandardRep pivot(const StandardRep& rep, std::vector<int> new_rows, std::vector<int> new_cols) {
  const int p = static_cast<int>(rep.row_elems.size());
  const int n = p + static_cast<int>(rep.col_elems.size());
  if (static_cast<int>(new_rows.size()) != p || static_cast<int>(new_rows.size() + new_cols.size()) != n)
    throw DomainError("pivot needs a basis and its complement");
  // Full p x n matrix [I | D] indexed by element.
  std::vector<std::uint8_t> f(static_cast<std::size_t>(p) * n, 0);
  for (int i = 0; i < p; ++i) {
    f[i * n + rep.row_elems[i]] = 1;
    for (std::size_t j = 0; j < rep.col_elems.size(); ++j) f[i * n + rep.col_elems[j]] = rep.d.at(i, j).bits();
  }
  for (int i = 0; i < p; ++i) {
    const int c = new_rows[i];
    int r = i;
    while (r < p && f[r * n + c] == 0) ++r;
    if (r == p) throw DomainError("pivot target is not a basis");
    if (r != i)
      for (int j = 0; j < n; ++j) std::swap(f[r * n + j], f[i * n + j]);
    const std::uint8_t inv = detail::kInv[f[i * n + c]];
    for (int j = 0; j < n; ++j) f[i * n + j] = detail::kMul[inv][f[i * n + j]];
    for (int r2 = 0; r2 < p; ++r2) {
      if (r2 == i || f[r2 * n + c] == 0) continue;
      const std::uint8_t s = f[r2 * n + c];
      for (int j = 0; j < n; ++j) f[r2 * n + j] ^= detail::kMul[s][f[i * n + j]];
    }
  }
  StandardRep out;
  out.row_elems = std::move(new_rows);
  out.col_elems = std::move(new_cols);
  std::vector<Gf4> data;
  for (int i = 0; i < p; ++i)
    for (int e : out.col_elems) data.push_back(Gf4::from_bits(f[i * n + e]));
  out.d = Gf4Matrix(p, out.col_elems.size(), std::move(data));
  return out;
}

bool realizes(const StandardRep& rep, const Matroid& m) {
  if (static_cast<int>(rep.row_elems.size() + rep.col_elems.size()) != m.size()) return false;
  const Matroid got = matroid_from_rep(rep, m.size());
  return got.bases() == m.bases();
}

std::size_t complete(const CompletionProblem& p,
                     const std::function<bool(const std::vector<std::uint8_t>&)>& on_solution) {
  struct Constraint {
    std::vector<int> rows, cols;
    bool nonzero;
  };
  const int cells = p.rows * p.cols;
  std::vector<int> pos(cells, -1);
  for (std::size_t k = 0; k < p.order.size(); ++k) pos[p.order[k]] = static_cast<int>(k);
  std::vector<std::vector<Constraint>> attached(p.order.size());
  std::vector<Constraint> root;
  const int kmax = std::min(p.rows, p.cols);
  for (int k = 1; k <= kmax; ++k) {
    for_each_k_subset(p.rows, k, [&](Subset rs) {
      for_each_k_subset(p.cols, k, [&](Subset cs) {
        Constraint c{elements_of(rs), elements_of(cs), p.nonsingular(rs, cs)};
        int last = -1;
        for (int i : c.rows)
          for (int j : c.cols) last = std::max(last, pos[i * p.cols + j]);
        if (last < 0)
          root.push_back(std::move(c));
        else
          attached[last].push_back(std::move(c));
      });
    });
  }
  std::vector<std::uint8_t> cur(cells, 0);
  for (int c = 0; c < cells; ++c)
    if (p.fixed[c] >= 0) cur[c] = static_cast<std::uint8_t>(p.fixed[c]);
  auto holds = [&](const Constraint& c) {
    const int k = static_cast<int>(c.rows.size());
    std::uint8_t buf[256];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) buf[i * k + j] = cur[c.rows[i] * p.cols + c.cols[j]];
    return (det_in_place(buf, k) != 0) == c.nonzero;
  };
  for (const auto& c : root)
    if (!holds(c)) return 0;
  std::size_t found = 0;
  bool stop = false;
  const int depth = static_cast<int>(p.order.size());
  std::function<void(int)> dfs = [&](int d) {
    if (stop) return;
    if (d == depth) {
      ++found;
      if (!on_solution(cur)) stop = true;
      return;
    }
    const int cell = p.order[d];
    for (std::uint8_t v : p.domains[d]) {
      cur[cell] = v;
      bool ok = true;
      for (const auto& c : attached[d])
        if (!holds(c)) {
          ok = false;
          break;
        }
      if (ok) dfs(d + 1);
      if (stop) return;
    }
    cur[cell] = 0;
  };
  dfs(0);
  return found;
}

std::optional<StandardRep> representable_gf4(const Matroid& m, const RepresentOptions& opts) {
  const int n = m.size();
  if (n > opts.max_elements)
    throw ScaleError("unsupported scale: representability search is limited to " +
                     std::to_string(opts.max_elements) + " elements");
  const Subset b = opts.basis.value_or(m.bases().front());
  if (!m.is_basis(b)) throw DomainError("requested basis is not a basis");
  StandardRep rep;
  rep.row_elems = elements_of(b);
  rep.col_elems = elements_of(m.ground() & ~b);
  const int p = static_cast<int>(rep.row_elems.size());
  const int q = static_cast<int>(rep.col_elems.size());
  if (p == 0 || q == 0) {
    rep.d = Gf4Matrix(p, q);
    return rep;
  }
  std::vector<char> support(p * q, 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      support[i * q + j] = m.is_basis((b & ~bit(rep.row_elems[i])) | bit(rep.col_elems[j]));

  CompletionProblem prob;
  prob.rows = p;
  prob.cols = q;
  prob.fixed.assign(p * q, 0);
  // Spanning forest of the bipartite support graph; its edges become 1.
  std::vector<char> seen(p + q, 0);
  for (int start = 0; start < p + q; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int w = 0; w < p + q; ++w) {
        if (seen[w]) continue;
        const bool v_row = v < p, w_row = w < p;
        if (v_row == w_row) continue;
        const int i = v_row ? v : w;
        const int j = (v_row ? w : v) - p;
        if (!support[i * q + j]) continue;
        seen[w] = 1;
        prob.fixed[i * q + j] = 1;
        todo.push(w);
      }
    }
  }
  for (int c = 0; c < p * q; ++c) {
    if (support[c] && prob.fixed[c] == 0) {
      prob.fixed[c] = -1;
      prob.order.push_back(c);
      prob.domains.push_back({1, 2, 3});
    }
  }
  prob.nonsingular = [&](Subset rs, Subset cs) {
    Subset s = b;
    for (int i : elements_of(rs)) s &= ~bit(rep.row_elems[i]);
    for (int j : elements_of(cs)) s |= bit(rep.col_elems[j]);
    return m.is_basis(s);
  };
  std::optional<std::vector<std::uint8_t>> sol;
  complete(prob, [&](const std::vector<std::uint8_t>& v) {
    sol = v;
    return false;
  });
  if (!sol) return std::nullopt;
  std::vector<Gf4> data;
  for (std::uint8_t v : *sol) data.push_back(Gf4::from_bits(v));
  rep.d = Gf4Matrix(p, q, std::move(data));
  return rep;
}

}  // namespace gf4relax
