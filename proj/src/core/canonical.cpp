#include "core/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace gf4relax {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Partition {
  std::vector<int> perm;     // elements in position order
  std::vector<int> cell_of;  // element -> start position of its cell
};

class Search {
 public:
  Search(const Matroid& m, std::span<const int> colors) : m_(m), n_(m.size()) {
    Partition root;
    root.perm.resize(n_);
    std::iota(root.perm.begin(), root.perm.end(), 0);
    root.cell_of.assign(n_, 0);
    if (!colors.empty()) {
      std::stable_sort(root.perm.begin(), root.perm.end(),
                       [&](int a, int b) { return colors[a] < colors[b]; });
      for (int i = 0; i < n_; ++i) {
        const int e = root.perm[i];
        root.cell_of[e] = (i > 0 && colors[root.perm[i - 1]] == colors[e]) ? root.cell_of[root.perm[i - 1]] : i;
      }
    }
    std::vector<int> path;
    dfs(root, path);
  }

  const std::vector<Subset>& best_form() const { return best_form_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void refine(Partition& p) const {
    std::vector<std::uint64_t> h(n_), sig(n_);
    for (;;) {
      for (int i = 0; i < n_; ++i) h[i] = mix(static_cast<std::uint64_t>(i) * 7919 + 1);
      std::fill(sig.begin(), sig.end(), 0);
      for (Subset b : m_.bases()) {
        std::uint64_t code = 0;
        for (Subset t = b; t; t &= t - 1) code += h[p.cell_of[std::countr_zero(t)]];
        const std::uint64_t w = mix(code);
        for (Subset t = b; t; t &= t - 1) sig[std::countr_zero(t)] += w;
      }
      bool split = false;
      int s = 0;
      while (s < n_) {
        int t = s + 1;
        while (t < n_ && p.cell_of[p.perm[t]] == s) ++t;
        if (t - s > 1) {
          std::stable_sort(p.perm.begin() + s, p.perm.begin() + t,
                           [&](int a, int b) { return sig[a] < sig[b]; });
          int start = s;
          for (int i = s; i < t; ++i) {
            if (i > s && sig[p.perm[i]] != sig[p.perm[i - 1]]) {
              start = i;
              split = true;
            }
            p.cell_of[p.perm[i]] = start;
          }
        }
        s = t;
      }
      if (!split) return;
    }
  }

  std::vector<Subset> form_of(const std::vector<int>& perm) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[perm[i]] = i;
    std::vector<Subset> out;
    out.reserve(m_.bases().size());
    for (Subset b : m_.bases()) {
      Subset img = 0;
      for (Subset t = b; t; t &= t - 1) img |= bit(pos[std::countr_zero(t)]);
      out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> g(n_);
    for (int i = 0; i < n_; ++i) g[from[i]] = to[i];
    autos_.push_back(std::move(g));
  }

  // Returns the depth to resume at, or -1 to continue normally.
  int dfs(Partition p, std::vector<int>& path) {
    refine(p);
    int s = 0;
    int t = 0;
    for (s = 0; s < n_; s = t) {
      t = s + 1;
      while (t < n_ && p.cell_of[p.perm[t]] == s) ++t;
      if (t - s > 1) break;
    }
    if (s >= n_) return leaf(p.perm, path);

    const int depth = static_cast<int>(path.size());
    std::vector<int> candidates(p.perm.begin() + s, p.perm.begin() + t);
    std::vector<int> tried;
    for (int v : candidates) {
      if (!tried.empty() && same_orbit_as_tried(v, tried, path)) continue;
      Partition child = p;
      auto it = std::find(child.perm.begin() + s, child.perm.begin() + t, v);
      std::rotate(child.perm.begin() + s, it, it + 1);
      for (int i = s + 1; i < t; ++i) child.cell_of[child.perm[i]] = s + 1;
      child.cell_of[v] = s;
      path.push_back(v);
      const int jump = dfs(std::move(child), path);
      path.pop_back();
      tried.push_back(v);
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  bool same_orbit_as_tried(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos_) {
      bool fixes = true;
      for (int e : path)
        if (g[e] != e) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int e = 0; e < n_; ++e) parent[find(e)] = find(g[e]);
    }
    const int rv = find(v);
    for (int u : tried)
      if (find(u) == rv) return true;
    return false;
  }

  int leaf(const std::vector<int>& perm, const std::vector<int>& path) {
    if (++leaves_ > kCanonicalLeafCap) throw DomainError("canonical labeling search exceeded its leaf cap");
    std::vector<Subset> form = form_of(perm);
    if (first_order_.empty() && leaves_ == 1) {
      first_form_ = form;
      first_order_ = perm;
      first_path_ = path;
      best_form_ = std::move(form);
      best_order_ = perm;
      return -1;
    }
    if (form == first_form_) {
      record_automorphism(first_order_, perm);
      std::size_t d = 0;
      while (d < path.size() && d < first_path_.size() && path[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (form < best_form_) {
      best_form_ = std::move(form);
      best_order_ = perm;
    } else if (form == best_form_) {
      record_automorphism(best_order_, perm);
    }
    return -1;
  }

  const Matroid& m_;
  int n_;
  long leaves_ = 0;
  std::vector<Subset> first_form_, best_form_;
  std::vector<int> first_order_, best_order_, first_path_;
  std::vector<std::vector<int>> autos_;
};

void put_u32(std::string& out, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

CanonicalForm canonical_form(const Matroid& m, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != m.size())
    throw DomainError("color vector does not match ground set size");
  CanonicalForm out;
  out.key.push_back(static_cast<char>(m.size()));
  out.key.push_back(static_cast<char>(m.rank()));
  if (m.size() == 0) {
    out.key.push_back(0);
    return out;
  }
  Search s(m, colors);
  out.order = s.best_order();
  out.key.push_back(colors.empty() ? 0 : 1);
  if (!colors.empty())
    for (int e : out.order) put_u32(out.key, static_cast<std::uint32_t>(colors[e]), 2);
  const int width = m.size() <= 8 ? 1 : (m.size() <= 16 ? 2 : 3);
  put_u32(out.key, static_cast<std::uint32_t>(s.best_form().size()), 4);
  for (Subset b : s.best_form()) put_u32(out.key, b, width);
  return out;
}

std::string canonical_key(const Matroid& m, std::span<const int> colors) {
  return canonical_form(m, colors).key;
}

bool is_isomorphism(const Matroid& a, const Matroid& b, std::span<const int> phi) {
  if (a.size() != b.size() || static_cast<int>(phi.size()) != a.size()) return false;
  if (a.bases().size() != b.bases().size()) return false;
  Subset seen = 0;
  for (int x : phi) {
    if (x < 0 || x >= b.size() || contains(seen, x)) return false;
    seen |= bit(x);
  }
  for (Subset base : a.bases()) {
    Subset img = 0;
    for (Subset t = base; t; t &= t - 1) img |= bit(phi[std::countr_zero(t)]);
    if (!b.is_basis(img)) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size())
    return std::nullopt;
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.key != cb.key) return std::nullopt;
  std::vector<int> phi(a.size());
  for (int i = 0; i < a.size(); ++i) phi[ca.order[i]] = cb.order[i];
  return phi;
}

bool isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace gf4relax
