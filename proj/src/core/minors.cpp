#include "core/minors.hpp"

#include <utility>

#include "core/canonical.hpp"

namespace gf4relax {

namespace {

Matroid uniform_matroid(int r, int n) {
  std::vector<Subset> b;
  for_each_k_subset(n, r, [&](Subset s) { b.push_back(s); });
  return Matroid::from_bases(n, std::move(b));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Does M/C restricted to S (with r(S u C) = r(M), C independent) match t?
bool minor_matches(const Matroid& m, Subset c, Subset s, const MinorTarget& t) {
  const int k = t.matroid.rank();
  const int r = m.rank();
  std::size_t count = 0;
  bool all = true;
  const std::vector<int> se = elements_of(s);
  const int sn = static_cast<int>(se.size());
  for_each_k_subset(sn, k, [&](Subset local) {
    Subset g = c;
    for (Subset u = local; u; u &= u - 1) g |= bit(se[std::countr_zero(u)]);
    if (m.rank_of(g) == r)
      ++count;
    else
      all = false;
  });
  if (t.uniform) return all;
  if (count != t.basis_count) return false;
  const Matroid minor = m.contract_set(c).restrict_to([&] {
    // Indices shift after contraction: map s into the contracted ground set.
    Subset out = 0;
    int idx = 0;
    for (int e = 0; e < m.size(); ++e) {
      if (contains(c, e)) continue;
      if (contains(s, e)) out |= bit(idx);
      ++idx;
    }
    return out;
  }());
  return canonical_key(minor) == t.key;
}

}  // namespace

TargetSet::TargetSet(std::string name, const std::vector<Matroid>& members) : name_(std::move(name)) {
  for (const Matroid& m : members) {
    MinorTarget t;
    t.matroid = m;
    t.key = canonical_key(m);
    t.basis_count = m.bases().size();
    t.uniform = t.basis_count == binomial(m.size(), m.rank());
    members_.push_back(std::move(t));
  }
}

const TargetSet& u24_targets() {
  static const TargetSet t("u24", {uniform_matroid(2, 4)});
  return t;
}

const TargetSet& u25u35_targets() {
  static const TargetSet t("u25u35", {uniform_matroid(2, 5), uniform_matroid(3, 5)});
  return t;
}

std::optional<MinorWitness> find_minor(const Matroid& m, const TargetSet& targets) {
  const int n = m.size();
  const int r = m.rank();
  for (std::size_t ti = 0; ti < targets.members().size(); ++ti) {
    const MinorTarget& t = targets.members()[ti];
    const int k = t.matroid.rank();
    const int s = t.matroid.size();
    const int nc = r - k;
    const int nd = (n - s) - nc;
    if (nc < 0 || nd < 0) continue;
    std::optional<MinorWitness> found;
    for_each_k_subset(n, nc, [&](Subset c) {
      if (found || !m.is_independent(c)) return;
      const std::vector<int> rest = elements_of(m.ground() & ~c);
      for_each_k_subset(static_cast<int>(rest.size()), s, [&](Subset local) {
        if (found) return;
        Subset sel = 0;
        for (Subset u = local; u; u &= u - 1) sel |= bit(rest[std::countr_zero(u)]);
        if (m.rank_of(sel | c) != r) return;
        if (minor_matches(m, c, sel, t))
          found = MinorWitness{c, m.ground() & ~(c | sel), static_cast<int>(ti)};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& target) {
  return find_minor(m, TargetSet("target", {target}));
}

bool has_minor(const Matroid& m, const TargetSet& targets) { return find_minor(m, targets).has_value(); }
bool has_minor(const Matroid& m, const Matroid& target) { return find_minor(m, target).has_value(); }

FragilityReport fragility_report(const Matroid& m, const TargetSet& targets) {
  FragilityReport rep;
  const int n = m.size();
  rep.deletable.assign(n, false);
  rep.contractible.assign(n, false);
  rep.has_minor = has_minor(m, targets);
  if (!rep.has_minor) return rep;
  rep.fragile = true;
  for (int e = 0; e < n; ++e) {
    rep.deletable[e] = has_minor(m.delete_element(e), targets);
    rep.contractible[e] = has_minor(m.contract_element(e), targets);
    if (rep.deletable[e] && rep.contractible[e]) rep.fragile = false;
  }
  return rep;
}

FragilityReport dual_report(const FragilityReport& r) {
  FragilityReport d = r;
  std::swap(d.deletable, d.contractible);
  return d;
}

std::vector<Subset> segments(const Matroid& m) {
  std::vector<Subset> out;
  const int n = m.size();
  for (Subset s = 1; s <= m.ground() && s != 0; ++s) {
    if (popcount(s) >= 3 && m.rank_of(s) == 2) {
      bool ok = true;
      const auto el = elements_of(s);
      for (std::size_t i = 0; i < el.size() && ok; ++i)
        for (std::size_t j = i + 1; j < el.size() && ok; ++j)
          if (m.rank_of(bit(el[i]) | bit(el[j])) != 2) ok = false;
      if (ok) out.push_back(s);
    }
    if (s == full_set(n)) break;
  }
  return out;
}

std::vector<Subset> cosegments(const Matroid& m) { return segments(m.dual()); }

bool is_allowable_segment(const Matroid& m, const FragilityReport& r, Subset s) {
  if (m.corank_of(s) != popcount(s)) return false;
  for (int e : elements_of(s))
    if (!r.deletable[e]) return true;
  return false;
}

bool is_allowable_cosegment(const Matroid& m, const FragilityReport& r, Subset s) {
  if (!m.is_independent(s)) return false;
  for (int e : elements_of(s))
    if (!r.contractible[e]) return true;
  return false;
}

std::vector<Subset> allowable_segments(const Matroid& m, const FragilityReport& r) {
  std::vector<Subset> out;
  if (!r.has_minor) return out;
  for (Subset s : segments(m))
    if (is_allowable_segment(m, r, s)) out.push_back(s);
  return out;
}

std::vector<Subset> allowable_cosegments(const Matroid& m, const FragilityReport& r) {
  std::vector<Subset> out;
  if (!r.has_minor) return out;
  for (Subset s : cosegments(m))
    if (is_allowable_cosegment(m, r, s)) out.push_back(s);
  return out;
}

bool check_nondeletable_basis(const Matroid& m, Subset x, const FragilityReport& r) {
  if (!m.is_basis(x)) throw DomainError("the given set is not a basis");
  for (int e = 0; e < m.size(); ++e) {
    if (contains(x, e) && r.deletable[e]) return false;
    if (!contains(x, e) && r.contractible[e]) return false;
  }
  return true;
}

}  // namespace gf4relax
