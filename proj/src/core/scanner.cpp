#include "core/scanner.hpp"

#include <algorithm>

namespace gf4relax {

namespace {

struct PatternSource {
  const char* id;
  const char* text;
};

// Listing order of the forbidden submatrices; rows separated by ';'.
constexpr PatternSource kPatterns[] = {
    {"P01", "x y z"},
    {"P02", "x y;0 x"},
    {"P03", "x y;y x"},
    {"P04", "x y;z x"},
    {"P05", "x x;y z"},
    {"P06", "x x 0;x 0 x"},
    {"P07", "x x 0;x 0 y"},
    {"P08", "x x 0;y 0 y"},
    {"P09", "x y 0;x 0 y"},
    {"P10", "x 0 0;0 y z"},
    {"P11", "x 0 0;0 x 0;0 0 x"},
    {"P12", "x 0 0;0 x 0;0 0 y"},
    {"P13", "x 0 0;0 y 0;0 0 z"},
    {"P14", "x y x;y y 0;x 0 0"},
    {"P15", "x y x;y y 0;x 0 z"},
};

PatternTemplate parse_pattern(const PatternSource& src) {
  PatternTemplate t;
  t.id = src.id;
  int cols = 0;
  for (const char* c = src.text;; ++c) {
    if (*c == ';' || *c == '\0') {
      if (t.rows == 0) t.cols = cols;
      ++t.rows;
      cols = 0;
      if (*c == '\0') break;
    } else if (*c != ' ') {
      t.cells.push_back(*c);
      ++cols;
    }
  }
  return t;
}

// Ordered k-tuples of distinct indices below n, in lexicographic order.
template <class F>
void for_each_tuple(std::size_t n, int k, F&& f) {
  std::vector<std::size_t> t(k);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int d) -> bool {
    if (d == k) return f(t);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      t[d] = i;
      const bool stop = self(self, d + 1);
      used[i] = 0;
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
}

std::optional<ScanMatch> match_in(const PatternTemplate& t, const Gf4Matrix& a, Orientation o) {
  std::optional<ScanMatch> out;
  if (a.rows() < static_cast<std::size_t>(t.rows) || a.cols() < static_cast<std::size_t>(t.cols)) return out;
  for_each_tuple(a.rows(), t.rows, [&](const std::vector<std::size_t>& rows) {
    bool stop = false;
    for_each_tuple(a.cols(), t.cols, [&](const std::vector<std::size_t>& cols) {
      Gf4 val[3];
      bool set[3] = {false, false, false};
      for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) {
          const char s = t.cells[i * t.cols + j];
          const Gf4 v = a.at(rows[i], cols[j]);
          if (s == '0') {
            if (!v.is_zero()) return false;
            continue;
          }
          if (v.is_zero()) return false;
          const int k = s - 'x';
          if (set[k] && val[k] != v) return false;
          set[k] = true;
          val[k] = v;
        }
      for (int k1 = 0; k1 < 3; ++k1)
        for (int k2 = k1 + 1; k2 < 3; ++k2)
          if (set[k1] && set[k2] && val[k1] == val[k2]) return false;
      ScanMatch m;
      m.pattern = t.id;
      m.orientation = o;
      m.rows = rows;
      m.cols = cols;
      for (int k = 0; k < 3; ++k)
        if (set[k]) m.assignment.emplace_back(static_cast<char>('x' + k), val[k]);
      out = std::move(m);
      stop = true;
      return true;
    });
    return stop;
  });
  return out;
}

}  // namespace

std::vector<char> PatternTemplate::symbols() const {
  std::vector<char> s;
  for (char c : cells)
    if (c != '0' && std::find(s.begin(), s.end(), c) == s.end()) s.push_back(c);
  std::sort(s.begin(), s.end());
  return s;
}

const std::vector<PatternTemplate>& pattern_catalog() {
  static const std::vector<PatternTemplate> catalog = [] {
    std::vector<PatternTemplate> c;
    for (const auto& src : kPatterns) c.push_back(parse_pattern(src));
    return c;
  }();
  return catalog;
}

std::vector<Gf4Matrix> instantiations(const PatternTemplate& t) {
  const auto syms = t.symbols();
  std::vector<Gf4Matrix> out;
  std::vector<int> pick(syms.size());
  auto rec = [&](auto&& self, std::size_t d, unsigned used) -> void {
    if (d == syms.size()) {
      std::vector<Gf4> cells;
      for (char c : t.cells) {
        if (c == '0') {
          cells.push_back(Gf4::zero());
        } else {
          const auto k = std::find(syms.begin(), syms.end(), c) - syms.begin();
          cells.push_back(kNonzeroGf4[pick[k]]);
        }
      }
      out.emplace_back(t.rows, t.cols, std::move(cells));
      return;
    }
    for (int v = 0; v < 3; ++v) {
      if (used >> v & 1u) continue;
      pick[d] = v;
      self(self, d + 1, used | (1u << v));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::optional<ScanMatch> scan(const Gf4Matrix& a) {
  const Gf4Matrix at = a.transpose();
  for (const auto& t : pattern_catalog()) {
    if (auto m = match_in(t, a, Orientation::A)) return m;
    if (auto m = match_in(t, at, Orientation::AT)) return m;
  }
  return std::nullopt;
}

std::string format_match(const ScanMatch& m) {
  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  std::string out = m.pattern + (m.orientation == Orientation::A ? " A" : " AT");
  out += " rows=" + join(m.rows) + " cols=" + join(m.cols);
  for (const auto& [sym, val] : m.assignment) {
    out += ' ';
    out += sym;
    out += '=';
    out += to_token(val);
  }
  return out;
}

}  // namespace gf4relax
