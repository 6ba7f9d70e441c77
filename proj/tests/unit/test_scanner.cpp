#include <random>
#include <tuple>

#include "core/scanner.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace gf4relax;

namespace {

// Reference: for each template and orientation, every ordered row and column
// selection compared against every instantiation; keeps the least hit.
std::optional<std::string> brute_scan(const Gf4Matrix& a) {
  for (const auto& t : pattern_catalog()) {
    for (int o = 0; o < 2; ++o) {
      const Gf4Matrix m = o == 0 ? a : a.transpose();
      if (m.rows() < static_cast<std::size_t>(t.rows) || m.cols() < static_cast<std::size_t>(t.cols)) continue;
      std::vector<std::vector<std::size_t>> rt, ct;
      auto tuples = [](std::size_t n, int k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self) -> void {
          if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
          }
          for (std::size_t i = 0; i < n; ++i) {
            if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
            cur.push_back(i);
            self(self);
            cur.pop_back();
          }
        };
        rec(rec);
        return out;
      };
      for (const auto& r : tuples(m.rows(), t.rows))
        for (const auto& c : tuples(m.cols(), t.cols)) {
          const Gf4Matrix sub = submatrix(m, r, c);
          for (const auto& inst : instantiations(t))
            if (sub == inst) {
              std::string s = t.id + (o == 0 ? " A" : " AT");
              for (auto x : r) s += " r" + std::to_string(x);
              for (auto x : c) s += " c" + std::to_string(x);
              return s;
            }
        }
    }
  }
  return std::nullopt;
}

std::string brief(const ScanMatch& m) {
  std::string s = m.pattern + (m.orientation == Orientation::A ? " A" : " AT");
  for (auto x : m.rows) s += " r" + std::to_string(x);
  for (auto x : m.cols) s += " c" + std::to_string(x);
  return s;
}

}  // namespace

TEST_CASE("pattern catalog shape") {
  const auto& c = pattern_catalog();
  REQUIRE(c.size() == 15);
  CHECK(c.front().id == "P01");
  CHECK(c.back().id == "P15");
  std::size_t total = 0;
  for (const auto& t : c) {
    const auto inst = instantiations(t);
    std::size_t expect = 1;
    for (std::size_t k = 0; k < t.symbols().size(); ++k) expect *= 3 - k;
    CHECK(inst.size() == expect);
    total += inst.size();
  }
  CHECK(total > 15);
}

TEST_CASE("scan finds the least occurrence") {
  const auto m = parse_matrix("1 w v");
  const auto hit = scan(m);
  REQUIRE(hit.has_value());
  CHECK(format_match(*hit) == "P01 A rows=0 cols=0,1,2 x=1 y=w z=v");
  CHECK_FALSE(scan(parse_matrix("1 1\n1 w")).has_value());
  CHECK_FALSE(scan(parse_matrix("1 1\n1 0")).has_value());
  const auto t = scan(parse_matrix("1\nw\nv"));
  REQUIRE(t.has_value());
  CHECK(t->orientation == Orientation::AT);
}

TEST_CASE("scan agrees with the reference on random matrices") {
  std::mt19937 rng(61);
  int hits = 0;
  for (int k = 0; k < 400; ++k) {
    const auto a = oracle::random_matrix(rng, 1 + k % 3, 1 + (k / 3) % 4);
    const auto got = scan(a);
    const auto expect = brute_scan(a);
    CHECK(got.has_value() == expect.has_value());
    if (got && expect) {
      CHECK(brief(*got) == *expect);
      ++hits;
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("scanner examples") {
  const auto p02 = scan(parse_matrix("1 w\n0 1"));
  REQUIRE(p02.has_value());
  CHECK(format_match(*p02) == "P02 A rows=0,1 cols=0,1 x=1 y=w");
  CHECK_FALSE(scan(parse_matrix("1 1 1\n1 1 1\n1 1 1")).has_value());
  CHECK_FALSE(scan(parse_matrix("w")).has_value());
}

TEST_CASE("scan verdict is symmetric under transpose and the field automorphism") {
  for (std::uint64_t code = 0; code < (1u << 18); ++code) {
    std::vector<Gf4> e(9);
    for (int i = 0; i < 9; ++i) e[i] = Gf4::from_bits(static_cast<std::uint8_t>(code >> (2 * i) & 3));
    const Gf4Matrix a(3, 3, std::move(e));
    const bool hit = scan(a).has_value();
    CHECK(hit == scan(a.frobenius()).has_value());
    if (code % 17 == 0) CHECK(hit == scan(a.transpose()).has_value());
  }
}

TEST_CASE("matches persist in larger matrices") {
  std::mt19937 rng(67);
  for (int k = 0; k < 300; ++k) {
    const auto a = oracle::random_matrix(rng, 2, 3);
    if (!scan(a).has_value()) continue;
    const auto big = oracle::random_matrix(rng, 4, 4);
    std::vector<Gf4> e(big.entries());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) e[(i + 1) * 4 + j] = a.at(i, j);
    CHECK(scan(Gf4Matrix(4, 4, std::move(e))).has_value());
  }
}
