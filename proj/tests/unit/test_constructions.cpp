#include <algorithm>
#include <set>

#include "core/canonical.hpp"
#include "core/constructions.hpp"
#include "core/representation.hpp"
#include "delta_checks.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace gf4relax;

namespace {

std::vector<Subset> sorted_bases(const Matroid& m) {
  std::vector<Subset> b = m.bases();
  std::sort(b.begin(), b.end());
  return b;
}

// Hub 0, rim vertices 1..r; spokes first, then rim edges i -- i+1.
std::vector<std::pair<int, int>> wheel_edges(int r) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= r; ++i) e.push_back({0, i});
  for (int i = 1; i <= r; ++i) e.push_back({i, i % r + 1});
  return e;
}

bool modular_flat(const Matroid& m, Subset a) {
  for (Subset f = 0;; ++f) {
    if (m.closure(f) == f && m.rank_of(a) + m.rank_of(f) != m.rank_of(a | f) + m.rank_of(a & f)) return false;
    if (f == m.ground()) break;
  }
  return true;
}

}  // namespace

TEST_CASE("uniform and graphic matroids match the definitions") {
  CHECK(uniform(2, 4).bases().size() == 6);
  CHECK(uniform(0, 3).rank() == 0);
  CHECK_THROWS_AS(uniform(3, 2), DomainError);
  const std::vector<std::vector<std::pair<int, int>>> graphs = {
      {{0, 1}, {1, 2}, {0, 2}, {0, 1}}, {{0, 0}, {0, 1}, {1, 2}}, wheel_edges(4), {{0, 1}, {2, 3}, {1, 2}, {0, 3}, {0, 2}}};
  for (const auto& g : graphs) {
    int v = 0;
    for (auto [a, b] : g) v = std::max({v, a + 1, b + 1});
    CHECK(sorted_bases(graphic(v, g)) == sorted_bases(oracle::graphic(v, g)));
  }
}

TEST_CASE("wheels and whirls") {
  for (int r = 3; r <= 5; ++r) {
    const Matroid w = wheel(r);
    CHECK(w.label(0) == "s1");
    CHECK(w.label(r) == "t1");
    CHECK(sorted_bases(w) == sorted_bases(oracle::graphic(r + 1, wheel_edges(r))));
    for (int i = 0; i < r; ++i) {
      const std::vector<std::string> tri = {"s" + std::to_string(i + 1), "t" + std::to_string(i + 1),
                                            "s" + std::to_string((i + 1) % r + 1)};
      CHECK(w.is_circuit(w.subset_named(tri)));
    }
  }
  for (int r = 2; r <= 5; ++r) {
    const Matroid w = wheel(r), h = whirl(r);
    CHECK(h.bases().size() == w.bases().size() + 1);
    const Subset rim = full_set(2 * r) & ~full_set(r);
    CHECK(h.is_basis(rim));
    CHECK_FALSE(w.is_basis(rim));
  }
  CHECK(isomorphic(whirl(2), uniform(2, 4)));
  CHECK(isomorphic(wheel(3), oracle::k4()));
}

TEST_CASE("theta") {
  CHECK(oracle::brute_isomorphic(theta(3), oracle::k4()));
  for (int k = 3; k <= 4; ++k) {
    const Matroid t = theta(k);
    CHECK(t.size() == 2 * k);
    CHECK(t.rank() == k);
    const Subset a = full_set(k);
    const Subset b = t.ground() & ~a;
    CHECK(t.rank_of(a) == 2);
    CHECK(t.is_basis(b));
    CHECK(modular_flat(t, a));
    for (int i = 0; i < k; ++i) CHECK(contains(t.closure(b & ~bit(k + i)), i));
  }
  CHECK_THROWS_AS(theta(2), DomainError);
  CHECK_THROWS_AS(theta(5), DomainError);
}

TEST_CASE("generalized parallel connection") {
  // Two copies of K4 glued along a triangle give K5 minus an edge.
  const Matroid k = oracle::k4();
  const Matroid left = k.with_labels({"x", "y", "l1", "z", "l2", "l3"});
  const Matroid right = k.with_labels({"x", "y", "r1", "z", "r2", "r3"});
  const Matroid p = generalized_parallel_connection(left, right);
  CHECK(p.size() == 9);
  CHECK(p.rank() == 4);
  CHECK(p.labels()[0] == "x");
  CHECK(p.label(6) == "l1");
  std::vector<std::pair<int, int>> k5e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 3 && j == 4)) k5e.push_back({i, j});
  CHECK(isomorphic(p, oracle::graphic(5, k5e)));
  // Restricting back to either side recovers it.
  CHECK(deltacheck::same(p.delete_set(p.subset_named(std::vector<std::string>{"l1", "l2", "l3"})), right));

  // Two points of U36 span a line that is not modular.
  const Matroid u = uniform(3, 6).with_labels({"p", "q", "a", "b", "c", "d"});
  const Matroid v = uniform(2, 3).with_labels({"p", "q", "e"});
  CHECK_THROWS_AS(generalized_parallel_connection(u, v), DomainError);
  const Matroid bad = Matroid::from_bases(3, {0b011, 0b101}, {"x", "y", "r1"});
  CHECK_THROWS_AS(generalized_parallel_connection(left, bad.with_labels({"x", "y", "w"})), DomainError);
}

TEST_CASE("delta-y on graphs") {
  // K4 edges 01 02 03 12 23 13; triangle 01, 02, 12 is elements 0, 1, 3.
  const Matroid k = oracle::k4();
  const Subset tri = 0b001011;
  const Matroid d = delta_y(k, tri);
  const Matroid k23 = oracle::graphic(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(oracle::brute_isomorphic(d, k23));
  CHECK(d.labels() == k.labels());
  // The new elements form a triad.
  CHECK(d.dual().is_circuit(tri));
  CHECK(nabla_y(d, tri) == k);
  const Matroid t = theta(4);
  CHECK(delta_y(t, 0b1111).contract_element(0) == delta_y(t.delete_element(0), 0b111));
  CHECK_THROWS_AS(delta_y(k, 0b000111), DomainError);                   // not a segment
  CHECK_THROWS_AS(delta_y(uniform(2, 3), 0b111), DomainError);          // not coindependent
  CHECK_THROWS_AS(delta_y(uniform(2, 6), 0b11111), DomainError);        // too large
}

TEST_CASE("delta-y identities on small fragile matroids") {
  std::vector<Matroid> ms = {uniform(2, 5), uniform(2, 6), x8(), y8(), y8().dual(), m71(), m71().dual(), x8().dual(),
                             named("P8-"), theta(4)};
  deltacheck::Counts c;
  for (const auto& m : ms) {
    deltacheck::check_all(m, c);
    deltacheck::check_all(m.dual(), c);
  }
  CHECK(c.inverse > 10);
  CHECK(c.contract > 20);
  CHECK(c.remove > 10);
  CHECK(c.guts > 0);
  CHECK(c.fail == 0);
  for (const auto& f : c.failures) MESSAGE(f);
}

TEST_CASE("delta-y preserves GF(4)-representability") {
  for (const Matroid& m : {x8(), y8(), m71(), uniform(2, 5), named("P8-"), named("F7="), named("F7-")}) {
    const bool rep = representable_gf4(m).has_value();
    for (Subset a : deltacheck::delta_sets(m)) CHECK(representable_gf4(delta_y(m, a)).has_value() == rep);
  }
}

TEST_CASE("gluing wheels") {
  const Matroid u = uniform(2, 5).with_labels({"a", "b", "c", "d", "e"});
  const Matroid g = glue_wheel(u, {"a", "b", "c"}, 3, {"b"}, "g");
  CHECK(g.size() == 7);
  CHECK(g.rank() == 3);
  CHECK(g.index_of("b") < 0);
  CHECK(g.index_of("gt2") >= 0);
  const Matroid h = glue_wheel(u, {"a", "b", "c"}, 4, {"a", "b", "c"}, "g");
  CHECK(h.size() == 5 + 8 - 3 - 3);
  CHECK(h.rank() == 2 + 4 - 2);
  for (int r = 3; r <= 5; ++r) {
    const Matroid w = glue_wheel(u, {"a", "b", "c"}, r, {"b"}, "g");
    CHECK(w.size() == 5 + 2 * r - 3 - 1);
    CHECK(w.rank() == r);
    CHECK(is_3_connected(w));
    const FragilityReport rep = fragility_report(w, u25u35_targets());
    CHECK(rep.fragile);
    for (int i = 0; i < w.size(); ++i) {
      const std::string& l = w.label(i);
      if (l.rfind("gt", 0) == 0) CHECK_FALSE(rep.deletable[i]);
      if (l.rfind("gs", 0) == 0) CHECK_FALSE(rep.contractible[i]);
    }
  }
  CHECK_THROWS_AS(glue_wheel(u, {"a", "b", "c"}, 2, {"b"}, "g"), DomainError);
  CHECK_THROWS_AS(glue_wheel(u, {"a", "b", "c"}, 3, {"a"}, "g"), DomainError);
  CHECK_THROWS_AS(glue_wheel(oracle::k4(), {"0", "1", "2"}, 3, {"1"}, "g"), DomainError);
}

TEST_CASE("series and parallel extensions") {
  const Matroid u = uniform(2, 4);
  const Matroid p = parallel_extension(u, 1, 2);
  CHECK(p.size() == 6);
  CHECK(p.rank() == 2);
  CHECK(p.label(4) == "z1");
  CHECK(p.is_circuit(bit(1) | bit(5)));
  const Matroid s = series_extension(u, 0, 1, {"q"});
  CHECK(s.rank() == 3);
  CHECK(s.dual().is_circuit(bit(0) | bit(4)));
  CHECK_THROWS_AS(parallel_extension(u, 4, 1), DomainError);
  CHECK(fresh_labels(p, "z", 2) == std::vector<std::string>{"z3", "z4"});

  const Matroid x = x8();
  const Subset seg = x.subset_named(std::vector<std::string>{"s1", "s2", "s3", "s4"});
  const FragilityReport r = fragility_report(x, u25u35_targets());
  std::vector<int> mult(4, 0);
  for (int i = 0; i < 4; ++i)
    if (r.deletable[elements_of(seg)[i]]) mult[i] = 1;
  const Matroid e = allowable_parallel_extension(x, seg, mult, u25u35_targets());
  CHECK(fragility_report(e, u25u35_targets()).fragile);
  std::vector<int> wrong(4, 0);
  for (int i = 0; i < 4; ++i)
    if (!r.deletable[elements_of(seg)[i]]) wrong[i] = 1;
  CHECK_THROWS_AS(allowable_parallel_extension(x, seg, wrong, u25u35_targets()), DomainError);
  CHECK_THROWS_AS(allowable_parallel_extension(x, 0b111, {1, 0, 0}, u25u35_targets()), DomainError);
}

TEST_CASE("X8, Y8 and M71") {
  const Matroid x = x8();
  CHECK(x.size() == 8);
  CHECK(x.rank() == 4);
  CHECK(isomorphic(x, x.dual()));
  CHECK(fragility_report(x, u25u35_targets()).fragile);
  CHECK(representable_gf4(x).has_value());
  CHECK(is_3_connected(x));
  const Subset s = x.subset_named(std::vector<std::string>{"s1", "s2", "s3", "s4"});
  const Subset c = x.subset_named(std::vector<std::string>{"c1", "c2", "c3", "c4"});
  CHECK(x.rank_of(s) == 2);
  CHECK(x.corank_of(c) == 2);

  const auto ys = y8_candidates();
  REQUIRE(ys.size() >= 1);
  for (const auto& y : ys) CHECK(isomorphic(y, ys.front()));
  const Matroid y = y8();
  CHECK(y.size() == 8);
  CHECK(y.rank() == 3);
  CHECK_FALSE(isomorphic(y, y.dual()));
  CHECK(fragility_report(y, u25u35_targets()).fragile);

  // M71 is Y8 minus the point on both of its 4-point segments.
  std::vector<Subset> four;
  for (Subset t : segments(y))
    if (popcount(t) == 4) four.push_back(t);
  REQUIRE(four.size() == 2);
  REQUIRE(popcount(four[0] & four[1]) == 1);
  const Matroid m = m71();
  CHECK(m.size() == 7);
  CHECK(isomorphic(m, y.delete_set(four[0] & four[1])));
}

TEST_CASE("named matroids") {
  CHECK(named("P6").bases().size() == 19);
  CHECK_FALSE(representable_gf4(named("P6")).has_value());
  CHECK(oracle::brute_isomorphic(named("F7"), named("F7").reordered(std::vector<int>{6, 5, 4, 3, 2, 1, 0})));
  CHECK(representable_gf4(named("F7")).has_value());
  CHECK_FALSE(representable_gf4(named("F7-")).has_value());
  CHECK(representable_gf4(named("F7=")).has_value());
  CHECK_FALSE(representable_gf4(named("P8")).has_value());
  CHECK(representable_gf4(named("P8-")).has_value());
  CHECK(named("P8").size() == 8);
  CHECK(isomorphic(named("P8"), named("P8").dual()));
  const Matroid m = m99();
  CHECK(m.size() == 9);
  CHECK(m.rank() == 4);
  CHECK(representable_gf4(m).has_value());
  CHECK(is_3_connected(m));
  CHECK(named("U3,6") == uniform(3, 6));
  CHECK(named("W4") == wheel(4));
  CHECK(named("Whirl3") == whirl(3));
  CHECK(isomorphic(named("Theta3"), oracle::k4()));
  CHECK_THROWS_AS(named("Q9"), DomainError);
  CHECK_THROWS_AS(named("U3,"), DomainError);
  CHECK(std::find(named_list().begin(), named_list().end(), "X8") != named_list().end());
}

TEST_CASE("path sequence text") {
  const auto steps = parse_path_sequence("# comment\ndn S 2\n\ndn C m=1,0,1,0\ngw C r=4 X=ab\ngw S r=3 X=b T=s1,s2,s3\n");
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].kind == PathSequenceStep::Kind::delta_nabla);
  CHECK(steps[0].count == 2);
  CHECK(steps[1].axis == 'C');
  CHECK(steps[1].multiplicities == std::vector<int>{1, 0, 1, 0});
  CHECK(steps[2].kind == PathSequenceStep::Kind::glue_wheel);
  CHECK(steps[2].wheel_size == 4);
  CHECK(steps[2].remove == "ab");
  CHECK(steps[3].triple == std::vector<std::string>{"s1", "s2", "s3"});
  for (const auto& s : steps) {
    const auto again = parse_path_sequence(format_step(s));
    REQUIRE(again.size() == 1);
    CHECK(format_step(again[0]) == format_step(s));
  }
  try {
    parse_path_sequence("dn S 1\ngw S r=2 X=b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_path_sequence("dn Q 1"), ParseError);
  CHECK_THROWS_AS(parse_path_sequence("gw S r=3 X=a"), ParseError);
  CHECK_THROWS_AS(parse_path_sequence("dn S 0"), ParseError);
}

TEST_CASE("running path sequences") {
  CHECK(run_path_sequence({}) == x8());
  const Matroid one = run_path_sequence(parse_path_sequence("dn S 1"));
  CHECK(one.size() == 9);
  CHECK(fragility_report(one, u25u35_targets()).fragile);
  CHECK(representable_gf4(one).has_value());
  const Matroid glued = run_path_sequence(parse_path_sequence("gw S r=3 X=b"));
  CHECK(glued.size() == 8 + 3 - 1);
  CHECK(glued.rank() == 5);
  CHECK(fragility_report(glued, u25u35_targets()).fragile);
}

TEST_CASE("path sequence enumeration") {
  const auto all = enumerate_path_sequences(9);
  std::set<std::string> keys;
  bool has_x8 = false;
  for (const auto& d : all) {
    CHECK(keys.insert(d.key).second);
    CHECK(d.key == canonical_key(d.m));
    CHECK(d.m.size() <= 9);
    CHECK(fragility_report(d.m, u25u35_targets()).fragile);
    CHECK(representable_gf4(d.m).has_value());
    CHECK(isomorphic(run_path_sequence(d.steps), d.m));
    if (isomorphic(d.m, x8())) has_x8 = true;
  }
  CHECK(has_x8);
  CHECK_THROWS_AS(enumerate_path_sequences(15), ScaleError);
}
