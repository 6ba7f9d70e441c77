#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "core/canonical.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace gf4relax;

namespace {

Matroid permuted(const Matroid& m, std::mt19937& rng) {
  std::vector<int> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return m.reordered(p).with_labels(default_labels(m.size()));
}

}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(31);
  for (int k = 0; k < 200; ++k) {
    const Matroid m = oracle::random_matroid(rng, 3 + k % 9);
    const Matroid p = permuted(m, rng);
    CHECK(canonical_key(m) == canonical_key(p));
    const auto phi = find_isomorphism(m, p);
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism(m, p, *phi));
  }
}

TEST_CASE("named isomorphism checks") {
  std::vector<Subset> u24;
  for_each_k_subset(4, 2, [&](Subset s) { u24.push_back(s); });
  const Matroid u = Matroid::from_bases(4, u24);
  CHECK(isomorphic(u, u.dual()));
  std::vector<Subset> wb = oracle::k4().bases();
  wb.push_back(0b001011);
  const Matroid whirl = Matroid::from_bases(6, wb);
  CHECK_FALSE(isomorphic(oracle::k4(), whirl));
  CHECK(isomorphic(oracle::k4(), oracle::k4().dual()));
}

TEST_CASE("canonical keys agree with brute-force isomorphism on small matroids") {
  for (int n = 3; n <= 5; ++n) {
    const auto all = oracle::all_matroids(n);
    // Group by key, then confirm each class is brute-force isomorphic to its
    // first member and that distinct classes are not.
    std::map<std::string, std::vector<const Matroid*>> classes;
    for (const auto& m : all) classes[canonical_key(m)].push_back(&m);
    std::vector<const Matroid*> reps;
    for (auto& [key, members] : classes) {
      reps.push_back(members.front());
      for (std::size_t i = 1; i < members.size(); i += 7)
        CHECK(oracle::brute_isomorphic(*members.front(), *members[i]));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::brute_isomorphic(*reps[i], *reps[j]));
    if (n == 4) CHECK(classes.size() == 17);
    if (n == 5) CHECK(classes.size() == 38);
  }
}

TEST_CASE("random matroids on seven elements against brute force") {
  std::mt19937 rng(37);
  std::vector<Matroid> pool;
  for (int k = 0; k < 40; ++k) pool.push_back(oracle::random_matroid(rng, 7));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK((canonical_key(pool[i]) == canonical_key(pool[j])) == oracle::brute_isomorphic(pool[i], pool[j]));
}

TEST_CASE("colored keys separate colorings") {
  std::vector<Subset> u25;
  for_each_k_subset(5, 2, [&](Subset s) { u25.push_back(s); });
  const Matroid u = Matroid::from_bases(5, u25);
  const std::vector<int> c1{1, 0, 0, 0, 0}, c2{0, 0, 0, 1, 0}, c3{1, 1, 0, 0, 0};
  CHECK(canonical_key(u, c1) == canonical_key(u, c2));
  CHECK(canonical_key(u, c1) != canonical_key(u, c3));
  CHECK(canonical_key(u, c1) != canonical_key(u));
}

TEST_CASE("highly symmetric matroids stay within the search cap") {
  std::vector<Subset> b;
  for_each_k_subset(14, 7, [&](Subset s) { b.push_back(s); });
  const Matroid u = Matroid::from_bases(14, b);
  CHECK(canonical_form(u).order.size() == 14);
}
