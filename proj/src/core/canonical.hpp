#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/matroid.hpp"

namespace gf4relax {

/// Canonical labeling of a (optionally element-colored) matroid.
/// order[i] is the element placed at canonical position i; key is a byte
/// string that is equal for two inputs iff they are isomorphic by a
/// color-preserving bijection.
struct CanonicalForm {
  std::string key;
  std::vector<int> order;
};

/// Search limit for the individualization tree. Exceeding it raises DomainError.
inline constexpr long kCanonicalLeafCap = 2'000'000;

CanonicalForm canonical_form(const Matroid& m, std::span<const int> colors = {});
std::string canonical_key(const Matroid& m, std::span<const int> colors = {});

/// A bijection phi with phi[e] = image in b of element e of a, mapping bases
/// onto bases, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);
bool isomorphic(const Matroid& a, const Matroid& b);

/// Checks a candidate bijection directly against both basis families.
bool is_isomorphism(const Matroid& a, const Matroid& b, std::span<const int> phi);

}  // namespace gf4relax
