#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace galois {

/// The fourteen transitive groups that can occur as the Galois group of an
/// irreducible polynomial of degree 1 through 5.
enum class GaloisGroup {
  C1,   // degree 1
  S2,   // degree 2
  A3, S3,             // degree 3
  V, C4, D8, A4, S4,  // degree 4
  C5, D10, F20, A5, S5,  // degree 5
};

/// Cycle type: the multiset of cycle lengths of a permutation, as a partition
/// of the degree sorted descending, e.g. {2, 2, 1} for (12)(34) in S5.
using CycleType = std::vector<int>;

struct GroupInfo {
  std::string_view name;         // "D8"
  std::string_view description;  // "dihedral of order 8"
  int degree;
  int order;
  std::span<const CycleType> cycle_types;  // element cycle types, each once
};

const GroupInfo& info(GaloisGroup g);

/// True when the partition is the cycle type of some element of g.
bool has_cycle_type(GaloisGroup g, const CycleType& type);

/// Whether g lies inside the alternating group of its degree (the square
/// discriminant side of the classification).
bool in_alternating(GaloisGroup g);

std::optional<GaloisGroup> group_from_name(std::string_view name);

}  // namespace galois
