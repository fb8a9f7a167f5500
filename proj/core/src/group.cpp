#include "galois/group.hpp"

#include <array>

namespace galois {

namespace {

// Element cycle types per group, each listed once, partitions descending.
// Verified against brute-force enumeration of the generated permutation
// groups in the test suite.
const std::vector<CycleType> kC1 = {{1}};
const std::vector<CycleType> kS2 = {{1, 1}, {2}};
const std::vector<CycleType> kA3 = {{1, 1, 1}, {3}};
const std::vector<CycleType> kS3 = {{1, 1, 1}, {2, 1}, {3}};
const std::vector<CycleType> kV = {{1, 1, 1, 1}, {2, 2}};
const std::vector<CycleType> kC4 = {{1, 1, 1, 1}, {2, 2}, {4}};
const std::vector<CycleType> kD8 = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {4}};
const std::vector<CycleType> kA4 = {{1, 1, 1, 1}, {2, 2}, {3, 1}};
const std::vector<CycleType> kS4 = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
const std::vector<CycleType> kC5 = {{1, 1, 1, 1, 1}, {5}};
const std::vector<CycleType> kD10 = {{1, 1, 1, 1, 1}, {2, 2, 1}, {5}};
const std::vector<CycleType> kF20 = {{1, 1, 1, 1, 1}, {2, 2, 1}, {4, 1}, {5}};
const std::vector<CycleType> kA5 = {{1, 1, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {5}};
const std::vector<CycleType> kS5 = {{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1},
                                    {3, 1, 1},       {3, 2},       {4, 1},
                                    {5}};

const std::array<GroupInfo, 14> kInfo = {{
    {"C1", "trivial group of order 1", 1, 1, kC1},
    {"S2", "symmetric of order 2", 2, 2, kS2},
    {"A3", "alternating (cyclic) of order 3", 3, 3, kA3},
    {"S3", "symmetric of order 6", 3, 6, kS3},
    {"V", "Klein four-group of order 4", 4, 4, kV},
    {"C4", "cyclic of order 4", 4, 4, kC4},
    {"D8", "dihedral of order 8", 4, 8, kD8},
    {"A4", "alternating of order 12", 4, 12, kA4},
    {"S4", "symmetric of order 24", 4, 24, kS4},
    {"C5", "cyclic of order 5", 5, 5, kC5},
    {"D10", "dihedral of order 10", 5, 10, kD10},
    {"F20", "Frobenius of order 20", 5, 20, kF20},
    {"A5", "alternating of order 60", 5, 60, kA5},
    {"S5", "symmetric of order 120", 5, 120, kS5},
}};

}  // namespace

const GroupInfo& info(GaloisGroup g) { return kInfo[static_cast<size_t>(g)]; }

bool has_cycle_type(GaloisGroup g, const CycleType& type) {
  for (const auto& t : info(g).cycle_types)
    if (t == type) return true;
  return false;
}

bool in_alternating(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::C1:
    case GaloisGroup::A3:
    case GaloisGroup::V:
    case GaloisGroup::A4:
    case GaloisGroup::C5:
    case GaloisGroup::D10:
    case GaloisGroup::A5:
      return true;
    default:
      return false;
  }
}

std::optional<GaloisGroup> group_from_name(std::string_view name) {
  for (size_t i = 0; i < kInfo.size(); ++i)
    if (kInfo[i].name == name) return static_cast<GaloisGroup>(i);
  return std::nullopt;
}

}  // namespace galois
