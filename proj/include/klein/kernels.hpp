#pragma once

// Data-parallel kernels over the 336 group elements. Each OpenMP kernel has a
// plain serial twin with the same contract; the tests compare the two and the
// benchmark target times them against each other.

#include <bitset>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "klein/linalg.hpp"
#include "klein/torus_point.hpp"

namespace klein {

inline constexpr std::size_t kGroupOrder = 336;
using ElementId = int;
using ElementSet = std::bitset<kGroupOrder>;
using ElementIndex = std::unordered_map<IntMat6, ElementId, IntMat6Hash>;

namespace kernels {

/// table[i * n + j] = id of elems[i] * elems[j]; -1 if the product is not in the index.
std::vector<ElementId> cayley_table(std::span<const IntMat6> elems, const ElementIndex& index);
std::vector<ElementId> cayley_table_serial(std::span<const IntMat6> elems, const ElementIndex& index);

/// Bit k set iff elems[k] fixes u modulo Z^6. Only the ids in `candidates` are tested.
ElementSet stabilizer_mask(std::span<const IntMat6> elems, const ElementSet& candidates, const TorusPoint& u);
ElementSet stabilizer_mask_serial(std::span<const IntMat6> elems, const ElementSet& candidates, const TorusPoint& u);

/// Partition of `points` (assumed closed under the action) into orbits under the
/// elements flagged in `acting`; result[i] is the orbit number of points[i],
/// orbits numbered by first appearance.
std::vector<int> orbit_partition(std::span<const IntMat6> elems, const ElementSet& acting,
                                 std::span<const TorusPoint> points);
std::vector<int> orbit_partition_serial(std::span<const IntMat6> elems, const ElementSet& acting,
                                        std::span<const TorusPoint> points);

}  // namespace kernels
}  // namespace klein
