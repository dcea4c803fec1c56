#pragma once

#include <span>
#include <vector>

#include "condkit/homology.hpp"

namespace condkit::metrics {

/// A finite (birth, death) point of one homology dimension.
struct DiagramPoint {
    double birth = 0.0;
    double death = 0.0;
};

/// Bottleneck distance between two finite diagrams where every point may also
/// be matched to its diagonal projection at cost (death - birth) / 2.
///
/// The optimum is one of the finitely many pairwise L-infinity costs, so it is
/// found exactly by binary search over the sorted candidates with a perfect
/// matching test (augmenting paths) at each threshold.
double bottleneck_finite(std::span<const DiagramPoint> left, std::span<const DiagramPoint> right);

/// Full bottleneck distance of one dimension. Infinite bars are matched by
/// sorted birth and contribute the largest birth difference; unequal
/// infinite-bar counts give +inf.
double bottleneck_distance(const homology::PersistenceDiagram& a, const homology::PersistenceDiagram& b, int dimension);

/// Same as above on raw pair lists, using only pairs of `dimension`.
double bottleneck_distance(std::span<const homology::PersistencePair> a, std::span<const homology::PersistencePair> b,
                           int dimension);

}  // namespace condkit::metrics
