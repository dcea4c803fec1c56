#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "condkit/cloud.hpp"

namespace condkit::homology {

/// Symmetric, non-negative, zero-diagonal distances stored as a full n x n table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    /// Validates a full row-major table; InvalidInput if it is not a metric-shaped matrix
    /// (asymmetric, negative, non-finite or non-zero diagonal).
    static DistanceMatrix from_full(std::size_t n, std::vector<double> table);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }

    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value) noexcept {
        d_[i * n_ + j] = value;
        d_[j * n_ + i] = value;
    }

    /// Every entry multiplied by s (s > 0).
    [[nodiscard]] DistanceMatrix scaled(double s) const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Euclidean distances, each unordered pair computed once. InvalidInput on
/// an empty cloud.
DistanceMatrix pairwise_distances(const cloud::PointCloud& cloud);

/// min_i max_j d(i, j); zero for a single point.
double enclosing_radius(const DistanceMatrix& dm) noexcept;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
    int dimension = 0;
    double birth = 0.0;
    double death = kInfinity;

    [[nodiscard]] bool infinite() const noexcept { return death == kInfinity; }
    [[nodiscard]] double persistence() const noexcept { return death - birth; }

    friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
    friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

struct PersistenceDiagram {
    /// Sorted by (dimension, birth, death); zero-persistence pairs never appear.
    std::vector<PersistencePair> pairs;
    int max_dimension = 1;
    double filtration_cap = kInfinity;

    [[nodiscard]] std::vector<PersistencePair> in_dimension(int dim) const;
};

/// Zero-dimensional persistence of the full filtration (no cap) by Kruskal
/// with union-find: n - 1 bars (0, mst edge) plus one (0, inf); bars of zero
/// length (duplicate points) are dropped.
std::vector<PersistencePair> h0_persistence(const DistanceMatrix& dm);

struct RipsOptions {
    /// 1 or 2.
    int max_dim = 1;
    /// Filtration threshold; defaults to the enclosing radius.
    std::optional<double> cap;
    /// Upper bound on simplices of dimension <= max_dim below the cap.
    std::uint64_t simplex_budget = 50'000'000;
};

/// Number of simplices of dimension <= max_dim with diameter <= cap, counting
/// stops once `limit` is passed.
std::uint64_t count_simplices(const DistanceMatrix& dm, int max_dim, double cap, std::uint64_t limit);

/// Vietoris-Rips persistence over Z/2 up to options.max_dim.
///
/// Cohomology is reduced column by column in decreasing filtration order with
/// clearing and the emergent-pair shortcut; coboundaries are enumerated
/// implicitly through the combinatorial number system, so only simplices of
/// dimension <= max_dim are ever stored. Throws InvalidInput for max_dim
/// outside {1, 2} or an explicit cap <= 0, BudgetExceeded when the stored
/// simplices would exceed the budget.
PersistenceDiagram rips_persistence(const DistanceMatrix& dm, const RipsOptions& options = {});

/// One list per dimension 0..max_dimension, each stably sorted by (birth, death).
std::vector<std::vector<PersistencePair>> barcodes(const PersistenceDiagram& diagram);

}  // namespace condkit::homology
