#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "condkit/linalg.hpp"

namespace condkit::cloud {

/// Counter-based generator: output k of stream `key` is splitmix64_mix(key + (k + 1) * 0x9E3779B97F4A7C15).
///
/// Each matrix (or torus point) i draws from its own stream keyed by
/// stream_key(seed, i), so generation is order-independent and parallel-safe.
std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept;

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept : key_(stream_key(seed, stream)) {}

    std::uint64_t next_u64() noexcept;
    /// Top 53 bits scaled into [0, 1).
    double next_unit() noexcept;
    /// Box-Muller pair from two units (u1, u2): r = sqrt(-2 ln(1 - u1)),
    /// returns (r cos(2 pi u2), r sin(2 pi u2)).
    std::pair<double, double> next_gaussian_pair() noexcept;

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct Gaussian {
    double mean = 0.0;
    double stddev = 1.0;
    friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

struct Uniform {
    double low = 0.0;
    double high = 1.0;
    friend bool operator==(const Uniform&, const Uniform&) = default;
};

using Distribution = std::variant<Gaussian, Uniform>;

/// `gaussian:<mean>:<std>` or `uniform:<low>:<high>`; InvalidInput otherwise,
/// including std <= 0 and low >= high.
Distribution parse_distribution(std::string_view text);
std::string format_distribution(const Distribution& d);

struct MatrixSet {
    std::vector<linalg::Matrix> matrices;
    std::uint64_t seed = 0;
    Distribution distribution;
};

/// Entries of matrix i are drawn row-major from CounterRng(seed, i). Gaussian
/// entries consume Box-Muller pairs in order (both values used); uniform
/// entries are low + (high - low) * unit.
MatrixSet generate_matrices(std::size_t count, std::size_t rows, std::size_t cols, const Distribution& d,
                            std::uint64_t seed);

enum class Source { Original, Inverse, Torus };

std::string_view source_name(Source s) noexcept;
Source parse_source(std::string_view name);

/// Points of common dimension stored contiguously.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, Source source) : dim_(dim), source_(source) {}

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    [[nodiscard]] bool empty() const noexcept { return coords_.empty(); }
    [[nodiscard]] Source source() const noexcept { return source_; }

    [[nodiscard]] std::span<const double> point(std::size_t i) const noexcept {
        return std::span<const double>(coords_).subspan(i * dim_, dim_);
    }
    [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }

    /// InvalidInput on dimension mismatch or non-finite coordinate.
    void push_back(std::span<const double> p);

    std::uint64_t seed = 0;
    /// Input indices dropped during construction (zero or singular matrices).
    std::vector<std::size_t> skipped;

private:
    std::size_t dim_ = 0;
    Source source_ = Source::Original;
    std::vector<double> coords_;
};

/// Row-major flattening scaled to unit Euclidean norm. Zero matrices are
/// skipped and listed in `skipped`; EmptyCloud if nothing remains.
PointCloud flatten_normalize(const MatrixSet& set);

/// Inverse of every member, then flatten_normalize. Numerically singular
/// members are skipped and listed; EmptyCloud if all are singular.
PointCloud inverse_cloud(const MatrixSet& set);

/// Angle-uniform torus sample ((a + b cos v) cos u, (a + b cos v) sin u, b sin v)
/// with u, v = 2 pi * unit from CounterRng(seed, i). Requires a > b > 0.
PointCloud sample_torus(std::size_t count, double a, double b, std::uint64_t seed);

enum class Tail { Lowest, Highest };

/// Keeps the ceil(fraction * count) members with the lowest (or highest)
/// condition numbers; singular members rank as infinitely ill-conditioned.
/// Ties keep the original order. Requires 0 < fraction <= 1.
MatrixSet select_by_condition(const MatrixSet& set, double fraction, Tail tail);

}  // namespace condkit::cloud
