#include "condkit/cloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "condkit/format.hpp"

namespace condkit::cloud {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

double parse_number(std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidInput, "bad number '" + std::string(text) + "'");
    }
    return v;
}

void validate(const Distribution& d) {
    if (const auto* g = std::get_if<Gaussian>(&d)) {
        if (!std::isfinite(g->mean) || !std::isfinite(g->stddev) || !(g->stddev > 0.0)) {
            throw Error(ErrorCode::InvalidInput, "gaussian needs a finite mean and std > 0");
        }
    } else {
        const auto& u = std::get<Uniform>(d);
        if (!std::isfinite(u.low) || !std::isfinite(u.high) || !(u.low < u.high)) {
            throw Error(ErrorCode::InvalidInput, "uniform needs finite low < high");
        }
    }
}

void append_flattened(PointCloud& cloud, const linalg::Matrix& m, std::size_t index) {
    const double norm = m.frobenius_norm();
    if (norm == 0.0) {
        cloud.skipped.push_back(index);
        return;
    }
    std::vector<double> p(m.entries().begin(), m.entries().end());
    for (auto& x : p) x /= norm;
    cloud.push_back(p);
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64_mix(seed + kGolden) ^ splitmix64_mix(stream * kGolden + 0x632BE59BD9B4E019ULL);
}

std::uint64_t CounterRng::next_u64() noexcept {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * kGolden);
}

double CounterRng::next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::pair<double, double> CounterRng::next_gaussian_pair() noexcept {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

Distribution parse_distribution(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw Error(ErrorCode::InvalidInput, "distribution must be gaussian:<mean>:<std> or uniform:<low>:<high>");
    }
    const auto kind = text.substr(0, first);
    const double p1 = parse_number(text.substr(first + 1, second - first - 1));
    const double p2 = parse_number(text.substr(second + 1));
    Distribution d;
    if (kind == "gaussian") {
        d = Gaussian{p1, p2};
    } else if (kind == "uniform") {
        d = Uniform{p1, p2};
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown distribution '" + std::string(kind) + "'");
    }
    validate(d);
    return d;
}

std::string format_distribution(const Distribution& d) {
    if (const auto* g = std::get_if<Gaussian>(&d)) {
        return "gaussian:" + format::shortest(g->mean) + ":" + format::shortest(g->stddev);
    }
    const auto& u = std::get<Uniform>(d);
    return "uniform:" + format::shortest(u.low) + ":" + format::shortest(u.high);
}

MatrixSet generate_matrices(std::size_t count, std::size_t rows, std::size_t cols, const Distribution& d,
                            std::uint64_t seed) {
    if (count == 0) throw Error(ErrorCode::InvalidInput, "count must be >= 1");
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidInput, "shape must be positive");
    validate(d);

    MatrixSet set;
    set.seed = seed;
    set.distribution = d;
    set.matrices.reserve(count);
    const std::size_t size = rows * cols;
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed, i);
        std::vector<double> entries(size);
        if (const auto* g = std::get_if<Gaussian>(&d)) {
            for (std::size_t k = 0; k < size; k += 2) {
                const auto [z0, z1] = rng.next_gaussian_pair();
                entries[k] = g->mean + g->stddev * z0;
                if (k + 1 < size) entries[k + 1] = g->mean + g->stddev * z1;
            }
        } else {
            const auto& u = std::get<Uniform>(d);
            for (auto& e : entries) e = u.low + (u.high - u.low) * rng.next_unit();
        }
        set.matrices.emplace_back(rows, cols, std::move(entries));
    }
    return set;
}

std::string_view source_name(Source s) noexcept {
    switch (s) {
        case Source::Original: return "original";
        case Source::Inverse: return "inverse";
        case Source::Torus: return "torus";
    }
    return "";
}

Source parse_source(std::string_view name) {
    for (Source s : {Source::Original, Source::Inverse, Source::Torus})
        if (source_name(s) == name) return s;
    throw Error(ErrorCode::InvalidInput, "unknown cloud source '" + std::string(name) + "'");
}

void PointCloud::push_back(std::span<const double> p) {
    if (p.size() != dim_) {
        throw Error(ErrorCode::InvalidInput, "point of dimension " + std::to_string(p.size()) + " in a cloud of dimension " +
                                                 std::to_string(dim_));
    }
    if (!std::all_of(p.begin(), p.end(), [](double x) { return std::isfinite(x); })) {
        throw Error(ErrorCode::InvalidInput, "non-finite point coordinate");
    }
    coords_.insert(coords_.end(), p.begin(), p.end());
}

PointCloud flatten_normalize(const MatrixSet& set) {
    if (set.matrices.empty()) throw Error(ErrorCode::EmptyCloud, "empty matrix set");
    const auto& first = set.matrices.front();
    PointCloud cloud(first.rows() * first.cols(), Source::Original);
    cloud.seed = set.seed;
    for (std::size_t i = 0; i < set.matrices.size(); ++i) append_flattened(cloud, set.matrices[i], i);
    if (cloud.empty()) throw Error(ErrorCode::EmptyCloud, "every matrix in the set is zero");
    return cloud;
}

PointCloud inverse_cloud(const MatrixSet& set) {
    if (set.matrices.empty()) throw Error(ErrorCode::EmptyCloud, "empty matrix set");
    const auto& first = set.matrices.front();
    if (!first.is_square()) throw Error(ErrorCode::InvalidInput, "inverse cloud needs square matrices");
    PointCloud cloud(first.rows() * first.cols(), Source::Inverse);
    cloud.seed = set.seed;
    for (std::size_t i = 0; i < set.matrices.size(); ++i) {
        try {
            append_flattened(cloud, linalg::inverse(set.matrices[i]), i);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularMatrix) throw;
            cloud.skipped.push_back(i);
        }
    }
    if (cloud.empty()) throw Error(ErrorCode::EmptyCloud, "every matrix in the set is singular");
    return cloud;
}

PointCloud sample_torus(std::size_t count, double a, double b, std::uint64_t seed) {
    if (count == 0) throw Error(ErrorCode::InvalidInput, "count must be >= 1");
    if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) throw Error(ErrorCode::InvalidInput, "torus needs a > b > 0");
    PointCloud cloud(3, Source::Torus);
    cloud.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed, i);
        const double u = 2.0 * std::numbers::pi * rng.next_unit();
        const double v = 2.0 * std::numbers::pi * rng.next_unit();
        const double ring = a + b * std::cos(v);
        const double p[3] = {ring * std::cos(u), ring * std::sin(u), b * std::sin(v)};
        cloud.push_back(p);
    }
    return cloud;
}

MatrixSet select_by_condition(const MatrixSet& set, double fraction, Tail tail) {
    if (!(fraction > 0.0) || fraction > 1.0) throw Error(ErrorCode::InvalidInput, "fraction must lie in (0, 1]");
    if (set.matrices.empty()) throw Error(ErrorCode::EmptyCloud, "empty matrix set");
    std::vector<double> kappa(set.matrices.size());
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        const auto s = linalg::spectral_summary(set.matrices[i]);
        kappa[i] = s.kappa.value_or(std::numeric_limits<double>::infinity());
    }
    std::vector<std::size_t> order(kappa.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return tail == Tail::Lowest ? kappa[x] < kappa[y] : kappa[x] > kappa[y];
    });
    const auto keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(kappa.size())));
    order.resize(std::max<std::size_t>(keep, 1));
    std::sort(order.begin(), order.end());

    MatrixSet out;
    out.seed = set.seed;
    out.distribution = set.distribution;
    for (std::size_t i : order) out.matrices.push_back(set.matrices[i]);
    return out;
}

}  // namespace condkit::cloud
