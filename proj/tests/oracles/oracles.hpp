#pragma once

// Test-only reference implementations. Each one takes the slow, obvious route
// so that it shares no code path with the library routine it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "condkit/homology.hpp"
#include "condkit/linalg.hpp"
#include "condkit/metrics.hpp"

namespace condkit::oracle {

/// Plain triple loop u * diag(s) * v^T.
inline linalg::Matrix triple_product(const linalg::Matrix& u, const std::vector<double>& s, const linalg::Matrix& v) {
    linalg::Matrix out(u.rows(), v.rows());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < v.rows(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < s.size(); ++k) acc += u(i, k) * s[k] * v(j, k);
            out(i, j) = acc;
        }
    return out;
}

/// Adjugate over determinant for 3x3 matrices.
inline linalg::Matrix adjugate_inverse(const linalg::Matrix& a) {
    const auto m = [&](int r, int c) { return a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); };
    const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    linalg::Matrix inv(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            // cofactor of (c, r)
            const int r0 = (c + 1) % 3, r1 = (c + 2) % 3, c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            inv(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / det;
        }
    return inv;
}

/// Prim's algorithm on the dense distance matrix; sorted MST edge weights.
inline std::vector<double> mst_weights(const homology::DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<bool> in_tree(n, false);
    std::vector<double> weights;
    if (n == 0) return weights;
    best[0] = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v] && (u == n || best[v] < best[u])) u = v;
        in_tree[u] = true;
        if (step > 0) weights.push_back(best[u]);
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v]) best[v] = std::min(best[v], dm(u, v));
    }
    std::sort(weights.begin(), weights.end());
    return weights;
}

/// Vietoris-Rips persistence by explicit enumeration of every simplex up to
/// dimension max_dim + 1 and the textbook column reduction of the full
/// boundary matrix over Z/2 (no clearing, no cohomology, no shortcuts).
/// Simplices are ordered by (filtration value, dimension, lexicographic vertices).
inline std::vector<homology::PersistencePair> brute_force_rips(const homology::DistanceMatrix& dm, int max_dim,
                                                               double cap) {
    struct Simplex {
        std::vector<std::size_t> vertices;
        double value;
    };
    const std::size_t n = dm.size();
    std::vector<Simplex> simplices;
    std::function<void(std::vector<std::size_t>&, std::size_t)> grow = [&](std::vector<std::size_t>& current,
                                                                          std::size_t next) {
        if (!current.empty()) {
            double value = 0.0;
            for (std::size_t a = 0; a < current.size(); ++a)
                for (std::size_t b = a + 1; b < current.size(); ++b) value = std::max(value, dm(current[a], current[b]));
            if (value > cap) return;  // every coface has a value at least as large
            simplices.push_back({current, value});
        }
        if (current.size() == static_cast<std::size_t>(max_dim) + 2) return;
        for (std::size_t v = next; v < n; ++v) {
            current.push_back(v);
            grow(current, v + 1);
            current.pop_back();
        }
    };
    std::vector<std::size_t> scratch;
    grow(scratch, 0);
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });

    std::vector<std::vector<std::size_t>> columns(simplices.size());
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& s = simplices[j].vertices;
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) face.push_back(s[k]);
            for (std::size_t i = 0; i < j; ++i)
                if (simplices[i].vertices == face) {
                    columns[j].push_back(i);
                    break;
                }
        }
        std::sort(columns[j].begin(), columns[j].end());
    }

    // low -> column owning it
    std::vector<long> owner(simplices.size(), -1);
    std::vector<bool> negative(simplices.size(), false);
    std::vector<homology::PersistencePair> pairs;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty() && owner[col.back()] != -1) {
            const auto& other = columns[static_cast<std::size_t>(owner[col.back()])];
            std::vector<std::size_t> sum;
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(sum));
            col = std::move(sum);
        }
        if (!col.empty()) {
            owner[col.back()] = static_cast<long>(j);
            negative[j] = true;
            const auto& birth = simplices[col.back()];
            const int dim = static_cast<int>(birth.vertices.size()) - 1;
            if (simplices[j].value > birth.value) pairs.push_back({dim, birth.value, simplices[j].value});
        }
    }
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const int dim = static_cast<int>(simplices[i].vertices.size()) - 1;
        if (dim <= max_dim && !negative[i] && owner[i] == -1) pairs.push_back({dim, simplices[i].value, homology::kInfinity});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// Bottleneck distance by trying every partial injection of left points into
/// right points; unmatched points on either side go to the diagonal.
inline double exhaustive_bottleneck(const std::vector<metrics::DiagramPoint>& left,
                                    const std::vector<metrics::DiagramPoint>& right) {
    const auto diag = [](const metrics::DiagramPoint& p) { return (p.death - p.birth) / 2.0; };
    const auto cost = [](const metrics::DiagramPoint& a, const metrics::DiagramPoint& b) {
        return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> used(right.size(), false);
    std::function<void(std::size_t, double)> search = [&](std::size_t i, double worst) {
        if (worst >= best) return;
        if (i == left.size()) {
            for (std::size_t j = 0; j < right.size(); ++j)
                if (!used[j]) worst = std::max(worst, diag(right[j]));
            best = std::min(best, worst);
            return;
        }
        search(i + 1, std::max(worst, diag(left[i])));
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            search(i + 1, std::max(worst, cost(left[i], right[j])));
            used[j] = false;
        }
    };
    search(0, 0.0);
    return best;
}

}  // namespace condkit::oracle
