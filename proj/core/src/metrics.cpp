#include "condkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace condkit::metrics {

namespace {

double linf(const DiagramPoint& a, const DiagramPoint& b) noexcept {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double to_diagonal(const DiagramPoint& p) noexcept { return (p.death - p.birth) / 2.0; }

// Hopcroft-Karp on the threshold graph. Left vertices are the left points
// followed by diagonal copies of the right points; right vertices are the
// right points followed by diagonal copies of the left points.
class ThresholdMatcher {
public:
    ThresholdMatcher(std::span<const DiagramPoint> left, std::span<const DiagramPoint> right)
        : left_(left), right_(right), size_(left.size() + right.size()) {}

    bool perfect(double t) {
        build(t);
        match_left_.assign(size_, kFree);
        match_right_.assign(size_, kFree);
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < size_; ++u)
                if (match_left_[u] == kFree && dfs(u)) ++matched;
        }
        return matched == size_;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    void build(double t) {
        const std::size_t nl = left_.size();
        const std::size_t nr = right_.size();
        adj_.assign(size_, {});
        for (std::size_t i = 0; i < nl; ++i) {
            for (std::size_t j = 0; j < nr; ++j)
                if (linf(left_[i], right_[j]) <= t) adj_[i].push_back(j);
            if (to_diagonal(left_[i]) <= t) adj_[i].push_back(nr + i);
        }
        for (std::size_t j = 0; j < nr; ++j) {
            auto& row = adj_[nl + j];
            if (to_diagonal(right_[j]) <= t) row.push_back(j);
            for (std::size_t i = 0; i < nl; ++i) row.push_back(nr + i);
        }
    }

    bool bfs() {
        dist_.assign(size_, kFree);
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < size_; ++u)
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                q.push(u);
            }
        bool reachable_free = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    reachable_free = true;
                } else if (dist_[w] == kFree) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kFree;
        return false;
    }

    std::span<const DiagramPoint> left_;
    std::span<const DiagramPoint> right_;
    std::size_t size_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_, match_right_, dist_;
};

}  // namespace

double bottleneck_finite(std::span<const DiagramPoint> left, std::span<const DiagramPoint> right) {
    if (left.empty() && right.empty()) return 0.0;

    std::vector<double> candidates{0.0};
    for (const auto& p : left) candidates.push_back(to_diagonal(p));
    for (const auto& q : right) candidates.push_back(to_diagonal(q));
    for (const auto& p : left)
        for (const auto& q : right) candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Matching everything to the diagonal is always feasible at the largest
    // diagonal cost, so the last candidate is feasible.
    ThresholdMatcher matcher(left, right);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.perfect(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return candidates[lo];
}

double bottleneck_distance(std::span<const homology::PersistencePair> a, std::span<const homology::PersistencePair> b,
                           int dimension) {
    std::vector<DiagramPoint> fa, fb;
    std::vector<double> ia, ib;
    const auto split = [dimension](std::span<const homology::PersistencePair> pairs, std::vector<DiagramPoint>& finite,
                                   std::vector<double>& infinite) {
        for (const auto& p : pairs) {
            if (p.dimension != dimension) continue;
            if (p.infinite()) infinite.push_back(p.birth);
            else finite.push_back({p.birth, p.death});
        }
        std::sort(infinite.begin(), infinite.end());
    };
    split(a, fa, ia);
    split(b, fb, ib);
    if (ia.size() != ib.size()) return std::numeric_limits<double>::infinity();
    double d = bottleneck_finite(fa, fb);
    for (std::size_t k = 0; k < ia.size(); ++k) d = std::max(d, std::abs(ia[k] - ib[k]));
    return d;
}

double bottleneck_distance(const homology::PersistenceDiagram& a, const homology::PersistenceDiagram& b, int dimension) {
    return bottleneck_distance(std::span<const homology::PersistencePair>(a.pairs),
                               std::span<const homology::PersistencePair>(b.pairs), dimension);
}

}  // namespace condkit::metrics
