#include "condkit/homology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

namespace condkit::homology {

DistanceMatrix DistanceMatrix::from_full(std::size_t n, std::vector<double> table) {
    if (table.size() != n * n) throw Error(ErrorCode::InvalidInput, "distance table must have n*n entries");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i * n + i] != 0.0) throw Error(ErrorCode::InvalidInput, "distance diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            const double d = table[i * n + j];
            if (!std::isfinite(d) || d < 0.0) throw Error(ErrorCode::InvalidInput, "distances must be finite and >= 0");
            if (d != table[j * n + i]) throw Error(ErrorCode::InvalidInput, "distance table must be symmetric");
        }
    }
    DistanceMatrix dm;
    dm.n_ = n;
    dm.d_ = std::move(table);
    return dm;
}

DistanceMatrix DistanceMatrix::scaled(double s) const {
    DistanceMatrix out = *this;
    for (auto& d : out.d_) d *= s;
    return out;
}

DistanceMatrix pairwise_distances(const cloud::PointCloud& cloud) {
    if (cloud.empty()) throw Error(ErrorCode::InvalidInput, "empty point cloud");
    const std::size_t n = cloud.size();
    DistanceMatrix dm(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto q = cloud.point(j);
            double s = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k) {
                const double diff = p[k] - q[k];
                s += diff * diff;
            }
            dm.set(i, j, std::sqrt(s));
        }
    }
    return dm;
}

double enclosing_radius(const DistanceMatrix& dm) noexcept {
    double radius = kInfinity;
    for (std::size_t i = 0; i < dm.size(); ++i) {
        double far = 0.0;
        for (std::size_t j = 0; j < dm.size(); ++j) far = std::max(far, dm(i, j));
        radius = std::min(radius, far);
    }
    return dm.size() == 0 ? 0.0 : radius;
}

std::vector<PersistencePair> PersistenceDiagram::in_dimension(int dim) const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs)
        if (p.dimension == dim) out.push_back(p);
    return out;
}

namespace {

using Index = std::int64_t;

class BinomialTable {
public:
    BinomialTable(Index n, int k) : columns_(k + 1), table_(static_cast<std::size_t>((n + 1) * (k + 1)), 0) {
        for (Index i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min<Index>(i, k); ++j) at(i, j) = at(i - 1, j - 1) + (j < i ? at(i - 1, j) : 0);
        }
    }

    Index operator()(Index n, int k) const noexcept { return k > n ? 0 : table_[static_cast<std::size_t>(n * columns_ + k)]; }

private:
    Index& at(Index n, int k) noexcept { return table_[static_cast<std::size_t>(n * columns_ + k)]; }

    Index columns_;
    std::vector<Index> table_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void link(std::size_t x, std::size_t y) noexcept {
        if (rank_[x] > rank_[y]) std::swap(x, y);
        parent_[x] = y;
        if (rank_[x] == rank_[y]) ++rank_[y];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

struct Entry {
    double diameter;
    Index index;
};

// Heap top is the pivot: smallest diameter, largest index among ties.
struct PivotOrder {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
        return a.diameter > b.diameter || (a.diameter == b.diameter && a.index < b.index);
    }
};

using Heap = std::priority_queue<Entry, std::vector<Entry>, PivotOrder>;

// Pops the pivot of a Z/2 column, cancelling duplicate entries.
std::optional<Entry> pop_pivot(Heap& h) {
    if (h.empty()) return std::nullopt;
    Entry pivot = h.top();
    h.pop();
    while (!h.empty() && h.top().index == pivot.index) {
        h.pop();
        if (h.empty()) return std::nullopt;
        pivot = h.top();
        h.pop();
    }
    return pivot;
}

std::optional<Entry> get_pivot(Heap& h) {
    auto pivot = pop_pivot(h);
    if (pivot) h.push(*pivot);
    return pivot;
}

// Decreasing filtration order for columns: larger diameter first, then smaller index.
bool column_order(const Entry& a, const Entry& b) noexcept {
    return a.diameter > b.diameter || (a.diameter == b.diameter && a.index < b.index);
}

class RipsEngine {
public:
    RipsEngine(const DistanceMatrix& dm, int max_dim, double cap)
        : dm_(dm), n_(static_cast<Index>(dm.size())), max_dim_(max_dim), cap_(cap), binom_(n_, max_dim + 2) {}

    std::vector<PersistencePair> run() {
        std::vector<Entry> simplices;
        std::vector<Entry> columns;
        compute_dim0(simplices, columns);
        for (int dim = 1; dim <= max_dim_; ++dim) {
            std::unordered_map<Index, std::size_t> pivots;
            compute_pairs(columns, dim, pivots);
            if (dim < max_dim_) assemble_next(simplices, columns, dim, pivots);
        }
        return std::move(pairs_);
    }

private:
    class CoboundaryEnumerator {
    public:
        CoboundaryEnumerator(const RipsEngine& engine, const Entry& simplex, int dim)
            : engine_(engine), simplex_(simplex), idx_below_(simplex.index), v_(engine.n_ - 1), k_(dim + 1) {
            engine.vertices_of(simplex.index, dim, vertices_);
        }

        [[nodiscard]] bool has_next(bool all_cofacets = true) const noexcept {
            return v_ >= k_ && (all_cofacets || engine_.binom_(v_, k_) > idx_below_);
        }

        Entry next() noexcept {
            while (engine_.binom_(v_, k_) <= idx_below_) {
                idx_below_ -= engine_.binom_(v_, k_);
                idx_above_ += engine_.binom_(v_, k_ + 1);
                --v_;
                --k_;
            }
            double diameter = simplex_.diameter;
            for (Index w : vertices_)
                diameter = std::max(diameter, engine_.dm_(static_cast<std::size_t>(v_), static_cast<std::size_t>(w)));
            const Index index = idx_above_ + engine_.binom_(v_, k_ + 1) + idx_below_;
            --v_;
            return {diameter, index};
        }

    private:
        const RipsEngine& engine_;
        Entry simplex_;
        Index idx_below_;
        Index idx_above_ = 0;
        Index v_;
        int k_;
        std::vector<Index> vertices_;
    };

    // Largest v in [k - 1, top] with C(v, k) <= idx.
    Index max_vertex(Index idx, int k, Index top) const noexcept {
        Index lo = k - 1;
        while (lo < top) {
            const Index mid = lo + (top - lo + 1) / 2;
            if (binom_(mid, k) <= idx) lo = mid;
            else top = mid - 1;
        }
        return lo;
    }

    void vertices_of(Index idx, int dim, std::vector<Index>& out) const {
        out.clear();
        Index top = n_ - 1;
        for (int k = dim + 1; k >= 1; --k) {
            const Index v = max_vertex(idx, k, top);
            out.push_back(v);
            idx -= binom_(v, k);
            top = v - 1;
        }
    }

    void emit(int dim, double birth, double death) {
        if (death > birth) pairs_.push_back({dim, birth, death});
    }

    void compute_dim0(std::vector<Entry>& edges, std::vector<Entry>& columns) {
        for (Index j = 1; j < n_; ++j)
            for (Index i = 0; i < j; ++i) {
                const double d = dm_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (d <= cap_) edges.push_back({d, binom_(j, 2) + i});
            }
        std::sort(edges.begin(), edges.end(), [](const Entry& a, const Entry& b) { return column_order(b, a); });

        UnionFind uf(static_cast<std::size_t>(n_));
        std::vector<Index> vs;
        for (const Entry& e : edges) {
            vertices_of(e.index, 1, vs);
            const std::size_t u = uf.find(static_cast<std::size_t>(vs[0]));
            const std::size_t v = uf.find(static_cast<std::size_t>(vs[1]));
            if (u != v) {
                uf.link(u, v);
                emit(0, 0.0, e.diameter);
            } else {
                columns.push_back(e);
            }
        }
        std::reverse(columns.begin(), columns.end());
        for (Index i = 0; i < n_; ++i)
            if (uf.find(static_cast<std::size_t>(i)) == static_cast<std::size_t>(i)) emit(0, 0.0, kInfinity);
        if (max_dim_ < 2) edges.clear();
    }

    void push_coboundary(const Entry& simplex, int dim, Heap& coboundary) const {
        CoboundaryEnumerator cofacets(*this, simplex, dim);
        while (cofacets.has_next()) {
            const Entry c = cofacets.next();
            if (c.diameter <= cap_) coboundary.push(c);
        }
    }

    std::optional<Entry> init_coboundary(const Entry& simplex, int dim, Heap& coboundary,
                                         const std::unordered_map<Index, std::size_t>& pivots) {
        bool check_emergent = true;
        scratch_.clear();
        CoboundaryEnumerator cofacets(*this, simplex, dim);
        while (cofacets.has_next()) {
            const Entry c = cofacets.next();
            if (c.diameter > cap_) continue;
            scratch_.push_back(c);
            // The first equal-diameter cofacet is the pivot of the unreduced
            // column; if nobody owns it yet, the pair is apparent.
            if (check_emergent && c.diameter == simplex.diameter) {
                if (!pivots.contains(c.index)) return c;
                check_emergent = false;
            }
        }
        for (const Entry& c : scratch_) coboundary.push(c);
        return get_pivot(coboundary);
    }

    void compute_pairs(const std::vector<Entry>& columns, int dim, std::unordered_map<Index, std::size_t>& pivots) {
        pivots.reserve(columns.size());
        std::vector<std::vector<Entry>> reductions(columns.size());
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const Entry& column = columns[i];
            Heap reduction;
            Heap coboundary;
            auto pivot = init_coboundary(column, dim, coboundary, pivots);
            while (true) {
                if (!pivot) {
                    emit(dim, column.diameter, kInfinity);
                    break;
                }
                const auto owner = pivots.find(pivot->index);
                if (owner == pivots.end()) {
                    emit(dim, column.diameter, pivot->diameter);
                    pivots.emplace(pivot->index, i);
                    while (auto e = pop_pivot(reduction)) reductions[i].push_back(*e);
                    break;
                }
                const std::size_t j = owner->second;
                reduction.push(columns[j]);
                push_coboundary(columns[j], dim, coboundary);
                for (const Entry& e : reductions[j]) {
                    reduction.push(e);
                    push_coboundary(e, dim, coboundary);
                }
                pivot = get_pivot(coboundary);
            }
        }
    }

    void assemble_next(std::vector<Entry>& simplices, std::vector<Entry>& columns, int dim,
                       const std::unordered_map<Index, std::size_t>& pivots) {
        std::vector<Entry> next;
        columns.clear();
        for (const Entry& s : simplices) {
            CoboundaryEnumerator cofacets(*this, s, dim);
            while (cofacets.has_next(false)) {
                const Entry c = cofacets.next();
                if (c.diameter > cap_) continue;
                next.push_back(c);
                if (!pivots.contains(c.index)) columns.push_back(c);
            }
        }
        std::sort(columns.begin(), columns.end(), column_order);
        simplices = std::move(next);
    }

    const DistanceMatrix& dm_;
    Index n_;
    int max_dim_;
    double cap_;
    BinomialTable binom_;
    std::vector<Entry> scratch_;
    std::vector<PersistencePair> pairs_;
};

void sort_pairs(std::vector<PersistencePair>& pairs) { std::sort(pairs.begin(), pairs.end()); }

}  // namespace

std::vector<PersistencePair> h0_persistence(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    struct Edge {
        double d;
        std::size_t i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({dm(i, j), i, j});
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.d < b.d; });

    UnionFind uf(n);
    std::vector<PersistencePair> out;
    for (const Edge& e : edges) {
        const std::size_t u = uf.find(e.i);
        const std::size_t v = uf.find(e.j);
        if (u == v) continue;
        uf.link(u, v);
        if (e.d > 0.0) out.push_back({0, 0.0, e.d});
    }
    if (n > 0) out.push_back({0, 0.0, kInfinity});
    sort_pairs(out);
    return out;
}

std::uint64_t count_simplices(const DistanceMatrix& dm, int max_dim, double cap, std::uint64_t limit) {
    const std::size_t n = dm.size();
    std::uint64_t count = n;
    if (count > limit || max_dim < 1) return count;
    std::vector<std::vector<std::size_t>> higher(n);  // neighbours j > i within the cap
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dm(i, j) <= cap) higher[i].push_back(j);
    for (const auto& h : higher) count += h.size();
    if (count > limit || max_dim < 2) return count;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < higher[i].size(); ++a)
            for (std::size_t b = a + 1; b < higher[i].size(); ++b) {
                if (dm(higher[i][a], higher[i][b]) <= cap && ++count > limit) return count;
            }
    return count;
}

PersistenceDiagram rips_persistence(const DistanceMatrix& dm, const RipsOptions& options) {
    if (options.max_dim < 1 || options.max_dim > 2) throw Error(ErrorCode::InvalidInput, "max_dim must be 1 or 2");
    if (dm.size() == 0) throw Error(ErrorCode::InvalidInput, "empty distance matrix");
    if (options.cap && !(*options.cap > 0.0)) throw Error(ErrorCode::InvalidInput, "filtration cap must be > 0");
    const double cap = options.cap.value_or(enclosing_radius(dm));

    const std::uint64_t count = count_simplices(dm, options.max_dim, cap, options.simplex_budget);
    if (count > options.simplex_budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "more than " + std::to_string(options.simplex_budget) + " simplices of dimension <= " +
                        std::to_string(options.max_dim) + " below cap " + std::to_string(cap) +
                        " (counted " + std::to_string(count) + " before stopping); lower the cap or max_dim");
    }

    PersistenceDiagram diagram;
    diagram.max_dimension = options.max_dim;
    diagram.filtration_cap = cap;
    diagram.pairs = RipsEngine(dm, options.max_dim, cap).run();
    sort_pairs(diagram.pairs);
    return diagram;
}

std::vector<std::vector<PersistencePair>> barcodes(const PersistenceDiagram& diagram) {
    std::vector<std::vector<PersistencePair>> out(static_cast<std::size_t>(std::max(diagram.max_dimension, 0) + 1));
    for (const auto& p : diagram.pairs)
        if (p.dimension >= 0 && p.dimension <= diagram.max_dimension) out[static_cast<std::size_t>(p.dimension)].push_back(p);
    for (auto& bars : out)
        std::stable_sort(bars.begin(), bars.end(), [](const PersistencePair& a, const PersistencePair& b) {
            return a.birth < b.birth || (a.birth == b.birth && a.death < b.death);
        });
    return out;
}

}  // namespace condkit::homology
