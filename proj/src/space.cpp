/**
 * Space construction, deterministic enumeration, metric evaluation, and
 * neighbor iteration for every builtin kind.
 */

#include "coarse/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "coarse/errors.hpp"

namespace coarse {

namespace {
constexpr std::int64_t kMaxPoints = 3'000'000;
constexpr std::int64_t kMaxBoxCells = 20'000'000;
}  // namespace

struct Space::Data {
    SpaceKind kind;
    GridMetric metric = GridMetric::LInf;
    int max_window = 0;
    bool path = true;
    std::vector<int> dist;

    // Grid.
    int dim = 0;
    std::vector<std::int32_t> coords;      // dim entries per point
    std::vector<PointId> box_index;        // full box lookup, -1 for holes
    std::vector<std::int64_t> stride;

    // Free group.
    int gens = 0;
    std::vector<std::int8_t> letter;
    std::vector<PointId> parent;
    std::vector<PointId> child_begin;
    std::vector<PointId> child_end;

    // Dihedral.
    std::vector<std::int32_t> dh_t;
    std::vector<std::int8_t> dh_flip;

    // Table.
    std::vector<std::vector<int>> table;
    std::vector<int> table_label;          // original input index per id

    // Disjoint union and product.
    std::vector<Space> parts;
    std::vector<std::int8_t> side;
    std::vector<PointId> sub;
    std::vector<PointId> du_id;            // left ids then right ids -> universe id
    std::vector<PointId> sub_l;
    std::vector<PointId> sub_r;
    std::vector<PointId> pair_id;          // sub_l * right_size + sub_r -> id
};

namespace {

using Data = Space::Data;

int checked_window(int max_window) {
    if (max_window < 1) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "max_window must be >= 1");
    }
    return max_window;
}

std::int64_t box_linear(const Data& d, const std::int32_t* c) {
    std::int64_t idx = 0;
    for (int a = 0; a < d.dim; ++a) {
        idx += (static_cast<std::int64_t>(c[a]) + d.max_window) * d.stride[a];
    }
    return idx;
}

int grid_norm(const Data& d, const std::int32_t* c) {
    int v = 0;
    if (d.metric == GridMetric::LInf) {
        for (int a = 0; a < d.dim; ++a) v = std::max(v, std::abs(c[a]));
    } else {
        for (int a = 0; a < d.dim; ++a) v += std::abs(c[a]);
    }
    return v;
}

}  // namespace

Space Space::zplus(int max_window) {
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::ZPlus;
    d->max_window = checked_window(max_window);
    d->dist.resize(static_cast<std::size_t>(max_window) + 1);
    for (int i = 0; i <= max_window; ++i) d->dist[static_cast<std::size_t>(i)] = i;
    return Space(std::move(d));
}

Space Space::zn(int dim, GridMetric metric, int max_window) {
    if (dim < 1 || dim > 8) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "zn dimension must be in [1, 8]");
    }
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::Grid;
    d->metric = metric;
    d->max_window = checked_window(max_window);
    d->dim = dim;

    const std::int64_t span = 2LL * max_window + 1;
    std::int64_t box = 1;
    for (int a = 0; a < dim; ++a) {
        box *= span;
        if (box > kMaxBoxCells) {
            throw CoarseError(ErrorCode::ParamOutOfRange, "zn window too large to materialize");
        }
    }
    d->stride.assign(static_cast<std::size_t>(dim), 1);
    for (int a = dim - 2; a >= 0; --a) d->stride[static_cast<std::size_t>(a)] = d->stride[static_cast<std::size_t>(a) + 1] * span;

    std::vector<std::int32_t> cursor(static_cast<std::size_t>(dim), static_cast<std::int32_t>(-max_window));
    std::vector<std::vector<std::int32_t>> pts;
    bool done = false;
    while (!done) {
        int norm = grid_norm(*d, cursor.data());
        if (norm <= max_window) {
            pts.emplace_back(cursor);
            if (static_cast<std::int64_t>(pts.size()) > kMaxPoints) {
                throw CoarseError(ErrorCode::ParamOutOfRange, "zn window exceeds the point budget");
            }
        }
        int a = dim - 1;
        while (a >= 0) {
            if (cursor[static_cast<std::size_t>(a)] < max_window) {
                ++cursor[static_cast<std::size_t>(a)];
                break;
            }
            cursor[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(-max_window);
            --a;
        }
        if (a < 0) done = true;
    }
    std::sort(pts.begin(), pts.end(), [&](const auto& x, const auto& y) {
        int nx = grid_norm(*d, x.data());
        int ny = grid_norm(*d, y.data());
        if (nx != ny) return nx < ny;
        return x < y;
    });

    const PointId n = static_cast<PointId>(pts.size());
    d->coords.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(dim));
    d->dist.resize(static_cast<std::size_t>(n));
    d->box_index.assign(static_cast<std::size_t>(box), -1);
    for (PointId i = 0; i < n; ++i) {
        const auto& c = pts[static_cast<std::size_t>(i)];
        std::copy(c.begin(), c.end(), d->coords.begin() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim));
        d->dist[static_cast<std::size_t>(i)] = grid_norm(*d, c.data());
        d->box_index[static_cast<std::size_t>(box_linear(*d, c.data()))] = i;
    }
    return Space(std::move(d));
}

Space Space::free_group(int generators, int max_window) {
    if (generators < 1 || generators > 4) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "free_group generators must be in [1, 4]");
    }
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::FreeGroup;
    d->max_window = checked_window(max_window);
    d->gens = generators;

    d->letter.push_back(-1);
    d->parent.push_back(-1);
    d->dist.push_back(0);
    PointId level_begin = 0;
    PointId level_end = 1;
    for (int length = 1; length <= max_window; ++length) {
        for (PointId w = level_begin; w < level_end; ++w) {
            d->child_begin.resize(static_cast<std::size_t>(w) + 1);
            d->child_end.resize(static_cast<std::size_t>(w) + 1);
            d->child_begin[static_cast<std::size_t>(w)] = static_cast<PointId>(d->letter.size());
            for (int l = 0; l < 2 * generators; ++l) {
                if (d->letter[static_cast<std::size_t>(w)] >= 0 && (d->letter[static_cast<std::size_t>(w)] ^ 1) == l) continue;
                d->letter.push_back(static_cast<std::int8_t>(l));
                d->parent.push_back(w);
                d->dist.push_back(length);
                if (static_cast<std::int64_t>(d->letter.size()) > kMaxPoints) {
                    throw CoarseError(ErrorCode::ParamOutOfRange, "free_group window exceeds the point budget");
                }
            }
            d->child_end[static_cast<std::size_t>(w)] = static_cast<PointId>(d->letter.size());
        }
        level_begin = level_end;
        level_end = static_cast<PointId>(d->letter.size());
    }
    d->child_begin.resize(d->letter.size(), static_cast<PointId>(d->letter.size()));
    d->child_end.resize(d->letter.size(), static_cast<PointId>(d->letter.size()));
    return Space(std::move(d));
}

namespace {

// Word length in the two-reflection generating set a: x -> -x, b: x -> 1-x.
int dihedral_length(long long t, int flip) {
    if (flip == 0) return static_cast<int>(2 * std::llabs(t));
    return t > 0 ? static_cast<int>(2 * t - 1) : static_cast<int>(2 * (-t) + 1);
}

}  // namespace

Space Space::dihedral_infinity(int max_window) {
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::DihedralInf;
    d->max_window = checked_window(max_window);
    d->dh_t.push_back(0);
    d->dh_flip.push_back(0);
    d->dist.push_back(0);
    for (int length = 1; length <= max_window; ++length) {
        long long m = length / 2;
        std::pair<long long, int> a, b;
        if (length % 2 == 0) {
            a = {-m, 0};
            b = {m, 0};
        } else {
            a = {-m, 1};
            b = {m + 1, 1};
        }
        for (auto [t, f] : {a, b}) {
            d->dh_t.push_back(static_cast<std::int32_t>(t));
            d->dh_flip.push_back(static_cast<std::int8_t>(f));
            d->dist.push_back(length);
        }
    }
    return Space(std::move(d));
}

Space Space::from_table(const std::vector<std::vector<int>>& dist, int max_window) {
    const std::size_t n = dist.size();
    if (n == 0) throw CoarseError(ErrorCode::InvalidParameter, "distance table is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) throw CoarseError(ErrorCode::InvalidParameter, "distance table is not square");
        if (dist[i][i] != 0) throw CoarseError(ErrorCode::InvalidParameter, "distance table diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j] < 0) throw CoarseError(ErrorCode::InvalidParameter, "distance table has a negative entry");
            if (dist[i][j] != dist[j][i]) throw CoarseError(ErrorCode::InvalidParameter, "distance table is not symmetric");
            if (i != j && dist[i][j] == 0) throw CoarseError(ErrorCode::InvalidParameter, "distinct points at distance zero");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist[i][j] > dist[i][k] + dist[k][j]) {
                    throw CoarseError(ErrorCode::InvalidParameter, "distance table violates the triangle inequality");
                }

    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::Table;
    d->max_window = checked_window(max_window);
    d->path = false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return dist[0][static_cast<std::size_t>(a)] < dist[0][static_cast<std::size_t>(b)];
    });
    if (dist[0][static_cast<std::size_t>(order.back())] > max_window) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "table point lies outside max_window");
    }
    d->table.assign(n, std::vector<int>(n, 0));
    d->table_label.resize(n);
    d->dist.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d->table_label[i] = order[i];
        d->dist[i] = dist[0][static_cast<std::size_t>(order[i])];
        for (std::size_t j = 0; j < n; ++j) {
            d->table[i][j] = dist[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])];
        }
    }
    return Space(std::move(d));
}

Space Space::disjoint_union(const Space& left, const Space& right) {
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::DisjointUnion;
    d->max_window = std::min(left.max_window(), right.max_window() + 1);
    d->path = left.path_metric() && right.path_metric();
    d->parts.push_back(left);
    d->parts.push_back(right);

    const PointId nl = left.size();
    const PointId nr = right.size();
    if (static_cast<std::int64_t>(nl) + nr > kMaxPoints) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "disjoint_union exceeds the point budget");
    }
    d->du_id.assign(static_cast<std::size_t>(nl) + static_cast<std::size_t>(nr), -1);
    PointId li = 0;
    PointId ri = 0;
    while (li < nl || ri < nr) {
        int ld = li < nl ? left.dist_to_base(li) : -1;
        int rd = ri < nr ? right.dist_to_base(ri) + 1 : -1;
        bool take_left;
        if (li >= nl || ld > d->max_window) {
            if (ri >= nr || rd > d->max_window) break;
            take_left = false;
        } else if (ri >= nr || rd > d->max_window) {
            take_left = true;
        } else {
            take_left = ld <= rd;
        }
        if (take_left) {
            if (ld <= d->max_window) {
                d->du_id[static_cast<std::size_t>(li)] = static_cast<PointId>(d->dist.size());
                d->side.push_back(0);
                d->sub.push_back(li);
                d->dist.push_back(ld);
            }
            ++li;
        } else {
            if (rd <= d->max_window) {
                d->du_id[static_cast<std::size_t>(nl) + static_cast<std::size_t>(ri)] = static_cast<PointId>(d->dist.size());
                d->side.push_back(1);
                d->sub.push_back(ri);
                d->dist.push_back(rd);
            }
            ++ri;
        }
    }
    return Space(std::move(d));
}

Space Space::product(const Space& left, const Space& right) {
    auto d = std::make_shared<Data>();
    d->kind = SpaceKind::Product;
    d->max_window = std::min(left.max_window(), right.max_window());
    d->path = left.path_metric() && right.path_metric();
    d->parts.push_back(left);
    d->parts.push_back(right);

    const PointId nl = left.window_size(d->max_window);
    const PointId nr = right.window_size(d->max_window);
    if (static_cast<std::int64_t>(nl) * nr > kMaxPoints) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "product exceeds the point budget");
    }
    struct Entry {
        int dist;
        PointId a;
        PointId b;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(nl) * static_cast<std::size_t>(nr));
    for (PointId a = 0; a < nl; ++a) {
        for (PointId b = 0; b < nr; ++b) {
            entries.push_back({std::max(left.dist_to_base(a), right.dist_to_base(b)), a, b});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.dist != y.dist) return x.dist < y.dist;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    d->pair_id.assign(static_cast<std::size_t>(nl) * static_cast<std::size_t>(nr), -1);
    d->sub_l.reserve(entries.size());
    d->sub_r.reserve(entries.size());
    d->dist.reserve(entries.size());
    for (const Entry& e : entries) {
        d->pair_id[static_cast<std::size_t>(e.a) * static_cast<std::size_t>(nr) + static_cast<std::size_t>(e.b)] =
            static_cast<PointId>(d->dist.size());
        d->sub_l.push_back(e.a);
        d->sub_r.push_back(e.b);
        d->dist.push_back(e.dist);
    }
    return Space(std::move(d));
}

SpaceKind Space::kind() const { return data_->kind; }
int Space::max_window() const { return data_->max_window; }
PointId Space::size() const { return static_cast<PointId>(data_->dist.size()); }
int Space::dist_to_base(PointId x) const { return data_->dist[static_cast<std::size_t>(x)]; }
bool Space::path_metric() const { return data_->path; }

PointId Space::window_size(int w) const {
    if (w > data_->max_window) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "window exceeds max_window");
    }
    auto it = std::upper_bound(data_->dist.begin(), data_->dist.end(), w);
    return static_cast<PointId>(it - data_->dist.begin());
}

int Space::distance(PointId a, PointId b) const {
    const Data& d = *data_;
    switch (d.kind) {
        case SpaceKind::ZPlus:
            return std::abs(a - b);
        case SpaceKind::Grid: {
            const std::int32_t* ca = d.coords.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(d.dim);
            const std::int32_t* cb = d.coords.data() + static_cast<std::size_t>(b) * static_cast<std::size_t>(d.dim);
            int v = 0;
            if (d.metric == GridMetric::LInf) {
                for (int i = 0; i < d.dim; ++i) v = std::max(v, std::abs(ca[i] - cb[i]));
            } else {
                for (int i = 0; i < d.dim; ++i) v += std::abs(ca[i] - cb[i]);
            }
            return v;
        }
        case SpaceKind::FreeGroup: {
            PointId x = a;
            PointId y = b;
            int extra = 0;
            while (d.dist[static_cast<std::size_t>(x)] > d.dist[static_cast<std::size_t>(y)]) {
                x = d.parent[static_cast<std::size_t>(x)];
                ++extra;
            }
            while (d.dist[static_cast<std::size_t>(y)] > d.dist[static_cast<std::size_t>(x)]) {
                y = d.parent[static_cast<std::size_t>(y)];
                ++extra;
            }
            while (x != y) {
                x = d.parent[static_cast<std::size_t>(x)];
                y = d.parent[static_cast<std::size_t>(y)];
                extra += 2;
            }
            return extra;
        }
        case SpaceKind::DihedralInf: {
            long long m = d.dh_t[static_cast<std::size_t>(a)];
            int e = d.dh_flip[static_cast<std::size_t>(a)];
            long long n = d.dh_t[static_cast<std::size_t>(b)];
            int f = d.dh_flip[static_cast<std::size_t>(b)];
            long long t = (e == 0) ? (n - m) : (m - n);
            return dihedral_length(t, e ^ f);
        }
        case SpaceKind::Table:
            return d.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        case SpaceKind::DisjointUnion: {
            int sa = d.side[static_cast<std::size_t>(a)];
            int sb = d.side[static_cast<std::size_t>(b)];
            if (sa == sb) {
                return d.parts[static_cast<std::size_t>(sa)].distance(d.sub[static_cast<std::size_t>(a)],
                                                                      d.sub[static_cast<std::size_t>(b)]);
            }
            return d.dist[static_cast<std::size_t>(a)] + d.dist[static_cast<std::size_t>(b)];
        }
        case SpaceKind::Product: {
            int dl = d.parts[0].distance(d.sub_l[static_cast<std::size_t>(a)], d.sub_l[static_cast<std::size_t>(b)]);
            int dr = d.parts[1].distance(d.sub_r[static_cast<std::size_t>(a)], d.sub_r[static_cast<std::size_t>(b)]);
            return std::max(dl, dr);
        }
    }
    throw std::logic_error("unreachable space kind");
}

void Space::neighbors_into(PointId x, int r, std::vector<PointId>& out) const {
    out.clear();
    const Data& d = *data_;
    switch (d.kind) {
        case SpaceKind::ZPlus: {
            int lo = std::max(0, x - r);
            int hi = std::min(d.max_window, x + r);
            for (int v = lo; v <= hi; ++v) out.push_back(v);
            return;
        }
        case SpaceKind::Grid: {
            const std::int32_t* c = d.coords.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(d.dim);
            const std::int64_t base = box_linear(d, c);
            const bool l1 = d.metric == GridMetric::L1;
            // Recursive odometer over per-axis offsets with l1 budget pruning.
            auto walk = [&](auto&& self, int axis, std::int64_t offset, int budget) -> void {
                if (axis == d.dim) {
                    PointId id = d.box_index[static_cast<std::size_t>(base + offset)];
                    if (id >= 0) out.push_back(id);
                    return;
                }
                int lo = std::max(-budget, -d.max_window - c[axis]);
                int hi = std::min(budget, d.max_window - c[axis]);
                for (int delta = lo; delta <= hi; ++delta) {
                    self(self, axis + 1, offset + static_cast<std::int64_t>(delta) * d.stride[static_cast<std::size_t>(axis)],
                         l1 ? budget - std::abs(delta) : budget);
                }
            };
            walk(walk, 0, 0, r);
            return;
        }
        case SpaceKind::FreeGroup: {
            out.push_back(x);
            std::size_t frontier_begin = 0;
            for (int level = 0; level < r; ++level) {
                std::size_t frontier_end = out.size();
                for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
                    PointId w = out[i];
                    PointId p = d.parent[static_cast<std::size_t>(w)];
                    if (p >= 0 && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
                    for (PointId ch = d.child_begin[static_cast<std::size_t>(w)]; ch < d.child_end[static_cast<std::size_t>(w)]; ++ch) {
                        if (std::find(out.begin(), out.end(), ch) == out.end()) out.push_back(ch);
                    }
                }
                frontier_begin = frontier_end;
            }
            return;
        }
        case SpaceKind::DihedralInf: {
            long long m = d.dh_t[static_cast<std::size_t>(x)];
            int e = d.dh_flip[static_cast<std::size_t>(x)];
            auto emit = [&](long long t, int f) {
                long long nt = m + (e == 0 ? t : -t);
                int nf = e ^ f;
                PointId id = dihedral_point(nt, nf);
                if (id >= 0) out.push_back(id);
            };
            emit(0, 0);
            for (int length = 1; length <= r; ++length) {
                long long half = length / 2;
                if (length % 2 == 0) {
                    emit(-half, 0);
                    emit(half, 0);
                } else {
                    emit(-half, 1);
                    emit(half + 1, 1);
                }
            }
            return;
        }
        case SpaceKind::Table: {
            const auto& row = d.table[static_cast<std::size_t>(x)];
            for (PointId y = 0; y < static_cast<PointId>(row.size()); ++y) {
                if (row[static_cast<std::size_t>(y)] <= r) out.push_back(y);
            }
            return;
        }
        case SpaceKind::DisjointUnion: {
            const int s = d.side[static_cast<std::size_t>(x)];
            const Space& own = d.parts[static_cast<std::size_t>(s)];
            const PointId nl = d.parts[0].size();
            std::vector<PointId> tmp;
            own.neighbors_into(d.sub[static_cast<std::size_t>(x)], r, tmp);
            for (PointId y : tmp) {
                std::size_t slot = s == 0 ? static_cast<std::size_t>(y) : static_cast<std::size_t>(nl) + static_cast<std::size_t>(y);
                PointId id = d.du_id[slot];
                if (id >= 0) out.push_back(id);
            }
            const Space& other = d.parts[static_cast<std::size_t>(1 - s)];
            int own_base_dist = s == 0 ? own.dist_to_base(d.sub[static_cast<std::size_t>(x)])
                                       : own.dist_to_base(d.sub[static_cast<std::size_t>(x)]);
            int budget = r - 1 - own_base_dist;
            if (budget >= 0) {
                PointId cnt = other.window_size(std::min(budget, other.max_window()));
                for (PointId y = 0; y < cnt; ++y) {
                    std::size_t slot = s == 0 ? static_cast<std::size_t>(nl) + static_cast<std::size_t>(y) : static_cast<std::size_t>(y);
                    PointId id = d.du_id[slot];
                    if (id >= 0) out.push_back(id);
                }
            }
            return;
        }
        case SpaceKind::Product: {
            std::vector<PointId> tl;
            std::vector<PointId> tr;
            d.parts[0].neighbors_into(d.sub_l[static_cast<std::size_t>(x)], r, tl);
            d.parts[1].neighbors_into(d.sub_r[static_cast<std::size_t>(x)], r, tr);
            const std::size_t nr = static_cast<std::size_t>(d.parts[1].window_size(d.max_window));
            for (PointId a : tl) {
                if (static_cast<std::size_t>(a) * nr >= d.pair_id.size()) continue;
                for (PointId b : tr) {
                    if (static_cast<std::size_t>(b) >= nr) continue;
                    PointId id = d.pair_id[static_cast<std::size_t>(a) * nr + static_cast<std::size_t>(b)];
                    if (id >= 0) out.push_back(id);
                }
            }
            return;
        }
    }
}

std::string Space::point_name(PointId x) const {
    const Data& d = *data_;
    switch (d.kind) {
        case SpaceKind::ZPlus:
            return std::to_string(x);
        case SpaceKind::Grid: {
            std::string s = "(";
            for (int a = 0; a < d.dim; ++a) {
                if (a) s += ",";
                s += std::to_string(grid_coord(x, a));
            }
            return s + ")";
        }
        case SpaceKind::FreeGroup: {
            if (x == 0) return "e";
            std::string s;
            for (int l : free_word(x)) {
                char c = static_cast<char>('a' + l / 2);
                s += (l % 2 == 0) ? c : static_cast<char>(c - 'a' + 'A');
            }
            return s;
        }
        case SpaceKind::DihedralInf: {
            return "(" + std::to_string(d.dh_t[static_cast<std::size_t>(x)]) + "," +
                   std::to_string(static_cast<int>(d.dh_flip[static_cast<std::size_t>(x)])) + ")";
        }
        case SpaceKind::Table:
            return "p" + std::to_string(d.table_label[static_cast<std::size_t>(x)]);
        case SpaceKind::DisjointUnion: {
            const char* tag = d.side[static_cast<std::size_t>(x)] == 0 ? "L|" : "R|";
            return tag + d.parts[static_cast<std::size_t>(d.side[static_cast<std::size_t>(x)])].point_name(
                             d.sub[static_cast<std::size_t>(x)]);
        }
        case SpaceKind::Product:
            return "(" + d.parts[0].point_name(d.sub_l[static_cast<std::size_t>(x)]) + "," +
                   d.parts[1].point_name(d.sub_r[static_cast<std::size_t>(x)]) + ")";
    }
    return "?";
}

std::string Space::describe() const {
    const Data& d = *data_;
    switch (d.kind) {
        case SpaceKind::ZPlus:
            return "zplus(" + std::to_string(d.max_window) + ")";
        case SpaceKind::Grid:
            return "zn(" + std::to_string(d.dim) + "," + (d.metric == GridMetric::LInf ? "linf" : "l1") + "," +
                   std::to_string(d.max_window) + ")";
        case SpaceKind::FreeGroup:
            return "free_group(" + std::to_string(d.gens) + "," + std::to_string(d.max_window) + ")";
        case SpaceKind::DihedralInf:
            return "dihedral_infinity(" + std::to_string(d.max_window) + ")";
        case SpaceKind::Table:
            return "table(" + std::to_string(size()) + ")";
        case SpaceKind::DisjointUnion:
            return "du(" + d.parts[0].describe() + "," + d.parts[1].describe() + ")";
        case SpaceKind::Product:
            return "prod(" + d.parts[0].describe() + "," + d.parts[1].describe() + ")";
    }
    return "?";
}

int Space::grid_dim() const {
    if (data_->kind != SpaceKind::Grid) throw CoarseError(ErrorCode::UnsupportedKind, "not a grid space");
    return data_->dim;
}

GridMetric Space::grid_metric() const {
    if (data_->kind != SpaceKind::Grid) throw CoarseError(ErrorCode::UnsupportedKind, "not a grid space");
    return data_->metric;
}

int Space::grid_coord(PointId x, int axis) const {
    return data_->coords[static_cast<std::size_t>(x) * static_cast<std::size_t>(data_->dim) + static_cast<std::size_t>(axis)];
}

PointId Space::grid_point(const std::vector<int>& coords) const {
    const Data& d = *data_;
    if (d.kind != SpaceKind::Grid) throw CoarseError(ErrorCode::UnsupportedKind, "not a grid space");
    if (static_cast<int>(coords.size()) != d.dim) {
        throw CoarseError(ErrorCode::InvalidParameter, "coordinate count does not match dimension");
    }
    std::vector<std::int32_t> c(coords.begin(), coords.end());
    for (int a = 0; a < d.dim; ++a) {
        if (std::abs(c[static_cast<std::size_t>(a)]) > d.max_window) return -1;
    }
    if (grid_norm(d, c.data()) > d.max_window) return -1;
    return d.box_index[static_cast<std::size_t>(box_linear(d, c.data()))];
}

bool Space::has_line_values() const {
    return data_->kind == SpaceKind::ZPlus || (data_->kind == SpaceKind::Grid && data_->dim == 1);
}

long long Space::line_value(PointId x) const {
    if (data_->kind == SpaceKind::ZPlus) return x;
    if (data_->kind == SpaceKind::Grid && data_->dim == 1) return grid_coord(x, 0);
    throw CoarseError(ErrorCode::UnsupportedKind, "space has no line values");
}

PointId Space::line_point(long long value) const {
    if (data_->kind == SpaceKind::ZPlus) {
        return (value >= 0 && value <= data_->max_window) ? static_cast<PointId>(value) : -1;
    }
    if (data_->kind == SpaceKind::Grid && data_->dim == 1) {
        if (std::llabs(value) > data_->max_window) return -1;
        return grid_point({static_cast<int>(value)});
    }
    throw CoarseError(ErrorCode::UnsupportedKind, "space has no line values");
}

int Space::du_side(PointId x) const { return data_->side[static_cast<std::size_t>(x)]; }
PointId Space::du_sub(PointId x) const { return data_->sub[static_cast<std::size_t>(x)]; }

const Space& Space::du_part(int side) const {
    if (data_->kind != SpaceKind::DisjointUnion) throw CoarseError(ErrorCode::UnsupportedKind, "not a disjoint union");
    return data_->parts[static_cast<std::size_t>(side)];
}

PointId Space::du_point(int side, PointId sub) const {
    const Data& d = *data_;
    std::size_t slot = side == 0 ? static_cast<std::size_t>(sub)
                                 : static_cast<std::size_t>(d.parts[0].size()) + static_cast<std::size_t>(sub);
    return d.du_id[slot];
}

const Space& Space::product_part(int side) const {
    if (data_->kind != SpaceKind::Product) throw CoarseError(ErrorCode::UnsupportedKind, "not a product");
    return data_->parts[static_cast<std::size_t>(side)];
}

PointId Space::product_sub(PointId x, int side) const {
    return side == 0 ? data_->sub_l[static_cast<std::size_t>(x)] : data_->sub_r[static_cast<std::size_t>(x)];
}

PointId Space::product_point(PointId left_sub, PointId right_sub) const {
    const Data& d = *data_;
    const std::size_t nr = static_cast<std::size_t>(d.parts[1].window_size(d.max_window));
    std::size_t slot = static_cast<std::size_t>(left_sub) * nr + static_cast<std::size_t>(right_sub);
    if (slot >= d.pair_id.size() || static_cast<std::size_t>(right_sub) >= nr) return -1;
    return d.pair_id[slot];
}

int Space::free_generators() const { return data_->gens; }

std::vector<int> Space::free_word(PointId x) const {
    std::vector<int> w;
    while (x != 0) {
        w.push_back(data_->letter[static_cast<std::size_t>(x)]);
        x = data_->parent[static_cast<std::size_t>(x)];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

long long Space::dihedral_translation(PointId x) const { return data_->dh_t[static_cast<std::size_t>(x)]; }
int Space::dihedral_flip(PointId x) const { return data_->dh_flip[static_cast<std::size_t>(x)]; }

PointId Space::dihedral_point(long long t, int flip) const {
    int length = dihedral_length(t, flip);
    if (length > data_->max_window) return -1;
    if (length == 0) return 0;
    bool first = flip == 0 ? t < 0 : t <= 0;
    return static_cast<PointId>(2 * length - 1 + (first ? 0 : 1));
}

}  // namespace coarse
