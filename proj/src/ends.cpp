#include "coarse/ends.hpp"

#include <algorithm>

#include "coarse/errors.hpp"

namespace coarse {

const char* ends_status_name(EndsStatus s) {
    switch (s) {
        case EndsStatus::Finite: return "Finite";
        case EndsStatus::InfiniteAtCap: return "InfiniteAtCap";
        case EndsStatus::NoPlateau: return "NoPlateau";
    }
    return "?";
}

EndsParams default_ends_params(int window) {
    EndsParams p;
    p.r_range = {1, 2, 4};
    p.n_range = {window / 8, window / 4, 3 * window / 8, window / 2};
    p.window = window;
    return p;
}

namespace {

void check_ends_params(const EndsParams& p) {
    if (p.r_range.empty() || p.n_range.empty()) {
        throw CoarseError(ErrorCode::InvalidParameter, "empty ends parameter range");
    }
    for (std::size_t i = 0; i < p.r_range.size(); ++i) {
        if (p.r_range[i] < 1) throw CoarseError(ErrorCode::InvalidParameter, "ends scales must be positive");
        if (i > 0 && p.r_range[i] <= p.r_range[i - 1]) {
            throw CoarseError(ErrorCode::InvalidParameter, "ends scales must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < p.n_range.size(); ++i) {
        if (p.n_range[i] < 0) throw CoarseError(ErrorCode::InvalidParameter, "core radii must be nonnegative");
        if (i > 0 && p.n_range[i] <= p.n_range[i - 1]) {
            throw CoarseError(ErrorCode::InvalidParameter, "core radii must be strictly increasing");
        }
    }
    if (p.cap < 1) throw CoarseError(ErrorCode::InvalidParameter, "ends cap must be positive");
    const int rmax = p.r_range.back();
    const int nmax = p.n_range.back();
    if (p.window < 4 * rmax || p.window < nmax + 2 * rmax) {
        throw CoarseError(ErrorCode::WindowTooSmall, "ends window must be at least 4*max(r) and max(n)+2*max(r)");
    }
}

struct UnionFind {
    std::vector<PointId> parent;
    explicit UnionFind(PointId n) : parent(static_cast<std::size_t>(n)) {
        for (PointId i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    PointId find(PointId x) {
        PointId root = x;
        while (parent[static_cast<std::size_t>(root)] != root) root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(x)] != root) {
            PointId up = parent[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(x)] = root;
            x = up;
        }
        return root;
    }
    // Smaller id wins, so every root is the smallest member of its class.
    void unite(PointId a, PointId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) {
            parent[static_cast<std::size_t>(b)] = a;
        } else {
            parent[static_cast<std::size_t>(a)] = b;
        }
    }
};

/** Shell-touching component count at one (r, n) cell. */
struct CellResult {
    int count = 0;
    UnionFind uf{0};
    std::vector<std::uint8_t> in_graph;
};

CellResult component_cell(const Subspace& u, int r, int n, int w) {
    const Space& s = u.space();
    const PointId nw = s.window_size(w);
    CellResult cell{0, UnionFind(nw), std::vector<std::uint8_t>(static_cast<std::size_t>(nw), 0)};
    for (PointId x = 0; x < nw; ++x) {
        cell.in_graph[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(u.contains(x) && s.dist_to_base(x) >= n);
    }
    std::vector<PointId> nb;
    for (PointId x = 0; x < nw; ++x) {
        if (!cell.in_graph[static_cast<std::size_t>(x)]) continue;
        s.neighbors_into(x, r, nb);
        for (PointId y : nb) {
            if (y < x && y < nw && cell.in_graph[static_cast<std::size_t>(y)]) cell.uf.unite(x, y);
        }
    }
    const int shell = 3 * w / 4;
    std::vector<std::uint8_t> touched(static_cast<std::size_t>(nw), 0);
    for (PointId x = 0; x < nw; ++x) {
        if (!cell.in_graph[static_cast<std::size_t>(x)] || s.dist_to_base(x) <= shell) continue;
        PointId root = cell.uf.find(x);
        if (!touched[static_cast<std::size_t>(root)]) {
            touched[static_cast<std::size_t>(root)] = 1;
            ++cell.count;
        }
    }
    return cell;
}

}  // namespace

EndsReport ends(const Subspace& u, const EndsParams& params) {
    check_ends_params(params);
    const Space& s = u.space();
    const int w = params.window;
    const PointId nw = s.window_size(w);

    EndsReport rep;
    rep.params = params;
    rep.trace.assign(params.r_range.size(), std::vector<int>(params.n_range.size(), 0));

    CellResult top{0, UnionFind(0), {}};
    for (std::size_t ri = 0; ri < params.r_range.size(); ++ri) {
        for (std::size_t ni = 0; ni < params.n_range.size(); ++ni) {
            CellResult cell = component_cell(u, params.r_range[ri], params.n_range[ni], w);
            rep.trace[ri][ni] = cell.count;
            if (ri + 1 == params.r_range.size() && ni + 1 == params.n_range.size()) top = std::move(cell);
        }
    }

    // Counted ends at the top cell, ordered by smallest member id.
    const int shell = 3 * w / 4;
    rep.labels.assign(static_cast<std::size_t>(s.size()), -1);
    std::vector<PointId> root_of_end;
    std::vector<std::int32_t> end_of_root(static_cast<std::size_t>(nw), -1);
    for (PointId x = 0; x < nw; ++x) {
        if (!top.in_graph[static_cast<std::size_t>(x)] || s.dist_to_base(x) <= shell) continue;
        PointId root = top.uf.find(x);
        if (end_of_root[static_cast<std::size_t>(root)] == -1) {
            end_of_root[static_cast<std::size_t>(root)] = -2;  // touches, id pending
            root_of_end.push_back(root);
        }
    }
    std::sort(root_of_end.begin(), root_of_end.end());
    rep.components.resize(root_of_end.size());
    for (std::size_t e = 0; e < root_of_end.size(); ++e) {
        end_of_root[static_cast<std::size_t>(root_of_end[e])] = static_cast<std::int32_t>(e);
        rep.components[e].id = static_cast<int>(e);
    }
    for (PointId x = 0; x < nw; ++x) {
        if (!top.in_graph[static_cast<std::size_t>(x)]) continue;
        std::int32_t e = end_of_root[static_cast<std::size_t>(top.uf.find(x))];
        if (e < 0) continue;
        rep.labels[static_cast<std::size_t>(x)] = e;
        EndComponent& comp = rep.components[static_cast<std::size_t>(e)];
        ++comp.member_count;
        if (comp.representatives.size() < 8) comp.representatives.push_back(x);
    }

    // Status: cap and growth first, then margin, then the two-axis plateau.
    const auto& last_row = rep.trace.back();
    const int top_count = last_row.back();
    rep.count = top_count;
    bool strictly_growing = params.n_range.size() >= 2;
    for (std::size_t ni = 0; ni + 1 < last_row.size(); ++ni) {
        if (last_row[ni] >= last_row[ni + 1]) strictly_growing = false;
    }
    if (top_count > params.cap || strictly_growing) {
        rep.status = EndsStatus::InfiniteAtCap;
        return rep;
    }
    bool plateau = true;
    for (std::size_t ni = params.n_range.size() / 2; ni < params.n_range.size(); ++ni) {
        if (last_row[ni] != top_count) plateau = false;
    }
    for (std::size_t ri = params.r_range.size() / 2; ri < params.r_range.size(); ++ri) {
        if (rep.trace[ri].back() != top_count) plateau = false;
    }
    const bool thin_margin = w < 2 * params.n_range.back();
    rep.status = (plateau && !thin_margin) ? EndsStatus::Finite : EndsStatus::NoPlateau;
    return rep;
}

EndRestriction end_restriction(const Subspace& u, const Subspace& v, const EndsParams& params) {
    if (!u.same_space(v)) throw CoarseError(ErrorCode::DomainMismatch, "end restriction across different universes");
    const Space& s = u.space();
    const PointId nw = s.window_size(params.window);
    for (PointId x = 0; x < nw; ++x) {
        if (u.contains(x) && !v.contains(x)) {
            throw CoarseError(ErrorCode::NotNested, "end restriction requires the domain inside the codomain");
        }
    }
    EndsReport ru = ends(u, params);
    EndsReport rv = ends(v, params);
    if (!ru.finite() || !rv.finite()) {
        throw CoarseError(ErrorCode::EndsNotFinite, "end restriction requires finite stabilized end counts");
    }

    EndRestriction res;
    res.domain_end_count = static_cast<int>(ru.components.size());
    res.codomain_end_count = static_cast<int>(rv.components.size());
    res.assignment.assign(ru.components.size(), -1);
    for (PointId x = 0; x < nw; ++x) {
        std::int32_t eu = ru.labels[static_cast<std::size_t>(x)];
        std::int32_t ev = rv.labels[static_cast<std::size_t>(x)];
        if (eu < 0 || ev < 0) continue;
        int& slot = res.assignment[static_cast<std::size_t>(eu)];
        if (slot < 0) {
            slot = ev;
        } else if (slot != ev) {
            throw CoarseError(ErrorCode::AmbiguousAssignment, "a domain end meets two codomain ends");
        }
    }
    for (int a : res.assignment) {
        if (a < 0) throw CoarseError(ErrorCode::AmbiguousAssignment, "a domain end meets no codomain end");
    }
    return res;
}

}  // namespace coarse
