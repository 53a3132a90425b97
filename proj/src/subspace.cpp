#include "coarse/subspace.hpp"

#include <algorithm>
#include <cstdlib>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

void require_line(const Space& s, const char* what) {
    if (!s.has_line_values()) {
        throw CoarseError(ErrorCode::UnsupportedKind, std::string(what) + " requires a line-valued space");
    }
}

void require_grid(const Space& s, const char* what) {
    if (s.kind() != SpaceKind::Grid) {
        throw CoarseError(ErrorCode::UnsupportedKind, std::string(what) + " requires a grid space");
    }
}

}  // namespace

Subspace Subspace::make(const Space& s, std::vector<std::uint8_t> mask, std::string desc) {
    return Subspace(std::make_shared<const Impl>(s, std::move(mask), std::move(desc)));
}

Subspace Subspace::all(const Space& s) {
    return make(s, std::vector<std::uint8_t>(static_cast<std::size_t>(s.size()), 1), "all");
}

Subspace Subspace::empty(const Space& s) {
    return make(s, std::vector<std::uint8_t>(static_cast<std::size_t>(s.size()), 0), "points()");
}

Subspace Subspace::from_mask(const Space& s, std::vector<std::uint8_t> mask, std::string desc) {
    if (mask.size() != static_cast<std::size_t>(s.size())) {
        throw CoarseError(ErrorCode::InvalidParameter, "mask size does not match the universe");
    }
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::points(const Space& s, const std::vector<PointId>& pts) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    std::string desc = "points(";
    std::vector<PointId> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    bool first = true;
    for (PointId p : sorted) {
        if (p < 0 || p >= s.size()) {
            throw CoarseError(ErrorCode::ParamOutOfRange, "point id outside the universe");
        }
        mask[static_cast<std::size_t>(p)] = 1;
        if (!first) desc += ",";
        desc += std::to_string(p);
        first = false;
    }
    desc += ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::ray(const Space& s, int direction, long long cut) {
    require_line(s, "ray");
    if (direction != 1 && direction != -1) {
        throw CoarseError(ErrorCode::InvalidParameter, "ray direction must be +1 or -1");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        long long v = s.line_value(i);
        mask[static_cast<std::size_t>(i)] = (direction > 0 ? v >= cut : v <= cut) ? 1 : 0;
    }
    std::string desc = std::string("ray(") + (direction > 0 ? "+" : "-");
    if (cut != 0) desc += "," + std::to_string(cut);
    desc += ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::block_union(const Space& s, const std::vector<std::pair<long long, long long>>& blocks) {
    require_line(s, "blocks");
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (const auto& [lo, hi] : blocks) {
        if (hi != kNoUpperBound && hi < lo) {
            throw CoarseError(ErrorCode::InvalidParameter, "block upper bound below lower bound");
        }
    }
    for (PointId i = 0; i < s.size(); ++i) {
        long long v = s.line_value(i);
        for (const auto& [lo, hi] : blocks) {
            if (v >= lo && (hi == kNoUpperBound || v <= hi)) {
                mask[static_cast<std::size_t>(i)] = 1;
                break;
            }
        }
    }
    std::string desc = "blocks(";
    bool first = true;
    for (const auto& [lo, hi] : blocks) {
        if (!first) desc += ",";
        desc += std::to_string(lo) + ":" + (hi == kNoUpperBound ? std::string("inf") : std::to_string(hi));
        first = false;
    }
    desc += ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::blocks_geometric(const Space& s, long long base) {
    require_line(s, "blocks");
    if (base < 2) throw CoarseError(ErrorCode::ParamOutOfRange, "geometric base must be >= 2");
    std::vector<std::pair<long long, long long>> blocks;
    long long lo = 1;
    const long long limit = 4LL * s.max_window() + 4;
    while (lo <= limit) {
        blocks.emplace_back(lo, lo * base);
        lo *= base * base;
    }
    Subspace b = block_union(s, blocks);
    return make(s, b.impl_->mask, "blocks(geom " + std::to_string(base) + ")");
}

Subspace Subspace::mod_class(const Space& s, long long m, long long r) {
    require_line(s, "mod");
    if (m < 1) throw CoarseError(ErrorCode::ParamOutOfRange, "modulus must be positive");
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        long long v = s.line_value(i) % m;
        if (v < 0) v += m;
        mask[static_cast<std::size_t>(i)] = (v == ((r % m + m) % m)) ? 1 : 0;
    }
    return make(s, std::move(mask), "mod(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

Subspace Subspace::halfspace(const Space& s, const std::vector<long long>& a, long long c) {
    require_grid(s, "halfspace");
    if (static_cast<int>(a.size()) != s.grid_dim()) {
        throw CoarseError(ErrorCode::InvalidParameter, "halfspace coefficient count does not match dimension");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        long long dot = 0;
        for (int ax = 0; ax < s.grid_dim(); ++ax) dot += a[static_cast<std::size_t>(ax)] * s.grid_coord(i, ax);
        mask[static_cast<std::size_t>(i)] = dot >= c ? 1 : 0;
    }
    std::string desc = "halfspace(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) desc += ",";
        desc += std::to_string(a[k]);
    }
    desc += " >= " + std::to_string(c) + ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::sector_signs(const Space& s, const std::vector<int>& signs) {
    require_grid(s, "sector");
    if (static_cast<int>(signs.size()) != s.grid_dim()) {
        throw CoarseError(ErrorCode::InvalidParameter, "sector sign count does not match dimension");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        bool in = true;
        for (int ax = 0; ax < s.grid_dim() && in; ++ax) {
            int sg = signs[static_cast<std::size_t>(ax)];
            if (sg != 0 && sg * s.grid_coord(i, ax) < 0) in = false;
        }
        mask[static_cast<std::size_t>(i)] = in ? 1 : 0;
    }
    std::string desc = "sector(";
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (k) desc += ",";
        desc += signs[k] > 0 ? "+" : (signs[k] < 0 ? "-" : "0");
    }
    desc += ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::sector_cone(const Space& s, long long ux, long long uy, long long vx, long long vy) {
    require_grid(s, "cone");
    if (s.grid_dim() != 2) throw CoarseError(ErrorCode::UnsupportedKind, "cone requires a 2d grid");
    if ((ux == 0 && uy == 0) || (vx == 0 && vy == 0)) {
        throw CoarseError(ErrorCode::InvalidParameter, "cone directions must be nonzero");
    }
    // cross(u, v) >= 0: opening <= 180 degrees, membership is the conjunction;
    // otherwise the cone is the complement of the cone from v to u.
    const bool narrow = ux * vy - uy * vx >= 0;
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        long long x = s.grid_coord(i, 0);
        long long y = s.grid_coord(i, 1);
        bool after_u = ux * y - uy * x >= 0;
        bool before_v = x * vy - y * vx >= 0;
        mask[static_cast<std::size_t>(i)] = (narrow ? (after_u && before_v) : (after_u || before_v)) ? 1 : 0;
    }
    std::string desc = "cone(" + std::to_string(ux) + "," + std::to_string(uy) + "," + std::to_string(vx) + "," +
                       std::to_string(vy) + ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::axis_cone(const Space& s, int axis, int sign) {
    require_grid(s, "axiscone");
    if (axis < 0 || axis >= s.grid_dim()) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "axiscone axis outside dimension");
    }
    if (sign != 1 && sign != -1) {
        throw CoarseError(ErrorCode::InvalidParameter, "axiscone sign must be +1 or -1");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        long long v = static_cast<long long>(sign) * s.grid_coord(i, axis);
        mask[static_cast<std::size_t>(i)] = (2 * v >= s.dist_to_base(i)) ? 1 : 0;
    }
    std::string desc = std::string("axiscone(") + std::to_string(axis) + "," + (sign > 0 ? "+" : "-") + ")";
    return make(s, std::move(mask), std::move(desc));
}

Subspace Subspace::du_side_subspace(const Space& s, int side) {
    if (s.kind() != SpaceKind::DisjointUnion) {
        throw CoarseError(ErrorCode::UnsupportedKind, "side subspace requires a disjoint union");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s.size()), 0);
    for (PointId i = 0; i < s.size(); ++i) {
        mask[static_cast<std::size_t>(i)] = s.du_side(i) == side ? 1 : 0;
    }
    return make(s, std::move(mask), std::string("side(") + (side == 0 ? "L" : "R") + ")");
}

std::vector<PointId> Subspace::members(int window) const {
    const PointId n = impl_->space.window_size(window);
    std::vector<PointId> out;
    for (PointId i = 0; i < n; ++i) {
        if (impl_->mask[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

PointId Subspace::count(int window) const {
    const PointId n = impl_->space.window_size(window);
    PointId c = 0;
    for (PointId i = 0; i < n; ++i) c += impl_->mask[static_cast<std::size_t>(i)];
    return c;
}

int Subspace::max_dist(int window) const {
    const PointId n = impl_->space.window_size(window);
    for (PointId i = n - 1; i >= 0; --i) {
        if (impl_->mask[static_cast<std::size_t>(i)]) return impl_->space.dist_to_base(i);
    }
    return -1;
}

Subspace Subspace::complement() const {
    std::vector<std::uint8_t> mask(impl_->mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = impl_->mask[i] ? 0 : 1;
    return make(impl_->space, std::move(mask), "compl(" + impl_->desc + ")");
}

Subspace Subspace::union_of(const Subspace& a, const Subspace& b) { return union_of(std::vector<Subspace>{a, b}); }

Subspace Subspace::intersection_of(const Subspace& a, const Subspace& b) {
    return intersection_of(std::vector<Subspace>{a, b});
}

Subspace Subspace::union_of(const std::vector<Subspace>& parts) {
    if (parts.empty()) throw CoarseError(ErrorCode::InvalidParameter, "union of an empty list");
    std::vector<std::uint8_t> mask = parts[0].impl_->mask;
    std::string desc = "union(" + parts[0].impl_->desc;
    for (std::size_t p = 1; p < parts.size(); ++p) {
        if (!parts[p].same_space(parts[0])) {
            throw CoarseError(ErrorCode::DomainMismatch, "union across different universes");
        }
        for (std::size_t i = 0; i < mask.size(); ++i) mask[i] |= parts[p].impl_->mask[i];
        desc += "," + parts[p].impl_->desc;
    }
    return make(parts[0].impl_->space, std::move(mask), desc + ")");
}

Subspace Subspace::intersection_of(const std::vector<Subspace>& parts) {
    if (parts.empty()) throw CoarseError(ErrorCode::InvalidParameter, "intersection of an empty list");
    std::vector<std::uint8_t> mask = parts[0].impl_->mask;
    std::string desc = "inter(" + parts[0].impl_->desc;
    for (std::size_t p = 1; p < parts.size(); ++p) {
        if (!parts[p].same_space(parts[0])) {
            throw CoarseError(ErrorCode::DomainMismatch, "intersection across different universes");
        }
        for (std::size_t i = 0; i < mask.size(); ++i) mask[i] &= parts[p].impl_->mask[i];
        desc += "," + parts[p].impl_->desc;
    }
    return make(parts[0].impl_->space, std::move(mask), desc + ")");
}

}  // namespace coarse
