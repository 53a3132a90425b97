/**
 * Subsets of a Space universe held as membership masks plus a printable
 * expression. Constructors mirror the config expression language; boolean
 * combinators compose masks pointwise.
 */

#ifndef COARSE_SUBSPACE_HPP
#define COARSE_SUBSPACE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coarse/space.hpp"

namespace coarse {

/** Upper bound sentinel for half-infinite blocks. */
inline constexpr long long kNoUpperBound = -1;

class Subspace {
public:
    static Subspace all(const Space& s);
    static Subspace empty(const Space& s);
    static Subspace from_mask(const Space& s, std::vector<std::uint8_t> mask, std::string desc);
    static Subspace points(const Space& s, const std::vector<PointId>& pts);

    /** Line-valued spaces: direction +1 keeps v >= cut, -1 keeps v <= cut. */
    static Subspace ray(const Space& s, int direction, long long cut = 0);

    /** Line-valued spaces: union of intervals [lo, hi]; hi = kNoUpperBound means unbounded above. */
    static Subspace block_union(const Space& s, const std::vector<std::pair<long long, long long>>& blocks);

    /** Line-valued spaces: union over k >= 0 of [base^(2k), base^(2k+1)]. */
    static Subspace blocks_geometric(const Space& s, long long base);

    /** Line-valued spaces: residue class value mod m == r (nonnegative residue). */
    static Subspace mod_class(const Space& s, long long m, long long r);

    /** Grid: points with a . x >= c. */
    static Subspace halfspace(const Space& s, const std::vector<long long>& a, long long c);

    /** Grid: sign-pattern sector; signs[i] in {-1, 0, +1}, 0 = unconstrained. */
    static Subspace sector_signs(const Space& s, const std::vector<int>& signs);

    /** 2d grid: cone swept counterclockwise from direction u to direction v. */
    static Subspace sector_cone(const Space& s, long long ux, long long uy, long long vx, long long vy);

    /** Grid: axis cone {x : 2 * sign * x[axis] >= |x|} in the grid's own norm. */
    static Subspace axis_cone(const Space& s, int axis, int sign);

    /** Disjoint union: one side as a subspace. */
    static Subspace du_side_subspace(const Space& s, int side);

    const Space& space() const { return impl_->space; }
    bool contains(PointId x) const { return impl_->mask[static_cast<std::size_t>(x)] != 0; }
    const std::vector<std::uint8_t>& mask() const { return impl_->mask; }
    const std::string& describe() const { return impl_->desc; }

    /** Members with dist_to_base <= window, in increasing id order. */
    std::vector<PointId> members(int window) const;
    /** Number of members with dist_to_base <= window. */
    PointId count(int window) const;
    /** Largest dist_to_base over members within window; -1 when empty there. */
    int max_dist(int window) const;

    Subspace complement() const;
    static Subspace union_of(const Subspace& a, const Subspace& b);
    static Subspace intersection_of(const Subspace& a, const Subspace& b);
    static Subspace union_of(const std::vector<Subspace>& parts);
    static Subspace intersection_of(const std::vector<Subspace>& parts);

    /** Same universe (shared Space identity). */
    bool same_space(const Subspace& other) const { return impl_->space.same(other.impl_->space); }

private:
    struct Impl {
        Space space;
        std::vector<std::uint8_t> mask;
        std::string desc;
        Impl(Space s, std::vector<std::uint8_t> m, std::string d)
            : space(std::move(s)), mask(std::move(m)), desc(std::move(d)) {}
    };
    explicit Subspace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static Subspace make(const Space& s, std::vector<std::uint8_t> mask, std::string desc);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace coarse

#endif  // COARSE_SUBSPACE_HPP
