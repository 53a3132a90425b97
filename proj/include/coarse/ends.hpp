/**
 * Ends of a subspace at desk scale: shell-touching components of the
 * r-adjacency graph outside a core ball, stabilized over a grid of
 * (scale r, core radius n) cells, plus the induced end assignment for
 * nested subspaces.
 */

#ifndef COARSE_ENDS_HPP
#define COARSE_ENDS_HPP

#include <cstdint>
#include <vector>

#include "coarse/subspace.hpp"

namespace coarse {

enum class EndsStatus { Finite, InfiniteAtCap, NoPlateau };

const char* ends_status_name(EndsStatus s);

struct EndsParams {
    std::vector<int> r_range;  // strictly increasing scales, each >= 1
    std::vector<int> n_range;  // strictly increasing core radii, each >= 0
    int window = 0;
    int cap = 64;  // counts past this report InfiniteAtCap
};

/** r_range {1,2,4}, n_range {W/8, W/4, 3W/8, W/2}. */
EndsParams default_ends_params(int window);

/** One counted end: a shell-touching component at the top grid cell. */
struct EndComponent {
    int id = 0;
    std::vector<PointId> representatives;  // up to 8 smallest member ids
    PointId member_count = 0;
    bool touches_outer_shell = true;
};

struct EndsReport {
    EndsStatus status = EndsStatus::NoPlateau;
    int count = 0;  // meaningful when status == Finite; top-cell count otherwise
    std::vector<std::vector<int>> trace;  // trace[ri][ni], monotone non-increasing in r
    EndsParams params;
    std::vector<EndComponent> components;  // counted ends at (r_max, n_max), by smallest member
    std::vector<std::int32_t> labels;      // universe id -> end id at the top cell, -1 otherwise
    bool finite() const { return status == EndsStatus::Finite; }
};

/**
 * pre: W >= 4*max(r_range) and W >= max(n_range) + 2*max(r_range), else
 * WindowTooSmall. When W < 2*max(n_range) the margin is too thin to trust
 * a finite plateau, so only InfiniteAtCap or NoPlateau can be reported.
 */
EndsReport ends(const Subspace& u, const EndsParams& params);

/**
 * The end assignment induced by an inclusion U within V: sections over V
 * restrict to sections over U along it, one codomain end per domain end.
 */
struct EndRestriction {
    int domain_end_count = 0;    // ends of U
    int codomain_end_count = 0;  // ends of V
    std::vector<int> assignment;  // U end id -> V end id
};

/** pre: U within V on the window; both ends reports Finite. */
EndRestriction end_restriction(const Subspace& u, const Subspace& v, const EndsParams& params);

}  // namespace coarse

#endif  // COARSE_ENDS_HPP
