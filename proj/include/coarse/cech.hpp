/**
 * Cech cochain complex of a verified coarse cover with constant
 * coefficients. Section groups over a tuple intersection are coeff^(ends),
 * coboundaries are alternating-sign end-restriction matrices over Z, and
 * cohomology is read off from ranks and Smith elementary divisors.
 */

#ifndef COARSE_CECH_HPP
#define COARSE_CECH_HPP

#include <vector>

#include "coarse/abelian.hpp"
#include "coarse/ends.hpp"
#include "coarse/numbers.hpp"
#include "coarse/subspace.hpp"
#include "coarse/verdict.hpp"

namespace coarse {

struct CechParams {
    ScaleSchedule sched;  // schedule for the cover verdict
    EndsParams ends;      // per-intersection ends grid; carries the window
};

/** sched {1,2,4} and the default ends grid at the window. */
CechParams default_cech_params(int window);

/** One free generator of a cochain group: an end of a tuple intersection. */
struct CechBasisElement {
    std::vector<int> tuple;  // strictly increasing cover indices
    int end_id = 0;          // end of the intersection, within the target
};

/** Sections over one unbounded tuple intersection. */
struct TupleSections {
    std::vector<int> tuple;
    int first_basis = 0;  // basis index of this tuple's end 0 in its degree
    EndsReport report;    // Finite; its labels drive restriction entries
};

struct CechComplex {
    std::vector<Subspace> cover;  // fixed index order
    int max_degree = -1;          // K = cover size - 1; -1 for the empty cover
    std::vector<std::vector<CechBasisElement>> basis;  // per degree 0..K
    std::vector<std::vector<TupleSections>> sections;  // per degree, lex tuple order
    std::vector<IntegerMatrix> coboundary;             // D_k : C^k -> C^{k+1}; D_K has zero rows
    AbelianGroupFG coeff;
    CechParams params;

    int cochain_rank(int k) const {
        if (k < 0 || k > max_degree) return 0;
        return static_cast<int>(basis[static_cast<std::size_t>(k)].size());
    }
};

/**
 * Sections of the constant sheaf with fiber coeff over U: coeff^(e(U)).
 * A bounded U has no ends and the zero group of sections.
 */
AbelianGroupFG constant_sections(const Subspace& u, const AbelianGroupFG& coeff, const CechParams& params);

/**
 * The alternating Cech complex of the cover over the target. Bounded tuple
 * intersections contribute no basis elements; coboundary entries are
 * (-1)^nu between an end and its restriction target along each face.
 * pre: the cover verdict Holds (CoverNotVerified otherwise) and every
 * unbounded intersection has Finite ends (InfiniteEndsInIntersection).
 * post: D_{k+1} * D_k = 0, checked exactly.
 */
CechComplex cech_complex(const Subspace& target, const std::vector<Subspace>& cover, const AbelianGroupFG& coeff,
                         const CechParams& params);

struct CohomologyResult {
    std::vector<AbelianGroupFG> groups;    // H^k with coeff, degrees 0..K
    std::vector<AbelianGroupFG> integral;  // H^k over Z
    std::vector<int> cochain_ranks;        // dim_Z C^k
    std::vector<int> boundary_ranks;       // rank D_k
    AbelianGroupFG coeff;
    CechParams params;

    AbelianGroupFG at(int k) const;           // trivial outside 0..K
    AbelianGroupFG integral_at(int k) const;  // trivial outside 0..K
};

/**
 * H^k of the complex: free rank dim C^k - rank D_k - rank D_{k-1}, torsion
 * the Smith divisors of D_{k-1} past 1, coefficients applied through
 * universal coefficients from the integral groups.
 */
CohomologyResult cohomology(const CechComplex& cx);

/** Rank bookkeeping, over Z, for the two-set cover sequence. */
struct MayerVietorisReport {
    int ends_target = 0;
    int ends_a = 0;
    int ends_b = 0;
    int ends_intersection = 0;
    AbelianGroupFG h0_target;        // coeff^(ends of the target)
    AbelianGroupFG h0_sum;           // coeff^(ends of A) + coeff^(ends of B)
    AbelianGroupFG h0_intersection;  // coeff^(ends of A cap B)
    IntegerMatrix restriction;       // target sections -> A sections + B sections
    IntegerMatrix difference;        // (s_a, s_b) -> s_a - s_b on A cap B
    int rank_restriction = 0;
    int rank_difference = 0;
    int connecting_rank = 0;            // e(A cap B) - rank(difference)
    CohomologyResult two_cover;         // cohomology of the cover {A, B}
    bool exact_at_target = false;       // restriction is injective
    bool exact_at_sum = false;          // ker(difference) = im(restriction) by rank
    bool exact_at_intersection = false; // coker(difference) has the rank of H^1({A, B})
    bool exact = false;
};

/** pre: {a, b} verifies as a cover of the target; all four ends Finite. */
MayerVietorisReport mayer_vietoris_report(const Subspace& target, const Subspace& a, const Subspace& b,
                                          const AbelianGroupFG& coeff, const CechParams& params);

struct RefinementComparison {
    std::vector<int> assignment;  // fine index -> coarse index
    CohomologyResult fine_result;
    CohomologyResult coarse_result;
    std::vector<IntegerMatrix> chain_map;  // per degree: coarse cochains -> fine cochains
    std::vector<int> induced_ranks;        // rank over Q of H^k(coarse) -> H^k(fine)
    bool stabilized = false;               // identical H^k (with coeff) in every degree
};

/**
 * The chain map from the coarse complex into the fine one along a
 * refinement assignment: image tuples with a repeated index map to zero,
 * otherwise sort with the permutation sign and restrict ends. Commutation
 * with the coboundaries is checked exactly.
 * pre: fine refines coarse on the window (NotARefinement otherwise).
 */
RefinementComparison refinement_comparison(const Subspace& target, const std::vector<Subspace>& fine,
                                           const std::vector<Subspace>& coarse, const AbelianGroupFG& coeff,
                                           const CechParams& params);

}  // namespace coarse

#endif  // COARSE_CECH_HPP
