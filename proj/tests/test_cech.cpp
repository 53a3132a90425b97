#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "coarse/cech.hpp"
#include "coarse/errors.hpp"
#include "coarse/logic.hpp"
#include "covers.hpp"
#include "doctest.h"

using namespace coarse;

namespace {

Space line() { return Space::zn(1, GridMetric::LInf, 300); }

AbelianGroupFG z_group() { return free_group_z(1); }

/** Alternating sum of a rank vector. */
int alternating_sum(const std::vector<int>& v) {
    int sum = 0;
    for (std::size_t k = 0; k < v.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * v[k];
    return sum;
}

bool matrix_zero(const IntegerMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("constant sections count ends") {
    Space z = line();
    CechParams p = default_cech_params(256);
    CHECK(constant_sections(Subspace::ray(z, +1), z_group(), p) == free_group_z(1));
    CHECK(constant_sections(Subspace::all(z), z_group(), p) == free_group_z(2));
    CHECK(constant_sections(Subspace::points(z, {z.basepoint()}), z_group(), p).trivial());
    CHECK(constant_sections(Subspace::all(z), parse_group("Z/2"), p) == parse_group("Z/2 + Z/2"));
    CHECK(constant_sections(Subspace::ray(z, -1), parse_group("Z^2"), p) == parse_group("Z^2"));
}

TEST_CASE("constant sections refuse infinitely many ends") {
    Space f2 = Space::free_group(2, 9);
    CechParams p;
    p.sched = {1};
    p.ends.r_range = {1};
    p.ends.n_range = {2, 3, 4, 5};
    p.ends.window = 8;
    try {
        constant_sections(Subspace::all(f2), z_group(), p);
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::InfiniteEnds);
    }
}

TEST_CASE("complex of the two-ray cover of the line") {
    Space z = line();
    Subspace all = Subspace::all(z);
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    CechComplex cx = cech_complex(all, rays, z_group(), default_cech_params(256));

    CHECK(cx.max_degree == 1);
    CHECK(cx.cochain_rank(0) == 2);
    CHECK(cx.cochain_rank(1) == 0);  // the rays overlap in a bounded set
    REQUIRE(cx.basis[0].size() == 2);
    CHECK(cx.basis[0][0].tuple == std::vector<int>{0});
    CHECK(cx.basis[0][1].tuple == std::vector<int>{1});
    CHECK(cx.coboundary[0].rows() == 0);
    CHECK(cx.coboundary[0].cols() == 2);

    CohomologyResult h = cohomology(cx);
    CHECK(h.at(0) == free_group_z(2));
    CHECK(h.at(1).trivial());
    CHECK(h.at(5).trivial());
    CHECK(h.integral_at(0) == free_group_z(2));
}

TEST_CASE("complex of the trivial cover") {
    Space zp = Space::zplus(300);
    Subspace all = Subspace::all(zp);
    CechComplex cx = cech_complex(all, {all}, z_group(), default_cech_params(256));
    CHECK(cx.max_degree == 0);
    CHECK(cx.cochain_rank(0) == 1);
    CohomologyResult h = cohomology(cx);
    CHECK(h.at(0) == free_group_z(1));
    CHECK(h.at(1).trivial());
}

TEST_CASE("empty cover of a bounded target vanishes") {
    Space zp = Space::zplus(300);
    std::vector<PointId> pts(20);
    std::iota(pts.begin(), pts.end(), 0);
    Subspace small = Subspace::points(zp, pts);
    CechComplex cx = cech_complex(small, {}, z_group(), default_cech_params(256));
    CHECK(cx.max_degree == -1);
    CohomologyResult h = cohomology(cx);
    for (int k = 0; k <= 4; ++k) CHECK(h.at(k).trivial());
    CHECK(h.groups.empty());
}

TEST_CASE("unverified covers are rejected") {
    Space z = line();
    Subspace all = Subspace::all(z);
    std::vector<Subspace> parity{Subspace::mod_class(z, 2, 0), Subspace::mod_class(z, 2, 1)};
    try {
        cech_complex(all, parity, z_group(), default_cech_params(256));
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::CoverNotVerified);
    }
    try {
        cech_complex(all, {}, z_group(), default_cech_params(256));
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::EmptyFamilyOnUnbounded);
    }
}

TEST_CASE("infinitely many ends in a member is an error") {
    Space f2 = Space::free_group(2, 9);
    CechParams p;
    p.sched = {1};
    p.ends.r_range = {1};
    p.ends.n_range = {2, 3, 4, 5};
    p.ends.window = 8;
    try {
        cech_complex(Subspace::all(f2), {Subspace::all(f2)}, z_group(), p);
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::InfiniteEndsInIntersection);
    }
}

TEST_CASE("five-sector cover of the plane") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    std::vector<Subspace> sectors = five_sectors(z2);
    CechComplex cx = cech_complex(all, sectors, z_group(), default_cech_params(64));

    // One end per sector, one per adjacent overlap wedge; triples bounded.
    CHECK(cx.cochain_rank(0) == 5);
    CHECK(cx.cochain_rank(1) == 5);
    CHECK(cx.cochain_rank(2) == 0);
    CHECK(cx.cochain_rank(3) == 0);
    CHECK(cx.cochain_rank(4) == 0);
    for (const TupleSections& ts : cx.sections[1]) {
        CHECK(ts.report.count == 1);
        CHECK(ts.tuple.size() == 2);
    }
    for (std::size_t k = 0; k + 1 < cx.coboundary.size(); ++k) {
        CHECK(matrix_zero(cx.coboundary[k + 1] * cx.coboundary[k]));
    }

    CohomologyResult h = cohomology(cx);
    CHECK(h.boundary_ranks[0] == 4);  // incidence matrix of a five-cycle
    CHECK(h.boundary_ranks[1] == 0);
    CHECK(h.at(0) == free_group_z(1));
    CHECK(h.at(1) == free_group_z(1));
    CHECK(h.at(2).trivial());
    CHECK(h.at(3).trivial());
    CHECK(h.at(4).trivial());

    // Euler characteristic from cochain ranks equals the one from the
    // torsion-free cohomology.
    std::vector<int> betti;
    for (const AbelianGroupFG& g : h.integral) {
        CHECK(g.torsion.empty());
        betti.push_back(g.rank);
    }
    CHECK(alternating_sum(h.cochain_ranks) == alternating_sum(betti));
}

TEST_CASE("five-sector cover with torsion coefficients") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    CechComplex cx = cech_complex(all, five_sectors(z2), parse_group("Z/2"), default_cech_params(64));
    CohomologyResult h = cohomology(cx);
    CHECK(h.at(0) == parse_group("Z/2"));
    CHECK(h.at(1) == parse_group("Z/2"));
    CHECK(h.at(2).trivial());
    CHECK(h.integral_at(1) == free_group_z(1));
}

TEST_CASE("cohomology is invariant under permuting the cover") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    std::vector<Subspace> sectors = five_sectors(z2);
    CohomologyResult base = cohomology(cech_complex(all, sectors, z_group(), default_cech_params(64)));

    std::mt19937 rng(20260822);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Subspace> shuffled = sectors;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CohomologyResult h = cohomology(cech_complex(all, shuffled, z_group(), default_cech_params(64)));
        CHECK(h.cochain_ranks == base.cochain_ranks);
        CHECK(h.boundary_ranks == base.boundary_ranks);
        REQUIRE(h.groups.size() == base.groups.size());
        for (std::size_t k = 0; k < base.groups.size(); ++k) {
            CHECK(h.groups[k] == base.groups[k]);
            CHECK(h.integral[k] == base.integral[k]);
        }
    }
}

TEST_CASE("interval covers of the half line have the cohomology of a point") {
    Space zp = Space::zplus(300);
    Subspace all = Subspace::all(zp);
    for (const std::vector<Subspace>& cover : zplus_interval_covers(zp)) {
        CohomologyResult h = cohomology(cech_complex(all, cover, z_group(), default_cech_params(256)));
        CHECK(h.at(0) == free_group_z(1));
        for (int k = 1; k <= 3; ++k) CHECK(h.at(k).trivial());
    }
}

TEST_CASE("two-ray splitting of the line is rank exact") {
    Space z = line();
    Subspace all = Subspace::all(z);
    MayerVietorisReport rep =
        mayer_vietoris_report(all, Subspace::ray(z, -1), Subspace::ray(z, +1), z_group(), default_cech_params(256));
    CHECK(rep.ends_target == 2);
    CHECK(rep.ends_a == 1);
    CHECK(rep.ends_b == 1);
    CHECK(rep.ends_intersection == 0);
    CHECK(rep.h0_target == free_group_z(2));
    CHECK(rep.h0_sum == free_group_z(2));
    CHECK(rep.h0_intersection.trivial());
    CHECK(rep.rank_restriction == 2);
    CHECK(rep.rank_difference == 0);
    CHECK(rep.connecting_rank == 0);
    CHECK(rep.exact_at_target);
    CHECK(rep.exact_at_sum);
    CHECK(rep.exact_at_intersection);
    CHECK(rep.exact);
}

TEST_CASE("degenerate two-set cover by the whole space") {
    Space zp = Space::zplus(300);
    Subspace all = Subspace::all(zp);
    MayerVietorisReport rep = mayer_vietoris_report(all, all, all, z_group(), default_cech_params(256));
    CHECK(rep.ends_target == 1);
    CHECK(rep.ends_intersection == 1);
    CHECK(rep.h0_sum == free_group_z(2));
    CHECK(rep.rank_restriction == 1);
    CHECK(rep.rank_difference == 1);
    CHECK(rep.connecting_rank == 0);
    CHECK(rep.two_cover.at(0) == free_group_z(1));
    CHECK(rep.two_cover.at(1).trivial());
    CHECK(rep.exact);
}

TEST_CASE("sector-union splitting of the plane forces rank one in degree one") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    std::vector<Subspace> s = five_sectors(z2);
    Subspace a = Subspace::union_of({s[0], s[1], s[2]});
    Subspace b = Subspace::union_of({s[2], s[3], s[4], s[0]});
    MayerVietorisReport rep = mayer_vietoris_report(all, a, b, z_group(), default_cech_params(64));
    CHECK(rep.ends_target == 1);
    CHECK(rep.ends_a == 1);
    CHECK(rep.ends_b == 1);
    CHECK(rep.ends_intersection == 2);  // the two shared wedges
    CHECK(rep.rank_restriction == 1);
    CHECK(rep.rank_difference == 1);
    CHECK(rep.connecting_rank == 1);
    CHECK(rep.two_cover.integral_at(1) == free_group_z(1));
    CHECK(rep.exact);
}

TEST_CASE("refinement comparison of a cover with itself") {
    Space z = line();
    Subspace all = Subspace::all(z);
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    RefinementComparison cmp = refinement_comparison(all, rays, rays, z_group(), default_cech_params(256));
    CHECK(cmp.assignment == std::vector<int>{0, 1});
    REQUIRE(cmp.chain_map.size() == 2);
    CHECK(cmp.chain_map[0] == IntegerMatrix::Identity(2, 2));
    CHECK(cmp.chain_map[1].rows() == 0);
    CHECK(cmp.induced_ranks == std::vector<int>{2, 0});
    CHECK(cmp.stabilized);
}

TEST_CASE("two rays against the trivial cover of the line") {
    // Degree zero is the equalizer of the cover, so both covers already
    // compute the two-ended section group and the comparison stabilizes.
    Space z = line();
    Subspace all = Subspace::all(z);
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    RefinementComparison cmp = refinement_comparison(all, rays, {all}, z_group(), default_cech_params(256));
    CHECK(cmp.fine_result.at(0) == free_group_z(2));
    CHECK(cmp.coarse_result.at(0) == free_group_z(2));
    CHECK(cmp.induced_ranks == std::vector<int>{2, 0});
    CHECK(cmp.stabilized);
}

TEST_CASE("five sectors against the trivial cover of the plane") {
    // The trivial cover sees no degree-one classes, so the comparison
    // reports that the covers do not stabilize.
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    RefinementComparison cmp = refinement_comparison(all, five_sectors(z2), {all}, z_group(), default_cech_params(64));
    CHECK(cmp.assignment == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(cmp.fine_result.at(0) == free_group_z(1));
    CHECK(cmp.fine_result.at(1) == free_group_z(1));
    CHECK(cmp.coarse_result.at(0) == free_group_z(1));
    CHECK(cmp.coarse_result.at(1).trivial());
    CHECK(cmp.induced_ranks[0] == 1);
    CHECK(cmp.induced_ranks[1] == 0);
    CHECK_FALSE(cmp.stabilized);
}

TEST_CASE("five sectors against their shifted cover") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Subspace all = Subspace::all(z2);
    std::vector<Subspace> sectors = five_sectors(z2);
    ScaleSchedule sched{1, 2, 4};
    auto [shifted, shifted_target] = shift_cover(2, sectors, all, sched, 64);
    CHECK(shifted_target.mask() == all.mask());
    RefinementComparison cmp = refinement_comparison(all, sectors, shifted, z_group(), default_cech_params(64));
    CHECK(cmp.stabilized);
    CHECK(cmp.fine_result.at(1) == free_group_z(1));
    CHECK(cmp.coarse_result.at(1) == free_group_z(1));
    CHECK(cmp.induced_ranks[0] == 1);
    CHECK(cmp.induced_ranks[1] == 1);
}

TEST_CASE("refinement comparison rejects non-refinements") {
    Space z = line();
    Subspace all = Subspace::all(z);
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    try {
        refinement_comparison(all, {all}, rays, z_group(), default_cech_params(256));
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::NotARefinement);
    }
}
