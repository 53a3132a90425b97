#include <string>

#include "coarse/errors.hpp"
#include "coarse/maps.hpp"
#include "doctest.h"
#include "properties.hpp"

using namespace coarse;

TEST_CASE("coentourages are closed under union and subsets") {
    std::string err;
    CHECK_MESSAGE(coentourage_closure_suite(err), err);
}

TEST_CASE("a square is a coentourage exactly for bounded sets") {
    std::string err;
    CHECK_MESSAGE(bounded_square_suite(err), err);
}

TEST_CASE("verified covers satisfy the covering axioms") {
    std::string err;
    CHECK_MESSAGE(grothendieck_axioms_suite(err), err);
}

TEST_CASE("random Smith forms agree with the rational rank") {
    std::string err;
    CHECK_MESSAGE(snf_random_suite(err), err);
}

TEST_CASE("coboundary squares vanish on constructed complexes") {
    std::string err;
    CHECK_MESSAGE(complex_square_zero_suite(err), err);
}

TEST_CASE("cohomology ignores the cover member order") {
    std::string err;
    CHECK_MESSAGE(cohomology_permutation_suite(err), err);
}

TEST_CASE("cover characterizations agree on random block families") {
    // cover_verdict raises DisagreeingCharacterizations when the pair
    // characterization and the thickened-complement characterization split.
    Space zp = Space::zplus(300);
    Subspace all = Subspace::all(zp);
    const ScaleSchedule sched{1, 2, 4};
    std::mt19937 rng(424243);
    for (int i = 0; i < 30; ++i) {
        const int members = 1 + static_cast<int>(rng() % 3);
        std::vector<Subspace> family;
        for (int m = 0; m < members; ++m) {
            family.push_back(random_block_subspace(zp, rng, rng() % 2 == 0));
        }
        Verdict v = cover_verdict(all, family, sched, 256);
        CHECK((v.holds() || v.fails() || v.status == VerdictStatus::Inconclusive));
    }
}

TEST_CASE("closeness is an equivalence relation on map tables") {
    Space zp = Space::zplus(300);
    const ScaleSchedule sched{1, 2, 4};
    const int w = 128;
    MapTable id = MapTable::identity(zp, 192);
    MapTable s4 = MapTable::shift_line(zp, 4, 192);
    MapTable s9 = MapTable::shift_line(zp, 9, 192);

    CHECK(closeness_verdict(id, id, sched, w).holds());  // reflexive

    Verdict ab = closeness_verdict(id, s4, sched, w);
    Verdict ba = closeness_verdict(s4, id, sched, w);
    CHECK(ab.holds());  // symmetric, with the same bound
    CHECK(ba.holds());
    CHECK(ab.bound_radius == ba.bound_radius);

    CHECK(closeness_verdict(s4, s9, sched, w).holds());  // transitive
    Verdict ac = closeness_verdict(id, s9, sched, w);
    CHECK(ac.holds());
    CHECK(*ac.bound_radius <= *ab.bound_radius + *closeness_verdict(s4, s9, sched, w).bound_radius);
}

TEST_CASE("shifting a verified cover keeps it verified") {
    Space zp = Space::zplus(300);
    Subspace all = Subspace::all(zp);
    const ScaleSchedule sched{1, 2, 4};
    for (const std::vector<Subspace>& cover : zplus_interval_covers(zp)) {
        for (int r : {1, 3}) {
            auto [shifted, target] = shift_cover(r, cover, all, sched, 256);
            CHECK(cover_verdict(target, shifted, sched, 256).holds());
        }
    }
}
