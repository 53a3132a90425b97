#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "coarse/errors.hpp"
#include "coarse/logic.hpp"

using namespace coarse;

namespace {

const ScaleSchedule kSched{1, 2, 4};

Space line(int mw = 300) { return Space::zn(1, GridMetric::LInf, mw); }

}  // namespace

TEST_CASE("coentourage: opposite-sign pairs on the line") {
    Space z = line();
    Subspace pos = Subspace::ray(z, +1, 1);
    Subspace neg = Subspace::ray(z, -1, -1);
    PairPredicate c = PairPredicate::union_of(PairPredicate::cross(pos, neg), PairPredicate::cross(neg, pos));
    Verdict v = coentourage_verdict(c, kSched, 64);
    CHECK(v.holds());
    CHECK(v.scale_checked == 4);
    CHECK(v.window_checked == 64);
    REQUIRE(v.bound_radius.has_value());
    // Opposite-sign pairs at distance <= 4 stay within 3 of the origin.
    CHECK(*v.bound_radius <= 4);
}

TEST_CASE("coentourage: the diagonal fails") {
    Space z = line();
    Verdict v = coentourage_verdict(PairPredicate::diagonal(Subspace::all(z)), kSched, 64);
    CHECK(v.fails());
    REQUIRE_FALSE(v.witnesses.empty());
    for (auto [x, y] : v.witnesses) {
        CHECK(x == y);
        CHECK(z.dist_to_base(x) > 48);  // escape zone
    }
}

TEST_CASE("coentourage: the doubling graph holds with linear bound") {
    Space z = line();
    std::vector<std::pair<PointId, PointId>> graph;
    for (long long x = -140; x <= 140; ++x) {
        if (std::llabs(2 * x) <= 300) graph.emplace_back(z.line_point(x), z.line_point(2 * x));
    }
    Verdict v = coentourage_verdict(PairPredicate::explicit_pairs(z, std::move(graph)), kSched, 64);
    CHECK(v.holds());
    REQUIRE(v.bound_radius.has_value());
    CHECK(*v.bound_radius == 8);  // pairs (x, 2x) with |x| <= 4 reach shell 8
    // Per-scale probe bounds grow linearly with the scale.
    REQUIRE(v.probes.size() == 3);
    CHECK(v.probes[0].bound_full == 2);
    CHECK(v.probes[1].bound_full == 4);
    CHECK(v.probes[2].bound_full == 8);
}

TEST_CASE("coentourage window precondition") {
    Space z = line();
    CHECK_THROWS_AS(coentourage_verdict(PairPredicate::diagonal(Subspace::all(z)), {8}, 31), CoarseError);
    CHECK_THROWS_AS(coentourage_verdict(PairPredicate::diagonal(Subspace::all(z)), {}, 64), CoarseError);
}

TEST_CASE("bounded subsets") {
    Space zp = Space::zplus(300);
    Verdict v = is_bounded_subset(Subspace::block_union(zp, {{0, 10}}), 256);
    CHECK(v.holds());
    CHECK(v.scale_checked == 0);
    CHECK(v.bound_radius == 10);

    Space z = line();
    Verdict ev = is_bounded_subset(Subspace::mod_class(z, 2, 0), 256);
    CHECK(ev.fails());
    REQUIRE_FALSE(ev.witnesses.empty());
    for (auto [x, y] : ev.witnesses) {
        CHECK(x == y);
        CHECK(z.line_value(x) % 2 == 0);
        CHECK(z.dist_to_base(x) > 192);
    }

    // Geometric blocks [2^{2k}, 2^{2k+1}] reach every shell. Oracle: the
    // interval [193, 256] meets [256, 512], so a member sits past 3W/4.
    Verdict gb = is_bounded_subset(Subspace::blocks_geometric(zp, 2), 256);
    CHECK(gb.fails());
    REQUIRE_FALSE(gb.witnesses.empty());
    CHECK(gb.witnesses.front().first == 256);

    CHECK(is_bounded_subset(Subspace::empty(zp), 256).holds());
    CHECK(is_bounded_subset(Subspace::empty(zp), 256).bound_radius == 0);
}

TEST_CASE("cover: the two rays cover the line") {
    Space z = line();
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    Verdict v = cover_verdict(Subspace::all(z), rays, kSched, 256);
    CHECK(v.holds());
    REQUIRE(v.bound_radius.has_value());
    CHECK(*v.bound_radius <= 8);
}

TEST_CASE("cover: parity classes do not cover the line") {
    Space z = line();
    std::vector<Subspace> parity{Subspace::mod_class(z, 2, 0), Subspace::mod_class(z, 2, 1)};
    Verdict v = cover_verdict(Subspace::all(z), parity, kSched, 256);
    CHECK(v.fails());
    REQUIRE_FALSE(v.witnesses.empty());
    for (auto [x, y] : v.witnesses) {
        long long vx = z.line_value(x);
        long long vy = z.line_value(y);
        CHECK(std::llabs(vx - vy) == 1);  // adjacent pairs of opposite parity
        CHECK(std::max(std::llabs(vx), std::llabs(vy)) > 192);
    }
}

TEST_CASE("cover: empty family") {
    Space zp = Space::zplus(300);
    Verdict v = cover_verdict(Subspace::block_union(zp, {{0, 12}}), {}, kSched, 256);
    CHECK(v.holds());
    CHECK_THROWS_AS(cover_verdict(Subspace::all(zp), {}, kSched, 256), CoarseError);
    try {
        cover_verdict(Subspace::all(zp), {}, kSched, 256);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::EmptyFamilyOnUnbounded);
    }
}

namespace {

// The five plane sectors with opening 100 degrees used by the plane cover:
// integer direction pairs approximating 72-degree spaced rays.
std::vector<Subspace> five_sectors(const Space& z2) {
    return {
        Subspace::sector_cone(z2, 1000, 0, -174, 985),
        Subspace::sector_cone(z2, 309, 951, -990, 139),
        Subspace::sector_cone(z2, -809, 588, -438, -899),
        Subspace::sector_cone(z2, -809, -588, 719, -695),
        Subspace::sector_cone(z2, 309, -951, 883, 469),
    };
}

}  // namespace

TEST_CASE("cover: five wide sectors cover the plane") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    std::vector<Subspace> sectors = five_sectors(z2);
    // Brute oracle: every universe point lies in some sector, and adjacent
    // sectors overlap on full-opening wedges.
    for (PointId x = 0; x < z2.size(); ++x) {
        bool hit = false;
        for (const Subspace& s : sectors) hit = hit || s.contains(x);
        CHECK(hit);
    }
    Verdict v = cover_verdict(Subspace::all(z2), sectors, kSched, 64);
    CHECK(v.holds());
}

TEST_CASE("shift_cover thickens families") {
    Space z = line();
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    Subspace all = Subspace::all(z);

    auto [same, same_target] = shift_cover(0, rays, all, kSched, 256);
    REQUIRE(same.size() == 2);
    for (PointId x = 0; x < z.size(); ++x) {
        CHECK(same[0].contains(x) == rays[0].contains(x));
        CHECK(same[1].contains(x) == rays[1].contains(x));
        CHECK(same_target.contains(x));
    }

    auto [shifted, target] = shift_cover(3, rays, all, kSched, 256);
    Subspace lo = Subspace::ray(z, -1, 3);
    Subspace hi = Subspace::ray(z, +1, -3);
    for (PointId x = 0; x < z.size(); ++x) {
        CHECK(shifted[0].contains(x) == lo.contains(x));
        CHECK(shifted[1].contains(x) == hi.contains(x));
    }
    CHECK(cover_verdict(target, shifted, kSched, 256).holds());

    // A non-cover is rejected up front.
    std::vector<Subspace> parity{Subspace::mod_class(z, 2, 0), Subspace::mod_class(z, 2, 1)};
    CHECK_THROWS_AS(shift_cover(1, parity, all, kSched, 256), CoarseError);
}

TEST_CASE("shift_cover on the plane sectors") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    std::vector<Subspace> sectors = five_sectors(z2);
    auto [shifted, target] = shift_cover(2, sectors, Subspace::all(z2), kSched, 64);
    CHECK(cover_verdict(target, shifted, kSched, 64).holds());
    // Thickening only grows members.
    for (std::size_t i = 0; i < sectors.size(); ++i) {
        for (PointId x = 0; x < z2.size(); ++x) {
            if (sectors[i].contains(x)) CHECK(shifted[i].contains(x));
        }
    }
}

TEST_CASE("refinements") {
    Space z = line();
    std::vector<Subspace> rays{Subspace::ray(z, -1), Subspace::ray(z, +1)};
    auto self_ref = is_refinement(rays, rays, 256);
    REQUIRE(self_ref.has_value());
    CHECK(*self_ref == std::vector<int>{0, 1});

    Subspace v = Subspace::ray(z, +1, -10);
    std::vector<Subspace> fine{Subspace::intersection_of(v, Subspace::mod_class(z, 2, 0).complement()),
                               Subspace::intersection_of(v, Subspace::mod_class(z, 2, 1).complement())};
    auto sub_ref = is_refinement(fine, {v}, 256);
    REQUIRE(sub_ref.has_value());
    CHECK(*sub_ref == std::vector<int>{0, 0});

    // Rays do not refine the parity classes.
    CHECK_FALSE(is_refinement(rays, {Subspace::mod_class(z, 2, 0), Subspace::mod_class(z, 2, 1)}, 256).has_value());
}

TEST_CASE("closeness of line maps") {
    Space z = line();
    MapTable id = MapTable::identity(z, 130);
    Verdict v5 = closeness_verdict(id, MapTable::shift_line(z, 5, 130), kSched, 64);
    CHECK(v5.holds());
    CHECK(v5.bound_radius == 5);

    Verdict vd = closeness_verdict(id, MapTable::affine_line(z, z, 2, 0, 130), kSched, 64);
    CHECK(vd.fails());
    REQUIRE_FALSE(vd.witnesses.empty());
    for (auto [fx, gx] : vd.witnesses) CHECK(z.line_value(gx) == 2 * z.line_value(fx));

    Space zp = Space::zplus(300);
    Verdict v1 = closeness_verdict(MapTable::shift_line(zp, 1, 130), MapTable::identity(zp, 130), kSched, 64);
    CHECK(v1.holds());
    CHECK(v1.bound_radius == 1);

    CHECK_THROWS_AS(closeness_verdict(id, MapTable::identity(zp, 130), kSched, 64), CoarseError);
    CHECK_THROWS_AS(closeness_verdict(id, MapTable::identity(z, 32), kSched, 64), CoarseError);
}

TEST_CASE("coarse map checks") {
    Space z2 = Space::zn(2, GridMetric::LInf, 80);
    Space zp = Space::zplus(300);
    Verdict vr = coarse_map_verdict(MapTable::dist_map(z2, zp, 70), kSched, 64);
    CHECK(vr.holds());
    // Uniform bounds s(r) = r per scale.
    REQUIRE(vr.probes.size() >= 3);
    CHECK(vr.probes[0].bound_full == 1);
    CHECK(vr.probes[1].bound_full == 2);
    CHECK(vr.probes[2].bound_full == 4);

    Space z = line();
    Verdict vc = coarse_map_verdict(MapTable::affine_line(z, z, 0, 0, 130), kSched, 64);
    CHECK(vc.fails());  // constant map: preimages of balls are unbounded

    Verdict vdbl = coarse_map_verdict(MapTable::affine_line(z, z, 2, 0, 130), kSched, 64);
    CHECK(vdbl.holds());
}

TEST_CASE("coarse surjectivity") {
    Space z = line();
    Verdict ve = coarsely_surjective_verdict(MapTable::affine_line(z, z, 2, 0, 130), kSched, 64);
    CHECK(ve.holds());
    CHECK(ve.bound_radius == 1);

    Space zp = Space::zplus(300);
    Verdict vh = coarsely_surjective_verdict(MapTable::affine_line(zp, z, 1, 0, 130), kSched, 64);
    CHECK(vh.fails());
    REQUIRE_FALSE(vh.witnesses.empty());
    for (auto [y, src] : vh.witnesses) {
        CHECK(z.line_value(y) < 0);  // uncovered shells are the negative ones
        CHECK(z.line_value(src) >= 0);
    }
}

TEST_CASE("flasque: the shift on the half line") {
    Space zp = Space::zplus(300);
    FlasqueReport rep = flasque_conditions(zp, MapTable::shift_line(zp, 1, 130), kSched, 64, 32, 0);
    CHECK(rep.close_to_identity.holds());
    CHECK(rep.escapes_bounded_sets.holds());
    CHECK(rep.uniform_iterates.holds());
    CHECK(rep.overall.holds());
    CHECK(flasque_verdict(zp, MapTable::shift_line(zp, 1, 130), kSched, 64, 32, 0).holds());
}

TEST_CASE("flasque: the identity on the line fails the escape condition") {
    Space z = line();
    FlasqueReport rep = flasque_conditions(z, MapTable::identity(z, 130), kSched, 64, 32, 0);
    CHECK(rep.close_to_identity.holds());
    CHECK(rep.escapes_bounded_sets.fails());
    CHECK(rep.uniform_iterates.holds());
    CHECK(rep.overall.fails());
}

TEST_CASE("flasque: the diagonal shift on the quarter plane") {
    Space zp2 = Space::product(Space::zplus(80), Space::zplus(80));
    MapTable phi = MapTable::from_function(zp2, zp2, 40, [&](PointId x) {
        return zp2.product_point(zp2.product_sub(x, 0) + 1, zp2.product_sub(x, 1) + 1);
    });
    CHECK(flasque_verdict(zp2, phi, kSched, 32, 16, 0).holds());
}

TEST_CASE("flasque: iterates must stay inside the table") {
    Space zp = Space::zplus(60);
    MapTable phi = MapTable::shift_line(zp, 1, 35);
    try {
        flasque_verdict(zp, phi, kSched, 32, 64, 0);
        CHECK(false);
    } catch (const CoarseError& e) {
        CHECK(e.code() == ErrorCode::IterateEscapesWindow);
    }
}
