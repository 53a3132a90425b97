/**
 * Property suites shared by the unit tests and the acceptance runner.
 * Each suite returns true on success; on the first failure it records a
 * short reason and returns false.
 */

#ifndef COARSE_TESTS_PROPERTIES_HPP
#define COARSE_TESTS_PROPERTIES_HPP

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coarse/cech.hpp"
#include "coarse/logic.hpp"
#include "coarse/pairs.hpp"
#include "coarse/snf.hpp"
#include "covers.hpp"

namespace coarse {

inline bool suite_check(bool cond, std::string& err, const std::string& msg) {
    if (!cond && err.empty()) err = msg;
    return cond;
}

/** A random union of snapped blocks over the half line; tail with odd tag. */
inline Subspace random_block_subspace(const Space& zp, std::mt19937& rng, bool with_tail) {
    std::vector<std::pair<long long, long long>> blocks;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int b = 0; b < count; ++b) {
        long long lo = 16 * static_cast<long long>(rng() % 12);
        long long len = 16 * (1 + static_cast<long long>(rng() % 4));
        blocks.emplace_back(lo, std::min<long long>(lo + len, 176));
    }
    if (with_tail) {
        long long lo = 16 * static_cast<long long>(rng() % 16);
        blocks.emplace_back(lo, kNoUpperBound);
    }
    return Subspace::block_union(zp, blocks);
}

/** Coentourages stay coentourages under finite union and under subsets. */
inline bool coentourage_closure_suite(std::string& err) {
    bool ok = true;
    Space z = Space::zn(1, GridMetric::LInf, 300);
    const ScaleSchedule sched{1, 2, 4};
    const int w = 256;

    PairPredicate c1 = PairPredicate::cross(Subspace::ray(z, -1, -1), Subspace::ray(z, +1, 1));
    PairPredicate c2 = PairPredicate::cross(Subspace::ray(z, +1, 1), Subspace::ray(z, -1, -1));
    std::vector<std::pair<PointId, PointId>> doubling;
    for (long long v = 1; v <= 120; ++v) doubling.emplace_back(z.line_point(v), z.line_point(2 * v));
    PairPredicate c3 = PairPredicate::explicit_pairs(z, doubling);

    ok &= suite_check(coentourage_verdict(c1, sched, w).holds(), err, "opposite rays are not a coentourage");
    ok &= suite_check(coentourage_verdict(c2, sched, w).holds(), err, "transposed rays are not a coentourage");
    ok &= suite_check(coentourage_verdict(c3, sched, w).holds(), err, "doubling graph is not a coentourage");
    ok &= suite_check(coentourage_verdict(PairPredicate::union_of(c1, c2), sched, w).holds(), err,
                      "union of coentourages failed");
    ok &= suite_check(coentourage_verdict(PairPredicate::union_of(c1, c3), sched, w).holds(), err,
                      "union with the doubling graph failed");
    ok &= suite_check(coentourage_verdict(PairPredicate::union_of(PairPredicate::union_of(c1, c2), c3), sched, w).holds(),
                      err, "triple union failed");

    Subspace evens = Subspace::mod_class(z, 2, 0);
    PairPredicate s1 = PairPredicate::intersection_of(c1, PairPredicate::square(evens));
    PairPredicate s2 = PairPredicate::intersection_of(c3, PairPredicate::square(Subspace::ray(z, +1, 4)));
    ok &= suite_check(coentourage_verdict(s1, sched, w).holds(), err, "subset of ray pairs failed");
    ok &= suite_check(coentourage_verdict(s2, sched, w).holds(), err, "subset of the doubling graph failed");
    return ok;
}

/** B x B is a coentourage exactly when B is bounded. */
inline bool bounded_square_suite(std::string& err) {
    bool ok = true;
    Space zp = Space::zplus(300);
    const ScaleSchedule sched{1, 2, 4};
    const int w = 256;

    std::vector<Subspace> cases;
    std::vector<PointId> low(11);
    for (int i = 0; i <= 10; ++i) low[static_cast<std::size_t>(i)] = i;
    cases.push_back(Subspace::points(zp, low));
    cases.push_back(Subspace::block_union(zp, {{0, 100}}));
    cases.push_back(Subspace::block_union(zp, {{32, 96}, {128, 160}}));
    cases.push_back(Subspace::empty(zp));
    cases.push_back(Subspace::all(zp));
    cases.push_back(Subspace::mod_class(zp, 2, 0));
    cases.push_back(Subspace::block_union(zp, {{160, kNoUpperBound}}));
    cases.push_back(Subspace::blocks_geometric(zp, 2));

    std::mt19937 rng(7001);
    for (int i = 0; i < 10; ++i) cases.push_back(random_block_subspace(zp, rng, false));
    for (int i = 0; i < 10; ++i) cases.push_back(random_block_subspace(zp, rng, true));

    for (const Subspace& u : cases) {
        Verdict direct = is_bounded_subset(u, w);
        Verdict square = coentourage_verdict(PairPredicate::square(u), sched, w);
        std::ostringstream os;
        os << "square mismatch on " << u.describe() << ": " << verdict_status_name(direct.status) << " vs "
           << verdict_status_name(square.status);
        ok &= suite_check(direct.status == square.status, err, os.str());
        if (direct.holds() && square.holds()) {
            ok &= suite_check(direct.bound_radius == square.bound_radius, err,
                              "bound mismatch on " + u.describe());
        }
    }
    return ok;
}

/** Identity, composition, and restriction stability of verified covers. */
inline bool grothendieck_axioms_suite(std::string& err) {
    bool ok = true;
    Space zp = Space::zplus(300);
    const ScaleSchedule sched{1, 2, 4};
    const int w = 256;
    Subspace all = Subspace::all(zp);

    // Identity covers.
    Subspace tail = Subspace::block_union(zp, {{64, kNoUpperBound}});
    Subspace split = Subspace::block_union(zp, {{0, 64}, {128, kNoUpperBound}});
    for (const Subspace& y : {all, tail, split}) {
        ok &= suite_check(cover_verdict(y, {y}, sched, w).holds(), err, "identity cover failed on " + y.describe());
    }

    // Composition: covering each member of a cover yields a cover.
    Subspace u1 = Subspace::block_union(zp, {{0, 160}});
    Subspace u2 = Subspace::block_union(zp, {{96, kNoUpperBound}});
    Subspace v11 = Subspace::block_union(zp, {{0, 100}});
    Subspace v12 = Subspace::block_union(zp, {{60, 160}});
    Subspace v21 = Subspace::block_union(zp, {{96, 224}});
    Subspace v22 = Subspace::block_union(zp, {{192, kNoUpperBound}});
    ok &= suite_check(cover_verdict(all, {u1, u2}, sched, w).holds(), err, "outer cover failed");
    ok &= suite_check(cover_verdict(u1, {v11, v12}, sched, w).holds(), err, "inner cover of the block failed");
    ok &= suite_check(cover_verdict(u2, {v21, v22}, sched, w).holds(), err, "inner cover of the tail failed");
    ok &= suite_check(cover_verdict(all, {v11, v12, v21, v22}, sched, w).holds(), err, "composed cover failed");

    // Stability: intersecting a cover with a subspace covers the subspace.
    Subspace evens = Subspace::mod_class(zp, 2, 0);
    Subspace mixed = Subspace::block_union(zp, {{32, 96}, {160, kNoUpperBound}});
    for (const Subspace& y : {tail, evens, mixed}) {
        std::vector<Subspace> cut{Subspace::intersection_of(u1, y), Subspace::intersection_of(u2, y)};
        ok &= suite_check(cover_verdict(y, cut, sched, w).holds(), err, "restricted cover failed on " + y.describe());
    }
    return ok;
}

/** Smith form on random matrices against the rational rank oracle. */
inline bool snf_random_suite(std::string& err, int count = 500, int max_dim = 40) {
    bool ok = true;
    std::mt19937 rng(99173);
    for (int i = 0; i < count && ok; ++i) {
        const int rows = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_dim));
        const int cols = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_dim));
        // Sparse fill: roughly one entry in five is nonzero, magnitudes up to 9.
        IntegerMatrix m = IntegerMatrix::Zero(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (rng() % 5 != 0) continue;
                const int v = 1 + static_cast<int>(rng() % 9);
                m(r, c) = (rng() % 2 == 0) ? v : -v;
            }
        }
        SmithResult s = smith_normal_form(m);  // factorization is re-verified inside
        for (std::size_t d = 0; d + 1 < s.divisors.size(); ++d) {
            ok &= suite_check(s.divisors[d + 1] % s.divisors[d] == 0, err, "divisor chain broken");
        }
        ok &= suite_check(s.rank() == rational_rank(m), err, "Smith rank disagrees with the rational rank");
    }
    return ok;
}

/** The coboundary square vanishes on every constructed complex. */
inline bool complex_square_zero_suite(std::string& err) {
    bool ok = true;
    const AbelianGroupFG z = free_group_z(1);

    std::vector<CechComplex> complexes;
    {
        Space zl = Space::zn(1, GridMetric::LInf, 300);
        Subspace all = Subspace::all(zl);
        complexes.push_back(
            cech_complex(all, {Subspace::ray(zl, -1), Subspace::ray(zl, +1)}, z, default_cech_params(256)));
    }
    {
        Space zp = Space::zplus(300);
        Subspace all = Subspace::all(zp);
        complexes.push_back(cech_complex(all, {all}, z, default_cech_params(256)));
        for (const std::vector<Subspace>& cover : zplus_interval_covers(zp)) {
            complexes.push_back(cech_complex(all, cover, z, default_cech_params(256)));
        }
    }
    {
        Space z2 = Space::zn(2, GridMetric::LInf, 80);
        Subspace all = Subspace::all(z2);
        std::vector<Subspace> s = five_sectors(z2);
        complexes.push_back(cech_complex(all, s, z, default_cech_params(64)));
        complexes.push_back(cech_complex(
            all, {Subspace::union_of({s[0], s[1], s[2]}), Subspace::union_of({s[2], s[3], s[4], s[0]})}, z,
            default_cech_params(64)));
    }

    for (const CechComplex& cx : complexes) {
        for (int k = 0; k <= cx.max_degree; ++k) {
            for (const CechBasisElement& e : cx.basis[static_cast<std::size_t>(k)]) {
                for (std::size_t i = 1; i < e.tuple.size(); ++i) {
                    ok &= suite_check(e.tuple[i - 1] < e.tuple[i], err, "basis tuple not strictly increasing");
                }
            }
        }
        for (int k = 0; k + 1 <= cx.max_degree; ++k) {
            IntegerMatrix square =
                cx.coboundary[static_cast<std::size_t>(k) + 1] * cx.coboundary[static_cast<std::size_t>(k)];
            for (Eigen::Index i = 0; i < square.rows(); ++i) {
                for (Eigen::Index j = 0; j < square.cols(); ++j) {
                    ok &= suite_check(square(i, j) == 0, err, "coboundary square has a nonzero entry");
                }
            }
        }
    }
    return ok;
}

/** Cohomology does not depend on the order of the cover members. */
inline bool cohomology_permutation_suite(std::string& err) {
    bool ok = true;
    const AbelianGroupFG z = free_group_z(1);

    auto same = [&](const CohomologyResult& a, const CohomologyResult& b) {
        if (a.cochain_ranks != b.cochain_ranks || a.boundary_ranks != b.boundary_ranks) return false;
        if (a.groups.size() != b.groups.size()) return false;
        for (std::size_t k = 0; k < a.groups.size(); ++k) {
            if (!(a.groups[k] == b.groups[k]) || !(a.integral[k] == b.integral[k])) return false;
        }
        return true;
    };

    {
        Space zp = Space::zplus(300);
        Subspace all = Subspace::all(zp);
        std::vector<Subspace> cover = zplus_interval_covers(zp)[1];
        std::vector<int> order{0, 1, 2};
        CohomologyResult base = cohomology(cech_complex(all, cover, z, default_cech_params(256)));
        do {
            std::vector<Subspace> perm;
            for (int i : order) perm.push_back(cover[static_cast<std::size_t>(i)]);
            CohomologyResult h = cohomology(cech_complex(all, perm, z, default_cech_params(256)));
            ok &= suite_check(same(base, h), err, "three-block cover depends on member order");
        } while (std::next_permutation(order.begin(), order.end()));
    }
    {
        Space z2 = Space::zn(2, GridMetric::LInf, 80);
        Subspace all = Subspace::all(z2);
        std::vector<Subspace> sectors = five_sectors(z2);
        CohomologyResult base = cohomology(cech_complex(all, sectors, z, default_cech_params(64)));
        std::mt19937 rng(515);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Subspace> perm = sectors;
            std::shuffle(perm.begin(), perm.end(), rng);
            CohomologyResult h = cohomology(cech_complex(all, perm, z, default_cech_params(64)));
            ok &= suite_check(same(base, h), err, "sector cover depends on member order");
        }
    }
    return ok;
}

}  // namespace coarse

#endif  // COARSE_TESTS_PROPERTIES_HPP
