#include "coarse/cech.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "coarse/errors.hpp"
#include "coarse/logic.hpp"
#include "coarse/snf.hpp"

namespace coarse {

CechParams default_cech_params(int window) { return {ScaleSchedule{1, 2, 4}, default_ends_params(window)}; }

AbelianGroupFG CohomologyResult::at(int k) const {
    if (k < 0 || k >= static_cast<int>(groups.size())) return trivial_group();
    return groups[static_cast<std::size_t>(k)];
}

AbelianGroupFG CohomologyResult::integral_at(int k) const {
    if (k < 0 || k >= static_cast<int>(integral.size())) return trivial_group();
    return integral[static_cast<std::size_t>(k)];
}

namespace {

std::string tuple_text(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

Subspace tuple_intersection(const Subspace& target, const std::vector<Subspace>& cover, const std::vector<int>& t) {
    Subspace u = target;
    for (int i : t) u = Subspace::intersection_of(u, cover[static_cast<std::size_t>(i)]);
    return u;
}

/**
 * The end assignment along an inclusion, read off the label arrays of the
 * two reports. Deep labeled points of the smaller set stay labeled in the
 * larger one, and a connected component lands in a single end, so the
 * assignment is total and single-valued; anything else is an error.
 */
std::vector<int> label_assignment(const EndsReport& sub, const EndsReport& super, const std::string& what) {
    std::vector<int> assign(static_cast<std::size_t>(sub.count), -1);
    for (std::size_t id = 0; id < sub.labels.size(); ++id) {
        std::int32_t u = sub.labels[id];
        if (u < 0) continue;
        std::int32_t v = id < super.labels.size() ? super.labels[id] : -1;
        if (v < 0) continue;
        int& slot = assign[static_cast<std::size_t>(u)];
        if (slot == -1) {
            slot = v;
        } else if (slot != v) {
            throw CoarseError(ErrorCode::AmbiguousEndRestriction,
                              what + ": an end meets two ends of the enclosing set");
        }
    }
    for (std::size_t u = 0; u < assign.size(); ++u) {
        if (assign[u] < 0) {
            throw CoarseError(ErrorCode::AmbiguousEndRestriction,
                              what + ": an end meets no end of the enclosing set");
        }
    }
    return assign;
}

bool matrix_is_zero(const IntegerMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) return false;
        }
    }
    return true;
}

}  // namespace

AbelianGroupFG constant_sections(const Subspace& u, const AbelianGroupFG& coeff, const CechParams& params) {
    EndsReport rep = ends(u, params.ends);
    if (!rep.finite()) {
        throw CoarseError(ErrorCode::InfiniteEnds, "constant_sections: " + u.describe() + " has " +
                                                       ends_status_name(rep.status) + " ends");
    }
    return power_group(coeff, rep.count);
}

CechComplex cech_complex(const Subspace& target, const std::vector<Subspace>& cover, const AbelianGroupFG& coeff,
                         const CechParams& params) {
    const int w = params.ends.window;
    Verdict cv = cover_verdict(target, cover, params.sched, w);
    if (!cv.holds()) {
        throw CoarseError(ErrorCode::CoverNotVerified,
                          std::string("cech_complex: cover verdict is ") + verdict_status_name(cv.status));
    }

    CechComplex cx;
    cx.cover = cover;
    cx.max_degree = static_cast<int>(cover.size()) - 1;
    cx.coeff = coeff;
    cx.params = params;
    const int K = cx.max_degree;
    if (K < 0) return cx;  // empty cover over a verified-bounded target

    cx.basis.resize(static_cast<std::size_t>(K) + 1);
    cx.sections.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        std::vector<int> cur;
        auto gen = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == k + 1) {
                Subspace u = tuple_intersection(target, cover, cur);
                if (is_bounded_subset(u, w).holds()) return;
                EndsReport rep = ends(u, params.ends);
                if (!rep.finite()) {
                    throw CoarseError(ErrorCode::InfiniteEndsInIntersection,
                                      "cech_complex: intersection " + tuple_text(cur) + " has " +
                                          ends_status_name(rep.status) + " ends");
                }
                if (rep.count == 0) return;
                TupleSections ts;
                ts.tuple = cur;
                ts.first_basis = static_cast<int>(cx.basis[static_cast<std::size_t>(k)].size());
                ts.report = std::move(rep);
                for (int e = 0; e < ts.report.count; ++e) {
                    cx.basis[static_cast<std::size_t>(k)].push_back({cur, e});
                }
                cx.sections[static_cast<std::size_t>(k)].push_back(std::move(ts));
                return;
            }
            for (int i = next; i < static_cast<int>(cover.size()); ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        gen(gen, 0);
    }

    std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const auto& secs = cx.sections[static_cast<std::size_t>(k)];
        for (int s = 0; s < static_cast<int>(secs.size()); ++s) lookup[static_cast<std::size_t>(k)][secs[static_cast<std::size_t>(s)].tuple] = s;
    }

    cx.coboundary.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const Eigen::Index rows = k < K ? static_cast<Eigen::Index>(cx.basis[static_cast<std::size_t>(k) + 1].size()) : 0;
        const Eigen::Index cols = static_cast<Eigen::Index>(cx.basis[static_cast<std::size_t>(k)].size());
        IntegerMatrix d = IntegerMatrix::Zero(rows, cols);
        if (k < K) {
            for (const TupleSections& ts : cx.sections[static_cast<std::size_t>(k) + 1]) {
                for (int nu = 0; nu <= k + 1; ++nu) {
                    std::vector<int> face = ts.tuple;
                    face.erase(face.begin() + nu);
                    auto it = lookup[static_cast<std::size_t>(k)].find(face);
                    if (it == lookup[static_cast<std::size_t>(k)].end()) continue;  // bounded face: zero sections
                    const TupleSections& fs = cx.sections[static_cast<std::size_t>(k)][static_cast<std::size_t>(it->second)];
                    std::vector<int> assign = label_assignment(
                        ts.report, fs.report, "cech_complex " + tuple_text(ts.tuple) + " -> " + tuple_text(face));
                    const int sign = nu % 2 == 0 ? 1 : -1;
                    for (int u = 0; u < ts.report.count; ++u) {
                        d(ts.first_basis + u, fs.first_basis + assign[static_cast<std::size_t>(u)]) += sign;
                    }
                }
            }
        }
        cx.coboundary[static_cast<std::size_t>(k)] = std::move(d);
    }

    for (int k = 0; k + 1 <= K; ++k) {
        IntegerMatrix square = cx.coboundary[static_cast<std::size_t>(k) + 1] * cx.coboundary[static_cast<std::size_t>(k)];
        if (!matrix_is_zero(square)) throw std::logic_error("cech_complex: coboundary square is nonzero");
    }
    return cx;
}

CohomologyResult cohomology(const CechComplex& cx) {
    CohomologyResult res;
    res.coeff = cx.coeff;
    res.params = cx.params;
    const int K = cx.max_degree;
    if (K < 0) return res;

    res.cochain_ranks.resize(static_cast<std::size_t>(K) + 1);
    res.boundary_ranks.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        res.cochain_ranks[static_cast<std::size_t>(k)] = cx.cochain_rank(k);
        res.boundary_ranks[static_cast<std::size_t>(k)] = rational_rank(cx.coboundary[static_cast<std::size_t>(k)]);
    }

    res.integral.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const int below = k > 0 ? res.boundary_ranks[static_cast<std::size_t>(k) - 1] : 0;
        const int betti = res.cochain_ranks[static_cast<std::size_t>(k)] - res.boundary_ranks[static_cast<std::size_t>(k)] - below;
        if (betti < 0) throw std::logic_error("cohomology: negative free rank");
        std::vector<Integer> orders;
        if (k > 0) {
            SmithResult snf = smith_normal_form(cx.coboundary[static_cast<std::size_t>(k) - 1]);
            for (const Integer& d : snf.divisors) {
                if (d > 1) orders.push_back(d);
            }
        }
        res.integral[static_cast<std::size_t>(k)] = canonical_group(betti, std::move(orders));
    }

    res.groups.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const AbelianGroupFG above = k + 1 <= K ? res.integral[static_cast<std::size_t>(k) + 1] : trivial_group();
        res.groups[static_cast<std::size_t>(k)] = universal_coefficients(res.integral[static_cast<std::size_t>(k)], above, cx.coeff);
    }
    return res;
}

MayerVietorisReport mayer_vietoris_report(const Subspace& target, const Subspace& a, const Subspace& b,
                                          const AbelianGroupFG& coeff, const CechParams& params) {
    CechComplex cx = cech_complex(target, {a, b}, coeff, params);

    MayerVietorisReport rep;
    rep.two_cover = cohomology(cx);

    Subspace ta = Subspace::intersection_of(target, a);
    Subspace tb = Subspace::intersection_of(target, b);
    Subspace ti = Subspace::intersection_of(ta, tb);
    EndsReport et = ends(target, params.ends);
    EndsReport ea = ends(ta, params.ends);
    EndsReport eb = ends(tb, params.ends);
    EndsReport ei = ends(ti, params.ends);
    for (const EndsReport* r : {&et, &ea, &eb, &ei}) {
        if (!r->finite()) {
            throw CoarseError(ErrorCode::InfiniteEnds, std::string("mayer_vietoris_report: a piece has ") +
                                                           ends_status_name(r->status) + " ends");
        }
    }
    rep.ends_target = et.count;
    rep.ends_a = ea.count;
    rep.ends_b = eb.count;
    rep.ends_intersection = ei.count;
    rep.h0_target = power_group(coeff, et.count);
    rep.h0_sum = direct_sum(power_group(coeff, ea.count), power_group(coeff, eb.count));
    rep.h0_intersection = power_group(coeff, ei.count);

    IntegerMatrix iota = IntegerMatrix::Zero(ea.count + eb.count, et.count);
    std::vector<int> at = label_assignment(ea, et, "mayer_vietoris_report A");
    std::vector<int> bt = label_assignment(eb, et, "mayer_vietoris_report B");
    for (int u = 0; u < ea.count; ++u) iota(u, at[static_cast<std::size_t>(u)]) = 1;
    for (int u = 0; u < eb.count; ++u) iota(ea.count + u, bt[static_cast<std::size_t>(u)]) = 1;

    IntegerMatrix phi = IntegerMatrix::Zero(ei.count, ea.count + eb.count);
    if (ei.count > 0) {
        std::vector<int> ia = label_assignment(ei, ea, "mayer_vietoris_report A cap B -> A");
        std::vector<int> ib = label_assignment(ei, eb, "mayer_vietoris_report A cap B -> B");
        for (int u = 0; u < ei.count; ++u) {
            phi(u, ia[static_cast<std::size_t>(u)]) += 1;
            phi(u, ea.count + ib[static_cast<std::size_t>(u)]) -= 1;
        }
    }
    rep.rank_restriction = rational_rank(iota);
    rep.rank_difference = rational_rank(phi);
    rep.restriction = std::move(iota);
    rep.difference = std::move(phi);
    rep.connecting_rank = rep.ends_intersection - rep.rank_difference;

    const int h1 = rep.two_cover.integral_at(1).rank;
    rep.exact_at_target = rep.rank_restriction == rep.ends_target;
    rep.exact_at_sum = rep.ends_a + rep.ends_b - rep.rank_difference == rep.rank_restriction;
    rep.exact_at_intersection = rep.connecting_rank == h1;
    rep.exact = rep.exact_at_target && rep.exact_at_sum && rep.exact_at_intersection;
    return rep;
}

RefinementComparison refinement_comparison(const Subspace& target, const std::vector<Subspace>& fine,
                                           const std::vector<Subspace>& coarse, const AbelianGroupFG& coeff,
                                           const CechParams& params) {
    std::optional<std::vector<int>> sigma = is_refinement(fine, coarse, params.ends.window);
    if (!sigma) {
        throw CoarseError(ErrorCode::NotARefinement,
                          "refinement_comparison: some fine member lies in no coarse member");
    }
    CechComplex fx = cech_complex(target, fine, coeff, params);
    CechComplex gx = cech_complex(target, coarse, coeff, params);

    RefinementComparison cmp;
    cmp.assignment = *sigma;
    cmp.fine_result = cohomology(fx);
    cmp.coarse_result = cohomology(gx);

    const int kf = fx.max_degree;
    const int kc = gx.max_degree;
    std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(std::max(kc, -1)) + 1);
    for (int k = 0; k <= kc; ++k) {
        const auto& secs = gx.sections[static_cast<std::size_t>(k)];
        for (int s = 0; s < static_cast<int>(secs.size()); ++s) lookup[static_cast<std::size_t>(k)][secs[static_cast<std::size_t>(s)].tuple] = s;
    }

    cmp.chain_map.resize(static_cast<std::size_t>(std::max(kf, -1)) + 1);
    for (int k = 0; k <= kf; ++k) {
        const Eigen::Index rows = fx.cochain_rank(k);
        const Eigen::Index cols = gx.cochain_rank(k);
        IntegerMatrix phi = IntegerMatrix::Zero(rows, cols);
        if (cols > 0) {
            for (const TupleSections& ts : fx.sections[static_cast<std::size_t>(k)]) {
                std::vector<int> image(ts.tuple.size());
                for (std::size_t i = 0; i < ts.tuple.size(); ++i) {
                    image[i] = cmp.assignment[static_cast<std::size_t>(ts.tuple[i])];
                }
                int sign = 1;
                for (std::size_t i = 1; i < image.size(); ++i) {
                    for (std::size_t j = i; j > 0 && image[j] < image[j - 1]; --j) {
                        std::swap(image[j], image[j - 1]);
                        sign = -sign;
                    }
                }
                bool repeated = false;
                for (std::size_t i = 1; i < image.size(); ++i) repeated = repeated || image[i] == image[i - 1];
                if (repeated) continue;  // degenerate image tuple: zero cochain component
                auto it = lookup[static_cast<std::size_t>(k)].find(image);
                if (it == lookup[static_cast<std::size_t>(k)].end()) continue;  // bounded on the coarse side
                const TupleSections& cs = gx.sections[static_cast<std::size_t>(k)][static_cast<std::size_t>(it->second)];
                std::vector<int> assign =
                    label_assignment(ts.report, cs.report, "refinement_comparison " + tuple_text(ts.tuple));
                for (int u = 0; u < ts.report.count; ++u) {
                    phi(ts.first_basis + u, cs.first_basis + assign[static_cast<std::size_t>(u)]) = sign;
                }
            }
        }
        cmp.chain_map[static_cast<std::size_t>(k)] = std::move(phi);
    }

    for (int k = 0; k < kf; ++k) {
        IntegerMatrix lhs = fx.coboundary[static_cast<std::size_t>(k)] * cmp.chain_map[static_cast<std::size_t>(k)];
        IntegerMatrix rhs;
        if (k <= kc) {
            rhs = cmp.chain_map[static_cast<std::size_t>(k) + 1] * gx.coboundary[static_cast<std::size_t>(k)];
        } else {
            rhs = IntegerMatrix::Zero(lhs.rows(), lhs.cols());
        }
        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || !matrix_is_zero(lhs - rhs)) {
            throw std::logic_error("refinement_comparison: chain map does not commute with the coboundaries");
        }
    }

    const int top = std::max(kf, kc);
    cmp.induced_ranks.assign(static_cast<std::size_t>(std::max(top, -1)) + 1, 0);
    for (int k = 0; k <= top; ++k) {
        if (k > kf || k > kc) continue;  // one side has no cochains: zero map
        RationalMatrix cocycles = rational_kernel_basis(gx.coboundary[static_cast<std::size_t>(k)]);
        RationalMatrix image = to_rational(cmp.chain_map[static_cast<std::size_t>(k)]) * cocycles;
        RationalMatrix coboundaries =
            k > 0 ? to_rational(fx.coboundary[static_cast<std::size_t>(k) - 1])
                  : RationalMatrix::Zero(static_cast<Eigen::Index>(fx.cochain_rank(k)), 0);
        RationalMatrix joint = RationalMatrix::Zero(image.rows(), image.cols() + coboundaries.cols());
        joint.block(0, 0, image.rows(), image.cols()) = image;
        joint.block(0, image.cols(), coboundaries.rows(), coboundaries.cols()) = coboundaries;
        cmp.induced_ranks[static_cast<std::size_t>(k)] = field_rank(joint) - field_rank(coboundaries);
    }

    cmp.stabilized = true;
    for (int k = 0; k <= top; ++k) {
        if (!(cmp.fine_result.at(k) == cmp.coarse_result.at(k))) {
            cmp.stabilized = false;
            break;
        }
    }
    return cmp;
}

}  // namespace coarse
