/**
 * Scale-parameterized verdicts: coentourages, boundedness, coarse covers
 * via both characterizations, shifted covers, refinements, closeness, and
 * coarse-map / surjectivity / flasqueness checks.
 */

#ifndef COARSE_LOGIC_HPP
#define COARSE_LOGIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coarse/maps.hpp"
#include "coarse/pairs.hpp"
#include "coarse/subspace.hpp"
#include "coarse/verdict.hpp"

namespace coarse {

/**
 * Verdict on "C is a coentourage": for every scale r in sched, the pairs of
 * C at distance <= r must sit inside a stabilized ball around the base.
 * pre: W >= 4 * max(sched), W <= universe max_window.
 */
Verdict coentourage_verdict(const PairPredicate& c, const ScaleSchedule& sched, int w);

/** Verdict on "U is bounded" within window w. */
Verdict is_bounded_subset(const Subspace& u, int w);

/**
 * Verdict on "family coarsely covers target", computed through BOTH
 * characterizations: (a) the cover complement in target^2 is a coentourage,
 * (b) for each scale the set target \cap \bigcap_i E_r[target \ U_i] is
 * bounded. The two statuses must agree (DisagreeingCharacterizations
 * otherwise). An empty family is allowed only on a verified-bounded target.
 */
Verdict cover_verdict(const Subspace& target, const std::vector<Subspace>& family, const ScaleSchedule& sched, int w);

/** E_r[U]: all universe points within distance r of U. */
Subspace thicken(const Subspace& u, int r);

/**
 * The shifted cover (E_r[U_i])_i of E_r[Y].
 * pre: family covers Y per cover_verdict at (sched, w).
 */
std::pair<std::vector<Subspace>, Subspace> shift_cover(int r, const std::vector<Subspace>& family, const Subspace& y,
                                                       const ScaleSchedule& sched, int w);

/**
 * An assignment sigma with fine[j] within coarse[sigma(j)] on the window,
 * first match wins; nullopt when some fine member fits nowhere.
 */
std::optional<std::vector<int>> is_refinement(const std::vector<Subspace>& fine, const std::vector<Subspace>& coarse,
                                              int w);

/** Verdict on "f and g are close": stabilized displacement bound. */
Verdict closeness_verdict(const MapTable& f, const MapTable& g, const ScaleSchedule& sched, int w);

/** Verdict on "f is a coarse map": coarsely uniform and coarsely proper. */
Verdict coarse_map_verdict(const MapTable& f, const ScaleSchedule& sched, int w);

/** Verdict on "f is coarsely surjective": stabilized covering radius of im f. */
Verdict coarsely_surjective_verdict(const MapTable& f, const ScaleSchedule& sched, int w);

struct FlasqueReport {
    Verdict overall;
    Verdict close_to_identity;      // condition (i)
    Verdict escapes_bounded_sets;   // condition (ii)
    Verdict uniform_iterates;       // condition (iii)
};

/**
 * The three flasqueness conditions for phi: (i) close to the identity,
 * (ii) iterates leave every sampled bounded ball and stay away within the
 * horizon, (iii) iterate displacement over each scale stays bounded with a
 * stabilized bound. seed varies the sampled ball centers.
 */
FlasqueReport flasque_conditions(const Space& s, const MapTable& phi, const ScaleSchedule& sched, int w, int horizon,
                                 unsigned seed = 0);

/** Overall flasqueness verdict (precedence merge of the three conditions). */
Verdict flasque_verdict(const Space& s, const MapTable& phi, const ScaleSchedule& sched, int w, int horizon,
                        unsigned seed = 0);

}  // namespace coarse

#endif  // COARSE_LOGIC_HPP
