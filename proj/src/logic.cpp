#include "coarse/logic.hpp"

#include <algorithm>
#include <random>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void check_schedule(const ScaleSchedule& sched, int w) {
    if (sched.empty()) throw CoarseError(ErrorCode::InvalidParameter, "scale schedule is empty");
    int rmax = 0;
    for (int r : sched) {
        if (r < 0) throw CoarseError(ErrorCode::InvalidParameter, "negative scale");
        rmax = std::max(rmax, r);
    }
    if (w < 4 * rmax) {
        throw CoarseError(ErrorCode::WindowTooSmall, "window must be at least 4 times the largest scale");
    }
}

int max_scale(const ScaleSchedule& sched) {
    int rmax = 0;
    for (int r : sched) rmax = std::max(rmax, r);
    return rmax;
}

/** One scale's pair scan: probe bounds plus escape-zone witnesses. */
struct ScanResult {
    int bound_half = -1;
    int bound_three_quarter = -1;
    int bound_full = -1;
    std::vector<std::pair<PointId, PointId>> escape_witnesses;
};

ScanResult scan_pairs(const PairPredicate& c, int r, int w) {
    const Space& s = c.space();
    const PointId n = s.window_size(w);
    const int half = w / 2;
    const int three_quarter = 3 * w / 4;
    ScanResult res;
    std::vector<PointId> nb;
    std::vector<PointId> offenders;
    for (PointId x = 0; x < n; ++x) {
        const int dx = s.dist_to_base(x);
        s.neighbors_into(x, r, nb);
        offenders.clear();
        for (PointId y : nb) {
            if (y >= n) continue;
            if (!c.contains(x, y)) continue;
            int shell = std::max(dx, s.dist_to_base(y));
            res.bound_full = std::max(res.bound_full, shell);
            if (shell <= half) res.bound_half = std::max(res.bound_half, shell);
            if (shell <= three_quarter) {
                res.bound_three_quarter = std::max(res.bound_three_quarter, shell);
            } else if (res.escape_witnesses.size() < kMaxWitnesses) {
                offenders.push_back(y);
            }
        }
        if (!offenders.empty() && res.escape_witnesses.size() < kMaxWitnesses) {
            std::sort(offenders.begin(), offenders.end());
            for (PointId y : offenders) {
                if (res.escape_witnesses.size() >= kMaxWitnesses) break;
                res.escape_witnesses.emplace_back(x, y);
            }
        }
    }
    return res;
}

Verdict merge_scale_results(const std::vector<int>& scales, const std::vector<ScanResult>& results, int w) {
    const int three_quarter = 3 * w / 4;
    Verdict v;
    v.window_checked = w;
    v.status = VerdictStatus::Holds;
    int bound = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const ScanResult& res = results[i];
        VerdictStatus st = classify_shell_probes(res.bound_three_quarter, res.bound_full, three_quarter);
        v.status = merge_status(v.status, st);
        v.scale_checked = std::max(v.scale_checked, scales[i]);
        bound = std::max(bound, res.bound_full);
        v.probes.push_back({scales[i], res.bound_half, res.bound_three_quarter, res.bound_full});
        if (st == VerdictStatus::Fails && v.witnesses.empty()) v.witnesses = res.escape_witnesses;
    }
    if (v.status == VerdictStatus::Holds) v.bound_radius = std::max(bound, 0);
    return v;
}

}  // namespace

Verdict coentourage_verdict(const PairPredicate& c, const ScaleSchedule& sched, int w) {
    check_schedule(sched, w);
    std::vector<ScanResult> results;
    for (int r : sched) results.push_back(scan_pairs(c, r, w));
    return merge_scale_results(sched, results, w);
}

Verdict is_bounded_subset(const Subspace& u, int w) {
    const Space& s = u.space();
    const PointId n = s.window_size(w);
    const int half = w / 2;
    const int three_quarter = 3 * w / 4;
    ScanResult res;
    for (PointId x = 0; x < n; ++x) {
        if (!u.contains(x)) continue;
        int d = s.dist_to_base(x);
        res.bound_full = std::max(res.bound_full, d);
        if (d <= half) res.bound_half = std::max(res.bound_half, d);
        if (d <= three_quarter) {
            res.bound_three_quarter = std::max(res.bound_three_quarter, d);
        } else if (res.escape_witnesses.size() < kMaxWitnesses) {
            res.escape_witnesses.emplace_back(x, x);
        }
    }
    Verdict v = merge_scale_results({0}, {res}, w);
    v.scale_checked = 0;
    return v;
}

Subspace thicken(const Subspace& u, int r) {
    const Space& s = u.space();
    if (r < 0) throw CoarseError(ErrorCode::InvalidParameter, "negative thickening radius");
    std::string desc = "E_" + std::to_string(r) + "[" + u.describe() + "]";
    if (r == 0) return Subspace::from_mask(s, u.mask(), std::move(desc));

    std::vector<std::uint8_t> mask = u.mask();
    if (s.path_metric()) {
        std::vector<PointId> frontier;
        for (PointId i = 0; i < s.size(); ++i) {
            if (mask[static_cast<std::size_t>(i)]) frontier.push_back(i);
        }
        std::vector<PointId> next;
        std::vector<PointId> nb;
        for (int round = 0; round < r && !frontier.empty(); ++round) {
            next.clear();
            for (PointId x : frontier) {
                s.neighbors_into(x, 1, nb);
                for (PointId y : nb) {
                    if (!mask[static_cast<std::size_t>(y)]) {
                        mask[static_cast<std::size_t>(y)] = 1;
                        next.push_back(y);
                    }
                }
            }
            frontier.swap(next);
        }
    } else {
        std::vector<PointId> members;
        for (PointId i = 0; i < s.size(); ++i) {
            if (u.contains(i)) members.push_back(i);
        }
        for (PointId x = 0; x < s.size(); ++x) {
            if (mask[static_cast<std::size_t>(x)]) continue;
            for (PointId m : members) {
                if (s.distance(x, m) <= r) {
                    mask[static_cast<std::size_t>(x)] = 1;
                    break;
                }
            }
        }
    }
    return Subspace::from_mask(s, std::move(mask), std::move(desc));
}

Verdict cover_verdict(const Subspace& target, const std::vector<Subspace>& family, const ScaleSchedule& sched, int w) {
    check_schedule(sched, w);
    for (const Subspace& u : family) {
        if (!u.same_space(target)) throw CoarseError(ErrorCode::DomainMismatch, "cover member over a different universe");
    }
    if (family.empty()) {
        Verdict bounded = is_bounded_subset(target, w);
        if (!bounded.holds()) {
            throw CoarseError(ErrorCode::EmptyFamilyOnUnbounded, "empty families cover only verified-bounded targets");
        }
        bounded.scale_checked = max_scale(sched);
        return bounded;
    }

    Verdict va = coentourage_verdict(PairPredicate::cover_complement(target, family), sched, w);

    // Characterization (b): target \cap \bigcap_i E_r[target minus U_i] bounded, per scale.
    // Thickening sources are truncated to the window: characterization (a)
    // never sees pairs past it, so badness seeded outside would split the
    // routes on families whose members end at the window edge.
    const std::size_t wn = static_cast<std::size_t>(target.space().window_size(w));
    Verdict vb;
    vb.status = VerdictStatus::Holds;
    vb.window_checked = w;
    int vb_bound = 0;
    for (int r : sched) {
        std::vector<Subspace> pieces{target};
        for (const Subspace& u : family) {
            std::vector<std::uint8_t> diff = target.mask();
            const auto& um = u.mask();
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = static_cast<std::uint8_t>(diff[i] & ~um[i]);
            for (std::size_t i = wn; i < diff.size(); ++i) diff[i] = 0;
            pieces.push_back(thicken(
                Subspace::from_mask(target.space(), std::move(diff), "minus(" + u.describe() + ")"), r));
        }
        Verdict vr = is_bounded_subset(Subspace::intersection_of(pieces), w);
        vb.status = merge_status(vb.status, vr.status);
        if (vr.bound_radius) vb_bound = std::max(vb_bound, *vr.bound_radius);
        ProbeTrace t = vr.probes.empty() ? ProbeTrace{} : vr.probes.front();
        t.scale = r;
        vb.probes.push_back(t);
        if (vr.fails() && vb.witnesses.empty()) vb.witnesses = vr.witnesses;
    }
    if (vb.status == VerdictStatus::Holds) vb.bound_radius = vb_bound;

    if (va.status != vb.status) {
        throw CoarseError(ErrorCode::DisagreeingCharacterizations,
                          "cover characterizations returned " + std::string(verdict_status_name(va.status)) + " vs " +
                              std::string(verdict_status_name(vb.status)));
    }

    Verdict v;
    v.status = va.status;
    v.scale_checked = max_scale(sched);
    v.window_checked = w;
    v.witnesses = va.witnesses;
    if (v.status == VerdictStatus::Holds) {
        v.bound_radius = std::max(va.bound_radius.value_or(0), vb.bound_radius.value_or(0));
    }
    v.probes = va.probes;
    v.probes.insert(v.probes.end(), vb.probes.begin(), vb.probes.end());
    return v;
}

std::pair<std::vector<Subspace>, Subspace> shift_cover(int r, const std::vector<Subspace>& family, const Subspace& y,
                                                       const ScaleSchedule& sched, int w) {
    Verdict pre = cover_verdict(y, family, sched, w);
    if (!pre.holds()) {
        throw CoarseError(ErrorCode::InvalidParameter, "shift_cover requires a family that covers the target");
    }
    std::vector<Subspace> shifted;
    shifted.reserve(family.size());
    for (const Subspace& u : family) shifted.push_back(thicken(u, r));
    return {std::move(shifted), thicken(y, r)};
}

std::optional<std::vector<int>> is_refinement(const std::vector<Subspace>& fine, const std::vector<Subspace>& coarse,
                                              int w) {
    std::vector<int> assignment;
    for (const Subspace& f : fine) {
        const PointId n = f.space().window_size(w);
        int found = -1;
        for (std::size_t c = 0; c < coarse.size(); ++c) {
            if (!coarse[c].same_space(f)) {
                throw CoarseError(ErrorCode::DomainMismatch, "refinement across different universes");
            }
            bool subset = true;
            for (PointId i = 0; i < n && subset; ++i) {
                if (f.contains(i) && !coarse[c].contains(i)) subset = false;
            }
            if (subset) {
                found = static_cast<int>(c);
                break;
            }
        }
        if (found < 0) return std::nullopt;
        assignment.push_back(found);
    }
    return assignment;
}

namespace {

void require_table_window(const MapTable& f, int w) {
    if (f.domain_window() < w) {
        throw CoarseError(ErrorCode::TableIncomplete, "map table does not cover the requested window");
    }
}

/** Growth-style verdict from displacement values indexed by a shell. */
struct DisplacementProbe {
    int bound_half = -1;
    int bound_three_quarter = -1;
    int bound_full = -1;
    void add(int shell, int value, int half, int three_quarter) {
        bound_full = std::max(bound_full, value);
        if (shell <= half) bound_half = std::max(bound_half, value);
        if (shell <= three_quarter) bound_three_quarter = std::max(bound_three_quarter, value);
    }
};

}  // namespace

Verdict closeness_verdict(const MapTable& f, const MapTable& g, const ScaleSchedule& sched, int w) {
    check_schedule(sched, w);
    if (!f.same_domain(g) || !f.same_codomain(g)) {
        throw CoarseError(ErrorCode::DomainMismatch, "closeness requires matching domain and codomain");
    }
    require_table_window(f, w);
    require_table_window(g, w);
    const Space& dom = f.domain();
    const Space& cod = f.codomain();
    const PointId n = dom.window_size(w);
    DisplacementProbe probe;
    for (PointId x = 0; x < n; ++x) {
        probe.add(dom.dist_to_base(x), cod.distance(f.apply(x), g.apply(x)), w / 2, 3 * w / 4);
    }
    Verdict v;
    v.status = classify_growth_probes(probe.bound_half, probe.bound_three_quarter, probe.bound_full);
    v.scale_checked = max_scale(sched);
    v.window_checked = w;
    v.probes.push_back({0, probe.bound_half, probe.bound_three_quarter, probe.bound_full});
    if (v.holds()) {
        v.bound_radius = std::max(probe.bound_full, 0);
    } else if (v.fails()) {
        for (PointId x = 0; x < n && v.witnesses.size() < kMaxWitnesses; ++x) {
            if (cod.distance(f.apply(x), g.apply(x)) == probe.bound_full) {
                v.witnesses.emplace_back(f.apply(x), g.apply(x));
            }
        }
    }
    return v;
}

Verdict coarse_map_verdict(const MapTable& f, const ScaleSchedule& sched, int w) {
    check_schedule(sched, w);
    require_table_window(f, w);
    const Space& dom = f.domain();
    const Space& cod = f.codomain();
    const PointId n = dom.window_size(w);

    Verdict v;
    v.status = VerdictStatus::Holds;
    v.scale_checked = max_scale(sched);
    v.window_checked = w;
    int bound = 0;

    // Coarsely uniform: stabilized s(r) with d(x,y) <= r implying d(fx,fy) <= s(r).
    std::vector<PointId> nb;
    for (int r : sched) {
        DisplacementProbe probe;
        std::vector<std::pair<PointId, PointId>> deep;
        for (PointId x = 0; x < n; ++x) {
            dom.neighbors_into(x, r, nb);
            int dx = dom.dist_to_base(x);
            for (PointId y : nb) {
                if (y >= n) continue;
                probe.add(std::max(dx, dom.dist_to_base(y)), cod.distance(f.apply(x), f.apply(y)), w / 2, 3 * w / 4);
            }
        }
        VerdictStatus st = classify_growth_probes(probe.bound_half, probe.bound_three_quarter, probe.bound_full);
        v.status = merge_status(v.status, st);
        v.probes.push_back({r, probe.bound_half, probe.bound_three_quarter, probe.bound_full});
        bound = std::max(bound, probe.bound_full);
        if (st == VerdictStatus::Fails && v.witnesses.empty()) {
            for (PointId x = 0; x < n && v.witnesses.size() < kMaxWitnesses; ++x) {
                dom.neighbors_into(x, r, nb);
                for (PointId y : nb) {
                    if (y >= n) continue;
                    if (cod.distance(f.apply(x), f.apply(y)) == probe.bound_full) {
                        v.witnesses.emplace_back(f.apply(x), f.apply(y));
                        break;
                    }
                }
            }
        }
    }

    // Coarsely proper: stabilized preimage radius for sampled codomain balls.
    for (int b : sched) {
        DisplacementProbe probe;
        for (PointId x = 0; x < n; ++x) {
            if (cod.dist_to_base(f.apply(x)) > b) continue;
            probe.add(dom.dist_to_base(x), dom.dist_to_base(x), w / 2, 3 * w / 4);
        }
        VerdictStatus st = classify_growth_probes(probe.bound_half, probe.bound_three_quarter, probe.bound_full);
        v.status = merge_status(v.status, st);
        v.probes.push_back({b, probe.bound_half, probe.bound_three_quarter, probe.bound_full});
        if (st == VerdictStatus::Fails && v.witnesses.empty()) {
            for (PointId x = 0; x < n && v.witnesses.size() < kMaxWitnesses; ++x) {
                if (cod.dist_to_base(f.apply(x)) <= b && dom.dist_to_base(x) == probe.bound_full) {
                    v.witnesses.emplace_back(x, x);
                }
            }
        }
    }

    if (v.holds()) v.bound_radius = bound;
    return v;
}

Verdict coarsely_surjective_verdict(const MapTable& f, const ScaleSchedule& sched, int w) {
    check_schedule(sched, w);
    require_table_window(f, w);
    const Space& dom = f.domain();
    const Space& cod = f.codomain();
    const PointId dn = dom.window_size(w);
    const PointId cn = cod.window_size(w);

    // Distance from every codomain universe point to the image of the window.
    constexpr int kUnreached = -1;
    std::vector<int> dist_to_image(static_cast<std::size_t>(cod.size()), kUnreached);
    std::vector<PointId> source(static_cast<std::size_t>(cod.size()), -1);
    std::vector<PointId> frontier;
    for (PointId x = 0; x < dn; ++x) {
        PointId y = f.apply(x);
        if (dist_to_image[static_cast<std::size_t>(y)] == kUnreached) {
            dist_to_image[static_cast<std::size_t>(y)] = 0;
            source[static_cast<std::size_t>(y)] = y;
            frontier.push_back(y);
        }
    }
    if (cod.path_metric()) {
        std::vector<PointId> next;
        std::vector<PointId> nb;
        for (int round = 1; round <= w && !frontier.empty(); ++round) {
            next.clear();
            for (PointId x : frontier) {
                cod.neighbors_into(x, 1, nb);
                for (PointId y : nb) {
                    if (dist_to_image[static_cast<std::size_t>(y)] == kUnreached) {
                        dist_to_image[static_cast<std::size_t>(y)] = round;
                        source[static_cast<std::size_t>(y)] = source[static_cast<std::size_t>(x)];
                        next.push_back(y);
                    }
                }
            }
            frontier.swap(next);
        }
    } else {
        std::vector<PointId> image = frontier;
        for (PointId y = 0; y < cod.size(); ++y) {
            int best = kUnreached;
            PointId who = -1;
            for (PointId m : image) {
                int d = cod.distance(y, m);
                if (best == kUnreached || d < best) {
                    best = d;
                    who = m;
                }
            }
            if (best != kUnreached && best <= w) {
                dist_to_image[static_cast<std::size_t>(y)] = best;
                source[static_cast<std::size_t>(y)] = who;
            }
        }
    }

    DisplacementProbe probe;
    bool unreached_deep = false;
    for (PointId y = 0; y < cn; ++y) {
        int d = dist_to_image[static_cast<std::size_t>(y)];
        int shell = cod.dist_to_base(y);
        if (d == kUnreached) {
            probe.add(shell, kUnboundedProbe, w / 2, 3 * w / 4);
            unreached_deep = true;
        } else {
            probe.add(shell, d, w / 2, 3 * w / 4);
        }
    }
    Verdict v;
    v.status = classify_growth_probes(probe.bound_half, probe.bound_three_quarter, probe.bound_full);
    v.scale_checked = max_scale(sched);
    v.window_checked = w;
    v.probes.push_back({0, probe.bound_half, probe.bound_three_quarter, probe.bound_full});
    if (v.holds()) {
        v.bound_radius = std::max(probe.bound_full, 0);
    } else if (v.fails()) {
        for (PointId y = 0; y < cn && v.witnesses.size() < kMaxWitnesses; ++y) {
            int d = dist_to_image[static_cast<std::size_t>(y)];
            if ((d == kUnreached && unreached_deep) || (!unreached_deep && d == probe.bound_full)) {
                v.witnesses.emplace_back(y, d == kUnreached ? y : source[static_cast<std::size_t>(y)]);
            }
        }
    }
    return v;
}

FlasqueReport flasque_conditions(const Space& s, const MapTable& phi, const ScaleSchedule& sched, int w, int horizon,
                                 unsigned seed) {
    check_schedule(sched, w);
    if (!phi.domain().same(s) || !phi.codomain().same(s)) {
        throw CoarseError(ErrorCode::DomainMismatch, "flasqueness requires a self-map of the space");
    }
    if (horizon < 4) throw CoarseError(ErrorCode::InvalidParameter, "flasque horizon must be at least 4");
    require_table_window(phi, w);

    FlasqueReport rep;
    rep.close_to_identity = closeness_verdict(phi, MapTable::identity(s, w), sched, w);

    // Iterate table over the sample window.
    const PointId sample = s.window_size(w / 2);
    if (static_cast<long long>(sample) * (horizon + 1) > 50'000'000LL) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "flasque iterate table too large");
    }
    std::vector<PointId> iter(static_cast<std::size_t>(sample) * static_cast<std::size_t>(horizon + 1));
    for (PointId x = 0; x < sample; ++x) iter[static_cast<std::size_t>(x)] = x;
    for (int nstep = 1; nstep <= horizon; ++nstep) {
        for (PointId x = 0; x < sample; ++x) {
            PointId prev = iter[static_cast<std::size_t>(nstep - 1) * static_cast<std::size_t>(sample) +
                                static_cast<std::size_t>(x)];
            if (!phi.defined(prev)) {
                throw CoarseError(ErrorCode::IterateEscapesWindow,
                                  "iterate left the map table domain; reduce the horizon or enlarge the window");
            }
            iter[static_cast<std::size_t>(nstep) * static_cast<std::size_t>(sample) + static_cast<std::size_t>(x)] =
                phi.apply(prev);
        }
    }
    auto at = [&](int nstep, PointId x) {
        return iter[static_cast<std::size_t>(nstep) * static_cast<std::size_t>(sample) + static_cast<std::size_t>(x)];
    };

    // Condition (ii): sampled balls are eventually avoided and stay avoided.
    {
        std::mt19937 rng(seed);
        std::vector<PointId> centers{s.basepoint()};
        const PointId inner = s.window_size(w / 8);
        for (int k = 0; k < 2 && inner > 0; ++k) centers.push_back(static_cast<PointId>(rng() % static_cast<unsigned>(inner)));
        std::vector<int> radii;
        for (int b = 1; b <= std::max(1, horizon / 4); b *= 2) radii.push_back(b);

        Verdict& v = rep.escapes_bounded_sets;
        v.status = VerdictStatus::Holds;
        v.scale_checked = max_scale(sched);
        v.window_checked = w;
        int worst_last_hit = -1;
        for (PointId center : centers) {
            for (int b : radii) {
                int last_hit = -1;
                PointId hitter = -1;
                for (int nstep = 0; nstep <= horizon; ++nstep) {
                    for (PointId x = 0; x < sample; ++x) {
                        if (s.distance(at(nstep, x), center) <= b) {
                            last_hit = nstep;
                            hitter = x;
                            break;
                        }
                    }
                }
                VerdictStatus st;
                if (last_hit == horizon) {
                    st = VerdictStatus::Fails;
                    if (v.witnesses.size() < kMaxWitnesses) v.witnesses.emplace_back(hitter, at(horizon, hitter));
                } else if (last_hit <= horizon - std::max(1, horizon / 4)) {
                    st = VerdictStatus::Holds;
                } else {
                    st = VerdictStatus::Inconclusive;
                }
                v.status = merge_status(v.status, st);
                worst_last_hit = std::max(worst_last_hit, last_hit);
                v.probes.push_back({b, -1, -1, last_hit});
            }
        }
        if (v.status == VerdictStatus::Holds) v.bound_radius = std::max(worst_last_hit, 0);
    }

    // Condition (iii): iterate displacement bounded per scale, probed over
    // sub-windows of the sample window.
    {
        Verdict& v = rep.uniform_iterates;
        v.status = VerdictStatus::Holds;
        v.scale_checked = max_scale(sched);
        v.window_checked = w;
        int bound = 0;
        std::vector<PointId> nb;
        for (int r : sched) {
            DisplacementProbe probe;
            for (PointId x = 0; x < sample; ++x) {
                s.neighbors_into(x, r, nb);
                int dx = s.dist_to_base(x);
                for (PointId y : nb) {
                    if (y >= sample) continue;
                    int shell = std::max(dx, s.dist_to_base(y));
                    for (int nstep = 0; nstep <= horizon; ++nstep) {
                        probe.add(shell, s.distance(at(nstep, x), at(nstep, y)), w / 4, 3 * w / 8);
                    }
                }
            }
            VerdictStatus st = classify_growth_probes(probe.bound_half, probe.bound_three_quarter, probe.bound_full);
            v.status = merge_status(v.status, st);
            v.probes.push_back({r, probe.bound_half, probe.bound_three_quarter, probe.bound_full});
            bound = std::max(bound, probe.bound_full);
            if (st == VerdictStatus::Fails && v.witnesses.empty()) {
                for (PointId x = 0; x < sample && v.witnesses.empty(); ++x) {
                    s.neighbors_into(x, r, nb);
                    for (PointId y : nb) {
                        if (y >= sample) continue;
                        for (int nstep = 0; nstep <= horizon; ++nstep) {
                            if (s.distance(at(nstep, x), at(nstep, y)) == probe.bound_full) {
                                v.witnesses.emplace_back(at(nstep, x), at(nstep, y));
                                break;
                            }
                        }
                        if (!v.witnesses.empty()) break;
                    }
                }
            }
        }
        if (v.status == VerdictStatus::Holds) v.bound_radius = bound;
    }

    rep.overall.status = merge_status(rep.close_to_identity.status,
                                      merge_status(rep.escapes_bounded_sets.status, rep.uniform_iterates.status));
    rep.overall.scale_checked = max_scale(sched);
    rep.overall.window_checked = w;
    if (rep.overall.holds()) {
        rep.overall.bound_radius = std::max({rep.close_to_identity.bound_radius.value_or(0),
                                             rep.escapes_bounded_sets.bound_radius.value_or(0),
                                             rep.uniform_iterates.bound_radius.value_or(0)});
    } else {
        for (const Verdict* part : {&rep.close_to_identity, &rep.escapes_bounded_sets, &rep.uniform_iterates}) {
            if (part->fails() && !part->witnesses.empty()) {
                rep.overall.witnesses = part->witnesses;
                break;
            }
        }
    }
    return rep;
}

Verdict flasque_verdict(const Space& s, const MapTable& phi, const ScaleSchedule& sched, int w, int horizon,
                        unsigned seed) {
    return flasque_conditions(s, phi, sched, w, horizon, seed).overall;
}

}  // namespace coarse
