#include "coarse/report.hpp"

#include <algorithm>
#include <sstream>

#include "coarse/cech.hpp"
#include "coarse/ends.hpp"
#include "coarse/errors.hpp"
#include "coarse/logic.hpp"

namespace coarse {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

EndsParams ends_params_for(const JobParams& params) {
    EndsParams p = default_ends_params(params.window);
    p.r_range = params.scales;
    p.cap = params.cap;
    return p;
}

CechParams cech_params_for(const JobParams& params) {
    return CechParams{params.scales, ends_params_for(params)};
}

void put(CommandResult& res, const std::string& key, const std::string& value) {
    res.entries.emplace_back(key, value);
}

void put_verdict(CommandResult& res, const std::string& prefix, const Verdict& v, const Space& space) {
    put(res, prefix + ".status", verdict_status_name(v.status));
    put(res, prefix + ".R", std::to_string(v.scale_checked));
    put(res, prefix + ".W", std::to_string(v.window_checked));
    if (v.bound_radius) put(res, prefix + ".bound", std::to_string(*v.bound_radius));
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        put(res, prefix + ".witness" + std::to_string(i + 1),
            space.point_name(v.witnesses[i].first) + " & " + space.point_name(v.witnesses[i].second));
    }
    for (std::size_t i = 0; i < v.probes.size(); ++i) {
        const ProbeTrace& t = v.probes[i];
        put(res, prefix + ".probe" + std::to_string(i + 1),
            "r" + std::to_string(t.scale) + " " + std::to_string(t.bound_half) + " " +
                std::to_string(t.bound_three_quarter) + " " + std::to_string(t.bound_full));
    }
}

void put_ends(CommandResult& res, const std::string& prefix, const EndsReport& rep, const Space& space) {
    put(res, prefix + ".status", ends_status_name(rep.status));
    put(res, prefix + ".count", std::to_string(rep.count));
    put(res, prefix + ".cap", std::to_string(rep.params.cap));
    put(res, prefix + ".W", std::to_string(rep.params.window));
    for (std::size_t ri = 0; ri < rep.params.r_range.size(); ++ri) {
        put(res, prefix + ".trace.r" + std::to_string(rep.params.r_range[ri]), join_ints(rep.trace[ri]));
    }
    constexpr std::size_t kListedEnds = 12;
    for (std::size_t i = 0; i < rep.components.size() && i < kListedEnds; ++i) {
        const EndComponent& c = rep.components[i];
        const std::string base = prefix + ".end" + std::to_string(c.id);
        put(res, base + ".size", std::to_string(c.member_count));
        if (!c.representatives.empty()) {
            put(res, base + ".representative", space.point_name(c.representatives.front()));
        }
    }
    if (rep.components.size() > kListedEnds) {
        put(res, prefix + ".ends_omitted", std::to_string(rep.components.size() - kListedEnds));
    }
}

void put_group(CommandResult& res, const std::string& key, const AbelianGroupFG& g) {
    put(res, key, group_name(g));
    put(res, key + ".rank", std::to_string(g.rank));
    std::string torsion;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) torsion += ' ';
        torsion += g.torsion[i].str();
    }
    put(res, key + ".torsion", torsion.empty() ? "-" : torsion);
}

std::vector<Subspace> resolve_family(const JobConfig& cfg, const Command& cmd, std::size_t from, std::size_t to) {
    std::vector<Subspace> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(cfg.subspace(cmd.subspace_args[i]));
    return out;
}

CommandResult run_command(const JobConfig& cfg, const Command& cmd) {
    CommandResult res;
    res.text = cmd.text;
    const Space& space = cfg.space;
    const JobParams& params = cfg.params;

    switch (cmd.kind) {
        case CommandKind::Ends: {
            EndsReport rep = ends(cfg.subspace(cmd.subspace_args[0]), ends_params_for(params));
            put_ends(res, "ends", rep, space);
            res.contribution =
                rep.status == EndsStatus::NoPlateau ? VerdictStatus::Inconclusive : VerdictStatus::Holds;
            break;
        }
        case CommandKind::Bounded: {
            Verdict v = is_bounded_subset(cfg.subspace(cmd.subspace_args[0]), params.window);
            put_verdict(res, "verdict", v, space);
            res.contribution = v.status;
            break;
        }
        case CommandKind::Cover: {
            Verdict v = cover_verdict(cfg.subspace(cmd.subspace_args[0]),
                                      resolve_family(cfg, cmd, 1, cmd.subspace_args.size()), params.scales,
                                      params.window);
            put_verdict(res, "verdict", v, space);
            res.contribution = v.status;
            break;
        }
        case CommandKind::Cohomology: {
            const Subspace& target = cfg.subspace(cmd.subspace_args[0]);
            std::vector<Subspace> cover = resolve_family(cfg, cmd, 1, cmd.subspace_args.size());
            const CechParams cech = cech_params_for(params);
            if (!cover.empty()) {
                Verdict v = cover_verdict(target, cover, cech.sched, params.window);
                put_verdict(res, "verdict", v, space);
                if (!v.holds()) {
                    res.contribution = v.status;
                    break;
                }
            }
            EndsReport target_ends = ends(target, cech.ends);
            if (target_ends.status == EndsStatus::InfiniteAtCap) {
                // Unboundedly many ends: sections over the target are not
                // finitely generated, so H^0 is reported symbolically.
                put(res, "ends.status", ends_status_name(target_ends.status));
                put(res, "cohomology.H0", "free of unbounded rank");
                res.contribution = VerdictStatus::Holds;
                break;
            }
            CohomologyResult h = cohomology(cech_complex(target, cover, params.coeff, cech));
            put(res, "cohomology.coeff", group_name(params.coeff));
            put(res, "cohomology.max_degree", std::to_string(static_cast<int>(h.cochain_ranks.size()) - 1));
            const int top = std::max(0, static_cast<int>(h.cochain_ranks.size()) - 1);
            for (int k = 0; k <= top; ++k) put_group(res, "cohomology.H" + std::to_string(k), h.at(k));
            put(res, "cohomology.cochain_ranks", join_ints(h.cochain_ranks));
            put(res, "cohomology.boundary_ranks", join_ints(h.boundary_ranks));
            res.contribution = VerdictStatus::Holds;
            break;
        }
        case CommandKind::MayerVietoris: {
            MayerVietorisReport rep =
                mayer_vietoris_report(cfg.subspace(cmd.subspace_args[0]), cfg.subspace(cmd.subspace_args[1]),
                                      cfg.subspace(cmd.subspace_args[2]), params.coeff, cech_params_for(params));
            put(res, "mv.ends.target", std::to_string(rep.ends_target));
            put(res, "mv.ends.a", std::to_string(rep.ends_a));
            put(res, "mv.ends.b", std::to_string(rep.ends_b));
            put(res, "mv.ends.intersection", std::to_string(rep.ends_intersection));
            put(res, "mv.rank.restriction", std::to_string(rep.rank_restriction));
            put(res, "mv.rank.difference", std::to_string(rep.rank_difference));
            put(res, "mv.rank.connecting", std::to_string(rep.connecting_rank));
            put_group(res, "mv.H1", rep.two_cover.at(1));
            put(res, "mv.exact.target", rep.exact_at_target ? "true" : "false");
            put(res, "mv.exact.sum", rep.exact_at_sum ? "true" : "false");
            put(res, "mv.exact.intersection", rep.exact_at_intersection ? "true" : "false");
            put(res, "mv.exact", rep.exact ? "true" : "false");
            res.contribution = rep.exact ? VerdictStatus::Holds : VerdictStatus::Fails;
            break;
        }
        case CommandKind::Refine: {
            const std::size_t fine_end = 1 + static_cast<std::size_t>(cmd.fine_count);
            RefinementComparison cmp = refinement_comparison(
                cfg.subspace(cmd.subspace_args[0]), resolve_family(cfg, cmd, 1, fine_end),
                resolve_family(cfg, cmd, fine_end, cmd.subspace_args.size()), params.coeff, cech_params_for(params));
            const std::size_t degrees =
                std::max(cmp.fine_result.groups.size(), cmp.coarse_result.groups.size());
            for (std::size_t k = 0; k < std::max<std::size_t>(degrees, 1); ++k) {
                const std::string base = "refine.H" + std::to_string(k);
                put(res, base + ".coarse", group_name(cmp.coarse_result.at(static_cast<int>(k))));
                put(res, base + ".fine", group_name(cmp.fine_result.at(static_cast<int>(k))));
                if (k < cmp.induced_ranks.size()) {
                    put(res, base + ".induced_rank", std::to_string(cmp.induced_ranks[k]));
                }
            }
            put(res, "refine.stabilized", cmp.stabilized ? "true" : "false");
            res.contribution = VerdictStatus::Holds;
            break;
        }
        case CommandKind::Flasque: {
            FlasqueReport rep = flasque_conditions(space, cfg.map(cmd.map_args[0]), params.scales, params.window,
                                                   params.horizon, params.seed);
            put(res, "flasque.close_to_identity", verdict_status_name(rep.close_to_identity.status));
            put(res, "flasque.escapes_bounded_sets", verdict_status_name(rep.escapes_bounded_sets.status));
            put(res, "flasque.uniform_iterates", verdict_status_name(rep.uniform_iterates.status));
            put_verdict(res, "verdict", rep.overall, space);
            res.contribution = rep.overall.status;
            break;
        }
        case CommandKind::Close: {
            Verdict v = closeness_verdict(cfg.map(cmd.map_args[0]), cfg.map(cmd.map_args[1]), params.scales,
                                          params.window);
            put_verdict(res, "verdict", v, space);
            res.contribution = v.status;
            break;
        }
        case CommandKind::CoarseMap: {
            Verdict v = coarse_map_verdict(cfg.map(cmd.map_args[0]), params.scales, params.window);
            put_verdict(res, "verdict", v, space);
            res.contribution = v.status;
            break;
        }
        case CommandKind::Surjective: {
            Verdict v = coarsely_surjective_verdict(cfg.map(cmd.map_args[0]), params.scales, params.window);
            put_verdict(res, "verdict", v, space);
            res.contribution = v.status;
            break;
        }
    }
    return res;
}

}  // namespace

int Report::exit_code() const {
    bool fails = false, inconclusive = false;
    for (const CommandResult& r : results) {
        fails |= r.contribution == VerdictStatus::Fails;
        inconclusive |= r.contribution == VerdictStatus::Inconclusive;
    }
    if (fails) return 2;
    if (inconclusive) return 3;
    return 0;
}

std::string Report::human() const {
    std::ostringstream out;
    out << format << "\n";
    out << "space: " << space_desc << "\n";
    out << "window " << params.window << ", scales " << join_ints(params.scales) << ", seed " << params.seed
        << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CommandResult& r = results[i];
        out << "\n[" << i + 1 << "] " << r.text << "\n";
        std::size_t width = 0;
        for (const auto& [k, v] : r.entries) width = std::max(width, k.size());
        for (const auto& [k, v] : r.entries) {
            out << "    " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
        }
        out << "    -> " << verdict_status_name(r.contribution) << "\n";
    }
    return out.str();
}

std::string Report::flat() const {
    std::ostringstream out;
    out << "format = " << format << "\n";
    out << "space = " << space_desc << "\n";
    out << "params.window = " << params.window << "\n";
    out << "params.scales = " << join_ints(params.scales) << "\n";
    out << "params.seed = " << params.seed << "\n";
    out << "params.cap = " << params.cap << "\n";
    out << "params.horizon = " << params.horizon << "\n";
    out << "params.coeff = " << group_name(params.coeff) << "\n";
    out << "commands = " << results.size() << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CommandResult& r = results[i];
        const std::string prefix = results.size() == 1 ? "" : "cmd" + std::to_string(i + 1) + ".";
        out << prefix << "command = " << r.text << "\n";
        for (const auto& [k, v] : r.entries) out << prefix << k << " = " << v << "\n";
        out << prefix << "status = " << verdict_status_name(r.contribution) << "\n";
    }
    out << "exit = " << exit_code() << "\n";
    return out.str();
}

Report run(const JobConfig& config) {
    Report rep;
    rep.space_desc = config.space.describe();
    rep.params = config.params;
    for (std::size_t i = 0; i < config.commands.size(); ++i) {
        try {
            rep.results.push_back(run_command(config, config.commands[i]));
        } catch (const CoarseError& e) {
            throw CoarseError(e.code(), "command " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace coarse
