/**
 * Line-oriented job configs: `section.key = value` with sections `space`,
 * `subspace.<name>`, `map.<name>`, `params`, and `run`. Subspace values
 * use a small expression language over named sets and primitives; parsing
 * resolves every name against the declared space, so a parsed config is
 * ready to execute.
 */

#ifndef COARSE_CONFIG_HPP
#define COARSE_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarse/abelian.hpp"
#include "coarse/maps.hpp"
#include "coarse/subspace.hpp"
#include "coarse/verdict.hpp"

namespace coarse {

struct JobParams {
    int window = 128;
    ScaleSchedule scales = {1, 2, 4};
    unsigned seed = 0;
    int cap = 64;          // ends cap
    int horizon = 32;      // flasque iterate horizon
    AbelianGroupFG coeff = free_group_z(1);
};

enum class CommandKind {
    Ends,
    Bounded,
    Cover,
    Cohomology,
    MayerVietoris,
    Refine,
    Flasque,
    Close,
    CoarseMap,
    Surjective,
};

struct Command {
    CommandKind kind = CommandKind::Ends;
    std::string text;                         // the config line's value, verbatim
    std::vector<std::string> subspace_args;   // resolved names, command-specific order
    std::vector<std::string> map_args;
    int fine_count = 0;                       // Refine: subspace_args[1..fine_count] are the fine cover
};

struct JobConfig {
    Space space;
    std::vector<std::pair<std::string, Subspace>> subspaces;  // definition order
    std::vector<std::pair<std::string, MapTable>> maps;
    JobParams params;
    std::vector<Command> commands;

    const Subspace& subspace(const std::string& name) const;  // UnknownName when absent
    const MapTable& map(const std::string& name) const;
};

/** Command-line overrides applied before resolution. */
struct ConfigOverrides {
    std::optional<int> window;
    std::optional<unsigned> seed;
};

JobConfig parse_config(const std::string& text);
JobConfig parse_config(const std::string& text, const ConfigOverrides& overrides);

}  // namespace coarse

#endif  // COARSE_CONFIG_HPP
