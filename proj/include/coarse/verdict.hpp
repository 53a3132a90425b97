/**
 * Three-valued verdicts for asymptotic predicates truncated to a window.
 *
 * Every verdict evaluates its bound at the probe windows W/2, 3W/4, and W.
 * Holds requires the top two probe bounds to agree and no witness in the
 * outer quarter shell (distance > 3W/4); a witness there is counted as
 * genuine unboundedness evidence and yields Fails.
 */

#ifndef COARSE_VERDICT_HPP
#define COARSE_VERDICT_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarse/space.hpp"

namespace coarse {

using ScaleSchedule = std::vector<int>;

enum class VerdictStatus { Holds, Fails, Inconclusive };

inline const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "Holds";
        case VerdictStatus::Fails: return "Fails";
        case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/** Sentinel bound for "no finite bound reachable" (e.g. uncovered point). */
inline constexpr int kUnboundedProbe = std::numeric_limits<int>::max();

/** Per-scale bounds at the three probe windows; -1 = no violation seen. */
struct ProbeTrace {
    int scale = 0;
    int bound_half = -1;
    int bound_three_quarter = -1;
    int bound_full = -1;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    int scale_checked = 0;                               // R
    int window_checked = 0;                              // W
    std::vector<std::pair<PointId, PointId>> witnesses;  // on Fails, up to 16, enumeration order
    std::optional<int> bound_radius;                     // on Holds
    std::vector<ProbeTrace> probes;

    bool holds() const { return status == VerdictStatus::Holds; }
    bool fails() const { return status == VerdictStatus::Fails; }
};

/** Fails > Inconclusive > Holds. */
inline VerdictStatus merge_status(VerdictStatus a, VerdictStatus b) {
    if (a == VerdictStatus::Fails || b == VerdictStatus::Fails) return VerdictStatus::Fails;
    if (a == VerdictStatus::Inconclusive || b == VerdictStatus::Inconclusive) return VerdictStatus::Inconclusive;
    return VerdictStatus::Holds;
}

/**
 * Classifies probe bounds that measure witness shells. A bound past the
 * escape threshold (outer quarter shell) is unboundedness evidence.
 */
inline VerdictStatus classify_shell_probes(int bound_three_quarter, int bound_full, int escape_threshold) {
    if (bound_full == kUnboundedProbe || bound_full > escape_threshold) return VerdictStatus::Fails;
    if (bound_three_quarter == bound_full) return VerdictStatus::Holds;
    return VerdictStatus::Inconclusive;
}

/**
 * Classifies probe bounds that measure displacements. Growth across all
 * three probes is failure evidence; a stabilized bound of any size holds.
 */
inline VerdictStatus classify_growth_probes(int bound_half, int bound_three_quarter, int bound_full) {
    if (bound_full == kUnboundedProbe) return VerdictStatus::Fails;
    if (bound_three_quarter == bound_full) return VerdictStatus::Holds;
    if (bound_half < bound_three_quarter && bound_three_quarter < bound_full) return VerdictStatus::Fails;
    return VerdictStatus::Inconclusive;
}

}  // namespace coarse

#endif  // COARSE_VERDICT_HPP
