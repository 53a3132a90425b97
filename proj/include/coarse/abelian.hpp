/**
 * Finitely generated abelian groups in canonical form: free rank plus a
 * divisor chain of torsion orders. Coefficient arithmetic for cohomology
 * with arbitrary f.g. coefficients (tensor, Tor, universal coefficients).
 */

#ifndef COARSE_ABELIAN_HPP
#define COARSE_ABELIAN_HPP

#include <string>
#include <vector>

#include "coarse/numbers.hpp"

namespace coarse {

struct AbelianGroupFG {
    int rank = 0;
    std::vector<Integer> torsion;  // each >= 2, torsion[i] | torsion[i+1]

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroupFG& other) const = default;
};

inline AbelianGroupFG trivial_group() { return {}; }
inline AbelianGroupFG free_group_z(int rank) { return {rank, {}}; }

/** Canonicalizes an arbitrary multiset of cyclic orders into a divisor chain. */
AbelianGroupFG canonical_group(int rank, std::vector<Integer> orders);

AbelianGroupFG direct_sum(const AbelianGroupFG& a, const AbelianGroupFG& b);

/** a^e, the e-fold direct sum. */
AbelianGroupFG power_group(const AbelianGroupFG& a, int e);

AbelianGroupFG tensor_group(const AbelianGroupFG& a, const AbelianGroupFG& b);

/** Tor_1(a, b): pairwise gcds of the torsion orders. */
AbelianGroupFG tor_group(const AbelianGroupFG& a, const AbelianGroupFG& b);

/**
 * H^k of (C ⊗ A) from the integral H^k and H^{k+1} of a complex of free
 * groups: (H^k ⊗ A) ⊕ Tor(H^{k+1}, A).
 */
AbelianGroupFG universal_coefficients(const AbelianGroupFG& hk_z, const AbelianGroupFG& hk1_z,
                                      const AbelianGroupFG& coeff);

/** "0", "Z", "Z^2", "Z/4", "Z^2 + Z/2 + Z/6". */
std::string group_name(const AbelianGroupFG& g);

/** Parses the group_name grammar; throws on malformed input. */
AbelianGroupFG parse_group(const std::string& text);

}  // namespace coarse

#endif  // COARSE_ABELIAN_HPP
