/**
 * Predicates on ordered point pairs of one universe. The cover-complement
 * form carries per-point family bitmasks so the hot pair test is a single
 * AND; the other forms are evaluated structurally.
 */

#ifndef COARSE_PAIRS_HPP
#define COARSE_PAIRS_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "coarse/subspace.hpp"

namespace coarse {

class PairPredicate {
public:
    /** U x U. */
    static PairPredicate square(const Subspace& u);
    /** U x V, ordered. */
    static PairPredicate cross(const Subspace& u, const Subspace& v);
    /** Pairs in target^2 lying in no member square: target^2 minus union of U_i^2. */
    static PairPredicate cover_complement(const Subspace& target, const std::vector<Subspace>& family);
    /** Explicit symmetric-agnostic pair list (ordered pairs as given). */
    static PairPredicate explicit_pairs(const Space& s, std::vector<std::pair<PointId, PointId>> pairs);
    /** Diagonal of a subspace: pairs (x, x) with x in U. */
    static PairPredicate diagonal(const Subspace& u);

    PairPredicate complement() const;
    static PairPredicate union_of(const PairPredicate& a, const PairPredicate& b);
    static PairPredicate intersection_of(const PairPredicate& a, const PairPredicate& b);

    const Space& space() const;
    bool contains(PointId x, PointId y) const;

private:
    enum class Kind { Square, Cross, CoverComplement, Explicit, Diagonal, Union, Intersection, Complement };
    struct Impl;
    explicit PairPredicate(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace coarse

#endif  // COARSE_PAIRS_HPP
