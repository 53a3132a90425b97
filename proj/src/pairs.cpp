#include "coarse/pairs.hpp"

#include <algorithm>

#include "coarse/errors.hpp"

namespace coarse {

struct PairPredicate::Impl {
    Kind kind;
    Space space;
    std::vector<std::uint8_t> mask_a;        // Square/Diagonal: U; Cross: U; CoverComplement: target
    std::vector<std::uint8_t> mask_b;        // Cross: V
    std::vector<std::uint64_t> family_bits;  // CoverComplement: per-point membership bitmask
    std::vector<std::pair<PointId, PointId>> pairs;
    std::vector<PairPredicate> children;

    Impl(Kind k, Space s) : kind(k), space(std::move(s)) {}
};

PairPredicate PairPredicate::square(const Subspace& u) {
    auto impl = std::make_shared<Impl>(Kind::Square, u.space());
    impl->mask_a = u.mask();
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::cross(const Subspace& u, const Subspace& v) {
    if (!u.same_space(v)) throw CoarseError(ErrorCode::DomainMismatch, "cross over different universes");
    auto impl = std::make_shared<Impl>(Kind::Cross, u.space());
    impl->mask_a = u.mask();
    impl->mask_b = v.mask();
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::cover_complement(const Subspace& target, const std::vector<Subspace>& family) {
    if (family.size() > 64) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "cover families larger than 64 are not supported");
    }
    auto impl = std::make_shared<Impl>(Kind::CoverComplement, target.space());
    impl->mask_a = target.mask();
    impl->family_bits.assign(impl->mask_a.size(), 0);
    for (std::size_t f = 0; f < family.size(); ++f) {
        if (!family[f].same_space(target)) {
            throw CoarseError(ErrorCode::DomainMismatch, "cover member over a different universe");
        }
        const auto& m = family[f].mask();
        const std::uint64_t bit = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i]) impl->family_bits[i] |= bit;
        }
    }
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::explicit_pairs(const Space& s, std::vector<std::pair<PointId, PointId>> pairs) {
    auto impl = std::make_shared<Impl>(Kind::Explicit, s);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    impl->pairs = std::move(pairs);
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::diagonal(const Subspace& u) {
    auto impl = std::make_shared<Impl>(Kind::Diagonal, u.space());
    impl->mask_a = u.mask();
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::complement() const {
    auto impl = std::make_shared<Impl>(Kind::Complement, impl_->space);
    impl->children.push_back(*this);
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::union_of(const PairPredicate& a, const PairPredicate& b) {
    if (!a.space().same(b.space())) throw CoarseError(ErrorCode::DomainMismatch, "pair union over different universes");
    auto impl = std::make_shared<Impl>(Kind::Union, a.impl_->space);
    impl->children.push_back(a);
    impl->children.push_back(b);
    return PairPredicate(std::move(impl));
}

PairPredicate PairPredicate::intersection_of(const PairPredicate& a, const PairPredicate& b) {
    if (!a.space().same(b.space())) {
        throw CoarseError(ErrorCode::DomainMismatch, "pair intersection over different universes");
    }
    auto impl = std::make_shared<Impl>(Kind::Intersection, a.impl_->space);
    impl->children.push_back(a);
    impl->children.push_back(b);
    return PairPredicate(std::move(impl));
}

const Space& PairPredicate::space() const { return impl_->space; }

bool PairPredicate::contains(PointId x, PointId y) const {
    const Impl& d = *impl_;
    switch (d.kind) {
        case Kind::Square:
            return d.mask_a[static_cast<std::size_t>(x)] && d.mask_a[static_cast<std::size_t>(y)];
        case Kind::Cross:
            return d.mask_a[static_cast<std::size_t>(x)] && d.mask_b[static_cast<std::size_t>(y)];
        case Kind::CoverComplement:
            return d.mask_a[static_cast<std::size_t>(x)] && d.mask_a[static_cast<std::size_t>(y)] &&
                   (d.family_bits[static_cast<std::size_t>(x)] & d.family_bits[static_cast<std::size_t>(y)]) == 0;
        case Kind::Explicit:
            return std::binary_search(d.pairs.begin(), d.pairs.end(), std::make_pair(x, y));
        case Kind::Diagonal:
            return x == y && d.mask_a[static_cast<std::size_t>(x)];
        case Kind::Union:
            return d.children[0].contains(x, y) || d.children[1].contains(x, y);
        case Kind::Intersection:
            return d.children[0].contains(x, y) && d.children[1].contains(x, y);
        case Kind::Complement:
            return !d.children[0].contains(x, y);
    }
    return false;
}

}  // namespace coarse
