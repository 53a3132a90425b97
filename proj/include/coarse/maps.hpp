/**
 * Finite tables for maps between space windows. A table is total on its
 * declared domain window; evaluation outside it is an error, so callers
 * must build spaces with enough headroom for shifts and iterates.
 */

#ifndef COARSE_MAPS_HPP
#define COARSE_MAPS_HPP

#include <functional>
#include <memory>
#include <vector>

#include "coarse/errors.hpp"
#include "coarse/space.hpp"

namespace coarse {

class MapTable {
public:
    /** Builds the table by evaluating fn on every id in the domain window; fn returning -1 is an error. */
    static MapTable from_function(const Space& domain, const Space& codomain, int domain_window,
                                  const std::function<PointId(PointId)>& fn);

    static MapTable identity(const Space& s, int domain_window);

    /** Line-valued spaces: v -> v + delta. */
    static MapTable shift_line(const Space& s, long long delta, int domain_window);

    /** Line-valued spaces: v -> a*v + b, domain and codomain may differ. */
    static MapTable affine_line(const Space& domain, const Space& codomain, long long a, long long b,
                                int domain_window);

    /** x -> dist_to_base(x) into a half line. */
    static MapTable dist_map(const Space& domain, const Space& codomain, int domain_window);

    /** Grid: coordinatewise shift by delta. */
    static MapTable grid_shift(const Space& s, const std::vector<int>& delta, int domain_window);

    const Space& domain() const { return impl_->domain; }
    const Space& codomain() const { return impl_->codomain; }
    int domain_window() const { return impl_->domain_window; }
    PointId domain_size() const { return static_cast<PointId>(impl_->values.size()); }

    bool defined(PointId x) const { return x >= 0 && static_cast<std::size_t>(x) < impl_->values.size(); }

    PointId apply(PointId x) const {
        if (!defined(x)) {
            throw CoarseError(ErrorCode::TableIncomplete, "map table not defined at the requested point");
        }
        return impl_->values[static_cast<std::size_t>(x)];
    }

    bool same_domain(const MapTable& other) const { return impl_->domain.same(other.impl_->domain); }
    bool same_codomain(const MapTable& other) const { return impl_->codomain.same(other.impl_->codomain); }

private:
    struct Impl {
        Space domain;
        Space codomain;
        int domain_window;
        std::vector<PointId> values;
        Impl(Space d, Space c, int w, std::vector<PointId> v)
            : domain(std::move(d)), codomain(std::move(c)), domain_window(w), values(std::move(v)) {}
    };
    explicit MapTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace coarse

#endif  // COARSE_MAPS_HPP
