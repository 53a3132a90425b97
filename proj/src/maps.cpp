#include "coarse/maps.hpp"

namespace coarse {

MapTable MapTable::from_function(const Space& domain, const Space& codomain, int domain_window,
                                 const std::function<PointId(PointId)>& fn) {
    if (domain_window < 0 || domain_window > domain.max_window()) {
        throw CoarseError(ErrorCode::ParamOutOfRange, "map domain window outside the universe window");
    }
    const PointId n = domain.window_size(domain_window);
    std::vector<PointId> values(static_cast<std::size_t>(n));
    for (PointId x = 0; x < n; ++x) {
        PointId y = fn(x);
        if (y < 0 || y >= codomain.size()) {
            throw CoarseError(ErrorCode::TableIncomplete, "map value outside the codomain universe");
        }
        values[static_cast<std::size_t>(x)] = y;
    }
    return MapTable(std::make_shared<const Impl>(domain, codomain, domain_window, std::move(values)));
}

MapTable MapTable::identity(const Space& s, int domain_window) {
    return from_function(s, s, domain_window, [](PointId x) { return x; });
}

MapTable MapTable::shift_line(const Space& s, long long delta, int domain_window) {
    return affine_line(s, s, 1, delta, domain_window);
}

MapTable MapTable::affine_line(const Space& domain, const Space& codomain, long long a, long long b,
                               int domain_window) {
    return from_function(domain, codomain, domain_window, [&](PointId x) {
        return codomain.line_point(a * domain.line_value(x) + b);
    });
}

MapTable MapTable::dist_map(const Space& domain, const Space& codomain, int domain_window) {
    return from_function(domain, codomain, domain_window,
                         [&](PointId x) { return codomain.line_point(domain.dist_to_base(x)); });
}

MapTable MapTable::grid_shift(const Space& s, const std::vector<int>& delta, int domain_window) {
    if (static_cast<int>(delta.size()) != s.grid_dim()) {
        throw CoarseError(ErrorCode::InvalidParameter, "shift vector dimension mismatch");
    }
    return from_function(s, s, domain_window, [&](PointId x) {
        std::vector<int> c(delta.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s.grid_coord(x, static_cast<int>(i)) + delta[i];
        return s.grid_point(c);
    });
}

}  // namespace coarse
