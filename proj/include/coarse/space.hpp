/**
 * Finitely presented proper metric spaces truncated to a finite window.
 *
 * A Space materializes every point within max_window of the basepoint and
 * fixes a deterministic enumeration sorted by (distance to base, canonical
 * key), so the points within any window radius w <= max_window are exactly
 * the id prefix [0, window_size(w)). All metrics are integer valued.
 */

#ifndef COARSE_SPACE_HPP
#define COARSE_SPACE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coarse {

using PointId = std::int32_t;

enum class SpaceKind { ZPlus, Grid, FreeGroup, DihedralInf, Table, DisjointUnion, Product };
enum class GridMetric { LInf, L1 };

class Space {
public:
    /** Half line {0, 1, ..., max_window} with d(a,b) = |a-b|. */
    static Space zplus(int max_window);

    /** Z^dim with the l-infinity or l1 metric; basepoint at the origin. */
    static Space zn(int dim, GridMetric metric, int max_window);

    /** Free group on k generators with the word metric; basepoint = identity. */
    static Space free_group(int generators, int max_window);

    /**
     * Infinite dihedral group <a, b | a^2 = b^2 = 1> with the {a, b} word
     * metric. Elements are (t, f) with t the translation part and f the flip.
     */
    static Space dihedral_infinity(int max_window);

    /**
     * Explicit finite metric space from a full distance table. The table must
     * be square, symmetric, zero on the diagonal, and satisfy the triangle
     * inequality; basepoint = input index 0. max_window is declared
     * independently so a small space can sit well inside its window.
     */
    static Space from_table(const std::vector<std::vector<int>>& dist, int max_window);

    /**
     * Disjoint union with the bridge metric: cross-part distance
     * d(a, base_left) + 1 + d(b, base_right). Basepoint = left basepoint.
     */
    static Space disjoint_union(const Space& left, const Space& right);

    /** Product with the max metric; basepoint = pair of basepoints. */
    static Space product(const Space& left, const Space& right);

    SpaceKind kind() const;
    int max_window() const;
    PointId size() const;
    PointId basepoint() const { return 0; }
    int dist_to_base(PointId x) const;
    int distance(PointId a, PointId b) const;

    /** Number of points with dist_to_base <= w; they are ids [0, result). */
    PointId window_size(int w) const;

    /** True when balls coincide with hop-balls of the scale-1 graph. */
    bool path_metric() const;

    /** Identity of the underlying universe (shared structure). */
    bool same(const Space& other) const { return data_ == other.data_; }

    /**
     * All y in the universe with distance(x, y) <= r, x itself included.
     * out is cleared first; order is deterministic but not sorted.
     */
    void neighbors_into(PointId x, int r, std::vector<PointId>& out) const;

    std::string point_name(PointId x) const;
    std::string describe() const;

    // Grid accessors.
    int grid_dim() const;
    GridMetric grid_metric() const;
    int grid_coord(PointId x, int axis) const;
    PointId grid_point(const std::vector<int>& coords) const;

    // 1-dimensional value view (ZPlus and zn(1)).
    bool has_line_values() const;
    long long line_value(PointId x) const;
    PointId line_point(long long value) const;

    // Disjoint union accessors (side 0 = left, 1 = right).
    int du_side(PointId x) const;
    PointId du_sub(PointId x) const;
    const Space& du_part(int side) const;
    PointId du_point(int side, PointId sub) const;

    // Product accessors.
    const Space& product_part(int side) const;
    PointId product_sub(PointId x, int side) const;
    PointId product_point(PointId left_sub, PointId right_sub) const;

    // Free group accessors (letters 2g = generator g, 2g+1 = its inverse).
    int free_generators() const;
    std::vector<int> free_word(PointId x) const;

    // Dihedral accessors.
    long long dihedral_translation(PointId x) const;
    int dihedral_flip(PointId x) const;
    PointId dihedral_point(long long t, int flip) const;

    struct Data;

private:
    explicit Space(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

}  // namespace coarse

#endif  // COARSE_SPACE_HPP
