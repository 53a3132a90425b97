/**
 * Exact scalar and dense matrix aliases plus the exact linear-algebra helpers
 * shared by the homological machinery: rank and kernel over the rationals via
 * fraction-free elimination, and Bareiss determinants over the integers.
 */

#ifndef COARSE_NUMBERS_HPP
#define COARSE_NUMBERS_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace coarse {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/**
 * Rank over the field of fractions by Gaussian elimination with exact
 * arithmetic. Works for any scalar with exact division (Rational).
 *
 * @param m input matrix (copied).
 * @returns rank of m.
 */
template <typename Scalar>
int field_rank(DenseMatrix<Scalar> m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (m(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            Scalar f = m(i, col) / m(row, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix q(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

inline int rational_rank(const IntegerMatrix& m) { return field_rank(to_rational(m)); }

/**
 * Basis of the kernel of m over the rationals, one column per basis vector.
 */
inline RationalMatrix rational_kernel_basis(const IntegerMatrix& mat) {
    RationalMatrix m = to_rational(mat);
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (m(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        Rational p = m(row, col);
        for (Eigen::Index j = col; j < cols; ++j) m(row, j) /= p;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    RationalMatrix basis = RationalMatrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        Eigen::Index fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            basis(pivot_col[r], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(r), fc);
        }
    }
    return basis;
}

/**
 * Exact determinant by the Bareiss fraction-free algorithm. Divisions are
 * exact at every step, so Integer scalars never leave the integers.
 *
 * @param mat square matrix.
 * @returns det(mat).
 */
inline Integer bareiss_determinant(IntegerMatrix mat) {
    const Eigen::Index n = mat.rows();
    if (n != mat.cols()) throw std::invalid_argument("bareiss_determinant: matrix not square");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (mat(k, k) == 0) {
            Eigen::Index swap_row = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (mat(i, k) != 0) { swap_row = i; break; }
            }
            if (swap_row < 0) return 0;
            mat.row(k).swap(mat.row(swap_row));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                mat(i, j) = (mat(i, j) * mat(k, k) - mat(i, k) * mat(k, j)) / prev;
            }
            mat(i, k) = 0;
        }
        prev = mat(k, k);
    }
    return sign > 0 ? mat(n - 1, n - 1) : Integer(-mat(n - 1, n - 1));
}

}  // namespace coarse

#endif  // COARSE_NUMBERS_HPP
