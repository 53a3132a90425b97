#include "coarse/snf.hpp"

#include <stdexcept>
#include <utility>

namespace coarse {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntegerMatrix& m, int a, int b) { m.row(a).swap(m.row(b)); }
void swap_cols(IntegerMatrix& m, int a, int b) { m.col(a).swap(m.col(b)); }

/** Quotient leaving a balanced remainder: |a - q*b| <= |b| / 2. */
Integer balanced_quotient(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

/** Entry size at which the pivot loop pauses to lattice-reduce the block. */
const Integer& size_trigger() {
    static const Integer limit = Integer(1) << 64;
    return limit;
}

bool rows_exceed(const IntegerMatrix& m, int r0) {
    for (int i = r0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (abs(m(i, j)) > size_trigger()) return true;
        }
    }
    return false;
}

bool cols_exceed(const IntegerMatrix& m, int c0) {
    for (int j = c0; j < m.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            if (abs(m(i, j)) > size_trigger()) return true;
        }
    }
    return false;
}

/** Bit length of the largest |entry| in rows at and below r0 (0 if none). */
unsigned block_bits_rows(const IntegerMatrix& m, int r0) {
    unsigned best = 0;
    for (int i = r0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            unsigned b = static_cast<unsigned>(boost::multiprecision::msb(abs(m(i, j)))) + 1;
            if (b > best) best = b;
        }
    }
    return best;
}

/** Bit length of the largest |entry| in columns at and right of c0. */
unsigned block_bits_cols(const IntegerMatrix& m, int c0) {
    unsigned best = 0;
    for (int j = c0; j < m.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            if (m(i, j) == 0) continue;
            unsigned b = static_cast<unsigned>(boost::multiprecision::msb(abs(m(i, j)))) + 1;
            if (b > best) best = b;
        }
    }
    return best;
}

/**
 * Weight that makes the matrix block dominate the transform block in the
 * reduction inner product. Shortening the matrix entries is then the primary
 * objective and the transform is a tie-break; without the separation the two
 * blocks drag each other up to a common scale.
 */
Integer lex_weight(unsigned matrix_bits, unsigned transform_bits) {
    unsigned shift = (transform_bits > matrix_bits ? transform_bits - matrix_bits : 0) + 16;
    return Integer(1) << (2 * shift);
}

/**
 * Exact integral LLL over n abstract vectors addressed through callbacks:
 * dot(x, y) is the inner product, sub(x, y, q) performs v_x -= q * v_y, and
 * swp(x, y) exchanges v_x and v_y. Gram data is kept in the classical
 * integer form d[i] = det Gram(v_0..v_{i-1}), lam[i][j] = d[j+1] * mu_ij,
 * where every division in the update formulas is exact. The vectors must be
 * linearly independent. Terminates with all |mu_ij| <= 1/2 and the Lovasz
 * condition at delta = 3/4; returns whether any operation was performed.
 */
template <class Dot, class Sub, class Swp>
bool lll_core(int n, Dot dot, Sub sub, Swp swp) {
    if (n < 2) return false;
    std::vector<Integer> d(n + 1);
    std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n));
    d[0] = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Integer u = dot(i, j);
            for (int k = 0; k < j; ++k) u = (d[k + 1] * u - lam[i][k] * lam[j][k]) / d[k];
            if (j < i) {
                lam[i][j] = u;
            } else {
                d[i + 1] = u;
            }
        }
        if (d[i + 1] <= 0) throw std::logic_error("lattice reduction lost independence");
    }
    bool acted = false;
    auto reduce = [&](int k, int l) {
        Integer q = balanced_quotient(lam[k][l], d[l + 1]);
        if (q == 0) return;
        sub(k, l, q);
        acted = true;
        lam[k][l] -= q * d[l + 1];
        for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };
    int k = 1;
    while (k < n) {
        reduce(k, k - 1);
        Integer lhs = 4 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        Integer rhs = 3 * d[k] * d[k];
        if (lhs < rhs) {
            swp(k, k - 1);
            acted = true;
            for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
            Integer lamv = lam[k][k - 1];
            Integer dnew = (d[k - 1] * d[k + 1] + lamv * lamv) / d[k];
            for (int i = k + 1; i < n; ++i) {
                Integer t = lam[i][k - 1];
                lam[i][k - 1] = (t * lamv + lam[i][k] * d[k - 1]) / d[k];
                lam[i][k] = (t * d[k + 1] - lam[i][k] * lamv) / d[k];
            }
            d[k] = dnew;
            k = k > 1 ? k - 1 : 1;
        } else {
            for (int l = k - 2; l >= 0; --l) reduce(k, l);
            ++k;
        }
    }
    return acted;
}

/**
 * LLL-reduce the rows below `skip`, acting simultaneously on `a` and `left`.
 * The vectors fed to the reduction are the concatenated rows (left | a);
 * `left` stays unimodular, so the concatenated rows are independent even
 * when rows of `a` alone are not, and the transform entries are kept short
 * together with the matrix entries. Row `skip` is never modified, so a
 * surrounding clearing loop keeps its pivot.
 */
bool lll_reduce_rows(IntegerMatrix& a, IntegerMatrix& left, int skip) {
    const int n = static_cast<int>(a.rows()) - skip - 1;
    if (n < 2) return false;
    auto row = [skip](int x) { return skip + 1 + x; };
    const Integer w = lex_weight(block_bits_rows(a, skip + 1), block_bits_rows(left, skip + 1));
    auto dot = [&a, &left, row, &w](int x, int y) {
        Integer s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a(row(x), j) * a(row(y), j);
        s *= w;
        for (int j = 0; j < left.cols(); ++j) s += left(row(x), j) * left(row(y), j);
        return s;
    };
    auto sub = [&a, &left, row](int x, int y, const Integer& q) {
        a.row(row(x)) -= q * a.row(row(y));
        left.row(row(x)) -= q * left.row(row(y));
    };
    auto swp = [&a, &left, row](int x, int y) {
        swap_rows(a, row(x), row(y));
        swap_rows(left, row(x), row(y));
    };
    return lll_core(n, dot, sub, swp);
}

/** Column dual of lll_reduce_rows, acting on `a` and `right`. */
bool lll_reduce_cols(IntegerMatrix& a, IntegerMatrix& right, int skip) {
    const int n = static_cast<int>(a.cols()) - skip - 1;
    if (n < 2) return false;
    auto col = [skip](int x) { return skip + 1 + x; };
    const Integer w = lex_weight(block_bits_cols(a, skip + 1), block_bits_cols(right, skip + 1));
    auto dot = [&a, &right, col, &w](int x, int y) {
        Integer s = 0;
        for (int i = 0; i < a.rows(); ++i) s += a(i, col(x)) * a(i, col(y));
        s *= w;
        for (int i = 0; i < right.rows(); ++i) s += right(i, col(x)) * right(i, col(y));
        return s;
    };
    auto sub = [&a, &right, col](int x, int y, const Integer& q) {
        a.col(col(x)) -= q * a.col(col(y));
        right.col(col(x)) -= q * right.col(col(y));
    };
    auto swp = [&a, &right, col](int x, int y) {
        swap_cols(a, col(x), col(y));
        swap_cols(right, col(x), col(y));
    };
    return lll_core(n, dot, sub, swp);
}

/** Smallest nonzero |entry| in the submatrix at (t, t); false if none. */
bool find_pivot(const IntegerMatrix& a, int t, int& pr, int& pc) {
    bool found = false;
    Integer best = 0;
    for (int i = t; i < a.rows(); ++i) {
        for (int j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    SmithResult res;
    res.left = IntegerMatrix::Identity(rows, rows);
    res.right = IntegerMatrix::Identity(cols, cols);
    IntegerMatrix a = m;

    // Diagonalize pivot by pivot. The finished region is zero outside the
    // leading diagonal, so row and column operations on the block at (t, t)
    // never disturb it; whenever Euclid chains inflate the block past the
    // trigger, the block rows or columns are LLL-reduced in place.
    for (int t = 0; t < rows && t < cols; ++t) {
        if (rows_exceed(a, t) || rows_exceed(res.left, t)) lll_reduce_rows(a, res.left, t - 1);
        if (cols_exceed(a, t) || cols_exceed(res.right, t)) lll_reduce_cols(a, res.right, t - 1);

        int pr = t, pc = t;
        if (!find_pivot(a, t, pr, pc)) break;
        if (pr != t) {
            swap_rows(a, t, pr);
            swap_rows(res.left, t, pr);
        }
        if (pc != t) {
            swap_cols(a, t, pc);
            swap_cols(res.right, t, pc);
        }

        bool clean = false;
        bool allow_rows = true;
        bool allow_cols = true;
        while (!clean) {
            clean = true;
            if (allow_rows && (rows_exceed(a, t + 1) || rows_exceed(res.left, t + 1))) {
                if (!lll_reduce_rows(a, res.left, t)) allow_rows = false;
            }
            if (allow_cols && (cols_exceed(a, t + 1) || cols_exceed(res.right, t + 1))) {
                if (!lll_reduce_cols(a, res.right, t)) allow_cols = false;
            }
            // Clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot.
            for (int i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = balanced_quotient(a(i, t), a(t, t));
                if (q != 0) {
                    a.row(i) -= q * a.row(t);
                    res.left.row(i) -= q * res.left.row(t);
                }
                if (a(i, t) != 0) {
                    swap_rows(a, t, i);
                    swap_rows(res.left, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = balanced_quotient(a(t, j), a(t, t));
                if (q != 0) {
                    a.col(j) -= q * a.col(t);
                    res.right.col(j) -= q * res.right.col(t);
                }
                if (a(t, j) != 0) {
                    swap_cols(a, t, j);
                    swap_cols(res.right, t, j);
                    clean = false;
                }
            }
            if (!clean) {
                allow_rows = true;
                allow_cols = true;
                continue;
            }
            // Pivot must divide the rest of the submatrix; fold an offending
            // row in and restart the clearing loop.
            for (int i = t + 1; i < rows && clean; ++i) {
                for (int j = t + 1; j < cols && clean; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        a.row(t) += a.row(i);
                        res.left.row(t) += res.left.row(i);
                        clean = false;
                        allow_rows = true;
                        allow_cols = true;
                    }
                }
            }
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            res.left.row(t) = -res.left.row(t);
        }
    }

    res.diag = a;
    for (int t = 0; t < rows && t < cols; ++t) {
        if (a(t, t) != 0) res.divisors.push_back(a(t, t));
    }

    if (res.left * m * res.right != res.diag) {
        throw std::logic_error("smith normal form factor check failed");
    }
    if (rows <= 8 && rows > 0) {
        Integer d = bareiss_determinant(res.left);
        if (d != 1 && d != -1) throw std::logic_error("left factor is not unimodular");
    }
    if (cols <= 8 && cols > 0) {
        Integer d = bareiss_determinant(res.right);
        if (d != 1 && d != -1) throw std::logic_error("right factor is not unimodular");
    }
    return res;
}

}  // namespace coarse
