#include "torusact/normal_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace torusact {

namespace {

// (row_r, row_i) <- (p*row_r + q*row_i, x*row_r + y*row_i); the 2x2 block
// [[p, q], [x, y]] always has determinant 1 at the call sites below.
void combineRows(IntMatrix& m, std::size_t r, std::size_t i, const Int& p, const Int& q,
                 const Int& x, const Int& y) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Int a = m(r, c), b = m(i, c);
        m(r, c) = p * a + q * b;
        m(i, c) = x * a + y * b;
    }
}

// (col_r, col_i) <- (p*col_r + q*col_i, x*col_r + y*col_i).
void combineCols(IntMatrix& m, std::size_t r, std::size_t i, const Int& p, const Int& q,
                 const Int& x, const Int& y) {
    for (std::size_t c = 0; c < m.rows(); ++c) {
        Int a = m(c, r), b = m(c, i);
        m(c, r) = p * a + q * b;
        m(c, i) = x * a + y * b;
    }
}

void swapCols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// Determinant-one block [[p, q], [x, y]] sending (a, b) to (gcd, 0), a != 0.
// When a divides b the block must not mix b back into the pivot row or
// column (gcdext may return p = 0 there), or the elimination loops cycle.
void bezoutBlock(const Int& a, const Int& b, Int& p, Int& q, Int& x, Int& y) {
    if (b % a == 0) {
        int s = sgn(a);
        p = s;
        q = 0;
        x = -b / (s > 0 ? a : Int(-a));
        y = s;
        return;
    }
    Int g;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    x = -b / g;
    y = a / g;
}

// In-place row HNF; mirrors every row operation on *u when given.
// Returns the rank; nonzero rows end up on top in canonical form.
std::size_t hnfInPlace(IntMatrix& a, IntMatrix* u) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            if (a(r, c) == 0) {
                a.swapRows(r, i);
                if (u) u->swapRows(r, i);
                continue;
            }
            Int p, q, x, y;
            bezoutBlock(a(r, c), a(i, c), p, q, x, y);
            combineRows(a, r, i, p, q, x, y);
            if (u) combineRows(*u, r, i, p, q, x, y);
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            a.negateRow(r);
            if (u) u->negateRow(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floorDiv(a(i, c), a(r, c));
            if (q == 0) continue;
            a.addRowMultiple(i, r, -q);
            if (u) u->addRowMultiple(i, r, -q);
        }
        ++r;
    }
    return r;
}

IntMatrix takeRows(const IntMatrix& m, std::size_t count) {
    IntMatrix h(count, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = m(i, j);
    return h;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t rank = hnfInPlace(a, &u);
    return {takeRows(a, rank), std::move(u)};
}

IntMatrix hnfBasis(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t rank = hnfInPlace(a, nullptr);
    return takeRows(a, rank);
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    const std::size_t rows = d.rows(), cols = d.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    IntMatrix vInv = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot search in the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (d(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        d.swapRows(t, pi);
        u.swapRows(t, pi);
        swapCols(d, t, pj);
        swapCols(v, t, pj);
        vInv.swapRows(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int p, q, x, y;
                bezoutBlock(d(t, t), d(i, t), p, q, x, y);
                combineRows(d, t, i, p, q, x, y);
                combineRows(u, t, i, p, q, x, y);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int p, q, x, y;
                bezoutBlock(d(t, t), d(t, j), p, q, x, y);
                combineCols(d, t, j, p, q, x, y);
                combineCols(v, t, j, p, q, x, y);
                // vInv picks up the inverse block [[y, -x], [-q, p]] acting on rows (t, j).
                combineRows(vInv, t, j, y, -x, -q, p);
                dirty = true;
            }
            if (dirty) continue;
            // d(t,t) must divide every remaining entry; if not, fold the
            // offending row into row t and redo the elimination.
            for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.addRowMultiple(t, i, 1);
                        u.addRowMultiple(t, i, 1);
                        dirty = true;
                    }
        }
        if (d(t, t) < 0) {
            d.negateRow(t);
            u.negateRow(t);
        }
    }
    return {std::move(d), std::move(u), std::move(v), std::move(vInv)};
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a(i, k) == 0) ++i;
            if (i == n) return 0;
            a.swapRows(k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool isUnimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodularity test on non-square matrix");
    Int d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix unimodularInverse(const IntMatrix& m) {
    if (!isUnimodular(m)) throw std::invalid_argument("matrix is not unimodular");
    const std::size_t n = m.rows();
    // Gauss-Jordan over the rationals; |det| = 1 forces an integral inverse.
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rat(m(i, j));
        aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (aug(p, c) == 0) ++p;
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(p, j));
        Rat inv = 1 / aug(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& e = aug(i, n + j);
            if (e.get_den() != 1) throw std::logic_error("unimodular inverse not integral");
            out(i, j) = e.get_num();
        }
    return out;
}

}  // namespace torusact
