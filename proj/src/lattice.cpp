#include "torusact/lattice.hpp"

#include <stdexcept>

namespace torusact {

Lattice Lattice::fromGenerators(std::size_t ambientDim, const IntMatrix& generators) {
    if (generators.cols() != ambientDim)
        throw std::invalid_argument("lattice generators have wrong ambient dimension");
    return Lattice(ambientDim, hnfBasis(generators));
}

bool Lattice::contains(std::span<const Int> u) const {
    if (u.size() != ambient_) throw std::invalid_argument("lattice membership dimension mismatch");
    std::vector<Int> r(u.begin(), u.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (basis_(i, p) == 0) ++p;  // pivot column; basis rows are nonzero
        if (r[p] % basis_(i, p) != 0) return false;
        Int q = r[p] / basis_(i, p);
        if (q != 0)
            for (std::size_t j = p; j < ambient_; ++j) r[j] -= q * basis_(i, j);
    }
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

Lattice integerRowKernel(const IntMatrix& m) {
    HnfResult res = hnf(m);
    const std::size_t rank = res.h.rows();
    const std::size_t rows = m.rows();
    // Transform rows opposite the zero rows of the HNF span the left kernel.
    IntMatrix gen(rows - rank, rows);
    for (std::size_t i = rank; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) gen(i - rank, j) = res.u(i, j);
    return Lattice::fromGenerators(rows, gen);
}

namespace {

// Scales each row by the lcm of its denominators.
IntMatrix clearDenominators(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat scaled = m(i, j) * Rat(l);
            out(i, j) = scaled.get_num();
        }
    }
    return out;
}

}  // namespace

Lattice rationalKernelLattice(const RatMatrix& m) {
    return integerRowKernel(clearDenominators(m).transpose());
}

Lattice preimageLattice(const RatMatrix& b, const Lattice& sub) {
    const std::size_t n = sub.ambientDim();
    if (b.cols() != n) throw std::invalid_argument("preimage matrix has wrong column count");
    const std::size_t d = b.rows();
    const std::size_t k = sub.rank();
    if (k == 0) return Lattice::trivial(n);

    // u = t * S for t in Z^k; the condition b*u in Z^d becomes c*t in Z^d
    // with c = b * S^T, i.e. a*t = 0 (mod ell) after clearing denominators.
    const IntMatrix& s = sub.basis();
    RatMatrix c(d, k);
    Int ell = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat acc = 0;
            for (std::size_t x = 0; x < n; ++x) acc += b(i, x) * Rat(s(j, x));
            c(i, j) = acc;
            ell = lcm(ell, acc.get_den());
        }

    // t-lattice = projection of the integer kernel of [a | -ell*I].
    IntMatrix stacked(d, k + d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rat scaled = c(i, j) * Rat(ell);
            stacked(i, j) = scaled.get_num();
        }
        stacked(i, k + i) = -ell;
    }
    Lattice kernel = integerRowKernel(stacked.transpose());

    IntMatrix rows(kernel.rank(), n);
    for (std::size_t r = 0; r < kernel.rank(); ++r)
        for (std::size_t x = 0; x < n; ++x) {
            Int acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += kernel.basis()(r, j) * s(j, x);
            rows(r, x) = acc;
        }
    return Lattice::fromGenerators(n, rows);
}

}  // namespace torusact
