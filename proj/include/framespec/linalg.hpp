#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framespec/errors.hpp"

namespace framespec {

using cplx = std::complex<double>;

// Default tolerances. Every operation that takes a tolerance parameter
// defaults to one of these.
namespace tolerances {
// Relative eigenpair tolerance: residuals are bounded by 10 * eig * ||m||.
inline constexpr double eig = 1e-10;
// Orthonormality and projector checks (max-norm).
inline constexpr double orth = 1e-10;
// Singular values below rank_rel * sigma_max count as zero.
inline constexpr double rank_rel = 1e-9;
// Max-norm distance of a frame operator from the identity.
inline constexpr double parseval = 1e-8;
// Certificate threshold, relative to the Frobenius norm of the realization.
inline constexpr double cert_rel = 1e-7;
}  // namespace tolerances

// Dense complex vector. Plain value type; entries are mutable, finiteness is
// checked at the library boundaries (construction of frames, deserialization).
class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t n) : entries_(n) {}
    CVector(std::initializer_list<cplx> init) : entries_(init) {}
    explicit CVector(std::vector<cplx> entries) : entries_(std::move(entries)) {}

    // k-th standard basis vector of dimension n.
    static CVector unit(std::size_t n, std::size_t k);

    std::size_t size() const { return entries_.size(); }
    cplx& operator[](std::size_t i) { return entries_[i]; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<cplx>& entries() const { return entries_; }

    double norm() const;
    bool is_finite() const;

    CVector& operator+=(const CVector& other);
    CVector& operator-=(const CVector& other);
    CVector& operator*=(cplx scalar);

    friend CVector operator+(CVector a, const CVector& b) { return a += b; }
    friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
    friend CVector operator*(cplx scalar, CVector v) { return v *= scalar; }

private:
    std::vector<cplx> entries_;
};

// Inner product, conjugate-linear in the FIRST argument:
//   inner(a, b) = sum_k conj(a[k]) * b[k].
cplx inner(const CVector& a, const CVector& b);

// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<cplx>& data() { return entries_; }
    const std::vector<cplx>& data() const { return entries_; }

    CMatrix adjoint() const;
    CVector apply(const CVector& x) const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx scalar);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx scalar, CMatrix m) { return m *= scalar; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    // Largest |entry|.
    double max_norm() const;
    double frobenius_norm() const;
    // Max-norm distance from the own adjoint.
    double hermiticity_defect() const;
    bool is_finite() const;

    // Rank-one update: m += w * |u><v|, i.e. m(i,j) += w * u[i] * conj(v[j]).
    void add_outer(cplx w, const CVector& u, const CVector& v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

// Result of a Hermitian eigendecomposition. values are ascending; vectors[k]
// is the unit eigenvector for values[k], phase-fixed so that its first
// component of significant size is positive-real.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<CVector> vectors;
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Deterministic: identical input bits give identical output bits.
// Eigenvectors inside a degenerate cluster are re-orthonormalized by
// Gram-Schmidt in index order. Throws DimensionMismatch for a non-square
// input and NotHermitian when the Hermiticity defect exceeds tol * scale.
EigenDecomposition hermitian_eig(const CMatrix& m, double tol = tolerances::eig);

// Numerical rank: number of singular values above tol * sigma_max. Hermitian
// input resolves singular values at full precision; for non-Hermitian input
// they come from the squared problem and bottom out near 1e-8 * sigma_max.
std::size_t rank(const CMatrix& m, double tol = tolerances::rank_rel);

// Orthonormal basis of the numerical kernel {c : ||m c|| <= tol * ||m|| * ||c||}.
// For the zero matrix every direction qualifies. Shares its decomposition
// with rank, so the two always partition the same singular values (same
// precision caveat for non-Hermitian input).
std::vector<CVector> null_space(const CMatrix& m, double tol = tolerances::rank_rel);

// Unitary propagator exp(-i h t) of a Hermitian generator, via the
// eigendecomposition of h.
CMatrix matrix_exp_unitary(const CMatrix& h, double t);

// Orthonormal basis of the range of an orthogonal projector p, which must be
// Hermitian and idempotent within tol (else NotProjector). When p is a
// coordinate projector (diagonal 0/1 within tol) the basis is the matching
// subset of standard basis vectors in ascending index order; otherwise the
// deterministic eigenbasis of p for eigenvalues near 1.
std::vector<CVector> range_basis(const CMatrix& p, double tol = tolerances::orth);

}  // namespace framespec
