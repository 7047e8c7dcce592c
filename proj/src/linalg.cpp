#include "framespec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace framespec {

CVector CVector::unit(std::size_t n, std::size_t k) {
    CVector v(n);
    v[k] = cplx(1.0, 0.0);
    return v;
}

double CVector::norm() const {
    double acc = 0.0;
    for (const cplx& z : entries_) acc += std::norm(z);
    return std::sqrt(acc);
}

bool CVector::is_finite() const {
    for (const cplx& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

CVector& CVector::operator+=(const CVector& other) {
    if (size() != other.size()) throw DimensionMismatch("vector sum: lengths differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

CVector& CVector::operator-=(const CVector& other) {
    if (size() != other.size()) throw DimensionMismatch("vector difference: lengths differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

CVector& CVector::operator*=(cplx scalar) {
    for (cplx& z : entries_) z *= scalar;
    return *this;
}

cplx inner(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner product: lengths differ");
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CVector CMatrix::apply(const CVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector product: shapes differ");
    CVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = entries_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference: shapes differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scalar) {
    for (cplx& z : entries_) z *= scalar;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: shapes differ");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double CMatrix::max_norm() const {
    double m = 0.0;
    for (const cplx& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const cplx& z : entries_) acc += std::norm(z);
    return std::sqrt(acc);
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_) throw DimensionMismatch("hermiticity defect: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool CMatrix::is_finite() const {
    for (const cplx& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

void CMatrix::add_outer(cplx w, const CVector& u, const CVector& v) {
    if (u.size() != rows_ || v.size() != cols_)
        throw DimensionMismatch("rank-one update: shapes differ");
    for (std::size_t i = 0; i < rows_; ++i) {
        const cplx wu = w * u[i];
        if (wu == cplx(0.0, 0.0)) continue;
        cplx* row = entries_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) row[j] += wu * std::conj(v[j]);
    }
}

namespace {

// Fix the overall phase: the first component with |v_k| > 0.1 * ||v||_inf is
// rotated onto the positive real axis. Deterministic and continuous away from
// sign boundaries, which is all the goldens need.
void fix_phase(CVector& v) {
    double vmax = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) vmax = std::max(vmax, std::abs(v[k]));
    if (vmax == 0.0) return;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double a = std::abs(v[k]);
        if (a > 0.1 * vmax) {
            const cplx phase = std::conj(v[k]) / a;
            v *= phase;
            // Kill the residual imaginary dust on the anchor component.
            v[k] = cplx(std::abs(v[k]), 0.0);
            return;
        }
    }
}

void normalize(CVector& v) {
    const double n = v.norm();
    if (n > 0.0) v *= cplx(1.0 / n, 0.0);
}

}  // namespace

EigenDecomposition hermitian_eig(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_eig: matrix not square");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, m.max_norm());
    if (m.hermiticity_defect() > tol * scale)
        throw NotHermitian("hermitian_eig: Hermiticity defect " +
                           std::to_string(m.hermiticity_defect()) + " exceeds tolerance");

    // Work on flat copies: a is driven to diagonal form, v accumulates the
    // rotations (columns become eigenvectors).
    std::vector<cplx> a(m.data());
    std::vector<cplx> v(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = cplx(1.0, 0.0);

    const double fro = m.frobenius_norm();
    if (fro > 0.0 && n > 1) {
        const double off_target = 1e-13 * fro;
        bool converged = false;
        for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
            double off2 = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) off2 += std::norm(a[p * n + q]);
            if (std::sqrt(2.0 * off2) <= off_target) {
                converged = true;
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a[p * n + q];
                    const double babs = std::abs(apq);
                    if (babs == 0.0) continue;
                    const cplx alpha = apq / babs;  // phase of the pivot
                    const double app = a[p * n + p].real();
                    const double aqq = a[q * n + q].real();
                    const double tau = (aqq - app) / (2.0 * babs);
                    // Smaller root of t^2 - 2 tau t - 1 = 0.
                    const double t = (tau >= 0.0)
                                         ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                         : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx w = s * std::conj(alpha);

                    for (std::size_t k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const cplx akp = a[k * n + p];
                        const cplx akq = a[k * n + q];
                        const cplx nkp = c * akp + w * akq;
                        const cplx nkq = -std::conj(w) * akp + c * akq;
                        a[k * n + p] = nkp;
                        a[k * n + q] = nkq;
                        a[p * n + k] = std::conj(nkp);
                        a[q * n + k] = std::conj(nkq);
                    }
                    a[p * n + p] = cplx(app + t * babs, 0.0);
                    a[q * n + q] = cplx(aqq - t * babs, 0.0);
                    a[p * n + q] = cplx(0.0, 0.0);
                    a[q * n + p] = cplx(0.0, 0.0);

                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = v[k * n + p];
                        const cplx vkq = v[k * n + q];
                        v[k * n + p] = c * vkp + w * vkq;
                        v[k * n + q] = -std::conj(w) * vkp + c * vkq;
                    }
                }
            }
        }
        if (!converged) {
            double off2 = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) off2 += std::norm(a[p * n + q]);
            if (std::sqrt(2.0 * off2) > 1e-10 * fro)
                throw NumericalFailure("hermitian_eig: Jacobi sweeps did not converge");
        }
    }

    // Sort ascending; the stable sort keeps the deterministic Jacobi column
    // order inside exact ties.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * n + i].real() < a[j * n + j].real();
    });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        out.values[r] = a[order[r] * n + order[r]].real();
        CVector col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + order[r]];
        out.vectors[r] = std::move(col);
    }

    // Re-orthonormalize degenerate clusters by Gram-Schmidt in index order,
    // then fix every phase. The cluster width ties to the requested tolerance.
    const double cluster_tol = 10.0 * tol * scale;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && out.values[hi] - out.values[hi - 1] <= cluster_tol) ++hi;
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = lo; j < i; ++j) {
                const cplx proj = inner(out.vectors[j], out.vectors[i]);
                for (std::size_t k = 0; k < n; ++k) out.vectors[i][k] -= proj * out.vectors[j][k];
            }
            normalize(out.vectors[i]);
        }
        lo = hi;
    }
    for (CVector& vec : out.vectors) fix_phase(vec);
    return out;
}

namespace {

// Singular values (ascending) of m together with the eigenvectors of m* m,
// which span right-singular directions. Shared by rank and null_space so the
// two always partition the same decomposition.
struct SingularData {
    std::vector<double> sigma;     // ascending
    std::vector<CVector> vectors;  // right singular vectors, same order
};

SingularData singular_data(const CMatrix& m) {
    SingularData out;
    // Hermitian input: singular values are |eigenvalues| of m itself, at full
    // precision, and the eigenvectors are the singular directions. The
    // squared route below loses half the digits (a zero singular value
    // surfaces as sqrt(rounding) ~ 1e-8), so it is kept only for genuinely
    // non-Hermitian input.
    if (m.rows() == m.cols() && m.rows() > 0 &&
        m.hermiticity_defect() <= 1e-10 * std::max(1.0, m.max_norm())) {
        EigenDecomposition eig = hermitian_eig(m, 1e-8);
        std::vector<std::size_t> order(eig.values.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(eig.values[a]) < std::abs(eig.values[b]);
        });
        for (std::size_t idx : order) {
            out.sigma.push_back(std::abs(eig.values[idx]));
            out.vectors.push_back(std::move(eig.vectors[idx]));
        }
        return out;
    }
    const CMatrix gram = m.adjoint() * m;
    // gram is Hermitian PSD by construction; a loose Hermiticity tolerance
    // guards against rounding without ever rejecting honest input.
    EigenDecomposition eig = hermitian_eig(gram, 1e-8);
    out.sigma.reserve(eig.values.size());
    for (double lambda : eig.values) out.sigma.push_back(std::sqrt(std::max(lambda, 0.0)));
    out.vectors = std::move(eig.vectors);
    return out;
}

}  // namespace

std::size_t rank(const CMatrix& m, double tol) {
    if (tol <= 0.0) throw PreconditionViolated("rank: tolerance must be positive");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    SingularData sd = singular_data(m);
    const double smax = sd.sigma.empty() ? 0.0 : sd.sigma.back();
    if (smax == 0.0) return 0;
    std::size_t r = 0;
    for (double s : sd.sigma)
        if (s > tol * smax) ++r;
    return r;
}

std::vector<CVector> null_space(const CMatrix& m, double tol) {
    if (tol <= 0.0) throw PreconditionViolated("null_space: tolerance must be positive");
    SingularData sd = singular_data(m);
    const double smax = sd.sigma.empty() ? 0.0 : sd.sigma.back();
    std::vector<CVector> basis;
    for (std::size_t k = 0; k < sd.sigma.size(); ++k) {
        if (sd.sigma[k] <= tol * smax) basis.push_back(sd.vectors[k]);
    }
    return basis;
}

CMatrix matrix_exp_unitary(const CMatrix& h, double t) {
    EigenDecomposition eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    CMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = -eig.values[k] * t;
        u.add_outer(cplx(std::cos(angle), std::sin(angle)), eig.vectors[k], eig.vectors[k]);
    }
    return u;
}

std::vector<CVector> range_basis(const CMatrix& p, double tol) {
    if (p.rows() != p.cols()) throw NotProjector("range_basis: matrix not square");
    const std::size_t n = p.rows();
    if (p.hermiticity_defect() > tol)
        throw NotProjector("range_basis: matrix not Hermitian within tolerance");
    const CMatrix p2 = p * p;
    double idem = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) idem = std::max(idem, std::abs(p2(i, j) - p(i, j)));
    if (idem > 10.0 * tol)
        throw NotProjector("range_basis: matrix not idempotent within tolerance");

    // Coordinate projectors keep the canonical basis: ascending standard
    // basis vectors of the marked coordinates.
    bool coordinate = true;
    for (std::size_t i = 0; i < n && coordinate; ++i) {
        for (std::size_t j = 0; j < n && coordinate; ++j) {
            if (i == j) {
                const double d = p(i, i).real();
                if (std::min(std::abs(d), std::abs(d - 1.0)) > tol) coordinate = false;
            } else if (std::abs(p(i, j)) > tol) {
                coordinate = false;
            }
        }
    }
    std::vector<CVector> basis;
    if (coordinate) {
        for (std::size_t i = 0; i < n; ++i)
            if (p(i, i).real() >= 0.5) basis.push_back(CVector::unit(n, i));
        return basis;
    }
    EigenDecomposition eig = hermitian_eig(p, std::max(tol, tolerances::eig));
    for (std::size_t k = 0; k < n; ++k)
        if (eig.values[k] >= 0.5) basis.push_back(eig.vectors[k]);
    return basis;
}

}  // namespace framespec
