#include "framespec/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace framespec {

Frame::Frame(std::size_t dim, std::vector<CVector> vectors, std::vector<std::string> labels)
    : dim_(dim), vectors_(std::move(vectors)), labels_(std::move(labels)) {
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
        if (vectors_[j].size() != dim_)
            throw DimensionMismatch("frame: vector " + std::to_string(j) +
                                    " has length " + std::to_string(vectors_[j].size()) +
                                    ", expected " + std::to_string(dim_));
        if (!vectors_[j].is_finite())
            throw PreconditionViolated("frame: vector " + std::to_string(j) +
                                       " has non-finite entries");
    }
    if (!labels_.empty() && labels_.size() != vectors_.size())
        throw DimensionMismatch("frame: label count does not match vector count");
}

CMatrix frame_operator(const Frame& f) {
    CMatrix s(f.dim(), f.dim());
    for (const CVector& phi : f.vectors()) s.add_outer(cplx(1.0, 0.0), phi, phi);
    return s;
}

CMatrix gram(const Frame& f) {
    const std::size_t n = f.count();
    CMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = cplx(inner(f.vector(i), f.vector(i)).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = inner(f.vector(i), f.vector(j));
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
    }
    return g;
}

CVector analysis(const Frame& f, const CVector& x) {
    if (x.size() != f.dim()) throw DimensionMismatch("analysis: vector length differs from frame dimension");
    CVector c(f.count());
    for (std::size_t j = 0; j < f.count(); ++j) c[j] = inner(f.vector(j), x);
    return c;
}

CVector synthesis(const Frame& f, const CVector& c) {
    if (c.size() != f.count()) throw LengthMismatch("synthesis: coefficient count differs from frame size");
    CVector x(f.dim());
    for (std::size_t j = 0; j < f.count(); ++j) {
        const cplx cj = c[j];
        if (cj == cplx(0.0, 0.0)) continue;
        for (std::size_t k = 0; k < f.dim(); ++k) x[k] += cj * f.vector(j)[k];
    }
    return x;
}

FrameReport frame_report(const Frame& f, double tol) {
    FrameReport rep;
    rep.count = f.count();
    rep.dim = f.dim();
    rep.tolerance_used = tol;
    if (f.dim() == 0) throw NotAFrame("frame_report: zero-dimensional carrier space");

    const CMatrix s = frame_operator(f);
    const EigenDecomposition eig = hermitian_eig(s);
    rep.lower_bound = eig.values.front();
    rep.upper_bound = eig.values.back();
    if (rep.lower_bound <= tol)
        throw NotAFrame("frame_report: lower frame bound " + std::to_string(rep.lower_bound) +
                        " is not positive");

    const CMatrix g = gram(f);
    // Sum of |entry|^2 over the full (Hermitian) Gram equals trace(G^2),
    // pairing (i,j) with (j,i) symmetrically.
    double pot = 0.0;
    for (const cplx& z : g.data()) pot += std::norm(z);
    rep.potential = pot;
    rep.excess = f.count() - rank(g);

    rep.is_parseval = std::abs(rep.lower_bound - 1.0) <= tol && std::abs(rep.upper_bound - 1.0) <= tol;
    return rep;
}

namespace {

double parseval_defect(const Frame& f) {
    const CMatrix s = frame_operator(f);
    double defect = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            const cplx target = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            defect = std::max(defect, std::abs(s(i, j) - target));
        }
    return defect;
}

void require_parseval(const Frame& f, double tol, const char* who) {
    const double defect = parseval_defect(f);
    if (defect > tol)
        throw NotParseval(std::string(who) + ": frame operator is " + std::to_string(defect) +
                          " away from the identity (tolerance " + std::to_string(tol) + ")");
}

}  // namespace

GramPair gram_pair(const Frame& f, double tol) {
    require_parseval(f, tol, "gram_pair");
    GramPair gp;
    gp.g_phi = gram(f);
    gp.g_psi = CMatrix::identity(f.count());
    gp.g_psi -= gp.g_phi;
    return gp;
}

NaimarkDilation naimark_dilate(const Frame& f, double tol) {
    const GramPair gp = gram_pair(f, tol);
    const std::size_t n = f.count();

    // g_psi is an orthogonal projector; its near-1 eigenvectors span the
    // defect directions. The complement component of vector j is the
    // conjugated j-th coordinate across those eigenvectors, which makes the
    // inner products of the psi family reproduce g_psi entrywise.
    const EigenDecomposition eig = hermitian_eig(gp.g_psi);
    std::vector<const CVector*> defect_dirs;
    for (std::size_t k = 0; k < eig.values.size(); ++k)
        if (eig.values[k] >= 0.5) defect_dirs.push_back(&eig.vectors[k]);
    const std::size_t r = defect_dirs.size();

    std::vector<CVector> psi_vectors;
    psi_vectors.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        CVector psi_j(r);
        for (std::size_t k = 0; k < r; ++k) psi_j[k] = std::conj((*defect_dirs[k])[j]);
        psi_vectors.push_back(std::move(psi_j));
    }

    const std::size_t big = f.dim() + r;
    NaimarkDilation out{Frame(r, psi_vectors), {}, CMatrix(big, big), 0.0};
    out.onb.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        CVector e(big);
        for (std::size_t k = 0; k < f.dim(); ++k) e[k] = f.vector(j)[k];
        for (std::size_t k = 0; k < r; ++k) e[f.dim() + k] = psi_vectors[j][k];
        out.onb.push_back(std::move(e));
    }

    for (std::size_t k = 0; k < f.dim(); ++k) out.projector(k, k) = cplx(1.0, 0.0);

    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx target = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            res = std::max(res, std::abs(inner(out.onb[i], out.onb[j]) - target));
        }
    out.residual = res;
    if (res > 100.0 * tol)
        throw NumericalFailure("naimark_dilate: padded family misses orthonormality by " +
                               std::to_string(res));
    return out;
}

Frame project_onb(const std::vector<CVector>& onb, const CMatrix& projector, double tol) {
    if (onb.empty()) throw DimensionMismatch("project_onb: empty family");
    const std::size_t big = onb.front().size();
    for (const CVector& e : onb)
        if (e.size() != big) throw DimensionMismatch("project_onb: family vectors differ in length");
    if (projector.rows() != big || projector.cols() != big)
        throw DimensionMismatch("project_onb: projector shape differs from family dimension");
    if (onb.size() != big)
        throw NotOrthonormal("project_onb: family of " + std::to_string(onb.size()) +
                             " vectors cannot be a complete basis of dimension " +
                             std::to_string(big));
    for (std::size_t i = 0; i < onb.size(); ++i)
        for (std::size_t j = i; j < onb.size(); ++j) {
            const cplx target = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            if (std::abs(inner(onb[i], onb[j]) - target) > tol)
                throw NotOrthonormal("project_onb: family is not orthonormal within tolerance");
        }

    const std::vector<CVector> basis = range_basis(projector, tol);
    if (basis.empty()) throw PreconditionViolated("project_onb: projector has trivial range");

    std::vector<CVector> compressed;
    compressed.reserve(onb.size());
    for (const CVector& e : onb) {
        CVector phi(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) phi[k] = inner(basis[k], e);
        compressed.push_back(std::move(phi));
    }
    return Frame(basis.size(), std::move(compressed));
}

bool null_coefficients(const Frame& f, const CVector& c, double tol) {
    if (c.size() != f.count())
        throw LengthMismatch("null_coefficients: coefficient count differs from frame size");
    require_parseval(f, tolerances::parseval, "null_coefficients");

    const double cnorm = c.norm();
    const bool by_synthesis = synthesis(f, c).norm() <= tol * cnorm;
    const bool by_gram = gram(f).apply(c).norm() <= tol * cnorm;
    if (by_synthesis != by_gram)
        throw InternalInconsistency("null_coefficients: synthesis and Gram verdicts disagree");
    return by_synthesis;
}

}  // namespace framespec
