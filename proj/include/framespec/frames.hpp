#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "framespec/linalg.hpp"

namespace framespec {

// Finite vector family in C^dim. Immutable after construction. Zero vectors
// are allowed (some block constructions produce them); whether the family is
// a frame at all is decided by frame_report, not here. dim zero is legal as
// the degenerate carrier of a dilation complement with zero excess.
class Frame {
public:
    // Throws DimensionMismatch when a vector has the wrong length or the
    // label count does not match; PreconditionViolated on non-finite entries.
    Frame(std::size_t dim, std::vector<CVector> vectors,
          std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    std::size_t count() const { return vectors_.size(); }
    const CVector& vector(std::size_t j) const { return vectors_[j]; }
    const std::vector<CVector>& vectors() const { return vectors_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::size_t dim_;
    std::vector<CVector> vectors_;
    std::vector<std::string> labels_;
};

// Diagnostic summary of a family: spectral frame bounds, frame potential
// (squared Frobenius norm of the Gram matrix), excess (count minus Gram
// rank), and the Parseval verdict at the tolerance used.
struct FrameReport {
    std::size_t count = 0;
    std::size_t dim = 0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double potential = 0.0;
    std::size_t excess = 0;
    bool is_parseval = false;
    double tolerance_used = 0.0;
};

// Gram matrix of the family and its complement to the identity. For a
// Parseval frame both are orthogonal projectors summing to the identity.
struct GramPair {
    CMatrix g_phi;  // count x count, entries <phi_i, phi_j>
    CMatrix g_psi;  // identity minus g_phi; Gram of any dilation complement
};

// Dilation of a Parseval frame to an orthonormal basis of a larger space:
// each frame vector is padded with a complement component psi_j (living in a
// space whose dimension equals the excess) so that the padded family
// e_j = phi_j (+) psi_j is orthonormal.
struct NaimarkDilation {
    Frame psi;                 // complement family, dimension = excess
    std::vector<CVector> onb;  // padded vectors, length dim + excess
    CMatrix projector;         // coordinate projector back onto the original space
    double residual = 0.0;     // worst orthonormality defect of onb
};

// Frame operator sum of |phi_j><phi_j| (dim x dim, Hermitian PSD).
CMatrix frame_operator(const Frame& f);

// Gram matrix (count x count). No frame condition required.
CMatrix gram(const Frame& f);

// Analysis map: coefficients <phi_j, x> of a vector against the family.
CVector analysis(const Frame& f, const CVector& x);

// Synthesis map: sum of c_j phi_j.
CVector synthesis(const Frame& f, const CVector& c);

// Spectral diagnostics. Throws NotAFrame when the lower frame bound is not
// positive beyond tol.
FrameReport frame_report(const Frame& f, double tol = tolerances::parseval);

// Gram matrix and its complement, gated on the Parseval property
// (max-norm distance of the frame operator from the identity at most tol).
GramPair gram_pair(const Frame& f, double tol = tolerances::parseval);

// Naimark dilation of a Parseval frame. Throws NotParseval behind the same
// gate as gram_pair and NumericalFailure when the padded family misses
// orthonormality by more than 100 * tol.
NaimarkDilation naimark_dilate(const Frame& f, double tol = tolerances::parseval);

// Compress a complete orthonormal family through an orthogonal projector:
// the projected vectors expressed in a canonical orthonormal basis of the
// range. The result is always a Parseval frame of the range.
Frame project_onb(const std::vector<CVector>& onb, const CMatrix& projector,
                  double tol = tolerances::orth);

// Whether the coefficient vector c synthesizes to zero, checked two ways
// (synthesis norm and Gram image norm, both against tol * ||c||). The two
// verdicts must agree; disagreement throws InternalInconsistency.
bool null_coefficients(const Frame& f, const CVector& c, double tol = tolerances::parseval);

}  // namespace framespec
