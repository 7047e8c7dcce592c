#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "framespec/frames.hpp"
#include "framespec/linalg.hpp"

namespace framespec {

// Bounded real coefficient list paired with a frame, one value per vector.
struct CoefficientSequence {
    std::vector<double> values;
    double e_min = 0.0;
    double e_max = 0.0;

    // Throws PreconditionViolated on an empty or non-finite list.
    explicit CoefficientSequence(std::vector<double> v);
};

// Operator sum of E_j |phi_j><phi_j| over a Parseval frame, with its matrix
// realization cached. Constructed only through build(), which verifies the
// Parseval gate, Hermiticity, and the spectral interval.
class FrameHamiltonian {
public:
    const Frame& frame() const { return frame_; }
    const CoefficientSequence& coeffs() const { return coeffs_; }
    const CMatrix& matrix() const { return matrix_; }
    // Eigendecomposition of the realization, computed once at build time.
    const EigenDecomposition& eigensystem() const { return eig_; }

private:
    FrameHamiltonian(Frame f, CoefficientSequence e, CMatrix m, EigenDecomposition eig)
        : frame_(std::move(f)), coeffs_(std::move(e)), matrix_(std::move(m)), eig_(std::move(eig)) {}
    friend FrameHamiltonian build(const Frame&, const CoefficientSequence&, double);

    Frame frame_;
    CoefficientSequence coeffs_;
    CMatrix matrix_;
    EigenDecomposition eig_;
};

// Verdict on a candidate eigenvalue, with the certifying coefficient vector
// when accepted. gram_norm is the Gram image norm of the witness (must exceed
// the tolerance), b_norm the constraint residual (must stay below it).
struct EigenCertificate {
    double mu = 0.0;
    bool accepted = false;
    CVector coefficient_vector;  // empty when rejected
    CVector eigenvector;         // reconstructed, unit norm; empty when rejected
    double gram_norm = 0.0;
    double b_norm = 0.0;
    double tolerance_used = 0.0;
};

// The ONB and coefficient list onto which the operator sum collapses:
// H = sum of tilde_E[k] |tilde_e[k]><tilde_e[k]|.
struct EConnection {
    std::vector<double> tilde_E;   // ascending
    std::vector<CVector> tilde_e;  // matching unit eigenvectors
    double reconstruction_residual = 0.0;
};

// One verified sum rule: residual is the defect (violation amount for
// inequalities), pass is the verdict at the tolerance used.
struct SumRuleCheck {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct SumRuleReport {
    std::vector<SumRuleCheck> checks;
    double tolerance_used = 0.0;
    bool all_pass() const;
};

// Assemble the operator sum. Throws NotParseval when the frame operator is
// further than tol from the identity (max-norm), LengthMismatch when the
// coefficient count differs from the frame size, and NumericalFailure when
// the verified invariants (Hermiticity, spectrum inside
// [e_min - margin, e_max + margin]) fail.
FrameHamiltonian build(const Frame& f, const CoefficientSequence& e,
                       double tol = tolerances::parseval);

// Compress a Hermitian operator through an orthogonal projector: returns the
// restriction of p h p to a canonical orthonormal basis of range(p) together
// with the isometry whose columns are that basis. Throws NotHermitian or
// NotProjector.
std::pair<CMatrix, CMatrix> physical_part(const CMatrix& h, const CMatrix& p,
                                          double tol = tolerances::orth);

// Test whether mu is an eigenvalue of the operator sum without touching the
// realization's spectrum: mu qualifies exactly when the Gram-weighted
// constraint matrix G (E - mu) G has a numerical null vector c whose Gram
// image stays away from zero. tol > 0 required; the overload without tol uses
// cert_rel times the Frobenius norm of the realization.
EigenCertificate certify_eigenvalue(const FrameHamiltonian& fh, double mu, double tol);
EigenCertificate certify_eigenvalue(const FrameHamiltonian& fh, double mu);

// Same verdict through the dilation complement: mu qualifies when some c with
// nonvanishing Gram image maps under (E - mu) G into the range of the
// complement Gram (taken from the actual dilation, not as identity minus
// Gram). Must agree with certify_eigenvalue; disagreement throws
// InternalInconsistency.
EigenCertificate certify_eigenvalue_dual(const FrameHamiltonian& fh, double mu, double tol);
EigenCertificate certify_eigenvalue_dual(const FrameHamiltonian& fh, double mu);

// Collapse the operator sum onto an ONB with new coefficients. Verifies the
// reconstruction residual and certifies every eigenvalue through the
// certificate path; failures throw NumericalFailure.
EConnection e_connect(const FrameHamiltonian& fh);

// Verify the sum rules linking the frame-side data (E_j, ||phi_j||, Gram) to
// the collapsed coefficients: trace, second moment, the second-moment lower
// bound, and the partial-sum majorization of the padded collapsed spectrum
// over the weights E_j ||phi_j||^2 (both sorted decreasing). Requires every
// E_j > 0 and every phi_j nonzero; offenders are listed in the
// PreconditionViolated message.
SumRuleReport k81_check(const FrameHamiltonian& fh, double tol = 1e-9);

// Evolve f0 under the unitary generated by h for time t. Norm preservation
// is verified to 1e-10 relative; drift throws NumericalFailure.
CVector propagate(const CMatrix& h, const CVector& f0, double t);

}  // namespace framespec
