#include "framespec/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "framespec/hamiltonian.hpp"
#include "framespec/models.hpp"
#include "framespec/secular.hpp"

namespace framespec {

bool ReproductionReport::all_pass() const {
    for (const ReproductionCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

ReproductionCheck make_check(std::string name, json expected, std::string provenance,
                             json got, double tol, double deviation) {
    ReproductionCheck c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.provenance = std::move(provenance);
    c.got = std::move(got);
    c.tolerance = tol;
    c.deviation = deviation;
    c.pass = deviation <= tol;
    return c;
}

ReproductionCheck check_matrix(std::string name, const CMatrix& expected,
                               const CMatrix& got, double tol, std::string provenance) {
    double dev = std::numeric_limits<double>::infinity();
    if (expected.rows() == got.rows() && expected.cols() == got.cols()) {
        dev = 0.0;
        for (std::size_t i = 0; i < expected.rows(); ++i)
            for (std::size_t j = 0; j < expected.cols(); ++j)
                dev = std::max(dev, std::abs(expected(i, j) - got(i, j)));
    }
    return make_check(std::move(name), matrix_to_json(expected), std::move(provenance),
                      matrix_to_json(got), tol, dev);
}

// Multiset comparison: both lists sorted ascending, worst entrywise gap.
ReproductionCheck check_values(std::string name, std::vector<double> expected,
                               std::vector<double> got, double tol, std::string provenance) {
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    double dev = std::numeric_limits<double>::infinity();
    if (expected.size() == got.size()) {
        dev = 0.0;
        for (std::size_t k = 0; k < expected.size(); ++k)
            dev = std::max(dev, std::abs(expected[k] - got[k]));
    }
    return make_check(std::move(name), json(expected), std::move(provenance), json(got),
                      tol, dev);
}

ReproductionCheck check_scalar(std::string name, double expected, double got, double tol,
                               std::string provenance) {
    return make_check(std::move(name), json(expected), std::move(provenance), json(got),
                      tol, std::abs(expected - got));
}

ReproductionCheck check_vectors(std::string name, const std::vector<CVector>& expected,
                                const std::vector<CVector>& got, double tol,
                                std::string provenance) {
    json ej = json::array();
    for (const CVector& v : expected) ej.push_back(vector_to_json(v));
    json gj = json::array();
    for (const CVector& v : got) gj.push_back(vector_to_json(v));
    double dev = std::numeric_limits<double>::infinity();
    if (expected.size() == got.size()) {
        dev = 0.0;
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (expected[k].size() != got[k].size()) {
                dev = std::numeric_limits<double>::infinity();
                break;
            }
            for (std::size_t i = 0; i < expected[k].size(); ++i)
                dev = std::max(dev, std::abs(expected[k][i] - got[k][i]));
        }
    }
    return make_check(std::move(name), std::move(ej), std::move(provenance), std::move(gj),
                      tol, dev);
}

ReproductionCheck check_flag(std::string name, bool got, std::string provenance) {
    return make_check(std::move(name), json(true), std::move(provenance), json(got), 0.0,
                      got ? 0.0 : 1.0);
}

double eigen_residual(const CMatrix& h, const CVector& v, double value) {
    CVector r = h.apply(v);
    r -= value * v;
    return r.norm();
}

ReproductionReport example1() {
    ReproductionReport rep;
    rep.example_id = 1;

    const Frame phi = mercedes();
    rep.checks.push_back(
        check_matrix("frame operator is the identity", CMatrix::identity(2),
                     frame_operator(phi), 1e-12, "identity"));

    // The lifted orthonormal triple: each frame vector padded with 1/sqrt(3).
    const double third = 1.0 / std::sqrt(3.0);
    std::vector<CVector> lifted;
    for (const CVector& v : phi.vectors())
        lifted.push_back(CVector{v[0], v[1], cplx(third, 0.0)});
    CMatrix p(3, 3);
    p(0, 0) = p(1, 1) = cplx(1.0, 0.0);
    rep.checks.push_back(check_vectors("compressing the lifted basis recovers the frame",
                                       phi.vectors(), project_onb(lifted, p).vectors(),
                                       1e-12, "tabulated"));

    const NaimarkDilation dil = naimark_dilate(phi);
    CMatrix third_gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) third_gram(i, j) = cplx(1.0 / 3.0, 0.0);
    rep.checks.push_back(check_matrix("dilation complement Gram is constant one-third",
                                      third_gram, gram(dil.psi), 1e-10, "tabulated"));

    const double e1 = 1.0, e2 = 2.0, e3 = 3.0;
    const FrameHamiltonian fh = build(phi, CoefficientSequence({e1, e2, e3}));
    CMatrix closed(2, 2);
    closed(0, 0) = cplx((4.0 * e1 + e2 + e3) / 6.0, 0.0);
    closed(0, 1) = closed(1, 0) = cplx(std::sqrt(3.0) * (e3 - e2) / 6.0, 0.0);
    closed(1, 1) = cplx(3.0 * (e2 + e3) / 6.0, 0.0);
    rep.checks.push_back(check_matrix("operator sum matches the two-by-two closed form",
                                      closed, fh.matrix(), 1e-12, "closed-form"));

    const double s = e1 + e2 + e3;
    const double disc = std::sqrt(e1 * e1 + e2 * e2 + e3 * e3 - e1 * e2 - e2 * e3 - e1 * e3);
    const std::vector<double> pair{(s - disc) / 3.0, (s + disc) / 3.0};
    const EConnection con = e_connect(fh);
    rep.checks.push_back(check_values("collapsed coefficients match the closed-form pair",
                                      pair, con.tilde_E, 1e-10, "closed-form"));
    rep.checks.push_back(check_values("quadratic solver agrees with the closed form", pair,
                                      mercedes_roots(e1, e2, e3).roots, 1e-12, "oracle"));
    rep.checks.push_back(check_values("coefficients (1,2,3) collapse to (6 -/+ sqrt 3)/3",
                                      {(6.0 - std::sqrt(3.0)) / 3.0,
                                       (6.0 + std::sqrt(3.0)) / 3.0},
                                      con.tilde_E, 1e-10, "closed-form"));

    // Closed-form eigenvectors (E2 != E3 branch).
    double worst = 0.0;
    for (int sign = -1; sign <= 1; sign += 2) {
        CVector v{cplx(-2.0 * e1 + e2 + e3 - sign * 2.0 * disc, 0.0),
                  cplx(std::sqrt(3.0) * (e2 - e3), 0.0)};
        v *= cplx(1.0 / v.norm(), 0.0);
        worst = std::max(worst, eigen_residual(fh.matrix(), v, (s + sign * disc) / 3.0));
    }
    rep.checks.push_back(check_scalar("closed-form eigenvectors solve the eigenvalue equation",
                                      0.0, worst, 1e-10, "closed-form"));
    return rep;
}

ReproductionReport example2() {
    ReproductionReport rep;
    rep.example_id = 2;

    const std::size_t k = 4;
    const Frame phi = casazza_frame(k);
    const FrameReport fr = frame_report(phi);
    rep.checks.push_back(
        check_flag("family is Parseval with unit excess", fr.is_parseval && fr.excess == 1,
                   "identity"));

    const std::vector<double> e{1.0, 2.0, 3.0, 4.0, 5.0};
    const FrameHamiltonian fh = build(phi, CoefficientSequence(e));
    const EConnection con = e_connect(fh);
    rep.checks.push_back(check_scalar("largest collapsed coefficient equals the extra one",
                                      e.back(), con.tilde_E.back(), 1e-9, "identity"));

    const SecularRoots roots = casazza_roots({e.begin(), e.end() - 1});
    std::vector<double> interior(con.tilde_E.begin(), con.tilde_E.end() - 1);
    rep.checks.push_back(check_values("interior coefficients solve the reciprocal-sum equation",
                                      roots.roots, interior, 1e-9, "oracle"));

    // Printed eigenvector formulas: the flat vector for the top eigenvalue
    // and sum of (E_i - mu)^{-1} e_i for each interior root.
    double worst = 0.0;
    {
        CVector flat(k);
        for (std::size_t i = 0; i < k; ++i) flat[i] = cplx(1.0 / std::sqrt(double(k)), 0.0);
        worst = std::max(worst, eigen_residual(fh.matrix(), flat, e.back()));
        for (double mu : roots.roots) {
            CVector f(k);
            for (std::size_t i = 0; i < k; ++i) f[i] = cplx(1.0 / (e[i] - mu), 0.0);
            f *= cplx(1.0 / f.norm(), 0.0);
            worst = std::max(worst, eigen_residual(fh.matrix(), f, mu));
        }
    }
    rep.checks.push_back(check_scalar("printed eigenvector formulas solve the eigenvalue equation",
                                      0.0, worst, 1e-8, "closed-form"));

    rep.checks.push_back(check_values("two-coefficient root is one half", {0.5},
                                      casazza_roots({0.0, 1.0}).roots, 1e-12, "closed-form"));
    const double r3 = 1.0 / std::sqrt(3.0);
    rep.checks.push_back(check_values("three-coefficient roots straddle one by a third of root three",
                                      {1.0 - r3, 1.0 + r3}, casazza_roots({0.0, 1.0, 2.0}).roots,
                                      1e-12, "closed-form"));
    return rep;
}

// Bounded strictly increasing coefficients accumulating at 1, enumerated
// across the blocks of the direct sum: E_m = 1 - 1/(m + 2).
std::vector<double> accumulating_coeffs(std::size_t count) {
    std::vector<double> e;
    e.reserve(count);
    for (std::size_t m = 0; m < count; ++m)
        e.push_back(1.0 - 1.0 / static_cast<double>(m + 2));
    return e;
}

ReproductionReport example3() {
    ReproductionReport rep;
    rep.example_id = 3;

    const std::size_t k_max = 5;
    const Frame block = casazza_block_frame(k_max);
    rep.checks.push_back(
        check_flag("direct-sum family is Parseval", frame_report(block).is_parseval,
                   "identity"));

    const std::vector<double> e = accumulating_coeffs(block.count());
    const FrameHamiltonian fh = build(block, CoefficientSequence(e));

    // Per-block oracle: the collapsed coefficients of each summand.
    std::vector<double> assembled;
    std::vector<double> extras;
    std::size_t offset = 0;
    for (std::size_t k = 2; k <= k_max; ++k) {
        std::vector<double> ek(e.begin() + offset, e.begin() + offset + k + 1);
        const EConnection c = e_connect(build(casazza_frame(k), CoefficientSequence(ek)));
        assembled.insert(assembled.end(), c.tilde_E.begin(), c.tilde_E.end());
        extras.push_back(ek.back());
        offset += k + 1;
    }
    rep.checks.push_back(check_values("spectrum is the union of the per-block spectra",
                                      assembled, fh.eigensystem().values, 1e-9, "oracle"));

    double worst = 0.0;
    for (double extra : extras) {
        double best = std::numeric_limits<double>::infinity();
        for (double v : fh.eigensystem().values) best = std::min(best, std::abs(v - extra));
        worst = std::max(worst, best);
    }
    rep.checks.push_back(check_scalar("every extra coefficient stays in the spectrum", 0.0,
                                      worst, 1e-9, "identity"));

    // Truncation clustering: enlarging the direct sum adds eigenvalues near
    // the accumulation point.
    const double eps = 0.1;
    std::vector<double> counts;
    for (std::size_t trunc : {std::size_t{3}, std::size_t{6}}) {
        const Frame f = casazza_block_frame(trunc);
        const FrameHamiltonian h = build(f, CoefficientSequence(accumulating_coeffs(f.count())));
        double n = 0.0;
        for (double v : h.eigensystem().values)
            if (std::abs(v - 1.0) < eps) n += 1.0;
        counts.push_back(n);
    }
    rep.checks.push_back(check_flag("eigenvalues pile up near the accumulation point",
                                    counts[1] > counts[0], "identity"));
    return rep;
}

ReproductionReport example4() {
    ReproductionReport rep;
    rep.example_id = 4;

    const CarAlgebra car = car_algebra(2);
    CMatrix a1(4, 4), a2(4, 4);
    a1(0, 1) = a1(2, 3) = cplx(1.0, 0.0);
    a2(0, 2) = cplx(1.0, 0.0);
    a2(1, 3) = cplx(-1.0, 0.0);
    rep.checks.push_back(
        check_matrix("first lowering operator matches the printed matrix", a1,
                     car.lowering[0], 0.0, "tabulated"));
    rep.checks.push_back(
        check_matrix("second lowering operator matches the printed matrix", a2,
                     car.lowering[1], 0.0, "tabulated"));

    const double w1 = 0.5, w2 = 3.5, lam = 2.0;
    const ModelBundle cell = fermion_cell(w1, w2, lam);
    CMatrix h(4, 4);
    h(1, 1) = cplx(w1, 0.0);
    h(2, 2) = cplx(w2, 0.0);
    h(1, 2) = h(2, 1) = cplx(lam, 0.0);
    h(3, 3) = cplx(w1 + w2, 0.0);
    rep.checks.push_back(check_matrix("Hamiltonian matrix matches the printed form", h,
                                      cell.hamiltonian, 0.0, "tabulated"));

    const EigenDecomposition eig = hermitian_eig(cell.hamiltonian);
    rep.checks.push_back(check_values("spectrum is the printed quadruple",
                                      {0.0, 4.0, -0.5, 4.5}, eig.values, 1e-12, "tabulated"));

    // Printed eigenvectors in coefficient order E = (0, 4, -1/2, 9/2).
    const double r5 = std::sqrt(5.0);
    std::vector<CVector> onb;
    onb.push_back(CVector::unit(4, 0));
    onb.push_back(CVector::unit(4, 3));
    onb.push_back(CVector{cplx(0.0, 0.0), cplx(-2.0 / r5, 0.0), cplx(1.0 / r5, 0.0),
                          cplx(0.0, 0.0)});
    onb.push_back(CVector{cplx(0.0, 0.0), cplx(1.0 / r5, 0.0), cplx(2.0 / r5, 0.0),
                          cplx(0.0, 0.0)});
    const Frame compressed_frame = project_onb(onb, cell.projector);
    std::vector<CVector> printed;
    printed.push_back(CVector{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)});
    printed.push_back(CVector{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)});
    printed.push_back(CVector{cplx(0.0, 0.0), cplx(1.0 / r5, 0.0), cplx(0.0, 0.0)});
    printed.push_back(CVector{cplx(0.0, 0.0), cplx(2.0 / r5, 0.0), cplx(0.0, 0.0)});
    rep.checks.push_back(check_vectors("compressed frame matches the printed vectors", printed,
                                       compressed_frame.vectors(), 1e-12, "tabulated"));

    const auto [h_ph, isometry] = physical_part(cell.hamiltonian, cell.projector);
    (void)isometry;
    const double beta = std::atan(2.0);  // cos = 1/sqrt 5, sin = 2/sqrt 5
    const double root = projected_pair_root(-0.5, 4.5, beta);
    rep.checks.push_back(check_values("physical spectrum is the pair survivors plus the projected root",
                                      {0.0, 4.0, root}, hermitian_eig(h_ph).values, 1e-9,
                                      "oracle"));

    const FrameHamiltonian fh =
        build(compressed_frame, CoefficientSequence({0.0, 4.0, -0.5, 4.5}));
    rep.checks.push_back(check_matrix("operator sum over the compressed frame reproduces the compression",
                                      h_ph, fh.matrix(), 1e-9, "identity"));
    rep.checks.push_back(check_values("collapsed coefficients equal the physical spectrum",
                                      hermitian_eig(h_ph).values, e_connect(fh).tilde_E, 1e-9,
                                      "identity"));
    return rep;
}

// The printed compression of the sixteen-state model: rows and columns with
// the third occupation index zero, in ascending basis order.
CMatrix printed_physical_block() {
    constexpr int table[8][8] = {
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, -1, 0, -1, 0, 0, 0},
        {0, -1, 3, 0, -2, 0, 0, 0},
        {0, 0, 0, 5, 0, -2, 1, 0},
        {0, -1, -2, 0, 2, 0, 0, 0},
        {0, 0, 0, -2, 0, 4, -1, 0},
        {0, 0, 0, 1, 0, -1, 5, 0},
        {0, 0, 0, 0, 0, 0, 0, 7},
    };
    CMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            m(i, j) = cplx(static_cast<double>(table[i][j]), 0.0);
    return m;
}

ReproductionReport example5() {
    ReproductionReport rep;
    rep.example_id = 5;

    const ModelBundle eco = ecosystem(ecosystem_calibration_omegas(),
                                      ecosystem_calibration_lambdas(),
                                      ecosystem_calibration_nus());
    rep.checks.push_back(check_matrix("Hamiltonian matrix matches the printed table",
                                      ecosystem_calibration_matrix(), eco.hamiltonian, 0.0,
                                      "tabulated"));

    const EigenDecomposition eig = hermitian_eig(eco.hamiltonian);
    rep.checks.push_back(check_values("eigenvalues match the printed list",
                                      ecosystem_reference_spectrum(), eig.values, 1e-3,
                                      "tabulated"));

    const auto [h_ph, isometry] = physical_part(eco.hamiltonian, eco.projector);
    (void)isometry;
    rep.checks.push_back(check_matrix("compressed matrix matches the printed block",
                                      printed_physical_block(), h_ph, 1e-12, "tabulated"));
    const EigenDecomposition eig_ph = hermitian_eig(h_ph);
    rep.checks.push_back(check_values("physical eigenvalues match the printed list",
                                      ecosystem_reference_physical_spectrum(), eig_ph.values,
                                      1e-3, "tabulated"));

    const Frame compressed_frame = project_onb(eig.vectors, eco.projector);
    rep.checks.push_back(check_flag("compressed eigenvector family is Parseval",
                                    frame_report(compressed_frame).is_parseval, "identity"));

    const FrameHamiltonian fh = build(compressed_frame, CoefficientSequence(eig.values));
    rep.checks.push_back(check_matrix("operator sum over the compressed family reproduces the block",
                                      h_ph, fh.matrix(), 1e-9, "identity"));
    rep.checks.push_back(check_values("collapsed coefficients equal the physical spectrum",
                                      eig_ph.values, e_connect(fh).tilde_E, 1e-9, "identity"));
    return rep;
}

}  // namespace

ReproductionReport reproduce_example(int id) {
    switch (id) {
        case 1: return example1();
        case 2: return example2();
        case 3: return example3();
        case 4: return example4();
        case 5: return example5();
        default: throw NOutOfRange("reproduce_example: id must be in 1..5");
    }
}

std::vector<ReproductionReport> reproduce_all() {
    std::vector<ReproductionReport> out;
    out.reserve(5);
    for (int id = 1; id <= 5; ++id) out.push_back(reproduce_example(id));
    return out;
}

json report_to_json(const ReproductionReport& r) {
    json out;
    out["example_id"] = r.example_id;
    out["pass"] = r.all_pass();
    json checks = json::array();
    for (const ReproductionCheck& c : r.checks) {
        json entry;
        entry["name"] = c.name;
        entry["expected"] = c.expected;
        entry["provenance"] = c.provenance;
        entry["got"] = c.got;
        entry["tolerance"] = c.tolerance;
        entry["deviation"] = c.deviation;
        entry["pass"] = c.pass;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace framespec
