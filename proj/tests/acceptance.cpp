// Acceptance gate: one line per criterion, exit code = number of failures.
// Every numeric claim is checked at the tolerance stated in its line.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "framespec/frames.hpp"
#include "framespec/hamiltonian.hpp"
#include "framespec/linalg.hpp"
#include "framespec/models.hpp"
#include "framespec/secular.hpp"
#include "test_support.hpp"

using namespace framespec;
using test_support::kSeed;
using test_support::multiset_gap;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& text) {
    std::printf("criterion %d [%s] %s\n", id, pass ? "pass" : "fail", text.c_str());
    if (!pass) ++failures;
}

CMatrix closed_triple_form(double e1, double e2, double e3) {
    CMatrix m(2, 2);
    m(0, 0) = cplx((4.0 * e1 + e2 + e3) / 6.0, 0.0);
    m(0, 1) = m(1, 0) = cplx(std::sqrt(3.0) * (e3 - e2) / 6.0, 0.0);
    m(1, 1) = cplx((e2 + e3) / 2.0, 0.0);
    return m;
}

// Equiangular triple: realization matches the closed 2x2 form (1e-12) and the
// collapsed coefficients solve its quadratic secular equation (1e-10).
void criterion1() {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> coeff(-4.0, 4.0);
    bool pass = true;
    for (int trial = 0; trial < 25; ++trial) {
        const double e1 = trial == 0 ? 1.0 : coeff(rng);
        const double e2 = trial == 0 ? 2.0 : coeff(rng);
        const double e3 = trial == 0 ? 3.0 : coeff(rng);
        FrameHamiltonian fh = build(mercedes(), CoefficientSequence({e1, e2, e3}));
        CMatrix diff = fh.matrix();
        diff -= closed_triple_form(e1, e2, e3);
        pass = pass && diff.max_norm() <= 1e-12;
        const EConnection con = e_connect(fh);
        pass = pass && multiset_gap(con.tilde_E, mercedes_roots(e1, e2, e3).roots) <= 1e-10;
        if (trial == 0) {
            pass = pass && std::abs(con.tilde_E[0] - (6.0 - std::sqrt(3.0)) / 3.0) <= 1e-10;
            pass = pass && std::abs(con.tilde_E[1] - (6.0 + std::sqrt(3.0)) / 3.0) <= 1e-10;
        }
    }
    report(1, pass,
           "equiangular triple: realization matches the closed form (1e-12) and the collapsed "
           "coefficients solve the quadratic (1e-10)");
}

// Dilating the triple adds exactly one direction with constant Gram 1/3.
void criterion2() {
    const NaimarkDilation d = naimark_dilate(mercedes());
    bool pass = d.psi.dim() == 1;
    const CMatrix pg = gram(d.psi);
    for (std::size_t a = 0; a < 3 && pass; ++a)
        for (std::size_t b = 0; b < 3 && pass; ++b)
            pass = std::abs(pg(a, b) - cplx(1.0 / 3.0, 0.0)) <= 1e-10;
    report(2, pass, "triple dilation: excess 1 with constant complement Gram 1/3 (1e-10)");
}

// Redundant basis frames: the collapsed spectrum is the gap roots plus the
// top coefficient (1e-9), and the reciprocal-weight eigenvectors hold (1e-8).
void criterion3() {
    std::mt19937_64 rng(kSeed + 3);
    bool pass = true;
    for (std::size_t k = 2; k <= 8; ++k) {
        for (int trial = 0; trial < 3; ++trial) {
            const std::vector<double> e = test_support::random_increasing(rng, k + 1);
            FrameHamiltonian fh = build(casazza_frame(k), CoefficientSequence(e));
            const EConnection con = e_connect(fh);
            const SecularRoots roots = casazza_roots({e.begin(), e.end() - 1});
            std::vector<double> expected(roots.roots);
            expected.push_back(e.back());
            std::sort(expected.begin(), expected.end());
            pass = pass && multiset_gap(con.tilde_E, expected) <= 1e-9;
            pass = pass && std::abs(con.tilde_E.back() - e.back()) <= 1e-9;
            for (std::size_t j = 0; j < roots.roots.size(); ++j) {
                CVector f(k);
                for (std::size_t i = 0; i < k; ++i)
                    f[i] = cplx(1.0 / (e[i] - roots.roots[j]), 0.0);
                f *= cplx(1.0 / f.norm(), 0.0);
                CVector r = fh.matrix().apply(f);
                r -= roots.roots[j] * f;
                pass = pass && r.norm() <= 1e-8;
            }
        }
    }
    report(3, pass,
           "redundant basis frames K=2..8: collapsed spectrum = gap roots + top coefficient "
           "(1e-9), reciprocal-weight eigenvectors (1e-8)");
}

// Two-mode cell at (1/2, 7/2, 2): full spectrum {-1/2, 0, 4, 9/2} (1e-12);
// compressed spectrum {0, 4, projected pair root} (1e-9).
void criterion4() {
    const ModelBundle cell = fermion_cell(0.5, 3.5, 2.0);
    EigenDecomposition full = hermitian_eig(cell.hamiltonian, 1e-10);
    bool pass = multiset_gap(full.values, {-0.5, 0.0, 4.0, 4.5}) <= 1e-12;
    const auto [h_ph, isometry] = physical_part(cell.hamiltonian, cell.projector);
    (void)isometry;
    EigenDecomposition comp = hermitian_eig(h_ph, 1e-10);
    const double root = projected_pair_root(-0.5, 4.5, std::atan(2.0));
    pass = pass && multiset_gap(comp.values, {0.0, root, 4.0}) <= 1e-9;
    report(4, pass,
           "two-mode cell: full spectrum {-1/2,0,4,9/2} (1e-12), compressed spectrum "
           "{0, pair root, 4} (1e-9)");
}

// Four-mode model: the assembled realization equals the frozen reference
// entrywise, and both eigenvalue lists match the published values (1e-3).
void criterion5() {
    const ModelBundle eco = ecosystem(ecosystem_calibration_omegas(),
                                      ecosystem_calibration_lambdas(), ecosystem_calibration_nus());
    CMatrix diff = eco.hamiltonian;
    diff -= ecosystem_calibration_matrix();
    bool pass = diff.max_norm() == 0.0;
    EigenDecomposition full = hermitian_eig(eco.hamiltonian, 1e-10);
    pass = pass && multiset_gap(full.values, ecosystem_reference_spectrum()) <= 1e-3;
    const auto [h_ph, isometry] = physical_part(eco.hamiltonian, eco.projector);
    (void)isometry;
    EigenDecomposition comp = hermitian_eig(h_ph, 1e-10);
    pass = pass && multiset_gap(comp.values, ecosystem_reference_physical_spectrum()) <= 1e-3;
    report(5, pass,
           "four-mode model: realization matches the frozen reference exactly, published "
           "eigenvalue lists to 1e-3");
}

// Certificates: primary, dual, and spectral-distance verdicts agree on more
// than 1000 probes over random frames, coefficients, and probe points.
void criterion6() {
    std::mt19937_64 rng(kSeed + 6);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int probes = 0;
    int disagreements = 0;
    while (probes < 1000) {
        const std::size_t dim = 2 + static_cast<std::size_t>(unit(rng) * 3.999);
        const std::size_t count = dim + static_cast<std::size_t>(unit(rng) * 2.999);
        const Frame f = test_support::random_parseval(rng, dim, count);
        std::vector<double> e;
        for (std::size_t j = 0; j < count; ++j) e.push_back(coeff(rng));
        FrameHamiltonian fh = build(f, CoefficientSequence(e));
        const std::vector<double>& spec = fh.eigensystem().values;
        const double spread = spec.back() - spec.front();
        if (spread < 0.1) continue;

        std::vector<double> mus;
        for (double v : spec) {
            mus.push_back(v);             // exact
            mus.push_back(v + 1e-12);     // perturbed up
            mus.push_back(v - 1e-12);     // perturbed down
        }
        int added = 0;
        while (added < 3) {  // points far from every eigenvalue
            const double mu = spec.front() - spread + 3.0 * spread * unit(rng);
            double dist = std::abs(mu - spec[0]);
            for (double v : spec) dist = std::min(dist, std::abs(mu - v));
            if (dist < 0.1 * spread) continue;
            mus.push_back(mu);
            ++added;
        }

        for (double mu : mus) {
            double dist = std::abs(mu - spec[0]);
            for (double v : spec) dist = std::min(dist, std::abs(mu - v));
            const bool oracle = dist <= 1e-9 * std::max(1.0, std::abs(mu));
            bool ok = true;
            try {
                const EigenCertificate a = certify_eigenvalue(fh, mu);
                const EigenCertificate b = certify_eigenvalue_dual(fh, mu);
                ok = a.accepted == oracle && b.accepted == oracle;
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) ++disagreements;
            ++probes;
        }
    }
    report(6, disagreements == 0,
           "certificates: primary, dual, and spectral verdicts agree on " +
               std::to_string(probes) + " randomized probes (0 disagreements required, saw " +
               std::to_string(disagreements) + ")");
}

// Sum rules pass across 500 random positive Parseval frames.
void criterion7() {
    std::mt19937_64 rng(kSeed + 7);
    std::uniform_real_distribution<double> coeff(0.1, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int frames = 0;
    bool pass = true;
    while (frames < 500) {
        const std::size_t dim = 2 + static_cast<std::size_t>(unit(rng) * 2.999);
        const std::size_t count = dim + static_cast<std::size_t>(unit(rng) * 2.999);
        const Frame f = test_support::random_parseval(rng, dim, count);
        bool haszero = false;
        for (const CVector& v : f.vectors()) haszero = haszero || v.norm() < 1e-8;
        if (haszero) continue;
        std::vector<double> e;
        for (std::size_t j = 0; j < count; ++j) e.push_back(coeff(rng));
        const SumRuleReport rep = k81_check(build(f, CoefficientSequence(e)));
        pass = pass && rep.all_pass();
        ++frames;
    }
    report(7, pass, "sum rules (trace, second moment, lower bound, partial sums) pass on 500 "
                    "random positive frames (1e-9)");
}

// Structural invariants at a fixed recorded seed.
void criterion8() {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    bool pass = true;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const std::size_t count = dim + trial % 3;
        const Frame f = test_support::random_parseval(rng, dim, count);

        // analysis is an isometry
        const CVector x = test_support::random_vector(rng, dim);
        pass = pass && std::abs(analysis(f, x).norm() - x.norm()) <= 1e-10 * std::max(1.0, x.norm());

        // both Gram-pair blocks are orthogonal projectors
        const GramPair gp = gram_pair(f);
        for (const CMatrix* g : {&gp.g_phi, &gp.g_psi}) {
            CMatrix sq = (*g) * (*g);
            sq -= *g;
            pass = pass && sq.max_norm() <= 1e-9;
            pass = pass && g->hermiticity_defect() <= 1e-12;
        }

        // dilation keeps the original coordinates bitwise
        const NaimarkDilation d = naimark_dilate(f);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                pass = pass && d.onb[j][k] == f.vectors()[j][k];

        // complement images are null coefficient vectors, analysis images are not
        const CVector dvec = test_support::random_vector(rng, count);
        CVector nc = gp.g_psi.apply(dvec);
        if (nc.norm() > 1e-8) pass = pass && null_coefficients(f, nc);
        if (x.norm() > 0.1) pass = pass && !null_coefficients(f, analysis(f, x));

        // constant coefficients collapse to that constant
        FrameHamiltonian fc = build(f, CoefficientSequence(std::vector<double>(count, 0.75)));
        for (double v : e_connect(fc).tilde_E) pass = pass && std::abs(v - 0.75) <= 1e-12;

        // generic coefficients stay inside their interval
        std::vector<double> e;
        for (std::size_t j = 0; j < count; ++j) e.push_back(coeff(rng));
        const CoefficientSequence seq(e);
        FrameHamiltonian fh = build(f, seq);
        const double scale = std::max({1.0, std::abs(seq.e_min), std::abs(seq.e_max)});
        for (double v : fh.eigensystem().values) {
            pass = pass && v >= seq.e_min - 1e-8 * scale;
            pass = pass && v <= seq.e_max + 1e-8 * scale;
        }

        // an orthonormal basis collapses to the sorted coefficient list
        std::vector<CVector> onb = test_support::random_onb(rng, dim);
        std::vector<double> eb;
        for (std::size_t j = 0; j < dim; ++j) eb.push_back(coeff(rng));
        FrameHamiltonian fb = build(Frame(dim, onb), CoefficientSequence(eb));
        std::sort(eb.begin(), eb.end());
        pass = pass && multiset_gap(e_connect(fb).tilde_E, eb) <= 1e-10;
    }
    report(8, pass,
           "structural invariants (isometry, projector laws, dilation roundtrip, null "
           "coefficients, collapse limits, containment) at seed 0x5eedba5e");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
