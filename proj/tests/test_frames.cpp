#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "framespec/frames.hpp"
#include "framespec/models.hpp"
#include "test_support.hpp"

using namespace framespec;
using test_support::kSeed;

TEST_CASE("frame construction validates shapes and finiteness") {
    std::vector<CVector> good{CVector::unit(2, 0), CVector::unit(2, 1)};
    CHECK_NOTHROW(Frame(2, good));

    std::vector<CVector> bad{CVector::unit(3, 0)};
    CHECK_THROWS_AS(Frame(2, bad), DimensionMismatch);

    CHECK_THROWS_AS(Frame(2, good, {"only one label"}), DimensionMismatch);

    CVector nan_vec(2);
    nan_vec[0] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(Frame(2, {nan_vec}), PreconditionViolated);
}

TEST_CASE("frame operator of the equiangular triple is the identity") {
    CMatrix s = frame_operator(mercedes());
    s -= CMatrix::identity(2);
    CHECK(s.max_norm() < 1e-15);
}

TEST_CASE("gram matrix is exactly Hermitian with the known equiangular entries") {
    CMatrix g = gram(mercedes());
    CHECK(g.hermiticity_defect() == 0.0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double expected = (i == j) ? 2.0 / 3.0 : -1.0 / 3.0;
            CHECK(std::abs(g(i, j) - cplx(expected, 0.0)) < 1e-15);
        }
}

TEST_CASE("analysis coefficients of a unit vector against the equiangular triple") {
    CVector c = analysis(mercedes(), CVector::unit(2, 0));
    CHECK(std::abs(c[0] - cplx(std::sqrt(2.0 / 3.0), 0.0)) < 1e-15);
    CHECK(std::abs(c[1] - cplx(-std::sqrt(1.0 / 6.0), 0.0)) < 1e-15);
    CHECK(std::abs(c[2] - cplx(-std::sqrt(1.0 / 6.0), 0.0)) < 1e-15);
    CHECK_THROWS_AS(analysis(mercedes(), CVector(3)), DimensionMismatch);
    CHECK_THROWS_AS(synthesis(mercedes(), CVector(2)), LengthMismatch);
}

TEST_CASE("synthesis after analysis reproduces any vector over a Parseval frame") {
    std::mt19937_64 rng(kSeed + 10);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const Frame f = test_support::random_parseval(rng, dim, dim + 1 + trial % 3);
        CVector x = test_support::random_vector(rng, dim);
        CVector back = synthesis(f, analysis(f, x));
        back -= x;
        CHECK(back.norm() < 1e-12 * std::max(1.0, x.norm()));
    }
}

TEST_CASE("frame_report labels the equiangular triple Parseval with unit excess") {
    FrameReport r = frame_report(mercedes());
    CHECK(r.count == 3);
    CHECK(r.dim == 2);
    CHECK(r.is_parseval);
    CHECK(r.excess == 1);
    CHECK(r.potential == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.lower_bound == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.upper_bound == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.tolerance_used == tolerances::parseval);
}

TEST_CASE("potential plus excess equals the vector count for Parseval frames") {
    std::mt19937_64 rng(kSeed + 11);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        const std::size_t count = dim + trial % 4;
        const FrameReport r = frame_report(test_support::random_parseval(rng, dim, count));
        CHECK(std::abs(r.potential + double(r.excess) - double(r.count)) < 1e-6);
    }
}

TEST_CASE("frame_report rejects non-spanning families and empty carriers") {
    CHECK_THROWS_AS(frame_report(Frame(2, {CVector::unit(2, 0)})), NotAFrame);
    CHECK_THROWS_AS(frame_report(Frame(0, {})), NotAFrame);
}

TEST_CASE("frame_report accepts a non-Parseval frame and reports its bounds") {
    // doubled basis scaled by 2: frame operator 4I, bounds both 4
    std::vector<CVector> v{2.0 * CVector::unit(2, 0), 2.0 * CVector::unit(2, 1)};
    FrameReport r = frame_report(Frame(2, v));
    CHECK_FALSE(r.is_parseval);
    CHECK(r.lower_bound == doctest::Approx(4.0));
    CHECK(r.upper_bound == doctest::Approx(4.0));
}

TEST_CASE("gram_pair complement is an exact algebraic complement") {
    GramPair gp = gram_pair(mercedes());
    CMatrix sum = gp.g_phi;
    sum += gp.g_psi;
    sum -= CMatrix::identity(3);
    CHECK(sum.max_norm() == 0.0);
}

TEST_CASE("gram_pair projectors are Hermitian and idempotent") {
    std::mt19937_64 rng(kSeed + 12);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const Frame f = test_support::random_parseval(rng, dim, dim + 1 + trial % 2);
        const GramPair gp = gram_pair(f);
        for (const CMatrix* m : {&gp.g_phi, &gp.g_psi}) {
            CHECK(m->hermiticity_defect() <= 1e-12);
            CMatrix sq = (*m) * (*m);
            sq -= *m;
            CHECK(sq.max_norm() <= 1e-9);
        }
    }
}

TEST_CASE("gram_pair refuses families that miss the Parseval gate") {
    std::vector<CVector> v{2.0 * CVector::unit(2, 0), 2.0 * CVector::unit(2, 1)};
    CHECK_THROWS_AS(gram_pair(Frame(2, v)), NotParseval);
}

TEST_CASE("dilation of the equiangular triple has unit excess and constant complement Gram") {
    NaimarkDilation d = naimark_dilate(mercedes());
    CHECK(d.psi.dim() == 1);
    CHECK(d.psi.count() == 3);
    CMatrix g = gram(d.psi);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(g(i, j) - cplx(1.0 / 3.0, 0.0)) < 1e-10);
    CHECK(d.residual <= 100.0 * tolerances::parseval);
}

TEST_CASE("dilation pads each vector without touching its original coordinates") {
    std::mt19937_64 rng(kSeed + 13);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const std::size_t count = dim + 1 + trial % 3;
        const Frame f = test_support::random_parseval(rng, dim, count);
        const NaimarkDilation d = naimark_dilate(f);
        CHECK(d.psi.dim() == count - dim);
        REQUIRE(d.onb.size() == count);
        for (std::size_t j = 0; j < count; ++j) {
            REQUIRE(d.onb[j].size() == count);
            for (std::size_t k = 0; k < dim; ++k) CHECK(d.onb[j][k] == f.vector(j)[k]);
            for (std::size_t k = 0; k < count - dim; ++k)
                CHECK(d.onb[j][dim + k] == d.psi.vector(j)[k]);
        }
        // padded family is orthonormal
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const double target = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(std::abs(inner(d.onb[i], d.onb[j])) - target) < 1e-8);
            }
        // complement Gram agrees with the algebraic complement
        const GramPair gp = gram_pair(f);
        CMatrix diff = gram(d.psi);
        diff -= gp.g_psi;
        CHECK(diff.max_norm() < 1e-10);
    }
}

TEST_CASE("dilating an orthonormal basis yields an empty complement") {
    std::vector<CVector> onb{CVector::unit(2, 0), CVector::unit(2, 1)};
    NaimarkDilation d = naimark_dilate(Frame(2, onb));
    CHECK(d.psi.dim() == 0);
    CHECK(d.psi.count() == 2);
    CHECK(d.onb[0].size() == 2);
}

TEST_CASE("project_onb compresses a basis through a coordinate projector") {
    std::vector<CVector> onb{CVector::unit(3, 0), CVector::unit(3, 1), CVector::unit(3, 2)};
    CMatrix p(3, 3);
    p(0, 0) = p(1, 1) = cplx(1.0, 0.0);
    Frame f = project_onb(onb, p);
    CHECK(f.dim() == 2);
    CHECK(f.count() == 3);
    CHECK(f.vector(0)[0] == cplx(1.0, 0.0));
    CHECK(f.vector(2).norm() == 0.0);
    CHECK(frame_report(f).is_parseval);
}

TEST_CASE("project_onb recovers the equiangular triple from its lifted basis") {
    const Frame phi = mercedes();
    const double third = 1.0 / std::sqrt(3.0);
    std::vector<CVector> lifted;
    for (const CVector& v : phi.vectors())
        lifted.push_back(CVector{v[0], v[1], cplx(third, 0.0)});
    CMatrix p(3, 3);
    p(0, 0) = p(1, 1) = cplx(1.0, 0.0);
    Frame back = project_onb(lifted, p);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 2; ++k) CHECK(back.vector(j)[k] == phi.vector(j)[k]);
}

TEST_CASE("project_onb validates its inputs") {
    std::vector<CVector> incomplete{CVector::unit(3, 0), CVector::unit(3, 1)};
    CMatrix p(3, 3);
    p(0, 0) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(project_onb(incomplete, p), NotOrthonormal);

    std::vector<CVector> slanted{CVector::unit(2, 0),
                                 CVector{cplx(0.8, 0.0), cplx(0.6, 0.0)}};
    CMatrix q(2, 2);
    q(0, 0) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(project_onb(slanted, q), NotOrthonormal);

    std::vector<CVector> onb{CVector::unit(2, 0), CVector::unit(2, 1)};
    CHECK_THROWS_AS(project_onb(onb, CMatrix(2, 2)), PreconditionViolated);
}

TEST_CASE("null coefficient verdicts agree between synthesis and Gram image") {
    const Frame phi = mercedes();
    CVector ones{cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0)};
    CHECK(null_coefficients(phi, ones));
    CVector spike{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
    CHECK_FALSE(null_coefficients(phi, spike));
    CHECK_THROWS_AS(null_coefficients(phi, CVector(2)), LengthMismatch);
}

TEST_CASE("null coefficients certify complement directions on random frames") {
    std::mt19937_64 rng(kSeed + 14);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const std::size_t count = dim + 1 + trial % 3;
        const Frame f = test_support::random_parseval(rng, dim, count);
        const GramPair gp = gram_pair(f);
        // (I - G) d synthesizes to zero for any d over a Parseval frame
        CVector d = test_support::random_vector(rng, count);
        CVector null_c = d;
        null_c -= gp.g_phi.apply(d);
        if (null_c.norm() > 1e-8) CHECK(null_coefficients(f, null_c));
        // analysis coefficients of a nonzero vector never synthesize to zero
        CVector x = test_support::random_vector(rng, dim);
        CHECK_FALSE(null_coefficients(f, analysis(f, x)));
    }
}
