#include "framespec/models.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace framespec {

Frame mercedes() {
    const double r = std::sqrt(2.0 / 3.0);
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<CVector> v;
    v.push_back({cplx(r, 0.0), cplx(0.0, 0.0)});
    v.push_back({cplx(-0.5 * r, 0.0), cplx(h * r, 0.0)});
    v.push_back({cplx(-0.5 * r, 0.0), cplx(-h * r, 0.0)});
    return Frame(2, std::move(v));
}

Frame casazza_frame(std::size_t k) {
    if (k < 2) throw KTooSmall("casazza_frame: need K >= 2");
    std::vector<CVector> v;
    v.reserve(k + 1);
    const double inv_k = 1.0 / static_cast<double>(k);
    for (std::size_t j = 0; j < k; ++j) {
        CVector phi(k);
        for (std::size_t i = 0; i < k; ++i) phi[i] = cplx(-inv_k, 0.0);
        phi[j] += cplx(1.0, 0.0);
        v.push_back(std::move(phi));
    }
    CVector last(k);
    const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i) last[i] = cplx(inv_sqrt_k, 0.0);
    v.push_back(std::move(last));
    return Frame(k, std::move(v));
}

Frame casazza_block_frame(std::size_t k_max, bool include_unit_block) {
    if (k_max < 2) throw KTooSmall("casazza_block_frame: need k_max >= 2");
    std::size_t dim = include_unit_block ? 1 : 0;
    for (std::size_t k = 2; k <= k_max; ++k) dim += k;

    std::vector<CVector> v;
    std::size_t offset = 0;
    if (include_unit_block) {
        // K = 1 degenerates to the zero vector plus the unit vector.
        v.push_back(CVector(dim));
        v.push_back(CVector::unit(dim, 0));
        offset = 1;
    }
    for (std::size_t k = 2; k <= k_max; ++k) {
        const Frame block = casazza_frame(k);
        for (const CVector& phi : block.vectors()) {
            CVector big(dim);
            for (std::size_t i = 0; i < k; ++i) big[offset + i] = phi[i];
            v.push_back(std::move(big));
        }
        offset += k;
    }
    return Frame(dim, std::move(v));
}

CarAlgebra car_algebra(std::size_t n) {
    if (n < 1 || n > 6) throw NOutOfRange("car_algebra: mode count must be in 1..6");
    const std::size_t d = std::size_t{1} << n;
    CarAlgebra car;
    car.n_modes = n;
    car.lowering.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        CMatrix a(d, d);
        const std::size_t bit = std::size_t{1} << j;
        const std::size_t lower_mask = bit - 1;
        for (std::size_t m = 0; m < d; ++m) {
            if ((m & bit) == 0) continue;
            const std::size_t target = m & ~bit;
            const double sign = (std::popcount(m & lower_mask) % 2 == 0) ? 1.0 : -1.0;
            a(target, m) = cplx(sign, 0.0);
        }
        car.lowering.push_back(std::move(a));
    }
    return car;
}

namespace {

CMatrix number_operator(const CMatrix& a) { return a.adjoint() * a; }

// Exchange term w * (a_f adj(a_g) + a_g adj(a_f)), products taken literally
// (the daggered operator acts first).
CMatrix exchange(double w, const CMatrix& af, const CMatrix& ag) {
    CMatrix t = af * ag.adjoint();
    t += ag * af.adjoint();
    t *= cplx(w, 0.0);
    return t;
}

CMatrix assemble_ecosystem(const std::array<double, 4>& omegas,
                           const std::array<double, 3>& lambdas,
                           const std::array<double, 2>& nus) {
    const CarAlgebra car = car_algebra(4);
    CMatrix h(16, 16);
    for (std::size_t j = 0; j < 4; ++j) {
        CMatrix num = number_operator(car.lowering[j]);
        num *= cplx(omegas[j], 0.0);
        h += num;
    }
    for (std::size_t j = 0; j < 3; ++j)
        h += exchange(lambdas[j], car.lowering[j], car.lowering[3]);
    for (std::size_t j = 0; j < 2; ++j)
        h += exchange(nus[j], car.lowering[j], car.lowering[j + 1]);
    return h;
}

// Reference realization for the calibration parameters, frozen from the
// published table. Row-major, 16x16, all entries integers.
constexpr int kEcosystemReference[16][16] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 3, 0, -3, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 5, 0, -3, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0},
    {0, 0, -3, 0, 4, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -3, 0, 6, -1, 0, 0, -3, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 7, 0, 0, 0, -3, 0, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, -3, 0, 2, -1, 0},
    {0, -1, -2, 0, -3, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -2, 0, -3, 0, 0, 0, 4, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, -3, 0, 0, -1, 5, 0, -3, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, -3, 0, 0, 0, 7, 0, -3, 0, 0},
    {0, 0, 0, 0, 0, 1, 2, 0, 0, 0, -3, 0, 6, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -3, 0, 8, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 9, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 11},
};

constexpr std::array<double, 4> kCalibrationOmegas{2.0, 3.0, 4.0, 2.0};
constexpr std::array<double, 3> kCalibrationLambdas{1.0, 2.0, 3.0};
constexpr std::array<double, 2> kCalibrationNus{1.0, 3.0};

}  // namespace

CMatrix ecosystem_calibration_matrix() {
    CMatrix m(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            m(i, j) = cplx(static_cast<double>(kEcosystemReference[i][j]), 0.0);
    return m;
}

const std::array<double, 4>& ecosystem_calibration_omegas() { return kCalibrationOmegas; }
const std::array<double, 3>& ecosystem_calibration_lambdas() { return kCalibrationLambdas; }
const std::array<double, 2>& ecosystem_calibration_nus() { return kCalibrationNus; }

std::vector<double> ecosystem_reference_spectrum() {
    return {13.6645, 11.4925,  11.0,      9.17202, 8.82798, 7.0,      6.66453,  6.50749,
            4.49251, 4.33547,  4.0,       -2.66453, 2.17202, 1.82798, -0.492505, 0.0};
}

std::vector<double> ecosystem_reference_physical_spectrum() {
    return {7.38849, 7.0, 4.57577, 4.18728, 2.81272, 2.42423, -0.38849, 0.0};
}

ModelBundle fermion_cell(double omega1, double omega2, double lam) {
    const CarAlgebra car = car_algebra(2);
    CMatrix h(4, 4);
    CMatrix n1 = number_operator(car.lowering[0]);
    n1 *= cplx(omega1, 0.0);
    CMatrix n2 = number_operator(car.lowering[1]);
    n2 *= cplx(omega2, 0.0);
    h += n1;
    h += n2;
    // Exchange with the daggered operator applied second: adj(a1) a2 + adj(a2) a1.
    CMatrix x = car.lowering[0].adjoint() * car.lowering[1];
    x += car.lowering[1].adjoint() * car.lowering[0];
    x *= cplx(lam, 0.0);
    h += x;

    CMatrix p = CMatrix::identity(4);
    p(1, 1) = cplx(0.0, 0.0);  // remove the state with only mode 1 occupied

    ModelBundle out;
    out.hamiltonian = std::move(h);
    out.projector = std::move(p);
    out.description = "two coupled fermionic modes with the single-excitation state removed";
    out.parameters = {{"omega1", omega1}, {"omega2", omega2}, {"lambda", lam}};
    return out;
}

ModelBundle ecosystem(const std::array<double, 4>& omegas,
                      const std::array<double, 3>& lambdas,
                      const std::array<double, 2>& nus) {
    // Calibration self-test on every construction: the operator conventions
    // must keep reproducing the frozen reference realization.
    const CMatrix calibrated =
        assemble_ecosystem(kCalibrationOmegas, kCalibrationLambdas, kCalibrationNus);
    const CMatrix reference = ecosystem_calibration_matrix();
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            if (std::abs(calibrated(i, j) - reference(i, j)) > 1e-12)
                throw ConventionMismatch(
                    "ecosystem: calibration entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") drifted from the reference realization");

    CMatrix p(16, 16);
    for (std::size_t m = 0; m < 16; ++m)
        if ((m & 0b100) == 0) p(m, m) = cplx(1.0, 0.0);  // mode 2 empty

    ModelBundle out;
    out.hamiltonian = assemble_ecosystem(omegas, lambdas, nus);
    out.projector = std::move(p);
    out.description =
        "four fermionic modes (nutrients, two trophic levels, garbage) with level 2 blocked";
    out.parameters = {{"omega0", omegas[0]}, {"omega1", omegas[1]}, {"omega2", omegas[2]},
                      {"omega3", omegas[3]}, {"lambda0", lambdas[0]}, {"lambda1", lambdas[1]},
                      {"lambda2", lambdas[2]}, {"nu0", nus[0]}, {"nu1", nus[1]}};
    return out;
}

}  // namespace framespec
