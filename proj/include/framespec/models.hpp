#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "framespec/frames.hpp"
#include "framespec/linalg.hpp"

namespace framespec {

// Lowering operators of n fermionic modes on the 2^n-dimensional occupation
// basis, satisfying the canonical anticommutation relations exactly (entries
// are 0 and +-1).
struct CarAlgebra {
    std::size_t n_modes = 0;
    std::vector<CMatrix> lowering;  // a_j, each 2^n x 2^n
};

// A concrete operator model: Hermitian generator, the orthogonal projector
// defining its physical subspace, and the parameters it was built from.
struct ModelBundle {
    CMatrix hamiltonian;
    CMatrix projector;
    std::string description;
    std::map<std::string, double> parameters;
};

// The three-vector equiangular Parseval frame of C^2: sqrt(2/3) times unit
// vectors at mutual angle 2*pi/3.
Frame mercedes();

// The K+1 vector Parseval frame of C^K: phi_j = e_j - (1/K) sum_i e_i for
// j <= K and phi_{K+1} = (1/sqrt K) sum_i e_i. Throws KTooSmall for K < 2.
Frame casazza_frame(std::size_t k);

// Orthogonal direct sum of casazza_frame(K) for K = 2..k_max. The degenerate
// K = 1 block (a zero vector plus one unit vector, itself a Parseval frame)
// is prepended only when include_unit_block is set. Throws KTooSmall for
// k_max < 2.
Frame casazza_block_frame(std::size_t k_max, bool include_unit_block = false);

// Mode j flips occupation bit j of the basis index (state index =
// 1 + sum n_j 2^j, mode 0 fastest) and carries the parity sign of the lower
// modes. Throws NOutOfRange unless 1 <= n <= 6.
CarAlgebra car_algebra(std::size_t n);

// Two coupled fermionic modes: number operators weighted by omega1, omega2
// plus an exchange coupling lam. The projector removes the state with only
// mode 1 occupied.
ModelBundle fermion_cell(double omega1, double omega2, double lam);

// Four fermionic modes (two trophic levels, nutrients, garbage): number
// operators weighted by omegas plus garbage exchange (lambdas) and
// nearest-level exchange (nus). The projector keeps the eight states with
// mode 2 empty. Every construction re-derives the calibration realization
// and compares it to the frozen reference matrix; drift throws
// ConventionMismatch.
ModelBundle ecosystem(const std::array<double, 4>& omegas,
                      const std::array<double, 3>& lambdas,
                      const std::array<double, 2>& nus);

// Frozen reference data for the calibration parameter set
// omegas (2,3,4,2), lambdas (1,2,3), nus (1,3): the 16x16 realization, its
// published eigenvalue multiset (6 significant digits), and the published
// eigenvalues of its physical part.
CMatrix ecosystem_calibration_matrix();
const std::array<double, 4>& ecosystem_calibration_omegas();
const std::array<double, 3>& ecosystem_calibration_lambdas();
const std::array<double, 2>& ecosystem_calibration_nus();
std::vector<double> ecosystem_reference_spectrum();
std::vector<double> ecosystem_reference_physical_spectrum();

}  // namespace framespec
