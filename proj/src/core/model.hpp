#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "core/linalg.hpp"

namespace jcm {

using cplx = std::complex<double>;

/// Physical inputs in natural units (c = hbar = 1). With c = 1 the rest
/// energy mc^2 is numerically the mass.
struct PhysicalParams {
    double mass = 1.0;   ///< m (energy units); also mc^2
    double omega = 1.0;  ///< oscillator frequency
    double xi = 0.0;     ///< cyclotron ratio eB / 2mc omega
    double chi = 0.0;    ///< isospin coupling
    double gamma = 1.0;  ///< isospin level splitting, must equal mc^2
};

enum class SectorPolicy {
    FullSectors,  ///< every excitation sector I >= 0
    TruncatedAnsatz,  ///< only sectors n >= 0 (I >= 2), no renormalisation
};

/// Dimensionless dynamical inputs. Couplings and detuning are in units of
/// lambda, time is tau = lambda t.
struct ModelParams {
    double lambda1 = 0.3;
    double lambda2 = 0.3;
    double detuning = 0.2;  ///< Omega = mc^2 = gamma
    cplx alpha{3.0, 0.0};
    std::optional<int> n_max;  ///< empty: auto-select from alpha
    SectorPolicy policy = SectorPolicy::FullSectors;
};

/// Throws InvalidArgument on negative couplings, non-finite values or a
/// negative explicit n_max.
void validate(const ModelParams& mp);

/// Truncation actually used: the explicit n_max if set, otherwise the
/// smallest n >= max(30, ceil(|a|^2 + 8|a|)) whose coherent tail mass is
/// below 1e-14.
int effective_n_max(const ModelParams& mp);

/// Physical -> dimensionless mapping. Rejects m <= 0, omega <= 0,
/// 1 + xi <= 0 and gamma != mc^2.
ModelParams derive_model_params(const PhysicalParams& p, cplx alpha = {3.0, 0.0},
                                std::optional<int> n_max = std::nullopt,
                                SectorPolicy policy = SectorPolicy::FullSectors);

// Basis bookkeeping. Sector n collects the states with constant of motion
// I = n + 2:
//   n >= -1 : |-,g-,n+2>, |+,g-,n+3>, |-,g+,n+1>, |+,g+,n+2>   (B1..B4)
//   n == -2 : |-,g-,0>,   |+,g-,1>,               |+,g+,0>     (B1,B2,B4)
// "Pair" indexes the two-particle spin configuration in the order
// |-g->, |+g->, |-g+>, |+g+>; Dirac spin is + for pair 1 and 3, isospin is
// + for pair 2 and 3.

inline constexpr int kLowestSector = -2;

struct BasisLabel {
    int pair;     ///< 0..3, amplitude index B_{pair+1}
    int photons;
};

int sector_dimension(int n);
std::vector<BasisLabel> sector_basis(int n);

/// First sector index held under a policy (-2 or 0).
int first_sector(SectorPolicy policy);

/// Coupling coefficients of sector n.
struct BlockCouplings {
    double a, b, c, d;
};
BlockCouplings block_couplings(int n, const ModelParams& mp);

struct BlockHamiltonian {
    int sector;
    linalg::DenseMatrix matrix;
};

/// Real symmetric block of sector n (3x3 for n = -2, 4x4 otherwise).
BlockHamiltonian build_block(int n, const ModelParams& mp);

}  // namespace jcm
