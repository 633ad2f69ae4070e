#pragma once

#include <vector>

#include "core/fockstate.hpp"
#include "core/linalg.hpp"
#include "core/model.hpp"

namespace jcm {

/// Spectral decomposition H_n = V diag(values) V^T of one block.
struct BlockSpectral {
    int sector;
    std::vector<double> eigenvalues;
    linalg::DenseMatrix eigenvectors;
};

/// Cached spectral data for every sector of a model, plus the requested
/// output times.
struct EvolutionPlan {
    ModelParams params;
    std::vector<BlockSpectral> blocks;  ///< consecutive sectors, first_sector(policy) upward
    std::vector<double> taus;

    const BlockSpectral& block(int sector) const;
};

/// `taus` must start at 0 and be strictly increasing (may be empty).
EvolutionPlan plan(const ModelParams& mp, const std::vector<double>& taus = {0.0});

/// Closed-form propagation B(tau) = V exp(-i Lambda dtau) V^T B(0). The
/// duration may be negative.
SystemState propagate(const SystemState& s0, const EvolutionPlan& plan, double dtau);

/// Propagates by a duration tau >= 0; the result carries s0.tau + tau.
SystemState evolve_exact(const SystemState& s0, const EvolutionPlan& plan, double tau);

/// Classic fixed-step RK4 for i dB/dtau = H_n B in every sector. The last
/// step is shortened to land on tau exactly.
SystemState evolve_rk4(const SystemState& s0, const ModelParams& mp, double tau, double dt);

/// Flattened basis used by the dense oracle: every sector's basis states in
/// sector order.
struct FlatBasisState {
    int dirac;  ///< -1 / +1
    int iso;    ///< -1 / +1
    int photons;
};
std::vector<FlatBasisState> flat_basis(const SystemState& s);

/// Full Hamiltonian on the flattened basis, built from the ladder-operator
/// action on basis labels (not from the block formulas).
linalg::DenseMatrix dense_hamiltonian(const std::vector<FlatBasisState>& basis,
                                      const ModelParams& mp);

inline constexpr std::size_t kDenseOracleMaxDim = 10000;

/// Brute-force reference: one dense Hermitian matrix over all sectors,
/// diagonalised as a whole and applied to the flattened state vector.
SystemState dense_oracle(const SystemState& s0, const ModelParams& mp, double tau);

}  // namespace jcm
