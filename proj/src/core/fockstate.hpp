#pragma once

#include <vector>

#include "core/model.hpp"

namespace jcm {

/// Truncated coherent-state expansion |alpha> = sum q_n |n>.
struct CoherentAmplitudes {
    cplx alpha;
    std::vector<cplx> q;     ///< q_0 .. q_{n_max}
    double tail_mass = 0.0;  ///< 1 - sum |q_n|^2, clamped at 0
};

CoherentAmplitudes coherent_amplitudes(cplx alpha, int n_max);

/// Amplitudes of one excitation sector, ordered as sector_basis(index).
struct Sector {
    int index;
    std::vector<cplx> amplitudes;

    friend bool operator==(const Sector&, const Sector&) = default;
};

/// Wave function at scaled time tau, as a list of consecutive sectors
/// starting at first_sector(policy).
struct SystemState {
    double tau = 0.0;
    SectorPolicy policy = SectorPolicy::FullSectors;
    std::vector<Sector> sectors;

    /// Amplitude B_j(n) with j = 1..4. Returns 0 for sectors outside the
    /// stored range and for the missing |-,g+,-1> state of sector -2.
    cplx component(int j, int n) const;

    friend bool operator==(const SystemState&, const SystemState&) = default;
};

/// Ground Dirac spin, ground isospin, coherent field. Sector n receives
/// q_{n+2} on its first basis vector for n = first..n_max-2.
SystemState initial_state(const ModelParams& mp);

double total_norm(const SystemState& s);

/// Sum over sectors of (n + 2) * sector norm.
double excitation_expectation(const SystemState& s);

double sector_norm(const Sector& s);

}  // namespace jcm
