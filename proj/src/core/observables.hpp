#pragma once

#include <array>

#include "core/fockstate.hpp"

namespace jcm {

/// Unnormalised isospin reduced density [[ee, eg], [ge, gg]]; its trace is
/// the norm of the source state.
struct IsospinDensity {
    double rho_ee = 0.0;
    double rho_gg = 0.0;
    cplx rho_eg{};

    double trace() const { return rho_ee + rho_gg; }
};

/// Unnormalised two-particle density over |-g->, |+g->, |-g+>, |+g+>.
struct PairDensity {
    std::array<std::array<cplx, 4>, 4> rho{};

    cplx operator()(int i, int j) const { return rho[i][j]; }
    double trace() const;
    double purity_sum() const;  ///< Tr rho^2
};

struct ObservableRecord {
    double tau = 0.0;
    double entropy = 0.0;
    double concurrence = 0.0;
    double inversion = 0.0;
    double g2 = 0.0;
    double norm = 0.0;
    double excitation = 0.0;

    friend bool operator==(const ObservableRecord&, const ObservableRecord&) = default;
};

IsospinDensity isospin_density(const SystemState& s);
PairDensity pair_density(const SystemState& s);

/// Von Neumann entropy (nats) of the normalised isospin density, from the
/// Bloch-vector eigenvalues 1/2 +- |r|/2.
double entropy(const IsospinDensity& d);

/// sqrt(2 sum_{i != j} (rho_ii rho_jj - rho_ij rho_ji)) of the normalised
/// pair density.
double concurrence(const PairDensity& d);

/// rho_ee - rho_gg of the normalised isospin density.
double inversion(const IsospinDensity& d);

/// <n(n-1)> / <n>^2. Throws NumericalError when <n> = 0.
double g2(const SystemState& s);

ObservableRecord record(const SystemState& s);

}  // namespace jcm
