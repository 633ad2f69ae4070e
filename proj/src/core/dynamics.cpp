#include "core/dynamics.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace jcm {

namespace {

void check_sectors(const SystemState& s, const EvolutionPlan& p)
{
    if (s.sectors.size() != p.blocks.size())
        throw InvalidArgument(fmt::format("state has {} sectors, plan has {}", s.sectors.size(),
                                          p.blocks.size()));
    for (std::size_t i = 0; i < s.sectors.size(); ++i) {
        if (s.sectors[i].index != p.blocks[i].sector ||
            s.sectors[i].amplitudes.size() != p.blocks[i].eigenvalues.size())
            throw InvalidArgument(
                fmt::format("sector mismatch at position {}: state {} vs plan {}", i,
                            s.sectors[i].index, p.blocks[i].sector));
    }
}

// y = H x for a real symmetric block and complex x.
void apply(const linalg::DenseMatrix& h, const std::vector<cplx>& x, std::vector<cplx>& y)
{
    const std::size_t d = h.size();
    for (std::size_t i = 0; i < d; ++i) {
        cplx acc{};
        for (std::size_t j = 0; j < d; ++j) acc += h(i, j) * x[j];
        y[i] = acc;
    }
}

}  // namespace

const BlockSpectral& EvolutionPlan::block(int sector) const
{
    if (blocks.empty()) throw InvalidArgument("empty evolution plan");
    const int offset = sector - blocks.front().sector;
    if (offset < 0 || offset >= static_cast<int>(blocks.size()))
        throw InvalidArgument(fmt::format("sector {} not in plan", sector));
    return blocks[offset];
}

EvolutionPlan plan(const ModelParams& mp, const std::vector<double>& taus)
{
    validate(mp);
    if (!taus.empty() && taus.front() != 0.0) throw InvalidArgument("sample times must start at 0");
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] > taus[i - 1]))
            throw InvalidArgument("sample times must be strictly increasing");

    EvolutionPlan p;
    p.params = mp;
    p.taus = taus;
    const int n_max = effective_n_max(mp);
    for (int n = first_sector(mp.policy); n <= n_max - 2; ++n) {
        const BlockHamiltonian h = build_block(n, mp);
        auto eig = linalg::jacobi_eigen(h.matrix);
        p.blocks.push_back({n, std::move(eig.values), std::move(eig.vectors)});
    }
    return p;
}

SystemState propagate(const SystemState& s0, const EvolutionPlan& p, double dtau)
{
    check_sectors(s0, p);
    SystemState out = s0;
    out.tau = s0.tau + dtau;
    if (dtau == 0.0) return out;  // identity propagator, no V V^T roundoff
    for (std::size_t i = 0; i < s0.sectors.size(); ++i) {
        const BlockSpectral& b = p.blocks[i];
        const auto& x = s0.sectors[i].amplitudes;
        auto& y = out.sectors[i].amplitudes;
        const std::size_t d = x.size();
        const auto& v = b.eigenvectors;

        std::vector<cplx> modal(d);
        for (std::size_t k = 0; k < d; ++k) {
            cplx acc{};
            for (std::size_t r = 0; r < d; ++r) acc += v(r, k) * x[r];
            modal[k] = acc * std::polar(1.0, -b.eigenvalues[k] * dtau);
        }
        for (std::size_t r = 0; r < d; ++r) {
            cplx acc{};
            for (std::size_t k = 0; k < d; ++k) acc += v(r, k) * modal[k];
            y[r] = acc;
        }
    }
    return out;
}

SystemState evolve_exact(const SystemState& s0, const EvolutionPlan& p, double tau)
{
    if (!(tau >= 0.0)) throw InvalidArgument("evolve_exact: tau must be >= 0");
    return propagate(s0, p, tau);
}

SystemState evolve_rk4(const SystemState& s0, const ModelParams& mp, double tau, double dt)
{
    if (!(dt > 0.0)) throw InvalidArgument("evolve_rk4: dt must be > 0");
    if (!(tau >= 0.0)) throw InvalidArgument("evolve_rk4: tau must be >= 0");

    const auto full_steps = static_cast<long>(std::floor(tau / dt));
    double remainder = tau - static_cast<double>(full_steps) * dt;
    if (remainder < 1e-12 * dt) remainder = 0.0;

    SystemState out = s0;
    out.tau = s0.tau + tau;
    const cplx minus_i{0.0, -1.0};
    for (auto& sec : out.sectors) {
        const linalg::DenseMatrix h = build_block(sec.index, mp).matrix;
        const std::size_t d = sec.amplitudes.size();
        if (h.size() != d) throw InvalidArgument("evolve_rk4: sector dimension mismatch");

        std::vector<cplx>& y = sec.amplitudes;
        std::vector<cplx> k1(d), k2(d), k3(d), k4(d), tmp(d);
        auto rhs = [&](const std::vector<cplx>& x, std::vector<cplx>& dx) {
            apply(h, x, dx);
            for (auto& v : dx) v *= minus_i;
        };
        auto step = [&](double hstep) {
            rhs(y, k1);
            for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * hstep * k1[i];
            rhs(tmp, k2);
            for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * hstep * k2[i];
            rhs(tmp, k3);
            for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + hstep * k3[i];
            rhs(tmp, k4);
            for (std::size_t i = 0; i < d; ++i)
                y[i] += hstep / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        };
        for (long n = 0; n < full_steps; ++n) step(dt);
        if (remainder > 0.0) step(remainder);
    }
    return out;
}

std::vector<FlatBasisState> flat_basis(const SystemState& s)
{
    static constexpr int kDirac[4] = {-1, +1, -1, +1};
    static constexpr int kIso[4] = {-1, -1, +1, +1};
    std::vector<FlatBasisState> basis;
    for (const auto& sec : s.sectors)
        for (const BasisLabel& l : sector_basis(sec.index))
            basis.push_back({kDirac[l.pair], kIso[l.pair], l.photons});
    return basis;
}

linalg::DenseMatrix dense_hamiltonian(const std::vector<FlatBasisState>& basis,
                                      const ModelParams& mp)
{
    using Key = std::tuple<int, int, int>;
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[{basis[i].dirac, basis[i].iso, basis[i].photons}] = i;

    linalg::DenseMatrix h(basis.size());
    // Off-diagonal terms are added from the raising side only and mirrored,
    // which keeps the matrix exactly symmetric.
    auto couple = [&](std::size_t from, const Key& to, double amp) {
        auto it = index.find(to);
        if (it == index.end()) return;
        h(it->second, from) += amp;
        h(from, it->second) += amp;
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [dirac, iso, k] = basis[i];
        // Omega sigma_z + gamma sigma'_z with gamma = Omega.
        h(i, i) = mp.detuning * (dirac + iso);
        // lambda1 (a^dag sigma_+ + a sigma_-): |-, k> -> |+, k+1>, sqrt(k+1).
        if (dirac < 0)
            couple(i, {+1, iso, k + 1}, mp.lambda1 * std::sqrt(static_cast<double>(k + 1)));
        // lambda2 (a sigma'_+ + a^dag sigma'_-): |g-, k> -> |g+, k-1>, sqrt(k).
        if (iso < 0 && k > 0)
            couple(i, {dirac, +1, k - 1}, mp.lambda2 * std::sqrt(static_cast<double>(k)));
    }
    return h;
}

SystemState dense_oracle(const SystemState& s0, const ModelParams& mp, double tau)
{
    const auto basis = flat_basis(s0);
    const std::size_t dim = basis.size();
    if (dim > kDenseOracleMaxDim)
        throw InvalidArgument(fmt::format("dense oracle dimension {} exceeds {}", dim,
                                          kDenseOracleMaxDim));

    std::vector<cplx> psi;
    psi.reserve(dim);
    for (const auto& sec : s0.sectors)
        psi.insert(psi.end(), sec.amplitudes.begin(), sec.amplitudes.end());

    const auto eig = linalg::jacobi_eigen(dense_hamiltonian(basis, mp));
    const auto& v = eig.vectors;

    std::vector<cplx> modal(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        cplx acc{};
        for (std::size_t r = 0; r < dim; ++r) acc += v(r, k) * psi[r];
        modal[k] = acc * std::polar(1.0, -eig.values[k] * tau);
    }
    std::vector<cplx> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        cplx acc{};
        for (std::size_t k = 0; k < dim; ++k) acc += v(r, k) * modal[k];
        out[r] = acc;
    }

    SystemState s = s0;
    s.tau = s0.tau + tau;
    std::size_t pos = 0;
    for (auto& sec : s.sectors)
        for (auto& a : sec.amplitudes) a = out[pos++];
    return s;
}

}  // namespace jcm
