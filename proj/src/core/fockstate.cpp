#include "core/fockstate.hpp"

#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace jcm {

CoherentAmplitudes coherent_amplitudes(cplx alpha, int n_max)
{
    if (n_max < 0) throw InvalidArgument("n_max must be >= 0");

    CoherentAmplitudes out;
    out.alpha = alpha;
    out.q.resize(static_cast<std::size_t>(n_max) + 1);
    out.q[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < n_max; ++n)
        out.q[n + 1] = out.q[n] * alpha / std::sqrt(static_cast<double>(n + 1));

    double mass = 0.0;
    for (const cplx& v : out.q) mass += std::norm(v);
    out.tail_mass = std::max(0.0, 1.0 - mass);
    return out;
}

cplx SystemState::component(int j, int n) const
{
    if (sectors.empty() || j < 1 || j > 4) return {};
    const int offset = n - sectors.front().index;
    if (offset < 0 || offset >= static_cast<int>(sectors.size())) return {};
    const auto& amps = sectors[offset].amplitudes;
    if (n == kLowestSector) {
        switch (j) {
            case 1: return amps[0];
            case 2: return amps[1];
            case 4: return amps[2];
            default: return {};
        }
    }
    return amps[j - 1];
}

SystemState initial_state(const ModelParams& mp)
{
    validate(mp);
    const int n_max = effective_n_max(mp);
    const auto coh = coherent_amplitudes(mp.alpha, n_max);

    SystemState s;
    s.policy = mp.policy;
    for (int n = first_sector(mp.policy); n <= n_max - 2; ++n) {
        Sector sec{n, std::vector<cplx>(sector_dimension(n))};
        sec.amplitudes[0] = coh.q[n + 2];
        s.sectors.push_back(std::move(sec));
    }
    if (mp.policy == SectorPolicy::TruncatedAnsatz && total_norm(s) == 0.0)
        throw InvalidArgument(
            "truncated ansatz cannot represent this initial state (no weight on n >= 2 photons)");
    return s;
}

double sector_norm(const Sector& s)
{
    double acc = 0.0;
    for (const cplx& v : s.amplitudes) acc += std::norm(v);
    return acc;
}

double total_norm(const SystemState& s)
{
    double acc = 0.0;
    for (const auto& sec : s.sectors) acc += sector_norm(sec);
    return acc;
}

double excitation_expectation(const SystemState& s)
{
    double acc = 0.0;
    for (const auto& sec : s.sectors) acc += (sec.index + 2) * sector_norm(sec);
    return acc;
}

}  // namespace jcm
