#include "core/observables.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace jcm {

namespace {

constexpr double kEigenTolerance = 1e-10;
constexpr double kRadicandTolerance = 1e-12;

// Range of sector labels that can contribute to the shifted sums below.
struct SectorRange {
    int lo;
    int hi;
};

SectorRange range_of(const SystemState& s)
{
    if (s.sectors.empty()) return {0, -1};
    return {s.sectors.front().index, s.sectors.back().index};
}

double x_log_x(double x)
{
    return x > 0.0 ? x * std::log(x) : 0.0;
}

}  // namespace

double PairDensity::trace() const
{
    double t = 0.0;
    for (int i = 0; i < 4; ++i) t += rho[i][i].real();
    return t;
}

double PairDensity::purity_sum() const
{
    double t = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t += std::norm(rho[i][j]);
    return t;
}

// The sums below pair amplitudes whose field states carry equal photon
// number. Missing amplitudes (outside the stored sectors, or B3 of sector
// -2) read as zero, so the low sectors need no separate formulas.

IsospinDensity isospin_density(const SystemState& s)
{
    const auto [lo, hi] = range_of(s);
    IsospinDensity d;
    for (int n = lo; n <= hi; ++n) {
        const cplx b1 = s.component(1, n), b2 = s.component(2, n);
        const cplx b3 = s.component(3, n), b4 = s.component(4, n);
        d.rho_ee += std::norm(b3) + std::norm(b4);
        d.rho_gg += std::norm(b1) + std::norm(b2);
        d.rho_eg += s.component(3, n + 1) * std::conj(b1) + s.component(4, n + 1) * std::conj(b2);
    }
    return d;
}

PairDensity pair_density(const SystemState& s)
{
    const auto [lo, hi] = range_of(s);
    PairDensity d;
    auto& r = d.rho;
    for (int n = lo; n <= hi; ++n) {
        const cplx b1 = s.component(1, n), b2 = s.component(2, n);
        const cplx b3 = s.component(3, n), b4 = s.component(4, n);
        r[0][0] += std::norm(b1);
        r[1][1] += std::norm(b2);
        r[2][2] += std::norm(b3);
        r[3][3] += std::norm(b4);
        r[0][1] += s.component(1, n + 1) * std::conj(b2);
        r[0][2] += b1 * std::conj(s.component(3, n + 1));
        r[0][3] += b1 * std::conj(b4);
        r[1][2] += b2 * std::conj(s.component(3, n + 2));
        r[1][3] += b2 * std::conj(s.component(4, n + 1));
        r[2][3] += s.component(3, n + 1) * std::conj(b4);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) r[i][j] = std::conj(r[j][i]);
    return d;
}

double entropy(const IsospinDensity& d)
{
    const double norm = d.trace();
    if (!(norm > 0.0)) throw NumericalError("entropy: isospin density has zero trace");
    const double sx = 2.0 * d.rho_eg.real() / norm;
    const double sy = 2.0 * d.rho_eg.imag() / norm;
    const double sz = (d.rho_ee - d.rho_gg) / norm;
    const double r = std::sqrt(sx * sx + sy * sy + sz * sz);

    double plus = 0.5 + 0.5 * r;
    double minus = 0.5 - 0.5 * r;
    if (minus < -kEigenTolerance || plus > 1.0 + kEigenTolerance)
        throw NumericalError(fmt::format("entropy: eigenvalue outside [0, 1] (|r| = {})", r));
    plus = std::clamp(plus, 0.0, 1.0);
    minus = std::clamp(minus, 0.0, 1.0);
    return -x_log_x(minus) - x_log_x(plus);
}

double concurrence(const PairDensity& d)
{
    const double norm = d.trace();
    if (!(norm > 0.0)) throw NumericalError("concurrence: pair density has zero trace");
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            sum += (d.rho[i][i] * d.rho[j][j] - d.rho[i][j] * d.rho[j][i]).real();
        }
    double radicand = 2.0 * sum / (norm * norm);
    if (radicand < -kRadicandTolerance)
        throw NumericalError(fmt::format("concurrence: negative radicand {}", radicand));
    return std::sqrt(std::max(0.0, radicand));
}

double inversion(const IsospinDensity& d)
{
    const double norm = d.trace();
    if (!(norm > 0.0)) throw NumericalError("inversion: isospin density has zero trace");
    return (d.rho_ee - d.rho_gg) / norm;
}

double g2(const SystemState& s)
{
    const auto [lo, hi] = range_of(s);
    double first = 0.0;   // <n>, unnormalised
    double second = 0.0;  // <n(n-1)>, unnormalised
    double norm = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const double p1 = std::norm(s.component(1, n));
        const double p2 = std::norm(s.component(2, n));
        const double p3 = std::norm(s.component(3, n));
        const double p4 = std::norm(s.component(4, n));
        const double m = n;
        first += (m + 2) * p1 + (m + 3) * p2 + (m + 1) * p3 + (m + 2) * p4;
        second += (m + 2) * (m + 1) * p1 + (m + 3) * (m + 2) * p2 + (m + 1) * m * p3 +
                  (m + 2) * (m + 1) * p4;
        norm += p1 + p2 + p3 + p4;
    }
    if (!(first > 0.0))
        throw NumericalError(fmt::format("g2 undefined at tau = {}: mean photon number is 0", s.tau));
    return norm * second / (first * first);
}

ObservableRecord record(const SystemState& s)
{
    const IsospinDensity iso = isospin_density(s);
    ObservableRecord r;
    r.tau = s.tau;
    r.entropy = entropy(iso);
    r.concurrence = concurrence(pair_density(s));
    r.inversion = inversion(iso);
    r.g2 = g2(s);
    r.norm = total_norm(s);
    r.excitation = excitation_expectation(s);
    return r;
}

}  // namespace jcm
