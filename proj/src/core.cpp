// SPDX-License-Identifier: Apache-2.0
//
// oamchan - OAM wireless channel modelling and estimation library
// Copyright (C) 2026 the oamchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "oamchan/core.hpp"

#include <cmath>

namespace oamchan
{

frequency_grid make_frequency_grid(double center_hz, double bandwidth_hz, std::size_t n_points)
{
    if (n_points == 0)
        throw std::invalid_argument("frequency grid needs at least one point");
    if (!(center_hz > 0.0))
        throw std::invalid_argument("center frequency must be positive");
    if (bandwidth_hz < 0.0)
        throw std::invalid_argument("bandwidth cannot be negative");
    if (bandwidth_hz > 0.0 && n_points == 1)
        throw std::invalid_argument("single-point grid requires zero bandwidth");
    if (bandwidth_hz == 0.0 && n_points > 1)
        throw std::invalid_argument("zero bandwidth is only valid for a single point");

    frequency_grid grid;
    grid.center_hz = center_hz;
    grid.bandwidth_hz = bandwidth_hz;
    grid.points_hz.resize(n_points);

    if (n_points == 1)
    {
        grid.points_hz[0] = center_hz;
        return grid;
    }

    const double f_lo = center_hz - 0.5 * bandwidth_hz;
    const double step = bandwidth_hz / double(n_points - 1);
    for (std::size_t k = 0; k < n_points; ++k)
        grid.points_hz[k] = f_lo + double(k) * step;
    grid.points_hz.back() = center_hz + 0.5 * bandwidth_hz; // exact upper endpoint

    return grid;
}

oam_mode_set mode_index_map(std::size_t n_elements)
{
    if (n_elements == 0)
        throw std::invalid_argument("mode map requires at least one UCA element");

    oam_mode_set set;
    set.n_elements = n_elements;
    set.modes.resize(n_elements);

    // floor((2-N)/2), exact for negative operands
    const long long num = 2ll - (long long)n_elements;
    const long long lowest = (num >= 0) ? num / 2 : (num - 1) / 2;
    for (std::size_t n = 0; n < n_elements; ++n)
        set.modes[n] = int(lowest + (long long)n);

    return set;
}

void validate(const mpc_params &mpc)
{
    if (!std::isfinite(mpc.alpha.real()) || !std::isfinite(mpc.alpha.imag()))
        throw std::invalid_argument("mpc gain must be finite");
    if (!std::isfinite(mpc.tau_s) || mpc.tau_s < 0.0)
        throw std::invalid_argument("mpc delay must be finite and non-negative");
    const auto check_elev = [](double v, const char *what) {
        if (!std::isfinite(v) || v < 0.0 || v > pi)
            throw std::invalid_argument(std::string(what) + " must lie in [0, pi]");
    };
    const auto check_azim = [](double v, const char *what) {
        if (!std::isfinite(v) || v < 0.0 || v >= two_pi)
            throw std::invalid_argument(std::string(what) + " must lie in [0, 2*pi)");
    };
    check_elev(mpc.theta_t_rad, "departure elevation");
    check_elev(mpc.theta_r_rad, "arrival elevation");
    check_azim(mpc.phi_t_rad, "departure azimuth");
    check_azim(mpc.phi_r_rad, "arrival azimuth");
}

double wrap_azimuth(double phi_rad)
{
    if (phi_rad >= 0.0 && phi_rad < two_pi)
        return phi_rad;
    double w = std::fmod(phi_rad, two_pi);
    if (w < 0.0)
        w += two_pi;
    if (w >= two_pi) // fmod round-off can land exactly on 2*pi
        w = 0.0;
    return w;
}

double clip_elevation(double theta_rad)
{
    if (theta_rad < 0.0)
        return 0.0;
    if (theta_rad > pi)
        return pi;
    return theta_rad;
}

void validate(const ctf &h)
{
    if (h.values.n_rows != h.rx_modes.size() || h.values.n_cols != h.tx_modes.size())
        throw std::invalid_argument("ctf tensor shape disagrees with mode lists");
    if (h.values.n_slices != h.grid.n_points())
        throw std::invalid_argument("ctf tensor shape disagrees with frequency grid");
    if (!h.values.is_finite())
        throw std::invalid_argument("ctf contains non-finite entries");
}

// ---------- rng_stream (PCG32) ----------

namespace
{
constexpr std::uint64_t pcg_multiplier = 6364136223846793005ull;
}

rng_stream::rng_stream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(0), inc_((stream_id << 1u) | 1u), seed_(seed), stream_id_(stream_id)
{
    next_u32();
    state_ += seed;
    next_u32();
}

std::uint32_t rng_stream::next_u32()
{
    const std::uint64_t old = state_;
    state_ = old * pcg_multiplier + inc_;
    const std::uint32_t xorshifted = std::uint32_t(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = std::uint32_t(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double rng_stream::uniform()
{
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    const std::uint64_t bits53 = ((hi << 32) | lo) >> 11;
    return double(bits53) * 0x1.0p-53;
}

double rng_stream::uniform_open()
{
    double u = uniform();
    while (u == 0.0)
        u = uniform();
    return u;
}

double rng_stream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

double rng_stream::normal()
{
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

double rng_stream::normal(double mean, double stddev)
{
    return mean + stddev * normal();
}

double rng_stream::sign()
{
    return (next_u32() & 1u) ? 1.0 : -1.0;
}

std::uint32_t rng_stream::next_below(std::uint32_t n)
{
    if (n == 0)
        throw std::invalid_argument("next_below(0) is undefined");
    const std::uint32_t threshold = std::uint32_t(-n) % n; // 2^32 mod n
    for (;;)
    {
        const std::uint32_t r = next_u32();
        if (r >= threshold)
            return r % n;
    }
}

std::vector<std::size_t> rng_stream::permutation(std::size_t n)
{
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = n; i > 1; --i)
    {
        const std::size_t j = next_below(std::uint32_t(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

} // namespace oamchan
