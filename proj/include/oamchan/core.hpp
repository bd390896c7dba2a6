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

#ifndef oamchan_core_H
#define oamchan_core_H

#include <armadillo>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oamchan
{

inline constexpr double speed_of_light_mps = 299792458.0;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;

// Uniform frequency sweep over [center-BW/2, center+BW/2], endpoints included.
struct frequency_grid
{
    double center_hz = 0.0;
    double bandwidth_hz = 0.0;
    std::vector<double> points_hz; // ascending, uniformly spaced

    std::size_t n_points() const { return points_hz.size(); }
    double spacing_hz() const
    {
        return points_hz.size() > 1 ? points_hz[1] - points_hz[0] : 0.0;
    }
};

frequency_grid make_frequency_grid(double center_hz, double bandwidth_hz, std::size_t n_points);

// OAM mode numbers carried by an N-element UCA: a run of consecutive integers
// starting at floor((2-N)/2). E.g. N=8 -> [-3..4].
struct oam_mode_set
{
    std::size_t n_elements = 0;
    std::vector<int> modes;
};

oam_mode_set mode_index_map(std::size_t n_elements);

// One multipath component: complex gain, delay and the four propagation angles
// (global frame, elevation from +z, azimuth from +x counterclockwise).
struct mpc_params
{
    std::complex<double> alpha{0.0, 0.0};
    double tau_s = 0.0;
    double theta_t_rad = 0.0; // elevation of departure, [0, pi]
    double phi_t_rad = 0.0;   // azimuth of departure, [0, 2*pi)
    double theta_r_rad = 0.0; // elevation of arrival
    double phi_r_rad = 0.0;   // azimuth of arrival
};

// Throws std::invalid_argument when a field is non-finite or out of range.
void validate(const mpc_params &mpc);

double wrap_azimuth(double phi_rad);     // -> [0, 2*pi)
double clip_elevation(double theta_rad); // -> [0, pi]

// Channel transfer function H, indexed (rx mode index, tx mode index, frequency point).
struct ctf
{
    arma::cx_cube values; // n_rows = N_r, n_cols = N_t, n_slices = N_f
    frequency_grid grid;
    std::vector<int> tx_modes;
    std::vector<int> rx_modes;

    std::size_t n_r() const { return values.n_rows; }
    std::size_t n_t() const { return values.n_cols; }
    std::size_t n_f() const { return values.n_slices; }
};

// Throws when the tensor shape disagrees with grid/mode lists or entries are non-finite.
void validate(const ctf &h);

// Deterministic, platform-independent random stream (PCG32, XSH-RR output).
// Constants: multiplier 6364136223846793005, increment (2*stream_id+1).
// Identical (seed, stream_id) pairs reproduce identical draw sequences; distinct
// stream_ids select statistically independent sequences. A stream is single-owner:
// parallel work splits by stream_id instead of sharing one stream.
class rng_stream
{
  public:
    rng_stream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint32_t next_u32();

    // 53-bit uniform in [0, 1)
    double uniform();
    // uniform in (0, 1); zero draws are rejected so log() is always finite
    double uniform_open();
    double uniform(double lo, double hi);

    // Box-Muller, two fresh uniforms per draw (no cached second value)
    double normal();
    double normal(double mean, double stddev);

    // +1 or -1 with equal probability
    double sign();

    // unbiased integer in [0, n), rejection sampled
    std::uint32_t next_below(std::uint32_t n);

    // Fisher-Yates permutation of 0..n-1
    std::vector<std::size_t> permutation(std::size_t n);

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

inline rng_stream make_rng_stream(std::uint64_t seed, std::uint64_t stream_id)
{
    return rng_stream(seed, stream_id);
}

} // namespace oamchan

#endif
