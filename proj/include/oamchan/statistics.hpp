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

#ifndef oamchan_statistics_H
#define oamchan_statistics_H

#include "oamchan/core.hpp"

#include <utility>

namespace oamchan
{

struct spread_report
{
    double tau_rms_s = 0.0;
    double theta_t_rms_rad = 0.0;
    double phi_t_rms_rad = 0.0;
    double theta_r_rms_rad = 0.0;
    double phi_r_rms_rad = 0.0;
};

// The published spread formulas carry an unsquared |alpha| denominator inside the
// squared-mean term, which breaks invariance under gain rescaling. `standard` uses
// the power-weighted central moment (|alpha|^2 throughout); `verbatim_paper`
// reproduces the printed expression.
enum class moment_denominator
{
    standard,
    verbatim_paper
};

double rms_delay_spread(const std::vector<mpc_params> &mpcs,
                        moment_denominator mode = moment_denominator::standard);

spread_report rms_angle_spreads(const std::vector<mpc_params> &mpcs,
                                moment_denominator mode = moment_denominator::standard);

// Correlation between same-mode channels H_{n,n}: per frequency point the sample
// expectation over snapshots of H_{n1,n1} conj(H_{n2,n2}), normalized by the two
// power expectations, then averaged over the band. With a single snapshot the
// expectation degenerates to the per-point product.
struct correlation_matrix
{
    arma::cx_mat rho;
    std::vector<int> mode_labels;
};

correlation_matrix mode_correlation(const std::vector<ctf> &snapshots);

enum class capacity_normalization
{
    per_point,   // each H_k scaled to mean |entry|^2 = 1
    whole_tensor // one common scale across the band
};

// Equal-power Shannon capacity log2 det(I + (snr/N_t) H H^H), averaged over the
// frequency points of the normalized CTF. Returns bits/s/Hz.
double capacity_bits(const ctf &h, double snr_linear,
                     capacity_normalization norm = capacity_normalization::per_point);

struct delay_psd_result
{
    std::vector<double> bin_edges_s;    // n_bins + 1 ascending edges
    std::vector<double> power_linear;   // sum of |alpha|^2 per bin
    std::vector<double> power_db_rel;   // relative to the strongest bin (0 dB peak)
};

delay_psd_result delay_psd(const std::vector<mpc_params> &mpcs,
                           const std::vector<double> &bin_edges_s);

struct angular_psd_record
{
    double theta_t_rad = 0.0;
    double phi_t_rad = 0.0;
    double theta_r_rad = 0.0;
    double phi_r_rad = 0.0;
    double power_db_rel = 0.0; // strongest MPC at exactly 0 dB
};

std::vector<angular_psd_record> angular_psd(const std::vector<mpc_params> &mpcs);

// Step CDF with probabilities i/n; tied sample values are collapsed into one step.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples);

} // namespace oamchan

#endif
