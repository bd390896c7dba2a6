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

#ifndef oamchan_generator_H
#define oamchan_generator_H

#include "oamchan/core.hpp"
#include "oamchan/propagation.hpp"
#include "oamchan/synthesis.hpp"

#include <array>
#include <string>

namespace oamchan
{

// Fixed sub-stream roles hanging off one master seed. Realization i of an
// ensemble uses stream_id = i * stream_stride + role.
enum class stream_role : std::uint64_t
{
    delays = 0,
    cluster_shadowing = 1,
    azimuth = 2,
    elevation = 3,
    coupling = 4,
    link_shadowing = 5,
    ray_phase = 6
};

inline constexpr std::uint64_t stream_stride = 16;

inline rng_stream role_stream(std::uint64_t seed, stream_role role,
                              std::uint64_t realization_index = 0)
{
    return rng_stream(seed, realization_index * stream_stride + std::uint64_t(role));
}

// Default 20-ray equal-power offset table used to spread rays around a cluster angle.
std::vector<double> default_ray_offsets();

// Per-scenario large-scale parameters. Spread and scaling values are config
// inputs; the shipped scenario files carry placeholder values.
struct scenario_params
{
    std::string name;
    bool los = false;

    std::size_t l_clusters = 1; // L
    std::size_t m_rays = 20;    // M

    double r_tau = 1.5;     // delay distribution proportionality factor, > 1
    double tau_rms_s = 0.0; // RMS delay spread

    // RMS angle spreads (departure elevation/azimuth, arrival elevation/azimuth)
    double theta_t_as_rad = 0.0;
    double phi_t_as_rad = 0.0;
    double theta_r_as_rad = 0.0;
    double phi_r_as_rad = 0.0;

    double zeta_db = 0.0;     // per-cluster shadowing std
    double k_factor_db = 0.0; // Ricean K-factor (LOS only)

    double c_phi_nlos = 15.0; // azimuth cluster-count scaling base
    double c_theta_nlos = 0.0; // elevation scaling base, required config input

    // cluster-wise ray spreads and departure-elevation shape parameters
    double c_asa_rad = 0.0;
    double c_asd_rad = 0.0;
    double c_esa_rad = 0.0;
    double mu_offset_eod_rad = 0.0;
    double mu_lg_eod = 0.0;

    path_loss_fit pathloss_fit;
    double sigma_psi_db = 0.0; // link shadow-fading std

    // Interpretation switches. Defaults follow the readings that keep the
    // generated ensemble statistically consistent; the verbatim variants
    // reproduce the published expressions literally.
    bool uniform_x_in_angles = false;         // X_l in angle formulas: U(0,1) instead of a random sign
    bool angle_jitter_from_spread = false;    // Y_l std = AS/7 instead of LOS-angle/7
    bool verbatim_power_delay_exponent = false; // positive delay exponent in cluster powers
    double cluster_power_floor_db = -1.0;     // drop clusters below peak-minus-floor; <= 0 disables

    std::vector<double> ray_offsets; // alpha_m; empty selects default_ray_offsets()
};

void validate(const scenario_params &params);

// Raw draws behind one realization, kept for reproducibility audits.
// Angle-kind order: 0 = AOA, 1 = AOD, 2 = EOA, 3 = EOD.
struct generation_draws
{
    std::vector<double> x_delay;
    std::vector<double> z_cluster_db;
    std::array<std::vector<double>, 4> x_angle;
    std::array<std::vector<double>, 4> y_angle;
    std::vector<std::vector<std::size_t>> coupling_aod; // per-cluster ray permutations
    std::vector<std::vector<std::size_t>> coupling_eod;
    std::vector<double> ray_phase_rad;
    double psi_db = 0.0;
};

struct delay_set
{
    std::vector<double> raw_s;    // sorted, min-subtracted
    std::vector<double> scaled_s; // LOS compensation applied; equals raw for NLOS
};

// Step 4: tau_l = -r_tau * tau_rms * ln(X_l), min-subtracted and sorted; the LOS
// variant divides by the K-dependent compensation polynomial.
delay_set generate_delays(const scenario_params &params, rng_stream &rng,
                          std::vector<double> *x_record = nullptr);

struct cluster_power_set
{
    std::vector<double> cluster; // normalized, sums to 1
    std::vector<double> ray;     // cluster power split evenly over the M rays
};

// Step 5. Uses the raw (unscaled) delays. LOS adds the Ricean component to the
// first cluster: P_l/(K_R+1) + delta(l-1) * K_R/(K_R+1).
cluster_power_set generate_powers(const std::vector<double> &raw_delays_s,
                                  const scenario_params &params, rng_stream &rng,
                                  std::vector<double> *z_record = nullptr);

// Cluster-count scaling factor C_phi; LOS applies the K polynomial
// 1.1035 - 0.028K - 0.002K^2 + 0.0001K^3 to the NLOS base.
double azimuth_scaling_factor(const scenario_params &params);
// Same construction on the elevation base C_theta.
double elevation_scaling_factor(const scenario_params &params);

enum class link_side
{
    arrival,
    departure
};

struct cluster_angles
{
    std::vector<double> cluster;           // one angle per cluster
    std::vector<std::vector<double>> rays; // per-cluster ray angles
};

struct angle_draw_record
{
    std::vector<double> x;
    std::vector<double> y;
};

// Step 6 azimuths: cluster angle 2(AS/1.4)sqrt(-ln(P_l/max P))/C_phi * X_l + Y_l
// around the LOS azimuth; the LOS branch subtracts its own first-cluster draw so
// cluster 1 sits exactly on the LOS angle. Ray offsets C_ASA/C_ASD * alpha_m.
cluster_angles generate_azimuths(link_side side, const std::vector<double> &cluster_powers,
                                 const scenario_params &params, double los_angle_rad,
                                 rng_stream &rng, angle_draw_record *record = nullptr);

// Step 6 elevations: cluster angle AS * ln(P_l/max P)/C_theta * X_l - Y_l around
// the LOS elevation; NLOS departure subtracts mu_offset_EOD. Ray offsets are
// C_ESA * alpha_m on arrival and (3/8) * 10^mu_lgEOD * alpha_m on departure.
cluster_angles generate_elevations(link_side side, const std::vector<double> &cluster_powers,
                                   const scenario_params &params, double los_angle_rad,
                                   rng_stream &rng, angle_draw_record *record = nullptr);

struct ray_angle_tuple
{
    double theta_t_rad = 0.0;
    double phi_t_rad = 0.0;
    double theta_r_rad = 0.0;
    double phi_r_rad = 0.0;
};

// Step 7: within each cluster the departure azimuths and departure elevations are
// re-paired with the arrival rays by independent random permutations.
std::vector<std::vector<ray_angle_tuple>>
couple_rays(const cluster_angles &azimuth_arrival, const cluster_angles &azimuth_departure,
            const cluster_angles &elevation_arrival, const cluster_angles &elevation_departure,
            rng_stream &rng, std::vector<std::vector<std::size_t>> *aod_perms = nullptr,
            std::vector<std::vector<std::size_t>> *eod_perms = nullptr);

struct channel_realization
{
    std::vector<mpc_params> mpcs;
    ctf ctf_normalized;
    ctf ctf_final;
    generation_draws draws;

    delay_set delays;
    cluster_power_set powers;
    arma::mat path_loss_db_matrix; // per (rx mode, tx mode)
    double shadowing_db = 0.0;

    // Step 1 geometry products
    double theta_t_los_rad = 0.0, phi_t_los_rad = 0.0;
    double theta_r_los_rad = 0.0, phi_r_los_rad = 0.0;
};

// Steps 1-9 end to end for one realization. Deterministic in (seed,
// realization_index); ensembles parallelize over realization_index.
channel_realization generate_channel(const scenario_params &params, const link_config &link,
                                     double distance_m, std::uint64_t seed,
                                     std::uint64_t realization_index = 0);

} // namespace oamchan

#endif
