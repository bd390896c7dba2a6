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

#include "oamchan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oamchan
{

std::vector<double> default_ray_offsets()
{
    return {0.0447, -0.0447, 0.1413, -0.1413, 0.2492, -0.2492, 0.3715, -0.3715,
            0.5129, -0.5129, 0.6797, -0.6797, 0.8844, -0.8844, 1.1481, -1.1481,
            1.5195, -1.5195, 2.1551, -2.1551};
}

namespace
{

std::vector<double> effective_ray_offsets(const scenario_params &params)
{
    return params.ray_offsets.empty() ? default_ray_offsets() : params.ray_offsets;
}

// 1.1035 - 0.028K - 0.002K^2 + 0.0001K^3, K in dB
double los_scaling_polynomial(double k_db)
{
    return 1.1035 - 0.028 * k_db - 0.002 * k_db * k_db + 0.0001 * k_db * k_db * k_db;
}

double scaling_factor(const scenario_params &params, double nlos_base, const char *what)
{
    if (!(nlos_base > 0.0))
        throw std::invalid_argument(std::string(what) + " scaling base must be positive");
    if (!params.los)
        return nlos_base;
    const double c = nlos_base * los_scaling_polynomial(params.k_factor_db);
    if (!(c > 0.0))
        throw std::invalid_argument(std::string(what) +
                                    " LOS scaling polynomial is non-positive at this K-factor");
    return c;
}

} // namespace

void validate(const scenario_params &params)
{
    if (params.l_clusters < 1)
        throw std::invalid_argument("scenario needs at least one cluster");
    if (params.m_rays < 1)
        throw std::invalid_argument("scenario needs at least one ray per cluster");
    if (!(params.r_tau > 1.0))
        throw std::invalid_argument("delay proportionality factor r_tau must exceed 1");
    if (!(params.tau_rms_s > 0.0))
        throw std::invalid_argument("RMS delay spread must be positive");
    const double spreads[] = {params.theta_t_as_rad, params.phi_t_as_rad, params.theta_r_as_rad,
                              params.phi_r_as_rad, params.c_asa_rad, params.c_asd_rad,
                              params.c_esa_rad};
    for (double s : spreads)
        if (!(s >= 0.0) || !std::isfinite(s))
            throw std::invalid_argument("angle spreads must be finite and non-negative");
    if (!(params.zeta_db >= 0.0))
        throw std::invalid_argument("per-cluster shadowing std must be non-negative");
    if (!(params.sigma_psi_db >= 0.0))
        throw std::invalid_argument("link shadowing std must be non-negative");
    if (!(params.c_phi_nlos > 0.0))
        throw std::invalid_argument("azimuth scaling base must be positive");
    if (!(params.c_theta_nlos > 0.0))
        throw std::invalid_argument("elevation scaling base must be positive");
    if (effective_ray_offsets(params).size() != params.m_rays)
        throw std::invalid_argument("ray offset table length must equal the ray count");
}

delay_set generate_delays(const scenario_params &params, rng_stream &rng,
                          std::vector<double> *x_record)
{
    const std::size_t L = params.l_clusters;
    delay_set out;
    out.raw_s.resize(L);

    for (std::size_t l = 0; l < L; ++l)
    {
        const double x = rng.uniform_open();
        if (x_record)
            x_record->push_back(x);
        out.raw_s[l] = -params.r_tau * params.tau_rms_s * std::log(x);
    }

    const double min_tau = *std::min_element(out.raw_s.begin(), out.raw_s.end());
    for (double &tau : out.raw_s)
        tau -= min_tau;
    std::sort(out.raw_s.begin(), out.raw_s.end());
    out.raw_s.front() = 0.0;

    out.scaled_s = out.raw_s;
    if (params.los)
    {
        const double k = params.k_factor_db;
        const double divisor = 0.7705 - 0.0433 * k + 0.0002 * k * k + 0.000017 * k * k * k;
        if (!(divisor > 0.0))
            throw std::invalid_argument("LOS delay compensation polynomial is non-positive "
                                        "at this K-factor");
        for (double &tau : out.scaled_s)
            tau /= divisor;
    }
    return out;
}

cluster_power_set generate_powers(const std::vector<double> &raw_delays_s,
                                  const scenario_params &params, rng_stream &rng,
                                  std::vector<double> *z_record)
{
    if (raw_delays_s.empty())
        throw std::invalid_argument("power generation needs at least one cluster delay");

    const std::size_t L = raw_delays_s.size();

    // The published expression carries a positive delay exponent, which would grow
    // cluster power with delay and inflate the realized delay spread to roughly
    // 3x the configured value at r_tau = 1.5. The default negative exponent keeps
    // the power-weighted delay distribution at exp(-tau/tau_rms).
    const double exp_sign = params.verbatim_power_delay_exponent ? 1.0 : -1.0;
    const double rate = exp_sign * (params.r_tau - 1.0) / (params.r_tau * params.tau_rms_s);

    cluster_power_set out;
    out.cluster.resize(L);
    double sum = 0.0;
    for (std::size_t l = 0; l < L; ++l)
    {
        const double z = rng.normal(0.0, params.zeta_db);
        if (z_record)
            z_record->push_back(z);
        out.cluster[l] = std::exp(raw_delays_s[l] * rate) * std::pow(10.0, -z / 10.0);
        sum += out.cluster[l];
    }
    for (double &p : out.cluster)
        p /= sum;

    if (params.los)
    {
        const double k_linear = db_to_power(params.k_factor_db);
        const double diffuse = 1.0 / (k_linear + 1.0);
        for (double &p : out.cluster)
            p *= diffuse;
        out.cluster.front() += k_linear / (k_linear + 1.0);
    }

    out.ray.resize(L);
    for (std::size_t l = 0; l < L; ++l)
        out.ray[l] = out.cluster[l] / double(params.m_rays);
    return out;
}

double azimuth_scaling_factor(const scenario_params &params)
{
    return scaling_factor(params, params.c_phi_nlos, "azimuth");
}

double elevation_scaling_factor(const scenario_params &params)
{
    return scaling_factor(params, params.c_theta_nlos, "elevation");
}

namespace
{

double max_power(const std::vector<double> &powers)
{
    const double p = *std::max_element(powers.begin(), powers.end());
    if (!(p > 0.0))
        throw std::invalid_argument("cluster powers must contain a positive maximum");
    return p;
}

double draw_x(const scenario_params &params, rng_stream &rng)
{
    return params.uniform_x_in_angles ? rng.uniform() : rng.sign();
}

double jitter_std(const scenario_params &params, double spread_rad, double los_angle_rad)
{
    return params.angle_jitter_from_spread ? spread_rad / 7.0 : std::abs(los_angle_rad) / 7.0;
}

} // namespace

cluster_angles generate_azimuths(link_side side, const std::vector<double> &cluster_powers,
                                 const scenario_params &params, double los_angle_rad,
                                 rng_stream &rng, angle_draw_record *record)
{
    const std::size_t L = cluster_powers.size();
    const double spread = (side == link_side::arrival) ? params.phi_r_as_rad : params.phi_t_as_rad;
    const double c_phi = azimuth_scaling_factor(params);
    const double p_max = max_power(cluster_powers);
    const double sigma_y = jitter_std(params, spread, los_angle_rad);
    const double ray_scale = (side == link_side::arrival) ? params.c_asa_rad : params.c_asd_rad;
    const std::vector<double> offsets = effective_ray_offsets(params);

    // unpinned cluster terms T_l = 2(AS/1.4) sqrt(-ln(P_l/maxP)) / C_phi * X_l + Y_l
    std::vector<double> term(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const double x = draw_x(params, rng);
        const double y = rng.normal(0.0, sigma_y);
        if (record)
        {
            record->x.push_back(x);
            record->y.push_back(y);
        }
        const double spread_term =
            2.0 * (spread / 1.4) * std::sqrt(-std::log(cluster_powers[l] / p_max)) / c_phi;
        term[l] = spread_term * x + y;
    }

    cluster_angles out;
    out.cluster.resize(L);
    out.rays.resize(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        // LOS pins cluster 1 by subtracting its own draw, which cancels exactly
        const double raw = params.los ? term[l] - term[0] + los_angle_rad
                                      : term[l] + los_angle_rad;
        out.cluster[l] = wrap_azimuth(raw);
        out.rays[l].resize(params.m_rays);
        for (std::size_t m = 0; m < params.m_rays; ++m)
            out.rays[l][m] = wrap_azimuth(raw + ray_scale * offsets[m]);
    }
    return out;
}

cluster_angles generate_elevations(link_side side, const std::vector<double> &cluster_powers,
                                   const scenario_params &params, double los_angle_rad,
                                   rng_stream &rng, angle_draw_record *record)
{
    const std::size_t L = cluster_powers.size();
    const double spread =
        (side == link_side::arrival) ? params.theta_r_as_rad : params.theta_t_as_rad;
    const double c_theta = elevation_scaling_factor(params);
    const double p_max = max_power(cluster_powers);
    const double sigma_y = jitter_std(params, spread, los_angle_rad);
    const double ray_scale = (side == link_side::arrival)
                                 ? params.c_esa_rad
                                 : (3.0 / 8.0) * std::pow(10.0, params.mu_lg_eod);
    const std::vector<double> offsets = effective_ray_offsets(params);

    // unpinned cluster terms S_l = AS ln(P_l/maxP) / C_theta * X_l - Y_l
    std::vector<double> term(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const double x = draw_x(params, rng);
        const double y = rng.normal(0.0, sigma_y);
        if (record)
        {
            record->x.push_back(x);
            record->y.push_back(y);
        }
        term[l] = spread * std::log(cluster_powers[l] / p_max) / c_theta * x - y;
    }

    const double nlos_offset =
        (side == link_side::departure && !params.los) ? params.mu_offset_eod_rad : 0.0;

    cluster_angles out;
    out.cluster.resize(L);
    out.rays.resize(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const double raw = params.los ? term[l] - term[0] + los_angle_rad
                                      : term[l] + los_angle_rad - nlos_offset;
        out.cluster[l] = clip_elevation(raw);
        out.rays[l].resize(params.m_rays);
        for (std::size_t m = 0; m < params.m_rays; ++m)
            out.rays[l][m] = clip_elevation(raw + ray_scale * offsets[m]);
    }
    return out;
}

std::vector<std::vector<ray_angle_tuple>>
couple_rays(const cluster_angles &azimuth_arrival, const cluster_angles &azimuth_departure,
            const cluster_angles &elevation_arrival, const cluster_angles &elevation_departure,
            rng_stream &rng, std::vector<std::vector<std::size_t>> *aod_perms,
            std::vector<std::vector<std::size_t>> *eod_perms)
{
    const std::size_t L = azimuth_arrival.rays.size();
    if (azimuth_departure.rays.size() != L || elevation_arrival.rays.size() != L ||
        elevation_departure.rays.size() != L)
        throw std::invalid_argument("angle lists differ in cluster count");

    std::vector<std::vector<ray_angle_tuple>> tuples(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const std::size_t M = azimuth_arrival.rays[l].size();
        if (azimuth_departure.rays[l].size() != M || elevation_arrival.rays[l].size() != M ||
            elevation_departure.rays[l].size() != M)
            throw std::invalid_argument("angle lists differ in ray count within a cluster");

        // arrival rays keep their order; departure azimuths and elevations are
        // independently shuffled against them
        const std::vector<std::size_t> perm_aod = rng.permutation(M);
        const std::vector<std::size_t> perm_eod = rng.permutation(M);
        if (aod_perms)
            aod_perms->push_back(perm_aod);
        if (eod_perms)
            eod_perms->push_back(perm_eod);

        tuples[l].resize(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            tuples[l][m].phi_r_rad = azimuth_arrival.rays[l][m];
            tuples[l][m].theta_r_rad = elevation_arrival.rays[l][m];
            tuples[l][m].phi_t_rad = azimuth_departure.rays[l][perm_aod[m]];
            tuples[l][m].theta_t_rad = elevation_departure.rays[l][perm_eod[m]];
        }
    }
    return tuples;
}

channel_realization generate_channel(const scenario_params &params, const link_config &link,
                                     double distance_m, std::uint64_t seed,
                                     std::uint64_t realization_index)
{
    validate(params);
    validate(link);
    if (!(distance_m > 0.0))
        throw std::invalid_argument("link distance must be positive");

    channel_realization out;

    // ---------- Step 1: LOS geometry ----------
    const arma::vec3 baseline = link.rx_geometry.center_m - link.tx_geometry.center_m;
    const double baseline_norm = arma::norm(baseline);
    if (!(baseline_norm > 0.0))
        throw std::invalid_argument("tx and rx array centers coincide");
    const arma::vec3 dep = baseline / baseline_norm;

    out.theta_t_los_rad = std::acos(std::clamp(dep[2], -1.0, 1.0));
    out.phi_t_los_rad = wrap_azimuth(std::atan2(dep[1], dep[0]));
    out.theta_r_los_rad = std::acos(std::clamp(-dep[2], -1.0, 1.0));
    out.phi_r_los_rad = wrap_azimuth(std::atan2(-dep[1], -dep[0]));

    // ---------- Step 2: path loss per mode pair ----------
    const double f_ghz = link.grid.center_hz / 1e9;
    const std::size_t n_r = link.rx_modes.n_elements;
    const std::size_t n_t = link.tx_modes.n_elements;
    out.path_loss_db_matrix.set_size(n_r, n_t);
    for (std::size_t ir = 0; ir < n_r; ++ir)
        for (std::size_t it = 0; it < n_t; ++it)
            out.path_loss_db_matrix(ir, it) =
                path_loss_db(params.pathloss_fit, link.tx_modes.modes[it],
                             link.rx_modes.modes[ir], f_ghz, distance_m,
                             link.tx_geometry.radius_m, link.rx_geometry.radius_m);

    // ---------- Steps 3-5: large-scale draws, delays, powers ----------
    rng_stream rng_delay = role_stream(seed, stream_role::delays, realization_index);
    out.delays = generate_delays(params, rng_delay, &out.draws.x_delay);

    rng_stream rng_power = role_stream(seed, stream_role::cluster_shadowing, realization_index);
    out.powers = generate_powers(out.delays.raw_s, params, rng_power, &out.draws.z_cluster_db);

    // optional dynamic-range floor: keep cluster 1 and every cluster within
    // `cluster_power_floor_db` of the peak, then renormalize
    std::vector<double> cluster_p = out.powers.cluster;
    std::vector<double> delays_scaled = out.delays.scaled_s;
    if (params.cluster_power_floor_db > 0.0)
    {
        const double threshold =
            max_power(cluster_p) * std::pow(10.0, -params.cluster_power_floor_db / 10.0);
        std::vector<double> kept_p, kept_tau;
        for (std::size_t l = 0; l < cluster_p.size(); ++l)
            if (l == 0 || cluster_p[l] >= threshold)
            {
                kept_p.push_back(cluster_p[l]);
                kept_tau.push_back(delays_scaled[l]);
            }
        const double sum = std::accumulate(kept_p.begin(), kept_p.end(), 0.0);
        for (double &p : kept_p)
            p /= sum;
        cluster_p = std::move(kept_p);
        delays_scaled = std::move(kept_tau);
    }

    // ---------- Step 6: angles ----------
    rng_stream rng_azimuth = role_stream(seed, stream_role::azimuth, realization_index);
    angle_draw_record rec_aoa, rec_aod, rec_eoa, rec_eod;
    const cluster_angles aoa = generate_azimuths(link_side::arrival, cluster_p, params,
                                                 out.phi_r_los_rad, rng_azimuth, &rec_aoa);
    const cluster_angles aod = generate_azimuths(link_side::departure, cluster_p, params,
                                                 out.phi_t_los_rad, rng_azimuth, &rec_aod);

    rng_stream rng_elevation = role_stream(seed, stream_role::elevation, realization_index);
    const cluster_angles eoa = generate_elevations(link_side::arrival, cluster_p, params,
                                                   out.theta_r_los_rad, rng_elevation, &rec_eoa);
    const cluster_angles eod = generate_elevations(link_side::departure, cluster_p, params,
                                                   out.theta_t_los_rad, rng_elevation, &rec_eod);

    out.draws.x_angle = {rec_aoa.x, rec_aod.x, rec_eoa.x, rec_eod.x};
    out.draws.y_angle = {rec_aoa.y, rec_aod.y, rec_eoa.y, rec_eod.y};

    // ---------- Step 7: ray coupling ----------
    rng_stream rng_coupling = role_stream(seed, stream_role::coupling, realization_index);
    const auto tuples = couple_rays(aoa, aod, eoa, eod, rng_coupling, &out.draws.coupling_aod,
                                    &out.draws.coupling_eod);

    // ---------- MPC assembly ----------
    rng_stream rng_phase = role_stream(seed, stream_role::ray_phase, realization_index);
    out.mpcs.reserve(cluster_p.size() * params.m_rays);
    for (std::size_t l = 0; l < cluster_p.size(); ++l)
    {
        const double magnitude = std::sqrt(cluster_p[l] / double(params.m_rays));
        for (std::size_t m = 0; m < params.m_rays; ++m)
        {
            const double phase = rng_phase.uniform(0.0, two_pi);
            out.draws.ray_phase_rad.push_back(phase);

            mpc_params mpc;
            mpc.alpha = magnitude * std::complex<double>{std::cos(phase), std::sin(phase)};
            mpc.tau_s = delays_scaled[l];
            mpc.theta_t_rad = tuples[l][m].theta_t_rad;
            mpc.phi_t_rad = tuples[l][m].phi_t_rad;
            mpc.theta_r_rad = tuples[l][m].theta_r_rad;
            mpc.phi_r_rad = tuples[l][m].phi_r_rad;
            out.mpcs.push_back(mpc);
        }
    }

    // ---------- Step 8: normalized CTF ----------
    out.ctf_normalized = synthesize_ctf(out.mpcs, link);

    // ---------- Step 9: path loss and shadow fading ----------
    rng_stream rng_shadow = role_stream(seed, stream_role::link_shadowing, realization_index);
    out.shadowing_db = sample_shadowing_db({params.sigma_psi_db}, rng_shadow);
    out.draws.psi_db = out.shadowing_db;

    out.ctf_final = out.ctf_normalized;
    const std::size_t n_f = link.grid.n_points();
    for (std::size_t ir = 0; ir < n_r; ++ir)
        for (std::size_t it = 0; it < n_t; ++it)
        {
            const double amp =
                db_to_amplitude(-out.path_loss_db_matrix(ir, it) - out.shadowing_db);
            for (std::size_t k = 0; k < n_f; ++k)
                out.ctf_final.values(ir, it, k) *= amp;
        }

    return out;
}

} // namespace oamchan
