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

#include "oamchan/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oamchan
{

namespace
{

// Power-weighted spread of one scalar field across the MPC list.
double weighted_spread(const std::vector<mpc_params> &mpcs, double (*field)(const mpc_params &),
                       moment_denominator mode)
{
    double sum_p = 0.0, sum_a = 0.0, sum_pv = 0.0, sum_pv2 = 0.0;
    for (const auto &mpc : mpcs)
    {
        const double a = std::abs(mpc.alpha);
        const double p = a * a;
        const double v = field(mpc);
        sum_p += p;
        sum_a += a;
        sum_pv += p * v;
        sum_pv2 += p * v * v;
    }
    if (!(sum_p > 0.0))
        throw std::invalid_argument("spread needs at least one MPC with nonzero gain");

    const double mean_denom = (mode == moment_denominator::standard) ? sum_p : sum_a;
    const double mean = sum_pv / mean_denom;
    const double var = sum_pv2 / sum_p - mean * mean;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

} // namespace

double rms_delay_spread(const std::vector<mpc_params> &mpcs, moment_denominator mode)
{
    return weighted_spread(
        mpcs, [](const mpc_params &m) { return m.tau_s; }, mode);
}

spread_report rms_angle_spreads(const std::vector<mpc_params> &mpcs, moment_denominator mode)
{
    spread_report r;
    r.tau_rms_s = rms_delay_spread(mpcs, mode);
    r.theta_t_rms_rad = weighted_spread(
        mpcs, [](const mpc_params &m) { return m.theta_t_rad; }, mode);
    r.phi_t_rms_rad = weighted_spread(
        mpcs, [](const mpc_params &m) { return m.phi_t_rad; }, mode);
    r.theta_r_rms_rad = weighted_spread(
        mpcs, [](const mpc_params &m) { return m.theta_r_rad; }, mode);
    r.phi_r_rms_rad = weighted_spread(
        mpcs, [](const mpc_params &m) { return m.phi_r_rad; }, mode);
    return r;
}

correlation_matrix mode_correlation(const std::vector<ctf> &snapshots)
{
    if (snapshots.empty())
        throw std::invalid_argument("mode correlation needs at least one CTF snapshot");

    const ctf &first = snapshots.front();
    const std::size_t n_modes = std::min(first.n_r(), first.n_t());
    const std::size_t n_f = first.n_f();
    for (const ctf &h : snapshots)
        if (h.n_r() != first.n_r() || h.n_t() != first.n_t() || h.n_f() != n_f)
            throw std::invalid_argument("CTF snapshots differ in shape");

    // E{H_{n1,n1} conj(H_{n2,n2})} per frequency point, sample mean over snapshots
    arma::cx_cube cross(n_modes, n_modes, n_f, arma::fill::zeros);
    arma::mat power(n_modes, n_f, arma::fill::zeros);
    for (const ctf &h : snapshots)
    {
        for (std::size_t k = 0; k < n_f; ++k)
            for (std::size_t n1 = 0; n1 < n_modes; ++n1)
            {
                const std::complex<double> h1 = h.values(n1, n1, k);
                power(n1, k) += std::norm(h1);
                for (std::size_t n2 = 0; n2 < n_modes; ++n2)
                    cross(n1, n2, k) += h1 * std::conj(h.values(n2, n2, k));
            }
    }
    const double inv_n = 1.0 / double(snapshots.size());
    cross *= inv_n;
    power *= inv_n;

    for (std::size_t n = 0; n < n_modes; ++n)
        if (!(arma::accu(power.row(n)) > 0.0))
            throw std::invalid_argument("mode " + std::to_string(first.tx_modes[n]) +
                                        " has zero power in every snapshot");

    correlation_matrix out;
    out.mode_labels.assign(first.tx_modes.begin(), first.tx_modes.begin() + n_modes);
    out.rho.set_size(n_modes, n_modes);
    for (std::size_t n1 = 0; n1 < n_modes; ++n1)
        for (std::size_t n2 = 0; n2 < n_modes; ++n2)
        {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t k = 0; k < n_f; ++k)
            {
                const double denom = std::sqrt(power(n1, k) * power(n2, k));
                if (denom > 0.0)
                    acc += cross(n1, n2, k) / denom;
            }
            out.rho(n1, n2) = acc / double(n_f);
        }
    return out;
}

double capacity_bits(const ctf &h, double snr_linear, capacity_normalization norm)
{
    if (!(snr_linear > 0.0))
        throw std::invalid_argument("SNR must be positive");
    if (h.n_f() == 0)
        throw std::invalid_argument("capacity needs a non-empty frequency grid");

    const std::size_t n_r = h.n_r(), n_t = h.n_t(), n_f = h.n_f();

    double whole_scale = 1.0;
    if (norm == capacity_normalization::whole_tensor)
    {
        double mean_sq = 0.0;
        for (std::size_t k = 0; k < n_f; ++k)
            mean_sq += arma::accu(arma::square(arma::abs(h.values.slice(k))));
        mean_sq /= double(n_r * n_t * n_f);
        if (!(mean_sq > 0.0))
            throw std::invalid_argument("capacity of an all-zero CTF is undefined");
        whole_scale = 1.0 / std::sqrt(mean_sq);
    }

    double cap_sum = 0.0;
    for (std::size_t k = 0; k < n_f; ++k)
    {
        arma::cx_mat hk = h.values.slice(k);
        if (norm == capacity_normalization::per_point)
        {
            const double mean_sq = arma::accu(arma::square(arma::abs(hk))) / double(n_r * n_t);
            if (!(mean_sq > 0.0))
                throw std::invalid_argument("capacity undefined at a zero-power frequency point");
            hk *= 1.0 / std::sqrt(mean_sq);
        }
        else
        {
            hk *= whole_scale;
        }

        const arma::cx_mat gram = hk * hk.t(); // Hermitian PSD
        arma::vec eigval;
        if (!arma::eig_sym(eigval, gram))
            throw std::runtime_error("eigen decomposition failed in capacity computation");

        double cap_k = 0.0;
        const double load = snr_linear / double(n_t);
        for (const double lambda : eigval)
            if (lambda > 0.0)
                cap_k += std::log2(1.0 + load * lambda);
        cap_sum += cap_k;
    }
    return cap_sum / double(n_f);
}

delay_psd_result delay_psd(const std::vector<mpc_params> &mpcs,
                           const std::vector<double> &bin_edges_s)
{
    if (bin_edges_s.size() < 2)
        throw std::invalid_argument("delay PSD needs at least one bin");
    if (!std::is_sorted(bin_edges_s.begin(), bin_edges_s.end()))
        throw std::invalid_argument("delay PSD bin edges must be ascending");
    for (const auto &mpc : mpcs)
        if (mpc.tau_s < bin_edges_s.front() || mpc.tau_s > bin_edges_s.back())
            throw std::invalid_argument("delay PSD bins do not cover all MPC delays");

    delay_psd_result out;
    out.bin_edges_s = bin_edges_s;
    out.power_linear.assign(bin_edges_s.size() - 1, 0.0);

    for (const auto &mpc : mpcs)
    {
        auto it = std::upper_bound(bin_edges_s.begin(), bin_edges_s.end(), mpc.tau_s);
        std::size_t bin = std::size_t(std::distance(bin_edges_s.begin(), it));
        bin = (bin == 0) ? 0 : bin - 1;
        if (bin >= out.power_linear.size()) // delay exactly on the last edge
            bin = out.power_linear.size() - 1;
        out.power_linear[bin] += std::norm(mpc.alpha);
    }

    const double peak = *std::max_element(out.power_linear.begin(), out.power_linear.end());
    out.power_db_rel.resize(out.power_linear.size());
    for (std::size_t i = 0; i < out.power_linear.size(); ++i)
        out.power_db_rel[i] = (out.power_linear[i] > 0.0 && peak > 0.0)
                                  ? 10.0 * std::log10(out.power_linear[i] / peak)
                                  : -std::numeric_limits<double>::infinity();
    return out;
}

std::vector<angular_psd_record> angular_psd(const std::vector<mpc_params> &mpcs)
{
    std::vector<angular_psd_record> records;
    records.reserve(mpcs.size());
    if (mpcs.empty())
        return records;

    double peak = 0.0;
    for (const auto &mpc : mpcs)
        peak = std::max(peak, std::norm(mpc.alpha));
    if (!(peak > 0.0))
        throw std::invalid_argument("angular PSD needs at least one MPC with nonzero gain");

    for (const auto &mpc : mpcs)
    {
        angular_psd_record rec;
        rec.theta_t_rad = mpc.theta_t_rad;
        rec.phi_t_rad = mpc.phi_t_rad;
        rec.theta_r_rad = mpc.theta_r_rad;
        rec.phi_r_rad = mpc.phi_r_rad;
        const double p = std::norm(mpc.alpha);
        rec.power_db_rel = (p > 0.0) ? 10.0 * std::log10(p / peak)
                                     : -std::numeric_limits<double>::infinity();
        if (p == peak)
            rec.power_db_rel = 0.0; // strongest MPC pinned at exactly 0 dB
        records.push_back(rec);
    }
    return records;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("empirical CDF needs at least one sample");
    std::sort(samples.begin(), samples.end());

    std::vector<std::pair<double, double>> cdf;
    const double n = double(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double p = double(i + 1) / n;
        if (!cdf.empty() && cdf.back().first == samples[i])
            cdf.back().second = p; // collapse ties onto the highest probability
        else
            cdf.emplace_back(samples[i], p);
    }
    return cdf;
}

} // namespace oamchan
