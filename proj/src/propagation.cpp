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

#include "oamchan/propagation.hpp"

#include <cmath>

namespace oamchan
{

namespace
{

constexpr int bessel_max_order = 64;
constexpr double bessel_series_cutoff = 12.0;

// Ascending power series, adequate to ~1e-12 absolute for 0 <= x <= 12.
double bessel_j_series(int n, double x)
{
    const double half_x = 0.5 * x;

    // leading term (x/2)^n / n!
    double term = 1.0;
    for (int k = 1; k <= n; ++k)
        term *= half_x / double(k);

    const double neg_q = -half_x * half_x;
    double sum = term;
    for (int k = 1; k <= 400; ++k)
    {
        term *= neg_q / (double(k) * double(n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300))
            break;
    }
    return sum;
}

// Miller backward recurrence normalized by J_0(x) + 2*sum_{k>=1} J_2k(x) = 1,
// stable for x above the series cutoff. The start index sits far enough above
// the turning point that the contaminating solution decays below round-off.
double bessel_j_miller(int n, double x)
{
    const int start =
        std::max(n, int(std::ceil(x))) + 48 + int(6.0 * std::sqrt(std::max(double(n), x)));

    double fkp1 = 0.0;   // f_{k+1}
    double fk = 1e-300;  // f_k, arbitrary tiny seed
    double target = 0.0; // unnormalized f_n
    double norm = 0.0;   // running f_0 + 2*sum f_{2k}

    for (int k = start; k >= 1; --k)
    {
        const double fkm1 = (2.0 * double(k) / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;

        if (k - 1 == n)
            target = fk;
        if ((k - 1) % 2 == 0)
            norm += (k - 1 == 0) ? fk : 2.0 * fk;

        if (std::abs(fk) > 1e250)
        {
            fk *= 1e-250;
            fkp1 *= 1e-250;
            target *= 1e-250;
            norm *= 1e-250;
        }
    }
    return target / norm;
}

} // namespace

double bessel_j(int order, double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("bessel_j argument must be finite");
    if (order > bessel_max_order || order < -bessel_max_order)
        throw std::invalid_argument("bessel_j order out of supported range");

    double sign = 1.0;
    int n = order;
    if (n < 0)
    {
        n = -n;
        if (n % 2 == 1)
            sign = -sign;
    }
    double ax = x;
    if (ax < 0.0)
    {
        ax = -ax;
        if (n % 2 == 1)
            sign = -sign;
    }

    if (ax == 0.0)
        return (n == 0) ? 1.0 : 0.0;

    const double v = (ax <= bessel_series_cutoff) ? bessel_j_series(n, ax) : bessel_j_miller(n, ax);
    return sign * v;
}

path_loss_fit indoor_los_fit()
{
    return {"indoor_los", 8.692, 16.69, 262.9, 17.3, 20.0};
}

path_loss_fit through_wall_fit()
{
    return {"through_wall", 18.58, 6.064, 47.65, 17.3, 24.9};
}

path_loss_fit outdoor_los_fit()
{
    return {"outdoor_los", 18.65, 10.16, 418.1, 17.3, 20.0};
}

double path_loss_db(const path_loss_fit &fit, int m_t, int m_r, double f_ghz, double d_m,
                    double r_t_m, double r_r_m)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("path loss distance must be positive");
    if (!(f_ghz > 0.0))
        throw std::invalid_argument("path loss frequency must be positive");
    if (!(fit.d_exp > 0.0))
        throw std::invalid_argument("path loss fit has non-positive distance exponent");
    if (!std::isfinite(r_t_m) || !std::isfinite(r_r_m) || r_t_m < 0.0 || r_r_m < 0.0)
        throw std::invalid_argument("UCA radii must be finite and non-negative");

    // The transmit mode's beam gain is sampled at the receiver aperture (radius R_r)
    // and the receive mode's at the transmitter aperture (radius R_t).
    const double arg_t = fit.c_scale * f_ghz * r_r_m / std::sqrt(r_r_m * r_r_m + d_m * d_m);
    const double arg_r = fit.c_scale * f_ghz * r_t_m / std::sqrt(r_t_m * r_t_m + d_m * d_m);

    const double gain_t = std::abs(bessel_j(m_t, arg_t));
    const double gain_r = std::abs(bessel_j(m_r, arg_r));
    if (gain_t < 1e-300 || gain_r < 1e-300)
        throw null_depth_error("mode pair (" + std::to_string(m_t) + "," + std::to_string(m_r) +
                               ") sits in a Bessel null at d=" + std::to_string(d_m) + " m");

    return fit.a_db + fit.b * std::log10(gain_t * gain_r) + fit.d_exp * std::log10(d_m) +
           fit.e_freq * std::log10(f_ghz);
}

std::complex<double> theoretical_field(int mode, double r_t_m, double f_hz, double rho_m,
                                       double theta_rad, double phi_rad, std::size_t n_elements)
{
    if (!(rho_m > 0.0))
        throw std::invalid_argument("field evaluation point must have rho > 0");
    if (!(f_hz > 0.0))
        throw std::invalid_argument("field frequency must be positive");
    if (n_elements == 0)
        throw std::invalid_argument("field needs at least one UCA element");

    // j^m, exact by quadrant
    static const std::complex<double> quadrant[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> jm = quadrant[((mode % 4) + 4) % 4];

    const double k_wave = two_pi * f_hz / speed_of_light_mps;
    const double radial = bessel_j(mode, k_wave * r_t_m * std::sin(theta_rad));
    const double amp = std::sqrt(double(n_elements)) * speed_of_light_mps / (4.0 * pi * f_hz);

    const double prop_phase = -k_wave * rho_m;
    const std::complex<double> spherical{std::cos(prop_phase) / rho_m,
                                         std::sin(prop_phase) / rho_m};
    const double helical_phase = double(mode) * phi_rad;
    const std::complex<double> helical{std::cos(helical_phase), std::sin(helical_phase)};

    return amp * jm * radial * spherical * helical;
}

double sample_shadowing_db(const shadowing_model &model, rng_stream &rng)
{
    if (!(model.sigma_psi_db >= 0.0))
        throw std::invalid_argument("shadowing std must be non-negative");
    return model.sigma_psi_db * rng.normal();
}

} // namespace oamchan
