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

#ifndef oamchan_propagation_H
#define oamchan_propagation_H

#include "oamchan/core.hpp"

#include <string>

namespace oamchan
{

// Bessel function of the first kind, integer order. Ascending power series for
// small arguments, Miller backward recurrence with even-sum normalization for
// large ones; negative orders and arguments map through J_{-m}(x) = (-1)^m J_m(x)
// and J_m(-x) = (-1)^m J_m(x). Absolute accuracy 1e-10 for |x| <= 500, |order| <= 64.
double bessel_j(int order, double x);

// Fitted path-loss law PL = A + B*lg(|J_mt(C f Rr/sqrt(Rr^2+d^2))| * |J_mr(C f Rt/sqrt(Rt^2+d^2))|)
//                          + D*lg(d) + E*lg(f), f in GHz, d in meters, lg = log10.
struct path_loss_fit
{
    std::string scenario_name;
    double a_db = 0.0;    // A, intercept in dB
    double b = 0.0;       // B, signed multiplier of the Bessel beam-gain term
    double c_scale = 0.0; // C, Bessel argument scale
    double d_exp = 0.0;   // D, distance-decade slope in dB
    double e_freq = 0.0;  // E, frequency-decade slope in dB
};

// Fits measured at 5.8/28 GHz with 55 mm UCAs; coefficients are stored exactly
// as fitted (note the positive sign on the B term).
path_loss_fit indoor_los_fit();
path_loss_fit through_wall_fit();
path_loss_fit outdoor_los_fit();

// Raised when a requested mode pair sits in a Bessel null (loss is unbounded).
class null_depth_error : public std::runtime_error
{
  public:
    explicit null_depth_error(const std::string &what) : std::runtime_error(what) {}
};

double path_loss_db(const path_loss_fit &fit, int m_t, int m_r, double f_ghz, double d_m,
                    double r_t_m, double r_r_m);

// Far-field of one OAM mode radiated by an N-element UCA of radius r_t at the
// point (rho, theta, phi):
//   sqrt(N) * j^m * (c / 4 pi f) * J_m((2 pi f / c) r_t sin(theta)) * (e^{-j 2 pi f rho / c} / rho) * e^{j m phi}
std::complex<double> theoretical_field(int mode, double r_t_m, double f_hz, double rho_m,
                                       double theta_rad, double phi_rad, std::size_t n_elements);

struct shadowing_model
{
    double sigma_psi_db = 0.0;
};

// One zero-mean normal draw with std sigma_psi, in dB.
double sample_shadowing_db(const shadowing_model &model, rng_stream &rng);

inline double db_to_power(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }
inline double power_to_db(double p) { return 10.0 * std::log10(p); }

} // namespace oamchan

#endif
