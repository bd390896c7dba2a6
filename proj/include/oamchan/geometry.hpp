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

#ifndef oamchan_geometry_H
#define oamchan_geometry_H

#include "oamchan/core.hpp"

#include <utility>

namespace oamchan
{

// Propagation direction as (elevation, azimuth) plus the matching unit vector
// omega = [cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)].
struct direction
{
    double theta_rad = 0.0;
    double phi_rad = 0.0;
    arma::vec3 omega{arma::fill::zeros};
};

// Angles are wrapped/normalized into theta in [0, pi], phi in [0, 2*pi).
direction direction_vector(double theta_rad, double phi_rad);

// Uniform circular array: anchor element on the local +x axis, elements 2*pi/N
// apart counterclockwise in the local x-y plane, then rotated and translated
// into the global frame.
struct array_geometry
{
    std::size_t n_elements = 0;
    double radius_m = 0.0;
    arma::vec3 center_m{arma::fill::zeros};
    arma::vec3 rotation_rad{arma::fill::zeros}; // [phi_x, phi_y, phi_z]
    std::vector<arma::vec3> element_positions_m;
};

array_geometry uca_positions(std::size_t n_elements, double radius_m, const arma::vec3 &center_m,
                             const arma::vec3 &rotation_rad);

// Local -> global rotation R = Rz(phi_z) * Ry(phi_y) * Rx(phi_x), right-hand rule.
arma::mat33 rotation_matrix(const arma::vec3 &rotation_rad);

// Array-location phase exp(j*2*pi*(f/c) * p . omega); unit modulus for finite inputs.
std::complex<double> steering_gain(const arma::vec3 &p_m, const direction &dir, double f_hz);

// Express a global direction in the rotated antenna's local frame
// (applies the inverse of rotation_matrix and converts back to angles).
std::pair<double, double> rotate_direction(double theta_rad, double phi_rad,
                                           const arma::vec3 &rotation_rad);

// OAM mode pattern: exp(j*m*phi) on the front hemisphere (theta <= pi/2 in the
// antenna's local frame), exactly zero behind it.
std::complex<double> oam_mode_gain(int mode, double theta_local_rad, double phi_local_rad);

} // namespace oamchan

#endif
