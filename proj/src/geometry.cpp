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

#include "oamchan/geometry.hpp"

#include <cmath>

namespace oamchan
{

direction direction_vector(double theta_rad, double phi_rad)
{
    if (!std::isfinite(theta_rad) || !std::isfinite(phi_rad))
        throw std::invalid_argument("direction angles must be finite");

    // Fold elevation into [0, pi]; a reflection past a pole flips the azimuth.
    double theta = std::fmod(theta_rad, two_pi);
    if (theta < 0.0)
        theta += two_pi;
    double phi = phi_rad;
    if (theta > pi)
    {
        theta = two_pi - theta;
        phi += pi;
    }

    direction d;
    d.theta_rad = theta;
    d.phi_rad = wrap_azimuth(phi);
    const double st = std::sin(d.theta_rad);
    d.omega = {std::cos(d.phi_rad) * st, std::sin(d.phi_rad) * st, std::cos(d.theta_rad)};
    return d;
}

arma::mat33 rotation_matrix(const arma::vec3 &rotation_rad)
{
    const double cx = std::cos(rotation_rad[0]), sx = std::sin(rotation_rad[0]);
    const double cy = std::cos(rotation_rad[1]), sy = std::sin(rotation_rad[1]);
    const double cz = std::cos(rotation_rad[2]), sz = std::sin(rotation_rad[2]);

    arma::mat33 rx = {{1, 0, 0}, {0, cx, -sx}, {0, sx, cx}};
    arma::mat33 ry = {{cy, 0, sy}, {0, 1, 0}, {-sy, 0, cy}};
    arma::mat33 rz = {{cz, -sz, 0}, {sz, cz, 0}, {0, 0, 1}};
    return rz * ry * rx;
}

array_geometry uca_positions(std::size_t n_elements, double radius_m, const arma::vec3 &center_m,
                             const arma::vec3 &rotation_rad)
{
    if (n_elements == 0)
        throw std::invalid_argument("UCA needs at least one element");
    if (!(radius_m >= 0.0))
        throw std::invalid_argument("UCA radius cannot be negative");

    array_geometry geo;
    geo.n_elements = n_elements;
    geo.radius_m = radius_m;
    geo.center_m = center_m;
    geo.rotation_rad = rotation_rad;
    geo.element_positions_m.resize(n_elements);

    const arma::mat33 rot = rotation_matrix(rotation_rad);
    for (std::size_t n = 0; n < n_elements; ++n)
    {
        const double gamma = two_pi * double(n) / double(n_elements);
        const arma::vec3 local = {radius_m * std::cos(gamma), radius_m * std::sin(gamma), 0.0};
        geo.element_positions_m[n] = center_m + rot * local;
    }
    return geo;
}

std::complex<double> steering_gain(const arma::vec3 &p_m, const direction &dir, double f_hz)
{
    if (!p_m.is_finite() || !std::isfinite(f_hz))
        throw std::invalid_argument("steering gain inputs must be finite");
    const double proj = arma::dot(p_m, dir.omega);
    const double phase = two_pi * f_hz / speed_of_light_mps * proj;
    return {std::cos(phase), std::sin(phase)};
}

std::pair<double, double> rotate_direction(double theta_rad, double phi_rad,
                                           const arma::vec3 &rotation_rad)
{
    if (rotation_rad[0] == 0.0 && rotation_rad[1] == 0.0 && rotation_rad[2] == 0.0)
    {
        // identity frame: skip the trig round-trip so canonical angles pass
        // through unchanged (and the pole keeps its nominal azimuth)
        const direction d = direction_vector(theta_rad, phi_rad);
        return {d.theta_rad, d.phi_rad};
    }

    const direction global = direction_vector(theta_rad, phi_rad);
    const arma::mat33 rot = rotation_matrix(rotation_rad);
    const arma::vec3 local = rot.t() * global.omega; // inverse of an orthonormal rotation

    double cz = local[2];
    if (cz > 1.0)
        cz = 1.0;
    if (cz < -1.0)
        cz = -1.0;
    const double theta_local = std::acos(cz);
    double phi_local = 0.0;
    if (std::abs(local[0]) > 0.0 || std::abs(local[1]) > 0.0)
        phi_local = wrap_azimuth(std::atan2(local[1], local[0]));
    return {theta_local, phi_local};
}

std::complex<double> oam_mode_gain(int mode, double theta_local_rad, double phi_local_rad)
{
    if (!std::isfinite(theta_local_rad) || !std::isfinite(phi_local_rad))
        throw std::invalid_argument("mode gain angles must be finite");
    if (theta_local_rad > pi / 2.0 || theta_local_rad < 0.0)
        return {0.0, 0.0}; // back hemisphere
    const double phase = double(mode) * phi_local_rad;
    return {std::cos(phase), std::sin(phase)};
}

} // namespace oamchan
