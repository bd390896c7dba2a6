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

#include <doctest.h>

using namespace oamchan;

namespace
{
bool vec_close(const arma::vec3 &a, const arma::vec3 &b, double tol)
{
    return arma::norm(a - b) <= tol;
}
} // namespace

TEST_CASE("direction_vector cardinal axes")
{
    CHECK(vec_close(direction_vector(0.0, 2.7).omega, {0, 0, 1}, 1e-15));
    CHECK(vec_close(direction_vector(pi / 2, 0.0).omega, {1, 0, 0}, 1e-15));
    CHECK(vec_close(direction_vector(pi / 2, pi / 2).omega, {0, 1, 0}, 1e-15));
}

TEST_CASE("direction_vector always yields a unit vector")
{
    rng_stream rng(21, 0);
    for (int i = 0; i < 200; ++i)
    {
        const direction d = rng.uniform() < 0.5
                                ? direction_vector(rng.uniform(-10, 10), rng.uniform(-10, 10))
                                : direction_vector(rng.uniform(0, pi), rng.uniform(0, two_pi));
        CHECK(std::abs(arma::norm(d.omega) - 1.0) <= 1e-12);
        CHECK(d.theta_rad >= 0.0);
        CHECK(d.theta_rad <= pi);
        CHECK(d.phi_rad >= 0.0);
        CHECK(d.phi_rad < two_pi);
    }
}

TEST_CASE("uca element placement")
{
    const array_geometry g = uca_positions(8, 0.055, {0, 0, 0}, {0, 0, 0});
    REQUIRE(g.element_positions_m.size() == 8);
    CHECK(vec_close(g.element_positions_m[0], {0.055, 0, 0}, 1e-15));

    const array_geometry q = uca_positions(4, 1.0, {0, 0, 0}, {0, 0, 0});
    CHECK(vec_close(q.element_positions_m[0], {1, 0, 0}, 1e-12));
    CHECK(vec_close(q.element_positions_m[1], {0, 1, 0}, 1e-12));
    CHECK(vec_close(q.element_positions_m[2], {-1, 0, 0}, 1e-12));
    CHECK(vec_close(q.element_positions_m[3], {0, -1, 0}, 1e-12));
}

TEST_CASE("uca elements sit on the circle and rotations are isometries")
{
    rng_stream rng(22, 0);
    for (int trial = 0; trial < 20; ++trial)
    {
        const double radius = rng.uniform(0.01, 2.0);
        const arma::vec3 center = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const arma::vec3 rot = {rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(-pi, pi)};
        const array_geometry a = uca_positions(8, radius, center, {0, 0, 0});
        const array_geometry b = uca_positions(8, radius, center, rot);

        for (std::size_t n = 0; n < 8; ++n)
        {
            const double dist = arma::norm(b.element_positions_m[n] - center);
            CHECK(std::abs(dist - radius) <= 1e-12 * std::max(1.0, radius));
        }
        for (std::size_t n = 1; n < 8; ++n)
        {
            const double da = arma::norm(a.element_positions_m[n] - a.element_positions_m[n - 1]);
            const double db = arma::norm(b.element_positions_m[n] - b.element_positions_m[n - 1]);
            CHECK(std::abs(da - db) <= 1e-12 * std::max(1.0, da));
        }
    }
}

TEST_CASE("steering gain special projections")
{
    const direction x_axis = direction_vector(pi / 2, 0.0);
    const double f = 5.8e9;
    const double lambda = speed_of_light_mps / f;

    // p perpendicular to the direction
    CHECK(std::abs(steering_gain({0, 0, 1}, x_axis, f) - std::complex<double>{1, 0}) < 1e-12);
    // full wavelength wraps to 2*pi
    CHECK(std::abs(steering_gain({lambda, 0, 0}, x_axis, f) - std::complex<double>{1, 0}) < 1e-9);
    // half wavelength flips the sign
    CHECK(std::abs(steering_gain({lambda / 2, 0, 0}, x_axis, f) - std::complex<double>{-1, 0}) <
          1e-9);
}

TEST_CASE("steering gain is unit modulus")
{
    rng_stream rng(23, 0);
    for (int i = 0; i < 100; ++i)
    {
        const direction d = direction_vector(rng.uniform(0, pi), rng.uniform(0, two_pi));
        const arma::vec3 p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        CHECK(std::abs(std::abs(steering_gain(p, d, 28e9)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("rotate_direction identity and z-rotation")
{
    const auto [th0, ph0] = rotate_direction(0.7, 1.3, {0, 0, 0});
    CHECK(th0 == 0.7);
    CHECK(ph0 == 1.3);

    // a +z rotation of the antenna by pi/2 shifts local azimuth down by pi/2
    const auto [th1, ph1] = rotate_direction(pi / 2, pi / 2, {0, 0, pi / 2});
    CHECK(th1 == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(ph1 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rotate_direction is an isometry and invertible")
{
    rng_stream rng(24, 0);
    for (int i = 0; i < 100; ++i)
    {
        const double theta = rng.uniform(0, pi);
        const double phi = rng.uniform(0, two_pi);
        const arma::vec3 rot = {rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(-pi, pi)};

        const auto [th_loc, ph_loc] = rotate_direction(theta, phi, rot);
        const direction local = direction_vector(th_loc, ph_loc);
        CHECK(std::abs(arma::norm(local.omega) - 1.0) <= 1e-12);

        // mapping the local vector back through the rotation recovers the global one
        const direction global = direction_vector(theta, phi);
        const arma::vec3 recovered = rotation_matrix(rot) * local.omega;
        CHECK(arma::norm(recovered - global.omega) <= 1e-10);
    }

    // single-axis rotations invert by negating the angle
    for (int axis = 0; axis < 3; ++axis)
    {
        arma::vec3 rot{arma::fill::zeros}, inv{arma::fill::zeros};
        rot[axis] = 0.9;
        inv[axis] = -0.9;
        const auto [th1, ph1] = rotate_direction(1.1, 2.2, rot);
        const auto [th2, ph2] = rotate_direction(th1, ph1, inv);
        CHECK(th2 == doctest::Approx(1.1).epsilon(1e-10));
        CHECK(ph2 == doctest::Approx(2.2).epsilon(1e-10));
    }
}

TEST_CASE("oam mode gain phase and hemisphere gating")
{
    CHECK(std::abs(oam_mode_gain(0, 0.3, 1.2) - std::complex<double>{1, 0}) < 1e-15);
    CHECK(std::abs(oam_mode_gain(2, 0.3, pi / 2) - std::complex<double>{-1, 0}) < 1e-12);
    CHECK(oam_mode_gain(5, 2.0, 0.1) == std::complex<double>{0, 0});

    rng_stream rng(25, 0);
    for (int i = 0; i < 100; ++i)
    {
        const int m = int(rng.next_below(9)) - 4;
        const double phi = rng.uniform(0, two_pi);
        const double front = rng.uniform(0, pi / 2);
        const double back = pi / 2 + rng.uniform(1e-6, pi / 2);
        CHECK(std::abs(std::abs(oam_mode_gain(m, front, phi)) - 1.0) <= 1e-12);
        CHECK(oam_mode_gain(m, back, phi) == std::complex<double>{0, 0});
    }
}
