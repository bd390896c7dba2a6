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

#include "oamchan/synthesis.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace oamchan;
using namespace oamchan::testing;

namespace
{

mpc_params random_front_mpc(rng_stream &rng)
{
    mpc_params m;
    m.alpha = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
    m.tau_s = rng.uniform(0, 400e-9);
    m.theta_t_rad = rng.uniform(0.05, pi / 2 - 0.05);
    m.phi_t_rad = rng.uniform(0, two_pi);
    m.theta_r_rad = rng.uniform(0.05, pi / 2 - 0.05);
    m.phi_r_rad = rng.uniform(0, two_pi);
    return m;
}

} // namespace

TEST_CASE("zero gain yields the zero tensor")
{
    const link_config link = make_test_link(4, 11);
    mpc_params m;
    m.alpha = {0, 0};
    m.tau_s = 10e-9;
    m.theta_t_rad = m.theta_r_rad = 0.4;
    const ctf h = mpc_ctf(m, link);
    CHECK(tensor_energy(h.values) == 0.0);
}

TEST_CASE("boresight zero-delay path is frequency flat")
{
    const link_config link = make_test_link(4, 16);
    mpc_params m;
    m.alpha = {1.0, 0.5};
    m.tau_s = 0.0;
    m.theta_t_rad = 0.0; // both arrays lie in the z = 0 plane, so the zenith
    m.theta_r_rad = 0.0; // direction has zero projection on every element
    m.phi_t_rad = 0.0;
    m.phi_r_rad = 0.0;
    const ctf h = mpc_ctf(m, link);
    for (std::size_t ir = 0; ir < h.n_r(); ++ir)
        for (std::size_t it = 0; it < h.n_t(); ++it)
            for (std::size_t k = 1; k < h.n_f(); ++k)
                CHECK(std::abs(h.values(ir, it, k) - h.values(ir, it, 0)) < 1e-12);
}

TEST_CASE("back-hemisphere paths are nulled")
{
    const link_config link = make_test_link(4, 8);
    mpc_params m;
    m.alpha = {1, 0};
    m.tau_s = 5e-9;
    m.theta_t_rad = pi / 2 + 0.2; // behind the transmit antenna
    m.theta_r_rad = 0.5;
    const ctf h = mpc_ctf(m, link);
    CHECK(tensor_energy(h.values) == 0.0);

    m.theta_t_rad = 0.5;
    m.theta_r_rad = pi - 0.1; // behind the receive antenna
    const ctf h2 = mpc_ctf(m, link);
    CHECK(tensor_energy(h2.values) == 0.0);
}

TEST_CASE("synthesize_ctf empty, singleton and superposition")
{
    const link_config link = make_test_link(4, 8);
    CHECK(tensor_energy(synthesize_ctf({}, link).values) == 0.0);

    rng_stream rng(51, 0);
    const mpc_params m = random_front_mpc(rng);
    const ctf single = mpc_ctf(m, link);
    CHECK(tensor_max_abs_diff(synthesize_ctf({m}, link).values, single.values) == 0.0);

    const ctf doubled = synthesize_ctf({m, m}, link);
    arma::cx_cube twice = 2.0 * single.values;
    CHECK(tensor_max_abs_diff(doubled.values, twice) < 1e-15);
}

TEST_CASE("synthesis is linear in path-set union")
{
    const link_config link = make_test_link(8, 21);
    rng_stream rng(52, 0);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<mpc_params> a, b, both;
        for (int i = 0; i < 3; ++i)
            a.push_back(random_front_mpc(rng));
        for (int i = 0; i < 4; ++i)
            b.push_back(random_front_mpc(rng));
        both = a;
        both.insert(both.end(), b.begin(), b.end());

        const arma::cx_cube sum = synthesize_ctf(a, link).values + synthesize_ctf(b, link).values;
        const arma::cx_cube joint = synthesize_ctf(both, link).values;
        const double scale = std::sqrt(tensor_energy(joint) / double(joint.n_elem)) + 1e-30;
        CHECK(tensor_max_abs_diff(joint, sum) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("scaling every gain scales the tensor exactly")
{
    const link_config link = make_test_link(4, 8);
    rng_stream rng(53, 0);
    std::vector<mpc_params> mpcs;
    for (int i = 0; i < 5; ++i)
        mpcs.push_back(random_front_mpc(rng));

    const arma::cx_cube base = synthesize_ctf(mpcs, link).values;

    // power-of-two real scale: exact in every component
    std::vector<mpc_params> doubled = mpcs;
    for (auto &m : doubled)
        m.alpha *= 2.0;
    const arma::cx_cube got2 = synthesize_ctf(doubled, link).values;
    for (std::size_t i = 0; i < base.n_elem; ++i)
        CHECK(got2.memptr()[i] == base.memptr()[i] * 2.0);

    // generic complex scale: associativity round-off only
    const std::complex<double> z{0.75, -1.25};
    std::vector<mpc_params> scaled = mpcs;
    for (auto &m : scaled)
        m.alpha *= z;
    const arma::cx_cube got = synthesize_ctf(scaled, link).values;
    for (std::size_t i = 0; i < base.n_elem; ++i)
        CHECK(std::abs(got.memptr()[i] - base.memptr()[i] * z) <=
              1e-14 * std::max(1.0, std::abs(base.memptr()[i] * z)));
}

TEST_CASE("delay shift multiplies entry k by exp(-j 2 pi f_k dtau)")
{
    const link_config link = make_test_link(4, 16);
    rng_stream rng(54, 0);
    std::vector<mpc_params> mpcs;
    for (int i = 0; i < 4; ++i)
        mpcs.push_back(random_front_mpc(rng));

    const double dtau = 7.5e-9;
    std::vector<mpc_params> shifted = mpcs;
    for (auto &m : shifted)
        m.tau_s += dtau;

    const ctf base = synthesize_ctf(mpcs, link);
    const ctf got = synthesize_ctf(shifted, link);
    for (std::size_t k = 0; k < base.n_f(); ++k)
    {
        const double phase = -two_pi * link.grid.points_hz[k] * dtau;
        const std::complex<double> rot{std::cos(phase), std::sin(phase)};
        for (std::size_t ir = 0; ir < base.n_r(); ++ir)
            for (std::size_t it = 0; it < base.n_t(); ++it)
            {
                const std::complex<double> expect = base.values(ir, it, k) * rot;
                CHECK(std::abs(got.values(ir, it, k) - expect) <=
                      1e-10 * std::max(1.0, std::abs(expect)));
            }
    }
}

TEST_CASE("transmit mode phases step by the departure azimuth")
{
    // boresight path: element phases vanish, leaving the pure e^{j m phi} ladder
    const link_config link = make_test_link(8, 4);
    mpc_params m;
    m.alpha = {1, 0};
    m.tau_s = 0.0;
    m.theta_t_rad = 0.0;
    m.theta_r_rad = 0.0;
    m.phi_t_rad = 0.9;
    m.phi_r_rad = 0.3;
    const ctf h = mpc_ctf(m, link);
    for (std::size_t it = 0; it + 1 < h.n_t(); ++it)
    {
        const std::complex<double> ratio = h.values(0, it + 1, 0) / h.values(0, it, 0);
        CHECK(std::arg(ratio) == doctest::Approx(0.9).epsilon(1e-10));
    }
}

TEST_CASE("single-element mode-0 link reduces to the plain array response")
{
    const link_config link = make_test_link(1, 8, 28e9, 1e9, 3.0);
    rng_stream rng(55, 0);
    for (int trial = 0; trial < 10; ++trial)
    {
        const mpc_params m = random_front_mpc(rng);
        const ctf h = mpc_ctf(m, link);
        const direction dep = direction_vector(m.theta_t_rad, m.phi_t_rad);
        const direction arr = direction_vector(m.theta_r_rad, m.phi_r_rad);
        for (std::size_t k = 0; k < h.n_f(); ++k)
        {
            const double f = link.grid.points_hz[k];
            const std::complex<double> c_r =
                steering_gain(link.rx_geometry.element_positions_m[0], arr, f);
            const std::complex<double> c_t =
                steering_gain(link.tx_geometry.element_positions_m[0], dep, f);
            const double ph = -two_pi * f * m.tau_s;
            const std::complex<double> expect =
                m.alpha * c_r * std::conj(c_t) * std::complex<double>{std::cos(ph), std::sin(ph)};
            CHECK(std::abs(h.values(0, 0, k) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("link validation catches mismatched mode sets")
{
    link_config link = make_test_link(4, 8);
    link.tx_modes = mode_index_map(8);
    CHECK_THROWS_AS(validate(link), std::invalid_argument);
}
