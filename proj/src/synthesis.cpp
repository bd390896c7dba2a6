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

#include <cmath>

namespace oamchan
{

void validate(const link_config &link)
{
    if (link.tx_modes.n_elements != link.tx_geometry.n_elements ||
        link.tx_modes.modes.size() != link.tx_geometry.n_elements)
        throw std::invalid_argument("tx mode set does not match tx geometry element count");
    if (link.rx_modes.n_elements != link.rx_geometry.n_elements ||
        link.rx_modes.modes.size() != link.rx_geometry.n_elements)
        throw std::invalid_argument("rx mode set does not match rx geometry element count");
    if (link.grid.n_points() == 0)
        throw std::invalid_argument("link frequency grid is empty");
    if (link.tx_geometry.element_positions_m.size() != link.tx_geometry.n_elements ||
        link.rx_geometry.element_positions_m.size() != link.rx_geometry.n_elements)
        throw std::invalid_argument("array geometry is missing element positions");
}

ctf make_zero_ctf(const link_config &link)
{
    ctf h;
    h.grid = link.grid;
    h.tx_modes = link.tx_modes.modes;
    h.rx_modes = link.rx_modes.modes;
    h.values.zeros(link.rx_modes.n_elements, link.tx_modes.n_elements, link.grid.n_points());
    return h;
}

namespace detail
{

namespace
{

// side = +1 builds c * conj(g) (receive), side = -1 builds conj(c) * g (transmit)
arma::cx_mat side_factor(const array_geometry &geo, const oam_mode_set &modes,
                         const frequency_grid &grid, double theta_rad, double phi_rad,
                         int phase_sign)
{
    const std::size_t n_el = geo.n_elements;
    const std::size_t n_f = grid.n_points();
    arma::cx_mat out(n_el, n_f, arma::fill::zeros);

    const direction global = direction_vector(theta_rad, phi_rad);
    const auto [theta_loc, phi_loc] = rotate_direction(theta_rad, phi_rad, geo.rotation_rad);

    for (std::size_t n = 0; n < n_el; ++n)
    {
        std::complex<double> g = oam_mode_gain(modes.modes[n], theta_loc, phi_loc);
        if (g == std::complex<double>{0.0, 0.0})
            continue; // back hemisphere: whole row stays zero
        if (phase_sign > 0)
            g = std::conj(g); // receive pattern enters conjugated

        const double proj = arma::dot(geo.element_positions_m[n], global.omega);
        const double rate = double(phase_sign) * two_pi * proj / speed_of_light_mps;
        for (std::size_t k = 0; k < n_f; ++k)
        {
            const double phase = rate * grid.points_hz[k];
            out(n, k) = g * std::complex<double>{std::cos(phase), std::sin(phase)};
        }
    }
    return out;
}

} // namespace

arma::cx_mat tx_side_factor(const link_config &link, double theta_t_rad, double phi_t_rad)
{
    return side_factor(link.tx_geometry, link.tx_modes, link.grid, theta_t_rad, phi_t_rad, -1);
}

arma::cx_mat rx_side_factor(const link_config &link, double theta_r_rad, double phi_r_rad)
{
    return side_factor(link.rx_geometry, link.rx_modes, link.grid, theta_r_rad, phi_r_rad, +1);
}

arma::cx_vec delay_phasor(const frequency_grid &grid, double tau_s)
{
    const std::size_t n_f = grid.n_points();
    arma::cx_vec d(n_f);
    for (std::size_t k = 0; k < n_f; ++k)
    {
        const double phase = -two_pi * grid.points_hz[k] * tau_s;
        d[k] = {std::cos(phase), std::sin(phase)};
    }
    return d;
}

} // namespace detail

ctf mpc_ctf(const mpc_params &mpc, const link_config &link)
{
    validate(mpc);
    validate(link);

    ctf h = make_zero_ctf(link);
    if (mpc.alpha == std::complex<double>{0.0, 0.0})
        return h;

    const arma::cx_mat tx = detail::tx_side_factor(link, mpc.theta_t_rad, mpc.phi_t_rad);
    const arma::cx_mat rx = detail::rx_side_factor(link, mpc.theta_r_rad, mpc.phi_r_rad);
    const arma::cx_vec del = detail::delay_phasor(link.grid, mpc.tau_s);

    const std::size_t n_r = h.n_r(), n_t = h.n_t(), n_f = h.n_f();
    for (std::size_t k = 0; k < n_f; ++k)
    {
        for (std::size_t it = 0; it < n_t; ++it)
        {
            const std::complex<double> col = tx(it, k) * del[k];
            for (std::size_t ir = 0; ir < n_r; ++ir)
                h.values(ir, it, k) = col * rx(ir, k) * mpc.alpha; // gain applied last
        }
    }
    return h;
}

ctf synthesize_ctf(const std::vector<mpc_params> &mpcs, const link_config &link)
{
    validate(link);
    ctf sum = make_zero_ctf(link);
    arma::cube comp_re(arma::size(sum.values), arma::fill::zeros);
    arma::cube comp_im(arma::size(sum.values), arma::fill::zeros);

    const std::size_t n_entries = sum.values.n_elem;
    for (const mpc_params &mpc : mpcs) // ascending path order, compensated accumulation
    {
        const ctf part = mpc_ctf(mpc, link);
        std::complex<double> *acc = sum.values.memptr();
        const std::complex<double> *add = part.values.memptr();
        double *cre = comp_re.memptr();
        double *cim = comp_im.memptr();
        for (std::size_t i = 0; i < n_entries; ++i)
        {
            const double yr = add[i].real() - cre[i];
            const double yi = add[i].imag() - cim[i];
            const double tr = acc[i].real() + yr;
            const double ti = acc[i].imag() + yi;
            cre[i] = (tr - acc[i].real()) - yr;
            cim[i] = (ti - acc[i].imag()) - yi;
            acc[i] = {tr, ti};
        }
    }
    return sum;
}

} // namespace oamchan
