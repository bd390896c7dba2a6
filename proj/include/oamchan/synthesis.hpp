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

#ifndef oamchan_synthesis_H
#define oamchan_synthesis_H

#include "oamchan/core.hpp"
#include "oamchan/geometry.hpp"

namespace oamchan
{

// Everything needed to evaluate the deterministic CTF model: the two UCAs,
// their mode sets and the sampled frequency band.
struct link_config
{
    array_geometry tx_geometry;
    array_geometry rx_geometry;
    oam_mode_set tx_modes;
    oam_mode_set rx_modes;
    frequency_grid grid;
};

void validate(const link_config &link);

// CTF of a single multipath component:
//   H(n_r, n_t, k) = alpha * c_r(n_r, f_k) * conj(c_t(n_t, f_k))
//                          * g_t(m_nt) * conj(g_r(m_nr)) * exp(-j 2 pi f_k tau)
// c terms are array-location phases at the per-mode element coordinates, g terms
// the OAM mode patterns evaluated in each antenna's local (rotated) frame.
ctf mpc_ctf(const mpc_params &mpc, const link_config &link);

// Superposition over a path list, accumulated in ascending path order with
// compensated summation. An empty list yields the zero tensor.
ctf synthesize_ctf(const std::vector<mpc_params> &mpcs, const link_config &link);

ctf make_zero_ctf(const link_config &link);

namespace detail
{

// One MPC's tensor factorizes as entry(n_r, n_t, k) = alpha * rx(n_r, k) * tx(n_t, k) * d(k).
// tx folds conj(c_t) with g_t, rx folds c_r with conj(g_r); d is the delay phasor.
// Rows are zero whenever the direction falls behind the antenna's local hemisphere.
arma::cx_mat tx_side_factor(const link_config &link, double theta_t_rad, double phi_t_rad);
arma::cx_mat rx_side_factor(const link_config &link, double theta_r_rad, double phi_r_rad);
arma::cx_vec delay_phasor(const frequency_grid &grid, double tau_s);

} // namespace detail

} // namespace oamchan

#endif
