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

#ifndef oamchan_sage_H
#define oamchan_sage_H

#include "oamchan/core.hpp"
#include "oamchan/synthesis.hpp"

namespace oamchan
{

// Space-alternating EM extraction of MPC parameters from a CTF, one path at a
// time against the synthesis signal model. Grids define both the search
// resolution and the unit in which convergence and recovery are measured.
struct sage_config
{
    std::size_t n_paths = 1;
    std::size_t max_iter = 20;

    double delay_grid_s = 5e-9;
    double angle_grid_rad = pi / 60.0; // 3 degrees

    // maximum relative parameter change per sweep, in grid-cell units
    double converge_tol = 1e-2;
    // parabolic refinement passes after each grid argmax
    std::size_t refine_steps = 2;

    // delay search window; delay_max_s <= 0 selects one grid ambiguity period 1/df
    double delay_min_s = 0.0;
    double delay_max_s = 0.0;

    // coarse grids for the successive-cancellation initialization
    double coarse_angle_grid_rad = pi / 9.0; // 20 degrees
    double coarse_delay_grid_s = 0.0;        // <= 0 selects 2x delay_grid_s

    // when the residual stays above this fraction of the CTF energy after
    // convergence, the weakest path is re-seeded from the unexplained residual
    // and the sweeps rerun (kept only if it helps), up to rescue_rounds times
    double rescue_threshold = 1e-3;
    std::size_t rescue_rounds = 2;
};

struct sage_result
{
    std::vector<mpc_params> mpcs;
    double residual_power = 0.0; // fraction of CTF energy left unexplained
    std::size_t iterations_run = 0;
    bool converged = false;
};

// Successive interference cancellation: paths are picked one at a time by
// maximizing the matched-filter objective |<residual, s>|^2 / ||s||^2 over a
// coarse joint grid plus coordinate refinement, each found path subtracted
// before the next. Rejects an all-zero CTF.
std::vector<mpc_params> sage_initialize(const ctf &h, const link_config &link,
                                        const sage_config &config);

// Admissible data for one path: the CTF minus every other path's model.
ctf sage_e_step(const ctf &h, const std::vector<mpc_params> &mpcs, std::size_t path_index,
                const link_config &link);

// Coordinate-wise maximization over delay, departure angles, arrival angles,
// then the closed-form gain. The current parameter point always stays in the
// candidate set, so the objective never decreases.
mpc_params sage_m_step(const ctf &residual, const mpc_params &current, const link_config &link,
                       const sage_config &config);

sage_result sage_estimate(const ctf &h, const link_config &link, const sage_config &config);

// Variant that skips initialization and starts from the supplied paths.
sage_result sage_estimate(const ctf &h, const link_config &link, const sage_config &config,
                          std::vector<mpc_params> initial);

} // namespace oamchan

#endif
