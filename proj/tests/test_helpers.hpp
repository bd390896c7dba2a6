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

#ifndef oamchan_test_helpers_H
#define oamchan_test_helpers_H

#include "oamchan/synthesis.hpp"

namespace oamchan::testing
{

// Default measurement-style link: 55 mm UCAs facing along +x at the given
// distance, unrotated, sweeping `n_f` points of `bw` around `center`.
inline link_config make_test_link(std::size_t n_elements = 8, std::size_t n_f = 51,
                                  double center_hz = 5.8e9, double bw_hz = 100e6,
                                  double distance_m = 9.6)
{
    link_config link;
    link.tx_geometry = uca_positions(n_elements, 0.055, {0, 0, 0}, {0, 0, 0});
    link.rx_geometry = uca_positions(n_elements, 0.055, {distance_m, 0, 0}, {0, 0, 0});
    link.tx_modes = mode_index_map(n_elements);
    link.rx_modes = mode_index_map(n_elements);
    link.grid = make_frequency_grid(center_hz, bw_hz, n_f);
    return link;
}

inline double tensor_max_abs_diff(const arma::cx_cube &a, const arma::cx_cube &b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.n_elem; ++i)
        m = std::max(m, std::abs(a.memptr()[i] - b.memptr()[i]));
    return m;
}

inline double tensor_energy(const arma::cx_cube &c)
{
    double e = 0.0;
    for (std::size_t i = 0; i < c.n_elem; ++i)
        e += std::norm(c.memptr()[i]);
    return e;
}

} // namespace oamchan::testing

#endif
