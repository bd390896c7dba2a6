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

#ifndef oamchan_io_H
#define oamchan_io_H

#include "oamchan/generator.hpp"
#include "oamchan/sage.hpp"
#include "oamchan/synthesis.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace oamchan
{

// Locale-independent, 17 significant digits: enough to reproduce any double
// bit-exactly on read-back.
std::string format_double(double v);
double parse_double(const std::string &text, const std::string &what);

// CTF-CSV v1: '#key=value' header lines (format, version, n_r, n_t, n_f,
// center_hz, bandwidth_hz, tx_modes, rx_modes, seed, columns) followed by
// data rows 'n_r,n_t,k,f_hz,re,im' in ascending (n_r, n_t, k) order.
void write_ctf(const std::string &path, const ctf &h, std::uint64_t seed = 0);
ctf read_ctf(const std::string &path, std::uint64_t *seed_out = nullptr);

// MPC-CSV v1: rows 'alpha_re,alpha_im,tau_s,theta_t,phi_t,theta_r,phi_r'.
void write_mpcs(const std::string &path, const std::vector<mpc_params> &mpcs);
std::vector<mpc_params> read_mpcs(const std::string &path);

// Fully resolved run description; `resolved` echoes every effective value,
// including defaulted ones.
struct run_config
{
    scenario_params scenario;
    link_config link;
    double distance_m = 0.0;
    std::uint64_t seed = 0;
    std::size_t ensemble = 1;
    sage_config sage;
    nlohmann::ordered_json resolved;
};

// Loads and validates a JSON run config. The seed is mandatory unless an
// override (CLI flag or environment) supplies one.
run_config load_config(const std::string &path,
                       std::optional<std::uint64_t> seed_override = std::nullopt);

scenario_params scenario_from_json(const nlohmann::ordered_json &node, const std::string &context);
nlohmann::ordered_json scenario_to_json(const scenario_params &params);

} // namespace oamchan

#endif
