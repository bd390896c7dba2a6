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

#include "oamchan/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace oamchan
{

namespace
{

constexpr int ctf_csv_version = 1;
constexpr int mpc_csv_version = 1;

std::vector<std::string> split(const std::string &line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;)
    {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos)
        {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_int(const std::string &text, const std::string &what)
{
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed integer for " + what + ": '" + text + "'");
    return v;
}

std::string join_modes(const std::vector<int> &modes)
{
    std::string s;
    for (std::size_t i = 0; i < modes.size(); ++i)
    {
        if (i)
            s += ',';
        s += std::to_string(modes[i]);
    }
    return s;
}

std::vector<int> parse_modes(const std::string &text, const std::string &what)
{
    std::vector<int> modes;
    for (const std::string &tok : split(text, ','))
        modes.push_back(int(parse_int(tok, what)));
    return modes;
}

struct header_map
{
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string &get(const std::string &key, const std::string &path) const
    {
        for (const auto &[k, v] : entries)
            if (k == key)
                return v;
        throw std::invalid_argument(path + ": missing header key '" + key + "'");
    }
};

// Reads '#key=value' comment lines, returns them plus the remaining data lines.
std::pair<header_map, std::vector<std::string>> read_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);

    header_map header;
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            const std::size_t eq = line.find('=');
            if (eq != std::string::npos)
                header.entries.emplace_back(line.substr(1, eq - 1), line.substr(eq + 1));
            continue;
        }
        rows.push_back(line);
    }
    return {std::move(header), std::move(rows)};
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc())
        throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

double parse_double(const std::string &text, const std::string &what)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed number for " + what + ": '" + text + "'");
    return v;
}

void write_ctf(const std::string &path, const ctf &h, std::uint64_t seed)
{
    validate(h);
    std::ofstream out(path, std::ios::binary); // binary keeps \n endings everywhere
    if (!out)
        throw std::runtime_error("cannot write file: " + path);

    out << "#format=ctf-csv\n";
    out << "#version=" << ctf_csv_version << "\n";
    out << "#n_r=" << h.n_r() << "\n";
    out << "#n_t=" << h.n_t() << "\n";
    out << "#n_f=" << h.n_f() << "\n";
    out << "#center_hz=" << format_double(h.grid.center_hz) << "\n";
    out << "#bandwidth_hz=" << format_double(h.grid.bandwidth_hz) << "\n";
    out << "#tx_modes=" << join_modes(h.tx_modes) << "\n";
    out << "#rx_modes=" << join_modes(h.rx_modes) << "\n";
    out << "#seed=" << seed << "\n";
    out << "#columns=n_r,n_t,k,f_hz,re,im\n";

    for (std::size_t ir = 0; ir < h.n_r(); ++ir)
        for (std::size_t it = 0; it < h.n_t(); ++it)
            for (std::size_t k = 0; k < h.n_f(); ++k)
            {
                const std::complex<double> v = h.values(ir, it, k);
                out << ir << ',' << it << ',' << k << ',' << format_double(h.grid.points_hz[k])
                    << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << "\n";
            }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

ctf read_ctf(const std::string &path, std::uint64_t *seed_out)
{
    const auto [header, rows] = read_csv(path);

    if (header.get("format", path) != "ctf-csv")
        throw std::invalid_argument(path + ": not a ctf-csv file");
    const long long version = parse_int(header.get("version", path), "version");
    if (version != ctf_csv_version)
        throw std::invalid_argument(path + ": unsupported ctf-csv version " +
                                    std::to_string(version) + " (supported: 1)");

    const std::size_t n_r = std::size_t(parse_int(header.get("n_r", path), "n_r"));
    const std::size_t n_t = std::size_t(parse_int(header.get("n_t", path), "n_t"));
    const std::size_t n_f = std::size_t(parse_int(header.get("n_f", path), "n_f"));

    ctf h;
    h.grid = make_frequency_grid(parse_double(header.get("center_hz", path), "center_hz"),
                                 parse_double(header.get("bandwidth_hz", path), "bandwidth_hz"),
                                 n_f);
    h.tx_modes = parse_modes(header.get("tx_modes", path), "tx_modes");
    h.rx_modes = parse_modes(header.get("rx_modes", path), "rx_modes");
    if (h.tx_modes.size() != n_t || h.rx_modes.size() != n_r)
        throw std::invalid_argument(path + ": mode list lengths disagree with n_t/n_r");
    if (seed_out)
        *seed_out = std::uint64_t(parse_int(header.get("seed", path), "seed"));

    if (rows.size() != n_r * n_t * n_f)
        throw std::invalid_argument(path + ": expected " + std::to_string(n_r * n_t * n_f) +
                                    " data rows, found " + std::to_string(rows.size()));

    h.values.set_size(n_r, n_t, n_f);
    std::vector<bool> seen(n_r * n_t * n_f, false);
    for (const std::string &row : rows)
    {
        const auto fields = split(row, ',');
        if (fields.size() != 6)
            throw std::invalid_argument(path + ": malformed data row '" + row + "'");
        const std::size_t ir = std::size_t(parse_int(fields[0], "n_r index"));
        const std::size_t it = std::size_t(parse_int(fields[1], "n_t index"));
        const std::size_t k = std::size_t(parse_int(fields[2], "k index"));
        if (ir >= n_r || it >= n_t || k >= n_f)
            throw std::invalid_argument(path + ": index out of range in row '" + row + "'");
        const std::size_t flat = (ir * n_t + it) * n_f + k;
        if (seen[flat])
            throw std::invalid_argument(path + ": duplicate entry in row '" + row + "'");
        seen[flat] = true;

        const double f_hz = parse_double(fields[3], "f_hz");
        if (std::abs(f_hz - h.grid.points_hz[k]) >
            1e-9 * std::max(1.0, std::abs(h.grid.points_hz[k])))
            throw std::invalid_argument(path + ": f_hz disagrees with the frequency grid in row '" +
                                        row + "'");
        h.values(ir, it, k) = {parse_double(fields[4], "re"), parse_double(fields[5], "im")};
    }
    validate(h);
    return h;
}

void write_mpcs(const std::string &path, const std::vector<mpc_params> &mpcs)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);

    out << "#format=mpc-csv\n";
    out << "#version=" << mpc_csv_version << "\n";
    out << "#count=" << mpcs.size() << "\n";
    out << "#columns=alpha_re,alpha_im,tau_s,theta_t,phi_t,theta_r,phi_r\n";
    for (const mpc_params &m : mpcs)
        out << format_double(m.alpha.real()) << ',' << format_double(m.alpha.imag()) << ','
            << format_double(m.tau_s) << ',' << format_double(m.theta_t_rad) << ','
            << format_double(m.phi_t_rad) << ',' << format_double(m.theta_r_rad) << ','
            << format_double(m.phi_r_rad) << "\n";
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::vector<mpc_params> read_mpcs(const std::string &path)
{
    const auto [header, rows] = read_csv(path);
    if (header.get("format", path) != "mpc-csv")
        throw std::invalid_argument(path + ": not a mpc-csv file");
    const long long version = parse_int(header.get("version", path), "version");
    if (version != mpc_csv_version)
        throw std::invalid_argument(path + ": unsupported mpc-csv version " +
                                    std::to_string(version) + " (supported: 1)");
    const std::size_t count = std::size_t(parse_int(header.get("count", path), "count"));
    if (rows.size() != count)
        throw std::invalid_argument(path + ": expected " + std::to_string(count) +
                                    " data rows, found " + std::to_string(rows.size()));

    std::vector<mpc_params> mpcs;
    mpcs.reserve(rows.size());
    for (const std::string &row : rows)
    {
        const auto fields = split(row, ',');
        if (fields.size() != 7)
            throw std::invalid_argument(path + ": malformed data row '" + row + "'");
        mpc_params m;
        m.alpha = {parse_double(fields[0], "alpha_re"), parse_double(fields[1], "alpha_im")};
        m.tau_s = parse_double(fields[2], "tau_s");
        m.theta_t_rad = parse_double(fields[3], "theta_t");
        m.phi_t_rad = parse_double(fields[4], "phi_t");
        m.theta_r_rad = parse_double(fields[5], "theta_r");
        m.phi_r_rad = parse_double(fields[6], "phi_r");
        try
        {
            validate(m);
        }
        catch (const std::invalid_argument &err)
        {
            throw std::invalid_argument(path + ": invalid MPC row '" + row + "': " + err.what());
        }
        mpcs.push_back(m);
    }
    return mpcs;
}

// ---------- config loading ----------

namespace
{

using json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string &context, const std::string &key,
                              const std::string &message)
{
    throw std::invalid_argument("config field '" + (context.empty() ? key : context + "." + key) +
                                "': " + message);
}

const json &require_node(const json &node, const std::string &key, const std::string &context)
{
    if (!node.contains(key))
        field_error(context, key, "is required");
    return node.at(key);
}

double require_number(const json &node, const std::string &key, const std::string &context)
{
    const json &v = require_node(node, key, context);
    if (!v.is_number())
        field_error(context, key, "must be a number");
    return v.get<double>();
}

double number_or(const json &node, const std::string &key, double fallback,
                 const std::string &context)
{
    if (!node.contains(key))
        return fallback;
    if (!node.at(key).is_number())
        field_error(context, key, "must be a number");
    return node.at(key).get<double>();
}

bool bool_or(const json &node, const std::string &key, bool fallback, const std::string &context)
{
    if (!node.contains(key))
        return fallback;
    if (!node.at(key).is_boolean())
        field_error(context, key, "must be a boolean");
    return node.at(key).get<bool>();
}

std::size_t require_count(const json &node, const std::string &key, const std::string &context)
{
    const json &v = require_node(node, key, context);
    if (!v.is_number_unsigned())
        field_error(context, key, "must be a non-negative integer");
    return v.get<std::size_t>();
}

arma::vec3 vec3_or(const json &node, const std::string &key, const arma::vec3 &fallback,
                   const std::string &context)
{
    if (!node.contains(key))
        return fallback;
    const json &v = node.at(key);
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number())
        field_error(context, key, "must be an array of three numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

path_loss_fit fit_from_json(const json &node, const std::string &context)
{
    if (node.is_string())
    {
        const std::string name = node.get<std::string>();
        if (name == "indoor_los")
            return indoor_los_fit();
        if (name == "through_wall")
            return through_wall_fit();
        if (name == "outdoor_los")
            return outdoor_los_fit();
        field_error(context, "", "unknown named path-loss fit '" + name +
                                     "' (known: indoor_los, through_wall, outdoor_los)");
    }
    if (!node.is_object())
        field_error(context, "", "must be a fit name or an object with a_db/b/c_scale/d_exp/e_freq");
    path_loss_fit fit;
    fit.scenario_name = node.contains("scenario_name") ? node.at("scenario_name").get<std::string>()
                                                       : std::string("custom");
    fit.a_db = require_number(node, "a_db", context);
    fit.b = require_number(node, "b", context);
    fit.c_scale = require_number(node, "c_scale", context);
    fit.d_exp = require_number(node, "d_exp", context);
    fit.e_freq = require_number(node, "e_freq", context);
    return fit;
}

json fit_to_json(const path_loss_fit &fit)
{
    json j;
    j["scenario_name"] = fit.scenario_name;
    j["a_db"] = fit.a_db;
    j["b"] = fit.b;
    j["c_scale"] = fit.c_scale;
    j["d_exp"] = fit.d_exp;
    j["e_freq"] = fit.e_freq;
    return j;
}

} // namespace

scenario_params scenario_from_json(const nlohmann::ordered_json &node, const std::string &context)
{
    if (!node.is_object())
        throw std::invalid_argument("config field '" + context + "': must be an object");

    scenario_params p;
    p.name = require_node(node, "name", context).get<std::string>();
    const json &los = require_node(node, "los", context);
    if (!los.is_boolean())
        field_error(context, "los", "must be a boolean");
    p.los = los.get<bool>();

    p.l_clusters = require_count(node, "l_clusters", context);
    p.m_rays = require_count(node, "m_rays", context);
    p.r_tau = require_number(node, "r_tau", context);
    if (!(p.r_tau > 1.0))
        field_error(context, "r_tau", "must exceed 1 (delay proportionality factor)");
    p.tau_rms_s = require_number(node, "tau_rms_s", context);

    p.theta_t_as_rad = require_number(node, "theta_t_as_rad", context);
    p.phi_t_as_rad = require_number(node, "phi_t_as_rad", context);
    p.theta_r_as_rad = require_number(node, "theta_r_as_rad", context);
    p.phi_r_as_rad = require_number(node, "phi_r_as_rad", context);

    p.zeta_db = require_number(node, "zeta_db", context);
    p.k_factor_db = number_or(node, "k_factor_db", 0.0, context);
    p.c_phi_nlos = number_or(node, "c_phi_nlos", 15.0, context);
    p.c_theta_nlos = require_number(node, "c_theta_nlos", context);
    p.c_asa_rad = require_number(node, "c_asa_rad", context);
    p.c_asd_rad = require_number(node, "c_asd_rad", context);
    p.c_esa_rad = require_number(node, "c_esa_rad", context);
    p.mu_offset_eod_rad = number_or(node, "mu_offset_eod_rad", 0.0, context);
    p.mu_lg_eod = number_or(node, "mu_lg_eod", 0.0, context);
    p.sigma_psi_db = require_number(node, "sigma_psi_db", context);

    p.pathloss_fit = fit_from_json(require_node(node, "pathloss", context), context + ".pathloss");

    p.uniform_x_in_angles = bool_or(node, "uniform_x_in_angles", false, context);
    p.angle_jitter_from_spread = bool_or(node, "angle_jitter_from_spread", false, context);
    p.verbatim_power_delay_exponent =
        bool_or(node, "verbatim_power_delay_exponent", false, context);
    p.cluster_power_floor_db = number_or(node, "cluster_power_floor_db", -1.0, context);

    if (node.contains("ray_offsets"))
    {
        const json &offsets = node.at("ray_offsets");
        if (!offsets.is_array())
            field_error(context, "ray_offsets", "must be an array of numbers");
        for (const auto &v : offsets)
            p.ray_offsets.push_back(v.get<double>());
    }

    try
    {
        validate(p);
    }
    catch (const std::invalid_argument &err)
    {
        throw std::invalid_argument("config field '" + context + "': " + err.what());
    }
    return p;
}

nlohmann::ordered_json scenario_to_json(const scenario_params &p)
{
    json j;
    j["name"] = p.name;
    j["los"] = p.los;
    j["l_clusters"] = p.l_clusters;
    j["m_rays"] = p.m_rays;
    j["r_tau"] = p.r_tau;
    j["tau_rms_s"] = p.tau_rms_s;
    j["theta_t_as_rad"] = p.theta_t_as_rad;
    j["phi_t_as_rad"] = p.phi_t_as_rad;
    j["theta_r_as_rad"] = p.theta_r_as_rad;
    j["phi_r_as_rad"] = p.phi_r_as_rad;
    j["zeta_db"] = p.zeta_db;
    j["k_factor_db"] = p.k_factor_db;
    j["c_phi_nlos"] = p.c_phi_nlos;
    j["c_theta_nlos"] = p.c_theta_nlos;
    j["c_asa_rad"] = p.c_asa_rad;
    j["c_asd_rad"] = p.c_asd_rad;
    j["c_esa_rad"] = p.c_esa_rad;
    j["mu_offset_eod_rad"] = p.mu_offset_eod_rad;
    j["mu_lg_eod"] = p.mu_lg_eod;
    j["sigma_psi_db"] = p.sigma_psi_db;
    j["pathloss"] = fit_to_json(p.pathloss_fit);
    j["uniform_x_in_angles"] = p.uniform_x_in_angles;
    j["angle_jitter_from_spread"] = p.angle_jitter_from_spread;
    j["verbatim_power_delay_exponent"] = p.verbatim_power_delay_exponent;
    j["cluster_power_floor_db"] = p.cluster_power_floor_db;
    j["ray_offsets"] = p.ray_offsets.empty() ? default_ray_offsets() : p.ray_offsets;
    return j;
}

run_config load_config(const std::string &path, std::optional<std::uint64_t> seed_override)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);

    json root;
    try
    {
        root = json::parse(in);
    }
    catch (const nlohmann::json::parse_error &err)
    {
        throw std::invalid_argument("config parse error in " + path + ": " + err.what());
    }

    run_config cfg;

    if (seed_override)
        cfg.seed = *seed_override;
    else if (root.contains("seed"))
    {
        if (!root.at("seed").is_number_unsigned())
            field_error("", "seed", "must be a non-negative integer");
        cfg.seed = root.at("seed").get<std::uint64_t>();
    }
    else
        field_error("", "seed", "is required (set it in the config, via --seed, or OAM_SIM_SEED)");

    cfg.distance_m = require_number(root, "distance_m", "");
    if (!(cfg.distance_m > 0.0))
        field_error("", "distance_m", "must be positive");

    // scenario: inline object or a sibling file reference
    if (root.contains("scenario_file"))
    {
        const std::string ref = root.at("scenario_file").get<std::string>();
        std::string resolved_path = ref;
        if (!ref.empty() && ref[0] != '/')
        {
            const std::size_t slash = path.find_last_of('/');
            if (slash != std::string::npos)
                resolved_path = path.substr(0, slash + 1) + ref;
        }
        std::ifstream sin(resolved_path);
        if (!sin)
            throw std::runtime_error("cannot open scenario file: " + resolved_path);
        json snode;
        try
        {
            snode = json::parse(sin);
        }
        catch (const nlohmann::json::parse_error &err)
        {
            throw std::invalid_argument("config parse error in " + resolved_path + ": " +
                                        err.what());
        }
        cfg.scenario = scenario_from_json(snode, "scenario");
    }
    else
    {
        cfg.scenario = scenario_from_json(require_node(root, "scenario", ""), "scenario");
    }

    // link
    const json &link = require_node(root, "link", "");
    const std::size_t n_tx = require_count(link, "n_elements_tx", "link");
    const std::size_t n_rx = require_count(link, "n_elements_rx", "link");
    const double radius_tx = require_number(link, "radius_tx_m", "link");
    const double radius_rx = require_number(link, "radius_rx_m", "link");

    const arma::vec3 center_tx = vec3_or(link, "center_tx_m", {0.0, 0.0, 0.0}, "link");
    const arma::vec3 center_rx =
        vec3_or(link, "center_rx_m", {cfg.distance_m, 0.0, 0.0}, "link");
    const arma::vec3 rot_tx = vec3_or(link, "rotation_tx_rad", {0.0, 0.0, 0.0}, "link");
    const arma::vec3 rot_rx = vec3_or(link, "rotation_rx_rad", {0.0, 0.0, 0.0}, "link");

    const json &grid = require_node(link, "grid", "link");
    const double center_hz = require_number(grid, "center_hz", "link.grid");
    const double bandwidth_hz = require_number(grid, "bandwidth_hz", "link.grid");
    const std::size_t n_points = require_count(grid, "n_points", "link.grid");

    try
    {
        cfg.link.tx_geometry = uca_positions(n_tx, radius_tx, center_tx, rot_tx);
        cfg.link.rx_geometry = uca_positions(n_rx, radius_rx, center_rx, rot_rx);
        cfg.link.tx_modes = mode_index_map(n_tx);
        cfg.link.rx_modes = mode_index_map(n_rx);
        cfg.link.grid = make_frequency_grid(center_hz, bandwidth_hz, n_points);
        validate(cfg.link);
    }
    catch (const std::invalid_argument &err)
    {
        throw std::invalid_argument(std::string("config field 'link': ") + err.what());
    }

    if (root.contains("ensemble"))
    {
        cfg.ensemble = require_count(root, "ensemble", "");
        if (cfg.ensemble == 0)
            field_error("", "ensemble", "must be at least 1");
    }

    if (root.contains("sage"))
    {
        const json &sage = root.at("sage");
        cfg.sage.n_paths = sage.contains("n_paths") ? require_count(sage, "n_paths", "sage")
                                                    : cfg.sage.n_paths;
        cfg.sage.max_iter = sage.contains("max_iter") ? require_count(sage, "max_iter", "sage")
                                                      : cfg.sage.max_iter;
        cfg.sage.delay_grid_s = number_or(sage, "delay_grid_s", cfg.sage.delay_grid_s, "sage");
        cfg.sage.angle_grid_rad =
            number_or(sage, "angle_grid_rad", cfg.sage.angle_grid_rad, "sage");
        cfg.sage.converge_tol = number_or(sage, "converge_tol", cfg.sage.converge_tol, "sage");
        cfg.sage.refine_steps = sage.contains("refine_steps")
                                    ? require_count(sage, "refine_steps", "sage")
                                    : cfg.sage.refine_steps;
        cfg.sage.delay_min_s = number_or(sage, "delay_min_s", cfg.sage.delay_min_s, "sage");
        cfg.sage.delay_max_s = number_or(sage, "delay_max_s", cfg.sage.delay_max_s, "sage");
        cfg.sage.coarse_angle_grid_rad =
            number_or(sage, "coarse_angle_grid_rad", cfg.sage.coarse_angle_grid_rad, "sage");
        cfg.sage.coarse_delay_grid_s =
            number_or(sage, "coarse_delay_grid_s", cfg.sage.coarse_delay_grid_s, "sage");
        cfg.sage.rescue_threshold =
            number_or(sage, "rescue_threshold", cfg.sage.rescue_threshold, "sage");
        cfg.sage.rescue_rounds = sage.contains("rescue_rounds")
                                     ? require_count(sage, "rescue_rounds", "sage")
                                     : cfg.sage.rescue_rounds;
        if (cfg.sage.n_paths < 1 || cfg.sage.max_iter < 1)
            field_error("", "sage", "n_paths and max_iter must be at least 1");
    }

    // resolved dump: every effective value, defaults included
    json resolved;
    resolved["seed"] = cfg.seed;
    resolved["distance_m"] = cfg.distance_m;
    resolved["ensemble"] = cfg.ensemble;
    resolved["scenario"] = scenario_to_json(cfg.scenario);
    json jlink;
    jlink["n_elements_tx"] = n_tx;
    jlink["n_elements_rx"] = n_rx;
    jlink["radius_tx_m"] = radius_tx;
    jlink["radius_rx_m"] = radius_rx;
    jlink["center_tx_m"] = {center_tx[0], center_tx[1], center_tx[2]};
    jlink["center_rx_m"] = {center_rx[0], center_rx[1], center_rx[2]};
    jlink["rotation_tx_rad"] = {rot_tx[0], rot_tx[1], rot_tx[2]};
    jlink["rotation_rx_rad"] = {rot_rx[0], rot_rx[1], rot_rx[2]};
    jlink["tx_modes"] = cfg.link.tx_modes.modes;
    jlink["rx_modes"] = cfg.link.rx_modes.modes;
    json jgrid;
    jgrid["center_hz"] = center_hz;
    jgrid["bandwidth_hz"] = bandwidth_hz;
    jgrid["n_points"] = n_points;
    jlink["grid"] = jgrid;
    resolved["link"] = jlink;
    json jsage;
    jsage["n_paths"] = cfg.sage.n_paths;
    jsage["max_iter"] = cfg.sage.max_iter;
    jsage["delay_grid_s"] = cfg.sage.delay_grid_s;
    jsage["angle_grid_rad"] = cfg.sage.angle_grid_rad;
    jsage["converge_tol"] = cfg.sage.converge_tol;
    jsage["refine_steps"] = cfg.sage.refine_steps;
    jsage["delay_min_s"] = cfg.sage.delay_min_s;
    jsage["delay_max_s"] = cfg.sage.delay_max_s;
    jsage["coarse_angle_grid_rad"] = cfg.sage.coarse_angle_grid_rad;
    jsage["coarse_delay_grid_s"] = cfg.sage.coarse_delay_grid_s;
    jsage["rescue_threshold"] = cfg.sage.rescue_threshold;
    jsage["rescue_rounds"] = cfg.sage.rescue_rounds;
    resolved["sage"] = jsage;
    cfg.resolved = std::move(resolved);

    return cfg;
}

} // namespace oamchan
