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

#include "oamchan/cli.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace oamchan;
using namespace oamchan::testing;
namespace fs = std::filesystem;

namespace
{

struct temp_dir
{
    fs::path path;
    temp_dir(const std::string &name)
        : path(fs::temp_directory_path() / ("oamchan_test_" + name))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~temp_dir() { fs::remove_all(path); }
    std::string file(const std::string &name) const { return (path / name).string(); }
};

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ctf random_small_ctf(rng_stream &rng)
{
    ctf h;
    h.grid = make_frequency_grid(5.8e9, 100e6, 5);
    h.tx_modes = mode_index_map(3).modes;
    h.rx_modes = mode_index_map(2).modes;
    h.values.set_size(2, 3, 5);
    for (auto &v : h.values)
        v = {rng.normal() * std::pow(10.0, rng.uniform(-8, 8)), rng.normal()};
    return h;
}

int run_cli(const std::vector<std::string> &args)
{
    std::vector<const char *> argv{"oamchan"};
    for (const std::string &a : args)
        argv.push_back(a.c_str());
    return cli_dispatch(int(argv.size()), argv.data());
}

const char *const configs_dir = "../configs"; // relative to the build tree

std::string config_path(const std::string &name)
{
    for (const char *base : {"configs", "../configs", "../../configs"})
    {
        const fs::path p = fs::path(base) / name;
        if (fs::exists(p))
            return p.string();
    }
    return (fs::path(configs_dir) / name).string();
}

} // namespace

TEST_CASE("doubles round-trip through 17-digit text")
{
    rng_stream rng(301, 0);
    for (int i = 0; i < 2000; ++i)
    {
        const double v = rng.normal() * std::pow(10.0, rng.uniform(-300, 300));
        CHECK(parse_double(format_double(v), "v") == v);
    }
    CHECK(parse_double(format_double(0.0), "v") == 0.0);
    CHECK_THROWS_AS(parse_double("1.2x", "v"), std::invalid_argument);
}

TEST_CASE("ctf files round-trip bit-exactly")
{
    temp_dir dir("ctf");
    rng_stream rng(302, 0);
    const ctf h = random_small_ctf(rng);

    const std::string path = dir.file("h.csv");
    write_ctf(path, h, 99);
    std::uint64_t seed = 0;
    const ctf back = read_ctf(path, &seed);

    CHECK(seed == 99);
    CHECK(back.tx_modes == h.tx_modes);
    CHECK(back.rx_modes == h.rx_modes);
    REQUIRE(back.values.n_elem == h.values.n_elem);
    for (std::size_t i = 0; i < h.values.n_elem; ++i)
        CHECK(back.values.memptr()[i] == h.values.memptr()[i]);
    for (std::size_t k = 0; k < h.grid.n_points(); ++k)
        CHECK(back.grid.points_hz[k] == h.grid.points_hz[k]);
}

TEST_CASE("ctf reader rejects corrupted inputs")
{
    temp_dir dir("ctf_bad");
    rng_stream rng(303, 0);
    const ctf h = random_small_ctf(rng);
    const std::string path = dir.file("h.csv");
    write_ctf(path, h, 1);

    // drop a data row: count disagrees with the header
    {
        std::string text = slurp(path);
        text.erase(text.rfind("\n", text.size() - 2) + 1);
        std::ofstream(dir.file("short.csv"), std::ios::binary) << text;
        CHECK_THROWS_AS(read_ctf(dir.file("short.csv")), std::invalid_argument);
    }
    // unsupported version
    {
        std::string text = slurp(path);
        const auto pos = text.find("#version=1");
        text.replace(pos, 10, "#version=9");
        std::ofstream(dir.file("ver.csv"), std::ios::binary) << text;
        CHECK_THROWS_WITH_AS(read_ctf(dir.file("ver.csv")),
                             doctest::Contains("supported: 1"), std::invalid_argument);
    }
    // malformed row
    {
        std::string text = slurp(path);
        text += "0,0,zz,1,2,3\n#\n";
        std::ofstream(dir.file("mal.csv"), std::ios::binary) << text;
        CHECK_THROWS_AS(read_ctf(dir.file("mal.csv")), std::invalid_argument);
    }
    CHECK_THROWS(read_ctf(dir.file("missing.csv")));
}

TEST_CASE("mpc files round-trip bit-exactly, including empty lists")
{
    temp_dir dir("mpc");
    rng_stream rng(304, 0);
    std::vector<mpc_params> mpcs;
    for (int i = 0; i < 12; ++i)
    {
        mpc_params m;
        m.alpha = {rng.normal() * 1e-4, rng.normal() * 1e3};
        m.tau_s = rng.uniform(0, 1e-6);
        m.theta_t_rad = rng.uniform(0, pi);
        m.phi_t_rad = rng.uniform(0, two_pi);
        m.theta_r_rad = rng.uniform(0, pi);
        m.phi_r_rad = rng.uniform(0, two_pi);
        mpcs.push_back(m);
    }

    const std::string path = dir.file("m.csv");
    write_mpcs(path, mpcs);
    const std::vector<mpc_params> back = read_mpcs(path);
    REQUIRE(back.size() == mpcs.size());
    for (std::size_t i = 0; i < mpcs.size(); ++i)
    {
        CHECK(back[i].alpha == mpcs[i].alpha);
        CHECK(back[i].tau_s == mpcs[i].tau_s);
        CHECK(back[i].theta_t_rad == mpcs[i].theta_t_rad);
        CHECK(back[i].phi_t_rad == mpcs[i].phi_t_rad);
        CHECK(back[i].theta_r_rad == mpcs[i].theta_r_rad);
        CHECK(back[i].phi_r_rad == mpcs[i].phi_r_rad);
    }

    write_mpcs(dir.file("empty.csv"), {});
    CHECK(read_mpcs(dir.file("empty.csv")).empty());
}

TEST_CASE("mpc reader validates angle ranges")
{
    temp_dir dir("mpc_bad");
    std::ofstream(dir.file("bad.csv"), std::ios::binary)
        << "#format=mpc-csv\n#version=1\n#count=1\n"
        << "#columns=alpha_re,alpha_im,tau_s,theta_t,phi_t,theta_r,phi_r\n"
        << "1,0,1e-9,4.0,0,0.5,0\n"; // theta_t outside [0, pi]
    CHECK_THROWS_AS(read_mpcs(dir.file("bad.csv")), std::invalid_argument);
}

TEST_CASE("bundled indoor-LOS config loads and resolves")
{
    const run_config cfg = load_config(config_path("indoor_los.json"));
    CHECK(cfg.scenario.name == "indoor_los_5g8");
    CHECK(cfg.seed == 7);
    CHECK(cfg.distance_m == 9.6);
    CHECK(cfg.link.grid.n_points() == 51);
    CHECK(cfg.link.tx_modes.modes == std::vector<int>{-3, -2, -1, 0, 1, 2, 3, 4});
    CHECK(cfg.scenario.pathloss_fit.scenario_name == "indoor_los");
    // resolved dump echoes defaulted fields
    CHECK(cfg.resolved.contains("sage"));
    CHECK(cfg.resolved["link"]["center_rx_m"][0].get<double>() == 9.6);
    CHECK(cfg.resolved["scenario"]["verbatim_power_delay_exponent"].get<bool>() == false);
}

TEST_CASE("config validation errors name the offending field")
{
    temp_dir dir("cfg");

    // r_tau at 0.5 violates the > 1 constraint
    {
        nlohmann::ordered_json j =
            nlohmann::ordered_json::parse(slurp(config_path("scenario_indoor_los_5g8.json")));
        j["r_tau"] = 0.5;
        nlohmann::ordered_json root;
        root["seed"] = 1;
        root["distance_m"] = 9.6;
        root["scenario"] = j;
        root["link"] = {{"n_elements_tx", 8},
                        {"n_elements_rx", 8},
                        {"radius_tx_m", 0.055},
                        {"radius_rx_m", 0.055},
                        {"grid", {{"center_hz", 5.8e9}, {"bandwidth_hz", 1e8}, {"n_points", 51}}}};
        std::ofstream(dir.file("bad_rtau.json"), std::ios::binary) << root.dump(2);
        CHECK_THROWS_WITH_AS(load_config(dir.file("bad_rtau.json")),
                             doctest::Contains("r_tau"), std::invalid_argument);
    }
    // missing seed
    {
        nlohmann::ordered_json root =
            nlohmann::ordered_json::parse(slurp(config_path("indoor_los.json")));
        root.erase("seed");
        root.erase("scenario_file");
        root["scenario"] =
            nlohmann::ordered_json::parse(slurp(config_path("scenario_indoor_los_5g8.json")));
        std::ofstream(dir.file("no_seed.json"), std::ios::binary) << root.dump(2);
        CHECK_THROWS_WITH_AS(load_config(dir.file("no_seed.json")), doctest::Contains("seed"),
                             std::invalid_argument);
        // an explicit override supplies it
        CHECK(load_config(dir.file("no_seed.json"), 123).seed == 123);
    }
}

TEST_CASE("cli generate is reproducible file-for-file")
{
    temp_dir a("gen_a"), b("gen_b");
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--seed", "7",
                     "--out-dir", a.path.string()}) == 0);
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--seed", "7",
                     "--out-dir", b.path.string()}) == 0);

    for (const char *name : {"mpcs_0000.csv", "ctf_normalized_0000.csv", "ctf_final_0000.csv",
                             "draws_0000.json", "resolved_config.json"})
        CHECK(slurp(a.file(name)) == slurp(b.file(name)));
}

TEST_CASE("cli synthesize round-trips through the file formats")
{
    temp_dir dir("synth");
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--out-dir",
                     dir.path.string()}) == 0);
    REQUIRE(run_cli({"synthesize", "--config", config_path("indoor_los.json"), "--mpcs",
                     dir.file("mpcs_0000.csv"), "--out", dir.file("resynth.csv")}) == 0);

    // synthesizing the generated MPC file reproduces the normalized CTF
    const ctf a = read_ctf(dir.file("ctf_normalized_0000.csv"));
    const ctf b = read_ctf(dir.file("resynth.csv"));
    const double scale = std::sqrt(tensor_energy(a.values) / double(a.values.n_elem));
    CHECK(tensor_max_abs_diff(a.values, b.values) <= 1e-9 * scale);
}

TEST_CASE("cli pathloss table matches direct evaluations")
{
    temp_dir dir("pl");
    REQUIRE(run_cli({"pathloss", "--fit", "indoor_los", "--f-ghz", "28", "--distances",
                     "4,6,8,10,12", "--n-elements", "8", "--out", dir.file("pl.csv")}) == 0);

    const std::string text = slurp(dir.file("pl.csv"));
    std::istringstream lines(text);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        ++rows;
        std::istringstream cells(line);
        std::string d_s, mt_s, mr_s, pl_s, cross_s, status_s;
        std::getline(cells, d_s, ',');
        std::getline(cells, mt_s, ',');
        std::getline(cells, mr_s, ',');
        std::getline(cells, pl_s, ',');
        std::getline(cells, cross_s, ',');
        std::getline(cells, status_s, ',');
        REQUIRE(status_s == "ok");
        CHECK(cross_s == "0");
        const double expect =
            path_loss_db(indoor_los_fit(), std::stoi(mt_s), std::stoi(mr_s),
                         28.0, parse_double(d_s, "d"), 0.055, 0.055);
        CHECK(parse_double(pl_s, "pl") == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(rows == 5 * 8); // 5 distances x 8 same-mode pairs
}

TEST_CASE("cli estimate recovers planted paths end to end")
{
    temp_dir dir("est");
    const link_config link = make_test_link(8, 51);

    std::vector<mpc_params> truth;
    mpc_params m;
    m.alpha = {1.0, 0.4};
    m.tau_s = 60e-9;
    m.theta_t_rad = 0.7;
    m.phi_t_rad = 1.0;
    m.theta_r_rad = 0.9;
    m.phi_r_rad = 4.0;
    truth.push_back(m);
    m.alpha = {-0.5, 0.8};
    m.tau_s = 180e-9;
    m.theta_t_rad = 1.1;
    m.phi_t_rad = 3.0;
    m.theta_r_rad = 0.4;
    m.phi_r_rad = 1.5;
    truth.push_back(m);

    write_ctf(dir.file("h.csv"), synthesize_ctf(truth, link), 0);
    REQUIRE(run_cli({"estimate", "--config", config_path("indoor_los.json"), "--ctf",
                     dir.file("h.csv"), "--paths", "2", "--out", dir.file("est.csv")}) == 0);

    const std::vector<mpc_params> found = read_mpcs(dir.file("est.csv"));
    REQUIRE(found.size() == 2);
    std::vector<double> got{found[0].tau_s, found[1].tau_s};
    std::sort(got.begin(), got.end());
    CHECK(std::abs(got[0] - 60e-9) <= 5e-9);
    CHECK(std::abs(got[1] - 180e-9) <= 5e-9);
}

TEST_CASE("cli stats writes spreads, PSDs and correlation tables")
{
    temp_dir dir("stats");
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--out-dir",
                     dir.path.string()}) == 0);
    REQUIRE(run_cli({"stats", "--mpcs", dir.file("mpcs_0000.csv"), "--ctf",
                     dir.file("ctf_final_0000.csv"), "--out-dir", dir.path.string()}) == 0);
    CHECK(fs::exists(dir.file("spreads.csv")));
    CHECK(fs::exists(dir.file("delay_psd_0000.csv")));
    CHECK(fs::exists(dir.file("angular_psd_0000.csv")));
    CHECK(fs::exists(dir.file("correlation.csv")));
}

TEST_CASE("cli capacity emits one row per SNR point")
{
    temp_dir dir("cap");
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--out-dir",
                     dir.path.string()}) == 0);
    REQUIRE(run_cli({"capacity", "--ctf", dir.file("ctf_final_0000.csv"), "--snr-db",
                     "0,10,20", "--out", dir.file("cap.csv")}) == 0);
    const std::string text = slurp(dir.file("cap.csv"));
    CHECK(std::count(text.begin(), text.end(), '\n') == 4); // header + 3 rows
}

TEST_CASE("cli reports unknown subcommands and missing inputs as errors")
{
    CHECK(run_cli({"frobnicate"}) != 0);
    CHECK(run_cli({"estimate", "--ctf", "/nonexistent/h.csv", "--config",
                   config_path("indoor_los.json")}) != 0);
    CHECK(run_cli({"generate"}) != 0); // --config missing
}

TEST_CASE("cli ensemble fan-out stays deterministic")
{
    temp_dir a("ens_a"), b("ens_b");
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--ensemble", "4",
                     "--out-dir", a.path.string()}) == 0);
    REQUIRE(run_cli({"generate", "--config", config_path("indoor_los.json"), "--ensemble", "4",
                     "--out-dir", b.path.string()}) == 0);
    for (int i = 0; i < 4; ++i)
    {
        char name[64];
        std::snprintf(name, sizeof(name), "mpcs_%04d.csv", i);
        CHECK(slurp(a.file(name)) == slurp(b.file(name)));
    }
    // realizations differ from each other
    CHECK(slurp(a.file("mpcs_0000.csv")) != slurp(a.file("mpcs_0001.csv")));
}
