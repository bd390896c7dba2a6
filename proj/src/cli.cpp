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

#include "oamchan/cli.hpp"

#include "oamchan/io.hpp"
#include "oamchan/statistics.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace oamchan
{

namespace
{

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string indexed_name(const std::string &stem, std::size_t index, const std::string &ext)
{
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04zu", index);
    return stem + "_" + buf + ext;
}

json draws_to_json(const generation_draws &draws)
{
    json j;
    j["x_delay"] = draws.x_delay;
    j["z_cluster_db"] = draws.z_cluster_db;
    j["x_aoa"] = draws.x_angle[0];
    j["x_aod"] = draws.x_angle[1];
    j["x_eoa"] = draws.x_angle[2];
    j["x_eod"] = draws.x_angle[3];
    j["y_aoa"] = draws.y_angle[0];
    j["y_aod"] = draws.y_angle[1];
    j["y_eoa"] = draws.y_angle[2];
    j["y_eod"] = draws.y_angle[3];
    j["coupling_aod"] = draws.coupling_aod;
    j["coupling_eod"] = draws.coupling_eod;
    j["ray_phase_rad"] = draws.ray_phase_rad;
    j["psi_db"] = draws.psi_db;
    return j;
}

void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::optional<std::uint64_t> effective_seed(const CLI::Option *seed_opt, std::uint64_t seed_value)
{
    if (seed_opt->count() > 0) // set on the command line or via OAM_SIM_SEED
        return seed_value;
    return std::nullopt;
}

int run_generate(const std::string &config_path, std::optional<std::uint64_t> seed_override,
                 const std::string &out_dir, std::size_t ensemble_override)
{
    run_config cfg = load_config(config_path, seed_override);
    if (ensemble_override > 0)
        cfg.ensemble = ensemble_override;

    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "resolved_config.json").string(),
                    cfg.resolved.dump(2) + "\n");

    struct outcome
    {
        std::string summary;
        std::exception_ptr error;
    };
    std::vector<outcome> results(cfg.ensemble);

    const auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            try
            {
                const channel_realization real =
                    generate_channel(cfg.scenario, cfg.link, cfg.distance_m, cfg.seed, i);

                const fs::path dir(out_dir);
                write_mpcs((dir / indexed_name("mpcs", i, ".csv")).string(), real.mpcs);
                write_ctf((dir / indexed_name("ctf_normalized", i, ".csv")).string(),
                          real.ctf_normalized, cfg.seed);
                write_ctf((dir / indexed_name("ctf_final", i, ".csv")).string(), real.ctf_final,
                          cfg.seed);

                json jd = draws_to_json(real.draws);
                jd["seed"] = cfg.seed;
                jd["realization"] = i;
                write_text_file((dir / indexed_name("draws", i, ".json")).string(),
                                jd.dump(2) + "\n");

                results[i].summary = "realization " + std::to_string(i) + ": " +
                                     std::to_string(real.mpcs.size()) + " MPCs, shadowing " +
                                     format_double(real.shadowing_db) + " dB";
            }
            catch (...)
            {
                results[i].error = std::current_exception();
            }
        }
    };

    const std::size_t n_workers =
        std::min<std::size_t>(cfg.ensemble, std::max(1u, std::thread::hardware_concurrency()));
    if (n_workers <= 1)
    {
        worker(0, cfg.ensemble);
    }
    else
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.ensemble + n_workers - 1) / n_workers;
        for (std::size_t w = 0; w < n_workers; ++w)
        {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(cfg.ensemble, begin + chunk);
            if (begin < end)
                pool.emplace_back(worker, begin, end);
        }
        for (auto &t : pool)
            t.join();
    }

    for (const outcome &r : results) // deterministic report order by realization index
    {
        if (r.error)
            std::rethrow_exception(r.error);
        std::cout << r.summary << "\n";
    }
    return 0;
}

int run_synthesize(const std::string &config_path, const std::string &mpcs_path,
                   const std::string &out_path, std::optional<std::uint64_t> seed_override)
{
    run_config cfg = load_config(config_path, seed_override.value_or(0));
    const std::vector<mpc_params> mpcs = read_mpcs(mpcs_path);
    const ctf h = synthesize_ctf(mpcs, cfg.link);
    write_ctf(out_path, h, cfg.seed);
    std::cout << "synthesized " << mpcs.size() << " MPCs -> " << h.n_r() << "x" << h.n_t() << "x"
              << h.n_f() << " CTF\n";
    return 0;
}

int run_estimate(const std::string &config_path, const std::string &ctf_path,
                 const std::string &out_path, std::size_t paths_override,
                 std::size_t max_iter_override)
{
    run_config cfg = load_config(config_path, std::uint64_t(0));
    const ctf h = read_ctf(ctf_path);

    if (h.tx_modes != cfg.link.tx_modes.modes || h.rx_modes != cfg.link.rx_modes.modes)
        throw std::invalid_argument("CTF mode lists disagree with the configured link");

    sage_config sc = cfg.sage;
    if (paths_override > 0)
        sc.n_paths = paths_override;
    if (max_iter_override > 0)
        sc.max_iter = max_iter_override;

    link_config link = cfg.link;
    link.grid = h.grid; // estimate on the grid the file was recorded with

    const sage_result result = sage_estimate(h, link, sc);
    write_mpcs(out_path, result.mpcs);
    std::cout << "estimated " << result.mpcs.size() << " MPCs, residual power "
              << format_double(result.residual_power) << ", iterations "
              << result.iterations_run << (result.converged ? " (converged)" : " (max-iter)")
              << "\n";
    return 0;
}

int run_stats(const std::vector<std::string> &mpc_paths, const std::vector<std::string> &ctf_paths,
              const std::string &out_dir, double delay_bin_ns, bool verbatim_denominator)
{
    if (mpc_paths.empty() && ctf_paths.empty())
        throw std::invalid_argument("stats needs at least one --mpcs or --ctf input");

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    const moment_denominator denom = verbatim_denominator ? moment_denominator::verbatim_paper
                                                          : moment_denominator::standard;

    if (!mpc_paths.empty())
    {
        std::string spreads_csv =
            "#columns=file,tau_rms_s,theta_t_rms_rad,phi_t_rms_rad,theta_r_rms_rad,phi_r_rms_rad\n";
        std::vector<double> log_ds;

        for (std::size_t i = 0; i < mpc_paths.size(); ++i)
        {
            const std::vector<mpc_params> mpcs = read_mpcs(mpc_paths[i]);
            const spread_report rep = rms_angle_spreads(mpcs, denom);
            spreads_csv += mpc_paths[i] + "," + format_double(rep.tau_rms_s) + "," +
                           format_double(rep.theta_t_rms_rad) + "," +
                           format_double(rep.phi_t_rms_rad) + "," +
                           format_double(rep.theta_r_rms_rad) + "," +
                           format_double(rep.phi_r_rms_rad) + "\n";
            if (rep.tau_rms_s > 0.0)
                log_ds.push_back(std::log10(rep.tau_rms_s));

            // delay PSD
            double max_tau = 0.0;
            for (const auto &m : mpcs)
                max_tau = std::max(max_tau, m.tau_s);
            const double bin = delay_bin_ns * 1e-9;
            std::vector<double> edges;
            for (double e = 0.0; e <= max_tau + bin; e += bin)
                edges.push_back(e);
            const delay_psd_result psd = delay_psd(mpcs, edges);
            std::string psd_csv = "#columns=bin_start_s,bin_end_s,power_linear,power_db_rel\n";
            for (std::size_t b = 0; b + 1 < psd.bin_edges_s.size(); ++b)
                psd_csv += format_double(psd.bin_edges_s[b]) + "," +
                           format_double(psd.bin_edges_s[b + 1]) + "," +
                           format_double(psd.power_linear[b]) + "," +
                           format_double(psd.power_db_rel[b]) + "\n";
            write_text_file((dir / indexed_name("delay_psd", i, ".csv")).string(), psd_csv);

            // angular PSD
            std::string ang_csv =
                "#columns=theta_t_rad,phi_t_rad,theta_r_rad,phi_r_rad,power_db_rel\n";
            for (const angular_psd_record &rec : angular_psd(mpcs))
                ang_csv += format_double(rec.theta_t_rad) + "," + format_double(rec.phi_t_rad) +
                           "," + format_double(rec.theta_r_rad) + "," +
                           format_double(rec.phi_r_rad) + "," + format_double(rec.power_db_rel) +
                           "\n";
            write_text_file((dir / indexed_name("angular_psd", i, ".csv")).string(), ang_csv);
        }
        write_text_file((dir / "spreads.csv").string(), spreads_csv);

        if (log_ds.size() >= 2)
        {
            std::string cdf_csv = "#columns=log10_ds_over_1s,probability\n";
            for (const auto &[v, p] : empirical_cdf(log_ds))
                cdf_csv += format_double(v) + "," + format_double(p) + "\n";
            write_text_file((dir / "ds_cdf.csv").string(), cdf_csv);
        }
        std::cout << "stats: " << mpc_paths.size() << " MPC file(s) -> " << out_dir << "\n";
    }

    if (!ctf_paths.empty())
    {
        std::vector<ctf> snapshots;
        snapshots.reserve(ctf_paths.size());
        for (const std::string &p : ctf_paths)
            snapshots.push_back(read_ctf(p));
        const correlation_matrix corr = mode_correlation(snapshots);

        std::string corr_csv = "#columns=mode_1,mode_2,rho_re,rho_im,rho_abs\n";
        for (std::size_t i = 0; i < corr.mode_labels.size(); ++i)
            for (std::size_t j = 0; j < corr.mode_labels.size(); ++j)
                corr_csv += std::to_string(corr.mode_labels[i]) + "," +
                            std::to_string(corr.mode_labels[j]) + "," +
                            format_double(corr.rho(i, j).real()) + "," +
                            format_double(corr.rho(i, j).imag()) + "," +
                            format_double(std::abs(corr.rho(i, j))) + "\n";
        write_text_file((dir / "correlation.csv").string(), corr_csv);
        std::cout << "stats: " << ctf_paths.size() << " CTF snapshot(s) -> correlation.csv\n";
    }
    return 0;
}

int run_pathloss(const std::string &fit_name, const std::string &scenario_path, double f_ghz,
                 const std::vector<double> &distances, double radius_tx, double radius_rx,
                 std::size_t n_elements, bool all_pairs, const std::string &out_path)
{
    path_loss_fit fit;
    if (!scenario_path.empty())
    {
        std::ifstream in(scenario_path);
        if (!in)
            throw std::runtime_error("cannot open scenario file: " + scenario_path);
        const scenario_params sp = scenario_from_json(json::parse(in), "scenario");
        fit = sp.pathloss_fit;
    }
    else if (fit_name == "indoor_los")
        fit = indoor_los_fit();
    else if (fit_name == "through_wall")
        fit = through_wall_fit();
    else if (fit_name == "outdoor_los")
        fit = outdoor_los_fit();
    else
        throw std::invalid_argument("unknown fit '" + fit_name +
                                    "' (known: indoor_los, through_wall, outdoor_los)");

    const oam_mode_set modes = mode_index_map(n_elements);

    // cross-mode rows extrapolate the same-mode fit and are flagged as such
    std::string csv = "#fit=" + fit.scenario_name + "\n";
    csv += "#columns=d_m,m_t,m_r,path_loss_db,cross_mode_extrapolated,status\n";
    for (const double d : distances)
        for (const int m_t : modes.modes)
            for (const int m_r : modes.modes)
            {
                if (!all_pairs && m_t != m_r)
                    continue;
                const bool cross = m_t != m_r;
                csv += format_double(d) + "," + std::to_string(m_t) + "," + std::to_string(m_r) +
                       ",";
                try
                {
                    const double pl = path_loss_db(fit, m_t, m_r, f_ghz, d, radius_tx, radius_rx);
                    csv += format_double(pl) + "," + (cross ? "1" : "0") + ",ok\n";
                }
                catch (const null_depth_error &)
                {
                    csv += std::string("inf,") + (cross ? "1" : "0") + ",null_depth\n";
                }
            }

    if (out_path.empty())
        std::cout << csv;
    else
    {
        write_text_file(out_path, csv);
        std::cout << "pathloss table -> " << out_path << "\n";
    }
    return 0;
}

int run_capacity(const std::string &ctf_path, const std::vector<double> &snr_db_list,
                 const std::string &normalization, const std::string &out_path)
{
    const ctf h = read_ctf(ctf_path);
    capacity_normalization norm;
    if (normalization == "per_point")
        norm = capacity_normalization::per_point;
    else if (normalization == "whole_tensor")
        norm = capacity_normalization::whole_tensor;
    else
        throw std::invalid_argument("unknown normalization '" + normalization +
                                    "' (known: per_point, whole_tensor)");

    std::string csv = "#columns=snr_db,capacity_bits_per_s_per_hz\n";
    for (const double snr_db : snr_db_list)
        csv += format_double(snr_db) + "," +
               format_double(capacity_bits(h, db_to_power(snr_db), norm)) + "\n";

    if (out_path.empty())
        std::cout << csv;
    else
    {
        write_text_file(out_path, csv);
        std::cout << "capacity table -> " << out_path << "\n";
    }
    return 0;
}

} // namespace

int cli_dispatch(int argc, const char *const *argv)
{
    CLI::App app{"OAM wireless channel simulator and estimator"};
    app.require_subcommand(1);

    std::uint64_t seed_value = 0;
    std::string config_path, out_dir = ".", format = "csv";
    CLI::Option *seed_opt = app.add_option("--seed", seed_value, "master random seed")
                                ->envname("OAM_SIM_SEED");
    app.add_option("--config", config_path, "run configuration JSON");
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--format", format, "output format (csv)")
        ->check(CLI::IsMember({"csv"}));
    app.fallthrough();

    // generate
    auto *gen = app.add_subcommand("generate", "draw stochastic channel realizations");
    std::size_t ensemble_override = 0;
    gen->add_option("--ensemble", ensemble_override, "number of realizations (overrides config)");

    // synthesize
    auto *synth = app.add_subcommand("synthesize", "build a CTF from an MPC file");
    std::string mpcs_path, out_path;
    synth->add_option("--mpcs", mpcs_path, "input MPC-CSV file")->required();
    synth->add_option("--out", out_path, "output CTF-CSV file");

    // estimate
    auto *est = app.add_subcommand("estimate", "extract MPC parameters from a CTF");
    std::string ctf_path;
    std::size_t paths_override = 0, max_iter_override = 0;
    est->add_option("--ctf", ctf_path, "input CTF-CSV file")->required();
    est->add_option("--out", out_path, "output MPC-CSV file");
    est->add_option("--paths", paths_override, "number of paths to extract (overrides config)");
    est->add_option("--max-iter", max_iter_override, "iteration cap (overrides config)");

    // stats
    auto *stats = app.add_subcommand("stats", "spreads, PSDs, CDFs and mode correlation");
    std::vector<std::string> mpc_paths, ctf_paths;
    double delay_bin_ns = 5.0;
    bool verbatim_denominator = false;
    stats->add_option("--mpcs", mpc_paths, "MPC-CSV files");
    stats->add_option("--ctf", ctf_paths, "CTF-CSV snapshot files");
    stats->add_option("--delay-bin-ns", delay_bin_ns, "delay PSD bin width in ns");
    stats->add_flag("--verbatim-denominator", verbatim_denominator,
                    "use the published unsquared-gain denominator in spread formulas");

    // pathloss
    auto *pl = app.add_subcommand("pathloss", "path-loss sweep over distance and mode pairs");
    std::string fit_name = "indoor_los", scenario_path;
    double f_ghz = 5.8, radius_tx = 0.055, radius_rx = 0.055;
    std::vector<double> distances{4.0, 6.0, 8.0, 10.0, 12.0};
    std::size_t n_elements = 8;
    bool all_pairs = false;
    pl->add_option("--fit", fit_name, "named fit: indoor_los, through_wall, outdoor_los");
    pl->add_option("--scenario-file", scenario_path, "scenario JSON carrying the fit");
    pl->add_option("--f-ghz", f_ghz, "carrier frequency in GHz");
    pl->add_option("--distances", distances, "distances in meters")->delimiter(',');
    pl->add_option("--radius-tx", radius_tx, "transmit UCA radius in meters");
    pl->add_option("--radius-rx", radius_rx, "receive UCA radius in meters");
    pl->add_option("--n-elements", n_elements, "UCA element count (sets the mode list)");
    pl->add_flag("--all-pairs", all_pairs, "include cross-mode (extrapolated) pairs");
    pl->add_option("--out", out_path, "output CSV file (stdout when omitted)");

    // capacity
    auto *cap = app.add_subcommand("capacity", "Shannon capacity over an SNR sweep");
    std::vector<double> snr_db_list{0, 5, 10, 15, 20};
    std::string normalization = "per_point";
    cap->add_option("--ctf", ctf_path, "input CTF-CSV file")->required();
    cap->add_option("--snr-db", snr_db_list, "SNR points in dB")->delimiter(',');
    cap->add_option("--normalization", normalization, "per_point or whole_tensor");
    cap->add_option("--out", out_path, "output CSV file (stdout when omitted)");

    try
    {
        app.parse(argc, argv);

        const std::optional<std::uint64_t> seed = effective_seed(seed_opt, seed_value);
        const auto need_config = [&]() -> const std::string & {
            if (config_path.empty())
                throw std::invalid_argument("--config is required for this subcommand");
            return config_path;
        };

        if (gen->parsed())
            return run_generate(need_config(), seed, out_dir, ensemble_override);
        if (synth->parsed())
        {
            if (out_path.empty())
                out_path = (fs::path(out_dir) / "ctf_synthesized.csv").string();
            fs::create_directories(fs::path(out_path).parent_path().empty()
                                       ? "."
                                       : fs::path(out_path).parent_path().string());
            return run_synthesize(need_config(), mpcs_path, out_path, seed);
        }
        if (est->parsed())
        {
            if (out_path.empty())
                out_path = (fs::path(out_dir) / "estimated_mpcs.csv").string();
            fs::create_directories(fs::path(out_path).parent_path().empty()
                                       ? "."
                                       : fs::path(out_path).parent_path().string());
            return run_estimate(need_config(), ctf_path, out_path, paths_override,
                                max_iter_override);
        }
        if (stats->parsed())
            return run_stats(mpc_paths, ctf_paths, out_dir, delay_bin_ns, verbatim_denominator);
        if (pl->parsed())
            return run_pathloss(fit_name, scenario_path, f_ghz, distances, radius_tx, radius_rx,
                                n_elements, all_pairs, out_path);
        if (cap->parsed())
            return run_capacity(ctf_path, snr_db_list, normalization, out_path);

        throw std::invalid_argument("no subcommand given");
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() != 0)
            std::cerr << "error: " << e.what() << "\n";
        return app.exit(e, std::cout, std::cerr);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace oamchan
