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

#include "oamchan/sage.hpp"

#include <algorithm>
#include <cmath>

namespace oamchan
{

namespace
{

struct search_grids
{
    std::vector<double> delay_fine;
    std::vector<double> delay_scan; // decimated grid for per-angle delay profiling
    std::vector<double> theta_fine, phi_fine;
    std::vector<double> theta_coarse, phi_coarse;
    double delay_cell = 0.0;
    double delay_scan_step = 0.0;
    double angle_cell = 0.0;
};

std::vector<double> linear_grid(double lo, double hi, double step)
{
    std::vector<double> g;
    for (double v = lo; v <= hi + 1e-15 * std::max(1.0, std::abs(hi)); v += step)
        g.push_back(v);
    if (g.empty())
        g.push_back(lo);
    return g;
}

search_grids make_grids(const sage_config &config, const frequency_grid &grid)
{
    if (!(config.delay_grid_s > 0.0) || !(config.angle_grid_rad > 0.0))
        throw std::invalid_argument("SAGE grid resolutions must be positive");
    if (config.n_paths < 1 || config.max_iter < 1)
        throw std::invalid_argument("SAGE needs n_paths >= 1 and max_iter >= 1");

    search_grids g;
    g.delay_cell = config.delay_grid_s;
    g.angle_cell = config.angle_grid_rad;

    double delay_max = config.delay_max_s;
    if (delay_max <= 0.0)
        delay_max = (grid.spacing_hz() > 0.0) ? 1.0 / grid.spacing_hz() - config.delay_grid_s
                                              : config.delay_min_s;
    g.delay_fine = linear_grid(config.delay_min_s, delay_max, config.delay_grid_s);

    g.delay_scan_step =
        (config.coarse_delay_grid_s > 0.0) ? config.coarse_delay_grid_s : 2.0 * config.delay_grid_s;
    g.delay_scan = linear_grid(config.delay_min_s, delay_max, g.delay_scan_step);

    g.theta_fine = linear_grid(0.0, pi, config.angle_grid_rad);
    g.phi_fine = linear_grid(0.0, two_pi - 0.5 * config.angle_grid_rad, config.angle_grid_rad);

    const double ca = config.coarse_angle_grid_rad > 0.0 ? config.coarse_angle_grid_rad
                                                         : 6.0 * config.angle_grid_rad;
    g.theta_coarse = linear_grid(0.5 * ca, pi - 0.25 * ca, ca);
    g.phi_coarse = linear_grid(0.5 * ca, two_pi - 0.5 * ca, ca);
    return g;
}

// All per-call scratch for matched-filter evaluations against one residual.
class matched_filter
{
  public:
    matched_filter(const ctf &residual, const link_config &link)
        : residual_(residual), link_(link), n_r_(residual.n_r()), n_t_(residual.n_t()),
          n_f_(residual.n_f()), freqs_(residual.grid.points_hz)
    {
        norm_b_ = double(n_r_ * n_t_ * n_f_);
    }

    // Sum over rx modes of residual * conj(rx factor): n_t x n_f
    arma::cx_mat project_rx(const arma::cx_mat &rx_factor) const
    {
        arma::cx_mat g(n_t_, n_f_, arma::fill::zeros);
        for (std::size_t k = 0; k < n_f_; ++k)
            for (std::size_t it = 0; it < n_t_; ++it)
            {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t ir = 0; ir < n_r_; ++ir)
                    acc += residual_.values(ir, it, k) * std::conj(rx_factor(ir, k));
                g(it, k) = acc;
            }
        return g;
    }

    // Sum over tx modes of residual * conj(tx factor): n_r x n_f
    arma::cx_mat project_tx(const arma::cx_mat &tx_factor) const
    {
        arma::cx_mat g(n_r_, n_f_, arma::fill::zeros);
        for (std::size_t k = 0; k < n_f_; ++k)
            for (std::size_t ir = 0; ir < n_r_; ++ir)
            {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t it = 0; it < n_t_; ++it)
                    acc += residual_.values(ir, it, k) * std::conj(tx_factor(it, k));
                g(ir, k) = acc;
            }
        return g;
    }

    // val_k = sum over the remaining mode axis of a projection times conj(side factor)
    arma::cx_vec combine(const arma::cx_mat &projection, const arma::cx_mat &factor) const
    {
        const std::size_t n_axis = factor.n_rows;
        arma::cx_vec val(n_f_, arma::fill::zeros);
        for (std::size_t k = 0; k < n_f_; ++k)
        {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t n = 0; n < n_axis; ++n)
                acc += projection(n, k) * std::conj(factor(n, k));
            val[k] = acc;
        }
        return val;
    }

    // correlation <residual, b(tau)> from the angle-projected series
    std::complex<double> correlate(const arma::cx_vec &val, double tau_s) const
    {
        std::complex<double> corr{0.0, 0.0};
        for (std::size_t k = 0; k < n_f_; ++k)
        {
            const double phase = two_pi * freqs_[k] * tau_s;
            corr += val[k] * std::complex<double>{std::cos(phase), std::sin(phase)};
        }
        return corr;
    }

    double objective(const arma::cx_vec &val, double tau_s) const
    {
        return std::norm(correlate(val, tau_s)) / norm_b_;
    }

    // Full five-parameter objective evaluation (used by refinement).
    double objective_full(double tau_s, double theta_t, double phi_t, double theta_r,
                          double phi_r) const
    {
        const arma::cx_mat tx = detail::tx_side_factor(link_, theta_t, phi_t);
        if (arma::accu(arma::abs(tx)) == 0.0)
            return 0.0;
        const arma::cx_mat rx = detail::rx_side_factor(link_, theta_r, phi_r);
        if (arma::accu(arma::abs(rx)) == 0.0)
            return 0.0;
        const arma::cx_vec val = combine(project_rx(rx), tx);
        return objective(val, tau_s);
    }

    double norm_b() const { return norm_b_; }
    const std::vector<double> &freqs() const { return freqs_; }
    const link_config &link() const { return link_; }

  private:
    const ctf &residual_;
    const link_config &link_;
    std::size_t n_r_, n_t_, n_f_;
    std::vector<double> freqs_;
    double norm_b_;
};

// One round of parabolic sharpening around x0 with shrinking step; keeps the
// best point seen. objective is maximized. Moves require an improvement above
// round-off so a point already at the maximum stays put bit-exactly.
template <typename F>
double refine_parabolic(F &&objective, double x0, double step, std::size_t passes, double lo,
                        double hi)
{
    double best_x = x0;
    double best_f = objective(x0);
    double h = step;
    const auto improves = [&](double f) { return f > best_f * (1.0 + 1e-12) + 1e-300; };
    for (std::size_t pass = 0; pass < passes; ++pass)
    {
        const double xl = std::max(lo, best_x - h);
        const double xr = std::min(hi, best_x + h);
        const double fl = objective(xl);
        const double fr = objective(xr);

        if (improves(fl) && fl >= fr)
        {
            best_x = xl;
            best_f = fl;
        }
        else if (improves(fr))
        {
            best_x = xr;
            best_f = fr;
        }
        else
        {
            // parabola through (xl, fl), (best_x, best_f), (xr, fr)
            const double denom = (fl - 2.0 * best_f + fr);
            if (denom < 0.0)
            {
                const double offset = 0.5 * (fl - fr) / denom * h;
                const double cand = std::clamp(best_x + offset, xl, xr);
                const double fc = objective(cand);
                if (improves(fc))
                {
                    best_x = cand;
                    best_f = fc;
                }
            }
        }
        h *= 0.25;
    }
    return best_x;
}

struct delay_update_result
{
    double tau = 0.0;
    double objective = 0.0;
};

delay_update_result update_delay(const matched_filter &mf, const arma::cx_vec &val,
                                 const std::vector<double> &delay_grid, double current_tau,
                                 std::size_t refine_steps, double cell)
{
    double best_tau = current_tau;
    double best_obj = mf.objective(val, current_tau);
    for (const double tau : delay_grid)
    {
        const double obj = mf.objective(val, tau);
        if (obj > best_obj)
        {
            best_obj = obj;
            best_tau = tau;
        }
    }
    const double lo = delay_grid.front();
    const double hi = std::max(delay_grid.back(), current_tau);
    best_tau = refine_parabolic([&](double t) { return mf.objective(val, t); }, best_tau, cell,
                                refine_steps, lo, hi);
    return {best_tau, mf.objective(val, best_tau)};
}

struct angle_update_result
{
    double theta = 0.0;
    double phi = 0.0;
    double tau = 0.0;
    double objective = 0.0;
};

// Joint grid scan plus axis-wise refinement for one side's (theta, phi).
// Array-center phases fold direction changes into an effective delay shift, so
// each angle candidate is scored at its own best delay (profiled over a
// decimated delay grid); scoring at a fixed delay traps the sweep in joint
// (delay, angle) local optima.
template <typename MakeFactor>
angle_update_result update_angles(const matched_filter &mf, const arma::cx_mat &projection,
                                  MakeFactor &&make_factor, const search_grids &grids,
                                  double tau_in, double cur_theta, double cur_phi,
                                  std::size_t refine_steps)
{
    const double tau_lo = grids.delay_fine.front();
    const double tau_hi = grids.delay_fine.back();

    const auto eval = [&](double theta, double phi) -> std::pair<double, double> {
        const arma::cx_mat factor = make_factor(theta, phi);
        if (arma::accu(arma::abs(factor)) == 0.0)
            return {0.0, tau_in};
        const arma::cx_vec val = mf.combine(projection, factor);

        double best_tau = tau_in;
        double best = mf.objective(val, tau_in);
        for (const double tau : grids.delay_scan)
        {
            const double obj = mf.objective(val, tau);
            if (obj > best)
            {
                best = obj;
                best_tau = tau;
            }
        }
        best_tau = refine_parabolic([&](double t) { return mf.objective(val, t); }, best_tau,
                                    grids.delay_scan_step, 2, tau_lo, tau_hi);
        return {mf.objective(val, best_tau), best_tau};
    };

    double best_theta = cur_theta;
    double best_phi = cur_phi;
    auto [best_obj, best_tau] = eval(cur_theta, cur_phi);

    for (const double theta : grids.theta_fine)
        for (const double phi : grids.phi_fine)
        {
            const auto [obj, tau] = eval(theta, phi);
            if (obj > best_obj)
            {
                best_obj = obj;
                best_theta = theta;
                best_phi = phi;
                best_tau = tau;
            }
        }

    for (std::size_t pass = 0; pass < refine_steps; ++pass)
    {
        best_theta = refine_parabolic([&](double th) { return eval(th, best_phi).first; },
                                      best_theta, grids.angle_cell, 1, 0.0, pi);
        best_phi =
            refine_parabolic([&](double ph) { return eval(best_theta, wrap_azimuth(ph)).first; },
                             best_phi, grids.angle_cell, 1, best_phi - pi, best_phi + pi);
        best_phi = wrap_azimuth(best_phi);
    }
    const auto [obj, tau] = eval(best_theta, best_phi);
    return {best_theta, wrap_azimuth(best_phi), tau, obj};
}

mpc_params m_step_impl(const ctf &residual, const mpc_params &current, const link_config &link,
                       const sage_config &config, const search_grids &grids)
{
    const matched_filter mf(residual, link);

    mpc_params upd = current;
    upd.phi_t_rad = wrap_azimuth(upd.phi_t_rad);
    upd.phi_r_rad = wrap_azimuth(upd.phi_r_rad);
    upd.theta_t_rad = clip_elevation(upd.theta_t_rad);
    upd.theta_r_rad = clip_elevation(upd.theta_r_rad);

    // ---- delay ----
    {
        const arma::cx_mat tx = detail::tx_side_factor(link, upd.theta_t_rad, upd.phi_t_rad);
        const arma::cx_mat rx = detail::rx_side_factor(link, upd.theta_r_rad, upd.phi_r_rad);
        if (arma::accu(arma::abs(tx)) > 0.0 && arma::accu(arma::abs(rx)) > 0.0)
        {
            const arma::cx_vec val = mf.combine(mf.project_rx(rx), tx);
            upd.tau_s = update_delay(mf, val, grids.delay_fine, upd.tau_s, config.refine_steps,
                                     grids.delay_cell)
                            .tau;
        }
        else
        {
            // current angles are gated; fall back to the best delay of the
            // strongest available direction pair later in the angle sweeps
            upd.tau_s = std::max(upd.tau_s, config.delay_min_s);
        }
    }

    // ---- departure angles (delay profiled per candidate) ----
    {
        const arma::cx_mat rx = detail::rx_side_factor(link, upd.theta_r_rad, upd.phi_r_rad);
        if (arma::accu(arma::abs(rx)) > 0.0)
        {
            const arma::cx_mat projection = mf.project_rx(rx);
            const auto res = update_angles(
                mf, projection,
                [&](double th, double ph) { return detail::tx_side_factor(link, th, ph); }, grids,
                upd.tau_s, upd.theta_t_rad, upd.phi_t_rad, config.refine_steps);
            upd.theta_t_rad = res.theta;
            upd.phi_t_rad = res.phi;
            upd.tau_s = res.tau;
        }
    }

    // ---- arrival angles (delay profiled per candidate) ----
    {
        const arma::cx_mat tx = detail::tx_side_factor(link, upd.theta_t_rad, upd.phi_t_rad);
        if (arma::accu(arma::abs(tx)) > 0.0)
        {
            const arma::cx_mat projection = mf.project_tx(tx);
            const auto res = update_angles(
                mf, projection,
                [&](double th, double ph) { return detail::rx_side_factor(link, th, ph); }, grids,
                upd.tau_s, upd.theta_r_rad, upd.phi_r_rad, config.refine_steps);
            upd.theta_r_rad = res.theta;
            upd.phi_r_rad = res.phi;
            upd.tau_s = res.tau;
        }
    }

    // ---- closed-form gain at the maximizing point ----
    {
        const arma::cx_mat tx = detail::tx_side_factor(link, upd.theta_t_rad, upd.phi_t_rad);
        const arma::cx_mat rx = detail::rx_side_factor(link, upd.theta_r_rad, upd.phi_r_rad);
        if (arma::accu(arma::abs(tx)) > 0.0 && arma::accu(arma::abs(rx)) > 0.0)
        {
            const arma::cx_vec val = mf.combine(mf.project_rx(rx), tx);
            upd.alpha = mf.correlate(val, upd.tau_s) / mf.norm_b();
        }
        else
        {
            upd.alpha = {0.0, 0.0};
        }
    }
    return upd;
}

double tensor_energy(const arma::cx_cube &c)
{
    double e = 0.0;
    const std::complex<double> *p = c.memptr();
    for (std::size_t i = 0; i < c.n_elem; ++i)
        e += std::norm(p[i]);
    return e;
}

void check_shapes(const ctf &h, const link_config &link)
{
    validate(link);
    if (h.n_r() != link.rx_modes.n_elements || h.n_t() != link.tx_modes.n_elements ||
        h.n_f() != link.grid.n_points())
        throw std::invalid_argument("CTF shape does not match the link configuration");
}

} // namespace

namespace
{

// Side factors on the coarse angle grid are residual-independent; build once.
struct angle_factor
{
    double theta, phi;
    arma::cx_mat factor;
    bool live;
};

struct coarse_tables
{
    std::vector<angle_factor> tx, rx;
};

coarse_tables build_coarse_tables(const link_config &link, const search_grids &grids)
{
    coarse_tables tables;
    for (const double th : grids.theta_coarse)
        for (const double ph : grids.phi_coarse)
        {
            arma::cx_mat t = detail::tx_side_factor(link, th, ph);
            const bool live_t = arma::accu(arma::abs(t)) > 0.0;
            tables.tx.push_back({th, ph, std::move(t), live_t});
            arma::cx_mat r = detail::rx_side_factor(link, th, ph);
            const bool live_r = arma::accu(arma::abs(r)) > 0.0;
            tables.rx.push_back({th, ph, std::move(r), live_r});
        }
    return tables;
}

// Strongest single path in a residual: coarse joint (angles, delay) scan
// followed by fine coordinate rounds.
mpc_params sic_pick_path(const ctf &residual, const link_config &link, const sage_config &config,
                         const search_grids &grids, const coarse_tables &tables)
{
    const matched_filter mf(residual, link);

    mpc_params best;
    double best_obj = -1.0;
    for (const auto &rx : tables.rx)
    {
        if (!rx.live)
            continue;
        const arma::cx_mat projection = mf.project_rx(rx.factor);
        for (const auto &tx : tables.tx)
        {
            if (!tx.live)
                continue;
            const arma::cx_vec val = mf.combine(projection, tx.factor);
            for (const double tau : grids.delay_scan)
            {
                const double obj = mf.objective(val, tau);
                if (obj > best_obj)
                {
                    best_obj = obj;
                    best.tau_s = tau;
                    best.theta_t_rad = tx.theta;
                    best.phi_t_rad = tx.phi;
                    best.theta_r_rad = rx.theta;
                    best.phi_r_rad = rx.phi;
                }
            }
        }
    }
    if (best_obj < 0.0)
        throw std::runtime_error("SAGE initialization found no admissible direction");

    // sharpen on the fine grids against the same residual
    mpc_params refined = best;
    for (int round = 0; round < 3; ++round)
        refined = m_step_impl(residual, refined, link, config, grids);
    return refined;
}

} // namespace

std::vector<mpc_params> sage_initialize(const ctf &h, const link_config &link,
                                        const sage_config &config)
{
    check_shapes(h, link);
    const search_grids grids = make_grids(config, link.grid);

    if (!(tensor_energy(h.values) > 0.0))
        throw std::invalid_argument("cannot initialize SAGE on an all-zero CTF");

    const coarse_tables tables = build_coarse_tables(link, grids);

    ctf residual = h;
    std::vector<mpc_params> found;
    found.reserve(config.n_paths);
    for (std::size_t p = 0; p < config.n_paths; ++p)
    {
        const mpc_params picked = sic_pick_path(residual, link, config, grids, tables);
        found.push_back(picked);
        const ctf part = mpc_ctf(picked, link);
        residual.values -= part.values;
    }
    return found;
}

ctf sage_e_step(const ctf &h, const std::vector<mpc_params> &mpcs, std::size_t path_index,
                const link_config &link)
{
    check_shapes(h, link);
    if (path_index >= mpcs.size())
        throw std::invalid_argument("E-step path index out of range");

    ctf residual = h;
    for (std::size_t j = 0; j < mpcs.size(); ++j)
    {
        if (j == path_index)
            continue;
        const ctf part = mpc_ctf(mpcs[j], link);
        residual.values -= part.values;
    }
    return residual;
}

mpc_params sage_m_step(const ctf &residual, const mpc_params &current, const link_config &link,
                       const sage_config &config)
{
    check_shapes(residual, link);
    const search_grids grids = make_grids(config, link.grid);
    return m_step_impl(residual, current, link, config, grids);
}

sage_result sage_estimate(const ctf &h, const link_config &link, const sage_config &config)
{
    return sage_estimate(h, link, config, sage_initialize(h, link, config));
}

sage_result sage_estimate(const ctf &h, const link_config &link, const sage_config &config,
                          std::vector<mpc_params> initial)
{
    check_shapes(h, link);
    if (!h.values.is_finite())
        throw std::invalid_argument("CTF contains non-finite entries");
    const search_grids grids = make_grids(config, link.grid);

    const double total_energy = tensor_energy(h.values);
    if (!(total_energy > 0.0))
        throw std::invalid_argument("cannot run SAGE on an all-zero CTF");

    sage_result out;
    out.mpcs = std::move(initial);
    if (out.mpcs.empty())
        throw std::invalid_argument("SAGE needs at least one initial path");

    ctf model = synthesize_ctf(out.mpcs, link);

    const auto azim_delta = [](double a, double b) {
        const double d = std::abs(wrap_azimuth(a) - wrap_azimuth(b));
        return std::min(d, two_pi - d);
    };

    // cyclic E/M sweeps until the largest parameter move drops below tolerance
    const auto run_em_sweeps = [&]() -> bool {
        for (std::size_t iter = 1; iter <= config.max_iter; ++iter)
        {
            double max_delta_cells = 0.0;
            for (std::size_t l = 0; l < out.mpcs.size(); ++l)
            {
                // admissible data for path l, from the running model sum
                ctf residual = h;
                residual.values -= model.values;
                const ctf old_part = mpc_ctf(out.mpcs[l], link);
                residual.values += old_part.values;

                const mpc_params updated = m_step_impl(residual, out.mpcs[l], link, config, grids);

                const ctf new_part = mpc_ctf(updated, link);
                model.values += new_part.values - old_part.values;

                const mpc_params &prev = out.mpcs[l];
                max_delta_cells = std::max(
                    {max_delta_cells, std::abs(updated.tau_s - prev.tau_s) / grids.delay_cell,
                     std::abs(updated.theta_t_rad - prev.theta_t_rad) / grids.angle_cell,
                     std::abs(updated.theta_r_rad - prev.theta_r_rad) / grids.angle_cell,
                     azim_delta(updated.phi_t_rad, prev.phi_t_rad) / grids.angle_cell,
                     azim_delta(updated.phi_r_rad, prev.phi_r_rad) / grids.angle_cell});
                out.mpcs[l] = updated;
            }

            model = synthesize_ctf(out.mpcs, link); // re-sum to shed incremental round-off
            ++out.iterations_run;
            if (max_delta_cells < config.converge_tol)
                return true;
        }
        return false;
    };

    // final gain refresh with parameters frozen: cyclic least-squares passes that
    // leave each per-path residual orthogonal to its own signal
    const auto refresh_gains = [&]() {
        for (int pass = 0; pass < 2; ++pass)
        {
            for (std::size_t l = 0; l < out.mpcs.size(); ++l)
            {
                mpc_params unit = out.mpcs[l];
                unit.alpha = {1.0, 0.0};
                const ctf basis = mpc_ctf(unit, link);
                const double basis_energy = tensor_energy(basis.values);
                if (!(basis_energy > 0.0))
                    continue;

                ctf residual = h;
                residual.values -= model.values;
                residual.values += out.mpcs[l].alpha * basis.values;

                std::complex<double> inner{0.0, 0.0};
                for (std::size_t i = 0; i < basis.values.n_elem; ++i)
                    inner += residual.values.memptr()[i] * std::conj(basis.values.memptr()[i]);
                const std::complex<double> alpha_new = inner / basis_energy;

                model.values += (alpha_new - out.mpcs[l].alpha) * basis.values;
                out.mpcs[l].alpha = alpha_new;
            }
            model = synthesize_ctf(out.mpcs, link);
        }
    };

    const auto current_residual_power = [&]() {
        ctf residual = h;
        residual.values -= model.values;
        return tensor_energy(residual.values) / total_energy;
    };

    out.converged = run_em_sweeps();
    refresh_gains();
    out.residual_power = current_residual_power();

    // re-seed the weakest path from the unexplained residual when the fit is
    // poor; keep the rescue only if it lowers the residual
    std::size_t rescue_left = config.rescue_rounds;
    while (out.residual_power > config.rescue_threshold && rescue_left-- > 0)
    {
        std::size_t weakest = 0;
        for (std::size_t l = 1; l < out.mpcs.size(); ++l)
            if (std::abs(out.mpcs[l].alpha) < std::abs(out.mpcs[weakest].alpha))
                weakest = l;

        ctf residual = h;
        residual.values -= model.values;
        const ctf weak_part = mpc_ctf(out.mpcs[weakest], link);
        residual.values += weak_part.values;
        if (!(tensor_energy(residual.values) > 0.0))
            break;

        const sage_result snapshot = out;
        const coarse_tables tables = build_coarse_tables(link, grids);
        out.mpcs[weakest] = sic_pick_path(residual, link, config, grids, tables);
        model = synthesize_ctf(out.mpcs, link);

        out.converged = run_em_sweeps();
        refresh_gains();
        out.residual_power = current_residual_power();

        if (out.residual_power >= snapshot.residual_power)
        {
            const std::size_t iters = out.iterations_run;
            out = snapshot;
            out.iterations_run = iters;
            model = synthesize_ctf(out.mpcs, link);
            break;
        }
    }
    return out;
}

} // namespace oamchan
