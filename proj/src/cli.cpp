#include "hystwave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

namespace hystwave {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_num(const std::string& s) {
    const std::string t = trim(s);
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0')
        throw incompatible_data{"config: cannot parse number '" + t + "'"};
    return v;
}

std::vector<double> parse_num_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(parse_num(tok));
    return out;
}

memory_curve curve_from_values(const triangle& tri, const std::vector<double>& vals) {
    memory_curve c = virgin(tri);
    for (double v : vals) c = apply_monotone(c, v).first;
    return c;
}

struct raw_section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> kv;
};

const std::string* find_key(const raw_section& sec, const std::string& key) {
    for (const auto& [k, v] : sec.kv)
        if (k == key) return &v;
    return nullptr;
}

double need_num(const raw_section& sec, const std::string& key) {
    const std::string* v = find_key(sec, key);
    if (!v)
        throw incompatible_data{"config: [" + sec.name + "] is missing '" + key + "'"};
    return parse_num(*v);
}

memory_curve section_curve(const raw_section& sec, const triangle& tri) {
    const std::string* lit = find_key(sec, "curve");
    const std::string* sig = find_key(sec, "signal");
    if ((lit != nullptr) == (sig != nullptr))
        throw incompatible_data{"config: [" + sec.name +
                                "] needs exactly one of 'curve' or 'signal'"};
    if (lit) {
        memory_curve c = curve_from_string(*lit);
        if (c.tri.a != tri.a)
            throw incompatible_data{"config: curve triangle differs from 'a'"};
        return c;
    }
    return curve_from_values(tri, parse_num_list(*sig));
}

void check_known_keys(const raw_section& sec, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : sec.kv) {
        bool ok = false;
        for (const char* a : keys) ok = ok || (k == a);
        if (!ok)
            throw incompatible_data{"config: unknown key '" + k + "' in [" + sec.name + "]"};
    }
}

void check_partition(const std::vector<double>& lefts, const std::vector<double>& rights,
                     const char* what) {
    for (size_t i = 0; i < lefts.size(); ++i) {
        if (!(lefts[i] < rights[i]))
            throw incompatible_data{std::string("config: ") + what +
                                    " piece has x_left >= x_right"};
        if (i > 0 && rights[i - 1] != lefts[i])
            throw incompatible_data{std::string("config: ") + what +
                                    " pieces do not tile an interval"};
    }
}

} // namespace

scenario_config parse_config_text(const std::string& text) {
    scenario_config cfg;
    raw_section top{"", {}};
    std::vector<raw_section> sections;
    {
        raw_section* cur = &top;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw incompatible_data{"config: malformed section header '" + line + "'"};
                sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
                cur = &sections.back();
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw incompatible_data{"config: expected 'key = value' in '" + line + "'"};
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (key.empty())
                throw incompatible_data{"config: empty key in '" + line + "'"};
            cur->kv.emplace_back(key, val);
        }
    }

    for (const auto& [k, v] : top.kv) {
        if (k == "a") cfg.a = parse_num(v);
        else if (k == "n") cfg.n = static_cast<int>(parse_num(v));
        else if (k == "t_end") cfg.t_end = parse_num(v);
        else if (k == "checkpoints") cfg.checkpoints = parse_num_list(v);
        else if (k == "out") cfg.out_dir = v;
        else if (k == "event_cap") cfg.event_cap = static_cast<long>(parse_num(v));
        else if (k == "seed") cfg.seed = static_cast<unsigned long>(parse_num(v));
        else throw incompatible_data{"config: unknown key '" + k + "'"};
    }
    if (!(cfg.a > 0)) throw incompatible_data{"config: 'a' must be positive"};
    if (cfg.n < 0) throw incompatible_data{"config: 'n' must be nonnegative"};
    if (!(cfg.t_end > 0)) throw incompatible_data{"config: 't_end' must be positive"};
    if (cfg.event_cap <= 0) throw incompatible_data{"config: 'event_cap' must be positive"};

    const triangle tri{cfg.a};
    for (const raw_section& sec : sections) {
        if (sec.name == "u_piece") {
            check_known_keys(sec, {"x_left", "x_right", "u"});
            cfg.u_pieces.push_back({need_num(sec, "x_left"), need_num(sec, "x_right"),
                                    need_num(sec, "u")});
        } else if (sec.name == "curve_piece") {
            check_known_keys(sec, {"x_left", "x_right", "curve", "signal"});
            cfg.curve_pieces.push_back({need_num(sec, "x_left"), need_num(sec, "x_right"),
                                        section_curve(sec, tri)});
        } else if (sec.name == "probe") {
            check_known_keys(sec, {"k", "curve", "signal"});
            entropy_probe p{need_num(sec, "k"), section_curve(sec, tri)};
            if (p.k_hat.anchor != p.k)
                throw incompatible_data{"config: probe curve anchor must equal k"};
            cfg.probes.push_back(std::move(p));
        } else {
            throw incompatible_data{"config: unknown section [" + sec.name + "]"};
        }
    }

    if (cfg.u_pieces.empty())
        throw incompatible_data{"config: at least one [u_piece] is required"};
    if (cfg.curve_pieces.empty())
        throw incompatible_data{"config: at least one [curve_piece] is required"};
    {
        std::vector<double> l, r;
        for (const auto& p : cfg.u_pieces) { l.push_back(p.x_left); r.push_back(p.x_right); }
        check_partition(l, r, "u");
        l.clear(); r.clear();
        for (const auto& p : cfg.curve_pieces) { l.push_back(p.x_left); r.push_back(p.x_right); }
        check_partition(l, r, "curve");
    }
    for (double t : cfg.checkpoints)
        if (!(t >= 0) || !(t <= cfg.t_end))
            throw incompatible_data{"config: checkpoint outside [0, t_end]"};
    return cfg;
}

scenario_config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw incompatible_data{"config: cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

initial_datum config_to_datum(const scenario_config& cfg) {
    std::vector<double> bs;
    for (size_t i = 1; i < cfg.u_pieces.size(); ++i) bs.push_back(cfg.u_pieces[i].x_left);
    for (size_t i = 1; i < cfg.curve_pieces.size(); ++i) bs.push_back(cfg.curve_pieces[i].x_left);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    auto u_at = [&](double x) {
        for (const auto& p : cfg.u_pieces)
            if (x < p.x_right) return p.u;
        return cfg.u_pieces.back().u;
    };
    auto curve_at = [&](double x) -> const memory_curve& {
        for (const auto& p : cfg.curve_pieces)
            if (x < p.x_right) return p.curve;
        return cfg.curve_pieces.back().curve;
    };

    initial_datum d;
    d.boundaries = bs;
    const size_t cells = bs.size() + 1;
    for (size_t i = 0; i < cells; ++i) {
        double mid;
        if (bs.empty()) mid = 0;
        else if (i == 0) mid = bs.front() - 1;
        else if (i == bs.size()) mid = bs.back() + 1;
        else mid = 0.5 * (bs[i - 1] + bs[i]);
        d.u.push_back(u_at(mid));
        d.curves.push_back(curve_at(mid));
    }
    return d;
}

// ---------------------------------------------------------------------------
// emission helpers
// ---------------------------------------------------------------------------

namespace {

std::filesystem::path ensure_out(const scenario_config& cfg) {
    std::filesystem::path p(cfg.out_dir);
    if (!p.empty()) std::filesystem::create_directories(p);
    return p;
}

std::string fmt_time_token(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw incompatible_data{"cannot write '" + path.string() + "'"};
    out << content;
}

const char* events_header = "time,position,kind,fronts_in,fronts_out\n";

std::string events_csv(const trajectory& traj) {
    std::string s = events_header;
    for (const traj_event& e : traj.events) {
        s += fmt_g17(e.time);
        s += ',';
        s += fmt_g17(e.position);
        s += ',';
        s += e.kind;
        s += ',';
        s += std::to_string(e.fronts_in);
        s += ',';
        s += std::to_string(e.fronts_out);
        s += '\n';
    }
    return s;
}

std::string snapshot_csv(const piecewise_state& st) {
    std::string s = "x_left,x_right,u,w\n";
    const double inf = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < st.cells.size(); ++i) {
        double xl = (i == 0) ? -inf : st.fronts[i - 1].position;
        double xr = (i + 1 == st.cells.size()) ? inf : st.fronts[i].position;
        s += fmt_g17(xl);
        s += ',';
        s += fmt_g17(xr);
        s += ',';
        s += fmt_g17(st.cells[i].u);
        s += ',';
        s += fmt_g17(st.cells[i].w);
        s += '\n';
    }
    return s;
}

std::string snapshot_curves(const piecewise_state& st) {
    std::string s;
    for (const cell& c : st.cells) {
        s += curve_to_string(c.curve);
        s += '\n';
    }
    return s;
}

std::vector<double> checkpoint_list(const scenario_config& cfg) {
    if (!cfg.checkpoints.empty()) return cfg.checkpoints;
    return {cfg.t_end};
}

} // namespace

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_riemann(const scenario_config& cfg) {
    initial_datum d = config_to_datum(cfg);
    std::vector<double> us{d.u[0]};
    std::vector<memory_curve> cs{d.curves[0]};
    for (size_t i = 1; i < d.u.size(); ++i) {
        if (d.u[i] == us.back() && d.curves[i] == cs.back()) continue;
        us.push_back(d.u[i]);
        cs.push_back(d.curves[i]);
    }
    if (us.size() > 2)
        throw incompatible_data{"riemann: configuration has more than one jump"};
    const bool trivial = us.size() == 1;
    riemann_data rd = trivial
        ? riemann_data{us[0], us[0], cs[0], cs[0]}
        : riemann_data{us[0], us[1], cs[0], cs[1]};
    riemann_fan fan = solve_riemann(rd);

    std::string fan_csv = "piece_index,slowness_lo,slowness_hi,kind,params\n";
    if (!trivial) {
        int idx = 0;
        for (const fan_piece& p : fan.pieces) {
            fan_csv += std::to_string(idx++);
            fan_csv += ',';
            fan_csv += fmt_g17(p.s_lo);
            fan_csv += ',';
            fan_csv += fmt_g17(p.s_hi);
            if (p.rarefaction) {
                fan_csv += ",rarefaction,gov=" + fmt_g17(p.gov) +
                           " diagonal=" + (p.diagonal ? std::string("1") : std::string("0")) +
                           " dir=" + fmt_g17(p.dir);
            } else {
                fan_csv += ",const,u=" + fmt_g17(p.u_const);
            }
            fan_csv += '\n';
        }
        if (fan.stationary_jump) {
            fan_csv += std::to_string(idx);
            fan_csv += ",0,0,stationary_jump,zstar=" + curve_to_string(fan.z_star) + '\n';
        }
    }

    std::string profile = "xi,u,w\n";
    double B = 2;
    for (const fan_piece& p : fan.pieces)
        if (std::isfinite(p.s_lo)) B = std::max(B, p.s_lo + 1);
    for (int j = 1; j <= 256; ++j) {
        double xi = B * static_cast<double>(j) / 256.0;
        auto [u, curve] = evaluate_fan(fan, xi, rd.curve_right);
        profile += fmt_g17(xi);
        profile += ',';
        profile += fmt_g17(u);
        profile += ',';
        profile += fmt_g17(output_w(curve));
        profile += '\n';
    }

    auto out = ensure_out(cfg);
    write_file(out / "fan.csv", fan_csv);
    write_file(out / "profile.csv", profile);
    return 0;
}

int cmd_cauchy(const scenario_config& cfg) {
    initial_datum d = config_to_datum(cfg);
    piecewise_state st0 = discretize_initial(d, cfg.n);
    grid_params gp{cfg.n, cfg.a, cfg.t_end, cfg.event_cap};
    trajectory traj = evolve(st0, gp, checkpoint_list(cfg));

    auto out = ensure_out(cfg);
    write_file(out / "events.csv", events_csv(traj));
    for (const auto& [t, snap] : traj.checkpoints) {
        const std::string tok = fmt_time_token(t);
        write_file(out / ("snapshot_" + tok + ".csv"), snapshot_csv(snap));
        write_file(out / ("snapshot_" + tok + "_curves.txt"), snapshot_curves(snap));
    }
    return 0;
}

namespace {

struct check_row {
    std::string name;
    double value = 0;
    double bound = 0;
    bool pass = false;
};

int count_u_fronts(const piecewise_state& st) {
    int c = 0;
    for (const front& f : st.fronts)
        if (f.kind == front_kind::u_shock) ++c;
    return c;
}

} // namespace

int cmd_verify(const scenario_config& cfg, const std::string& replay_dir,
               bool corrupt_speed) {
    initial_datum d = config_to_datum(cfg);
    piecewise_state st0 = discretize_initial(d, cfg.n);
    grid_params gp{cfg.n, cfg.a, cfg.t_end, cfg.event_cap};
    const std::vector<double> cps = checkpoint_list(cfg);
    trajectory traj = evolve(st0, gp, cps);

    if (!replay_dir.empty()) {
        std::ifstream in(std::filesystem::path(replay_dir) / "events.csv",
                         std::ios::binary);
        if (!in) {
            std::cerr << "verify: cannot open replay events.csv\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string stored = buf.str();
        if (stored.rfind(events_header, 0) != 0) {
            std::cerr << "verify: replay events.csv has an unexpected header\n";
            return 2;
        }
        if (stored != events_csv(traj)) {
            std::cerr << "verify: replay mismatch against stored events\n";
            return 1;
        }
    }

    if (corrupt_speed) {
        for (traj_phase& ph : traj.phases) {
            bool done = false;
            for (front& f : ph.state.fronts)
                if (f.kind == front_kind::u_shock) {
                    f.speed *= 1.0078125;
                    done = true;
                    break;
                }
            if (done) break;
        }
    }

    std::vector<check_row> rows;
    const double h = grid_step(cfg.n);

    { // u-front count never grows across an event
        double worst = 0;
        for (size_t p = 0; p + 1 < traj.phases.size(); ++p)
            worst = std::max(worst,
                             static_cast<double>(count_u_fronts(traj.phases[p + 1].state) -
                                                 count_u_fronts(traj.phases[p].state)));
        rows.push_back({"front_count_monotone", worst, 0, worst <= 0});
    }
    { // total variation of u and of z, phase over phase
        double worst_u = 0, worst_z = 0;
        for (size_t p = 0; p + 1 < traj.phases.size(); ++p) {
            worst_u = std::max(worst_u, total_variation_u(traj.phases[p + 1].state) -
                                        total_variation_u(traj.phases[p].state));
            worst_z = std::max(worst_z, total_variation_z(traj.phases[p + 1].state) -
                                        total_variation_z(traj.phases[p].state));
        }
        rows.push_back({"tv_u", worst_u, 1e-12, worst_u <= 1e-12});
        rows.push_back({"tv_z", worst_z, 1e-10, worst_z <= 1e-10});
    }
    try { // mass conservation (skipped when the tails differ)
        double m0 = mass(traj.phases.front().state);
        double worst = 0;
        for (const traj_phase& p : traj.phases)
            worst = std::max(worst, std::fabs(mass(p.state) - m0));
        rows.push_back({"mass_drift", worst, 1e-10, worst <= 1e-10});
    } catch (const unbounded_support&) {
    }
    { // Rankine-Hugoniot residual on every front of every phase
        double worst = 0;
        for (const traj_phase& p : traj.phases) {
            const piecewise_state& st = p.state;
            for (size_t k = 0; k < st.fronts.size(); ++k) {
                double du = st.cells[k + 1].u - st.cells[k].u;
                double dw = st.cells[k + 1].w - st.cells[k].w;
                worst = std::max(worst,
                                 std::fabs(st.fronts[k].speed * (du + dw) - du));
            }
        }
        rows.push_back({"rh_residual", worst, 1e-12, worst <= 1e-12});
    }
    { // energy inequality with the grid-splitting budget
        const double var0 = total_variation_u(traj.phases.front().state);
        double worst = -std::numeric_limits<double>::infinity();
        for (double t : cps) {
            double budget = cfg.a * t * var0 * h + 1e-12;
            worst = std::max(worst, energy_inequality(traj, t).lhs - budget);
        }
        rows.push_back({"energy", worst, 0, worst <= 0});
    }
    { // entropy residual against the probe family
        std::vector<entropy_probe> probes = cfg.probes;
        if (probes.empty()) {
            for (double k : {grid_nearest(-cfg.a / 2, cfg.n), 0.0,
                             grid_nearest(cfg.a / 2, cfg.n)})
                for (entropy_probe& p : probe_family(traj.phases.front().state, k))
                    probes.push_back(std::move(p));
        }
        double worst = 0;
        for (const entropy_probe& p : probes)
            worst = std::max(worst, -entropy_residual(traj, p, 0, cfg.t_end));
        const double bound = 2.0 * (1.0 + 4.0 * cfg.a) * h;
        rows.push_back({"entropy_min", worst, bound, worst <= bound});
    }
    { // L1 Lipschitz continuity in time
        double worst = 0;
        std::vector<double> ts;
        for (const traj_phase& p : traj.phases) ts.push_back(p.t0);
        ts.push_back(cfg.t_end);
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            if (!(ts[i + 1] > ts[i])) continue;
            piecewise_state s_a = snapshot(traj, ts[i]);
            piecewise_state s_b = snapshot(traj, ts[i + 1]);
            double rhs = (ts[i + 1] - ts[i]) *
                         (total_variation_u(s_a) + total_variation_z(s_a));
            worst = std::max(worst, l1_distance(s_a, s_b) - rhs);
        }
        rows.push_back({"lipschitz_l1", worst, 1e-10, worst <= 1e-10});
    }

    std::string report = "check,value,bound,pass\n";
    bool all_pass = true;
    for (const check_row& r : rows) {
        report += r.name;
        report += ',';
        report += fmt_g17(r.value);
        report += ',';
        report += fmt_g17(r.bound);
        report += ',';
        report += r.pass ? '1' : '0';
        report += '\n';
        all_pass = all_pass && r.pass;
    }
    write_file(ensure_out(cfg) / "report.csv", report);
    return all_pass ? 0 : 1;
}

int cmd_oracle(const scenario_config& cfg, const std::vector<int>& sizes) {
    const triangle tri{cfg.a};
    std::mt19937_64 gen(cfg.seed);
    auto unif = [&](double lo, double hi) {
        return lo + (hi - lo) * std::ldexp(static_cast<double>(gen() >> 11), -53);
    };

    // a fixed batch of piecewise-monotone excursions from the virgin state
    std::vector<signal> sigs;
    for (int s = 0; s < 10; ++s) {
        signal sig;
        sig.mode = signal_mode::linear;
        sig.samples.push_back({0.0, 0.0});
        int runs = 2 + static_cast<int>(gen() % 7);
        for (int i = 1; i <= runs; ++i)
            sig.samples.push_back({static_cast<double>(i),
                                   unif(-0.95 * tri.a, 0.95 * tri.a)});
        sigs.push_back(std::move(sig));
    }

    std::string csv = "N,max_abs_dw,max_abs_dpsi\n";
    for (int N : sizes) {
        double dw = 0, dpsi = 0;
        for (const signal& sig : sigs) {
            auto [curve, log] = apply_signal(virgin(tri), sig);
            relay_bank bank = bank_evolve(bank_init(tri, N, std::nullopt), sig);
            dw = std::max(dw, std::fabs(output_w(curve) - bank_w(bank)));
            // moves are stamped at run-end times, so the window must reach
            // past t_end to cover the whole signal on both sides
            const double t_past = sig.t_end() + 1;
            double bp = bank_psi(bank_init(tri, N, std::nullopt), sig, 0, t_past);
            dpsi = std::max(dpsi, std::fabs(psi_integral(log, 0, t_past) - bp));
        }
        csv += std::to_string(N) + ',' + fmt_g17(dw) + ',' + fmt_g17(dpsi) + '\n';
    }
    write_file(ensure_out(cfg) / "oracle.csv", csv);
    return 0;
}

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

int run_cli(int argc, char** argv) {
    CLI::App app{"wave-front tracking for u_t + w_t + u_x = 0 with Preisach hysteresis"};
    app.require_subcommand(1);

    std::string config_path, out_dir, replay_dir;
    int n_override = -1;
    std::vector<double> cps_override;
    unsigned long seed_override = 0;
    bool seed_given = false;
    std::vector<int> sizes{250, 500, 1000, 2000};
    bool corrupt = false;

    auto add_common = [&](CLI::App* sc, bool need_config) {
        auto* o = sc->add_option("--config", config_path, "scenario configuration file");
        if (need_config) o->required();
        sc->add_option("--out", out_dir, "output directory (overrides config)");
        sc->add_option("--n", n_override, "grid exponent override");
        sc->add_option("--checkpoints", cps_override, "checkpoint times override");
        sc->add_option_function<unsigned long>(
            "--seed",
            [&](unsigned long v) {
                seed_override = v;
                seed_given = true;
            },
            "seed for randomized probes/signals");
    };
    CLI::App* sc_riemann = app.add_subcommand("riemann", "solve one Riemann problem");
    add_common(sc_riemann, true);
    CLI::App* sc_cauchy = app.add_subcommand("cauchy", "discretize and evolve Cauchy data");
    add_common(sc_cauchy, true);
    CLI::App* sc_verify = app.add_subcommand("verify", "run the verification suite");
    add_common(sc_verify, true);
    sc_verify->add_option("--replay", replay_dir, "compare against a stored run");
    sc_verify->add_flag("--_corrupt-speed", corrupt)->group("");
    CLI::App* sc_oracle = app.add_subcommand("oracle", "relay-bank cross-validation sweep");
    add_common(sc_oracle, false);
    sc_oracle->add_option("--sizes", sizes, "bank side lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        scenario_config cfg;
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (n_override >= 0) cfg.n = n_override;
        if (!cps_override.empty()) cfg.checkpoints = cps_override;
        if (seed_given) cfg.seed = seed_override;
        if (const char* cap = std::getenv("HYSTWAVE_EVENT_CAP")) {
            char* end = nullptr;
            long v = std::strtol(cap, &end, 10);
            if (end == cap || *end != '\0' || v <= 0)
                throw incompatible_data{"HYSTWAVE_EVENT_CAP must be a positive integer"};
            cfg.event_cap = v;
        }
        for (double t : cfg.checkpoints)
            if (!(t >= 0) || !(t <= cfg.t_end))
                throw incompatible_data{"checkpoint outside [0, t_end]"};

        if (sc_riemann->parsed()) return cmd_riemann(cfg);
        if (sc_cauchy->parsed()) return cmd_cauchy(cfg);
        if (sc_verify->parsed()) return cmd_verify(cfg, replay_dir, corrupt);
        if (sc_oracle->parsed()) return cmd_oracle(cfg, sizes);
        return 2;
    } catch (const internal_invariant_violation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const event_overflow& e) {
        std::cerr << "guard tripped: " << e.what() << '\n';
        return 3;
    } catch (const no_jump& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const degenerate_front& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace hystwave
