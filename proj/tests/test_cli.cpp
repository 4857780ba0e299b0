#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "helpers.hpp"

using namespace hystwave;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir() {
    static fs::path base = [] {
        std::string tmpl = (fs::temp_directory_path() / "hystwave_cli_XXXXXX").string();
        char* made = mkdtemp(tmpl.data());
        REQUIRE(made != nullptr);
        return fs::path(made);
    }();
    static int counter = 0;
    fs::path d = base / ("case_" + std::to_string(counter++));
    fs::create_directories(d);
    return d;
}

int run(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(HYSTWAVE_BIN) + " " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    REQUIRE(st != -1);
    REQUIRE(WIFEXITED(st));
    return WEXITSTATUS(st);
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << s;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s) n += (c == '\n');
    return n;
}

struct report_row {
    double value = 0, bound = 0;
    bool pass = false;
};

// report.csv keyed by check name, preserving file order in `order`
std::map<std::string, report_row> parse_report(const fs::path& p,
                                               std::vector<std::string>& order) {
    std::istringstream in(read_text(p));
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "check,value,bound,pass");
    std::map<std::string, report_row> rows;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name, value, bound, pass;
        REQUIRE(std::getline(ls, name, ','));
        REQUIRE(std::getline(ls, value, ','));
        REQUIRE(std::getline(ls, bound, ','));
        REQUIRE(std::getline(ls, pass, ','));
        rows[name] = {std::stod(value), std::stod(bound), pass == "1"};
        order.push_back(name);
    }
    return rows;
}

const char* shock_config =
    "a = 1\n"
    "n = 1\n"
    "t_end = 2\n"
    "checkpoints = 1 2\n"
    "[u_piece]\n"
    "x_left = -1\n"
    "x_right = 0\n"
    "u = 0.5\n"
    "[u_piece]\n"
    "x_left = 0\n"
    "x_right = 1\n"
    "u = 0\n"
    "[curve_piece]\n"
    "x_left = -1\n"
    "x_right = 0\n"
    "signal = 0.5\n"
    "[curve_piece]\n"
    "x_left = 0\n"
    "x_right = 1\n"
    "signal =\n";

// three interior cells against virgin zero tails; fronts collide well before
// t_end so event handling and the full verify suite are exercised
const char* interacting_config =
    "a = 1\n"
    "n = 2\n"
    "t_end = 6\n"
    "checkpoints = 1 3 6\n"
    "[u_piece]\n"
    "x_left = -1\n"
    "x_right = 0\n"
    "u = 0\n"
    "[u_piece]\n"
    "x_left = 0\n"
    "x_right = 1\n"
    "u = 0.75\n"
    "[u_piece]\n"
    "x_left = 1\n"
    "x_right = 2\n"
    "u = -0.5\n"
    "[u_piece]\n"
    "x_left = 2\n"
    "x_right = 3\n"
    "u = 0\n"
    "[curve_piece]\n"
    "x_left = -1\n"
    "x_right = 0\n"
    "signal =\n"
    "[curve_piece]\n"
    "x_left = 0\n"
    "x_right = 1\n"
    "signal = 0.75\n"
    "[curve_piece]\n"
    "x_left = 1\n"
    "x_right = 2\n"
    "signal = -0.5\n"
    "[curve_piece]\n"
    "x_left = 2\n"
    "x_right = 3\n"
    "signal =\n";

fs::path write_config(const char* text) {
    fs::path d = fresh_dir();
    write_text(d / "scenario.cfg", text);
    return d / "scenario.cfg";
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("argument errors map to exit 2, help to 0") {
    CHECK(run("--help") == 0);
    CHECK(run("riemann --help") == 0);
    CHECK(run("") == 2);                    // subcommand required
    CHECK(run("frobnicate") == 2);          // unknown subcommand
    CHECK(run("riemann") == 2);             // missing --config
    CHECK(run("riemann --config /nonexistent/path.cfg") == 2);
}

TEST_CASE("riemann: virgin shock fan and profile") {
    fs::path cfg = write_config(shock_config);
    fs::path out = fresh_dir();
    CHECK(run("riemann --config " + cfg.string() + " --out " + out.string()) == 0);

    std::string fan = read_text(out / "fan.csv");
    REQUIRE(line_count(fan) == 4); // header + const, rarefaction, const
    CHECK(fan.rfind("piece_index,slowness_lo,slowness_hi,kind,params\n", 0) == 0);
    CHECK(fan.find(",rarefaction,") != std::string::npos);
    CHECK(fan.find("diagonal=1") != std::string::npos);
    CHECK(fan.find("stationary_jump") == std::string::npos);
    CHECK(fan.find("inf") != std::string::npos); // last piece is open-ended

    std::string profile = read_text(out / "profile.csv");
    CHECK(line_count(profile) == 257); // header + 256 samples up to B = 2
    CHECK(profile.rfind("xi,u,w\n", 0) == 0);
    // sample 64 lands on xi = 1/2, inside the diagonal fan: u = 1/4, w = 1/8
    CHECK(profile.find("\n0.5,0.25,0.125\n") != std::string::npos);
}

TEST_CASE("riemann: trivial data emit a header-only fan") {
    std::string cfg_text = shock_config;
    size_t pos = cfg_text.find("u = 0.5");
    cfg_text.replace(pos, 7, "u = 0.0");
    pos = cfg_text.find("signal = 0.5");
    cfg_text.replace(pos, 12, "signal =");
    fs::path cfg = write_config(cfg_text.c_str());
    fs::path out = fresh_dir();
    CHECK(run("riemann --config " + cfg.string() + " --out " + out.string()) == 0);
    CHECK(read_text(out / "fan.csv") == "piece_index,slowness_lo,slowness_hi,kind,params\n");
    CHECK(line_count(read_text(out / "profile.csv")) == 257);
}

TEST_CASE("riemann: more than one jump is rejected") {
    fs::path cfg = write_config(interacting_config);
    CHECK(run("riemann --config " + cfg.string() + " --out " + fresh_dir().string()) == 2);
}

TEST_CASE("cauchy: virgin shock snapshots are exact") {
    fs::path cfg = write_config(shock_config);
    fs::path out = fresh_dir();
    CHECK(run("cauchy --config " + cfg.string() + " --out " + out.string()) == 0);

    CHECK(read_text(out / "events.csv") == "time,position,kind,fronts_in,fronts_out\n");
    CHECK(read_text(out / "snapshot_1.csv") ==
          "x_left,x_right,u,w\n-inf,0.5,0.5,0.5\n0.5,inf,0,0\n");
    CHECK(read_text(out / "snapshot_2.csv") ==
          "x_left,x_right,u,w\n-inf,1,0.5,0.5\n1,inf,0,0\n");
    CHECK(read_text(out / "snapshot_1_curves.txt") == "1; 1;; 0.5\n1; 1;; 0\n");
    CHECK(read_text(out / "snapshot_2_curves.txt") == "1; 1;; 0.5\n1; 1;; 0\n");
}

TEST_CASE("cauchy: interacting run is eventful and byte-deterministic") {
    fs::path cfg = write_config(interacting_config);
    fs::path out1 = fresh_dir(), out2 = fresh_dir();
    CHECK(run("cauchy --config " + cfg.string() + " --out " + out1.string()) == 0);
    CHECK(run("cauchy --config " + cfg.string() + " --out " + out2.string()) == 0);

    std::string ev = read_text(out1 / "events.csv");
    CHECK(line_count(ev) >= 3); // several interactions by t = 6
    CHECK(ev == read_text(out2 / "events.csv"));
    for (const char* f : {"snapshot_1.csv", "snapshot_3.csv", "snapshot_6.csv"}) {
        CHECK(read_text(out1 / f) == read_text(out2 / f));
        CHECK(line_count(read_text(out1 / f)) >= 2);
    }
}

TEST_CASE("event cap: guard exits 3, malformed cap exits 2") {
    fs::path cfg = write_config(interacting_config);
    std::string base = "cauchy --config " + cfg.string() + " --out ";
    CHECK(run(base + fresh_dir().string()) == 0);
    CHECK(run(base + fresh_dir().string(), "HYSTWAVE_EVENT_CAP=1") == 3);
    CHECK(run(base + fresh_dir().string(), "HYSTWAVE_EVENT_CAP=0") == 2);
    CHECK(run(base + fresh_dir().string(), "HYSTWAVE_EVENT_CAP=junk") == 2);
    CHECK(run(base + fresh_dir().string(), "HYSTWAVE_EVENT_CAP=1000000") == 0);
}

TEST_CASE("verify: full suite passes on the interacting run") {
    fs::path cfg = write_config(interacting_config);
    fs::path out = fresh_dir();
    CHECK(run("verify --config " + cfg.string() + " --out " + out.string()) == 0);

    std::vector<std::string> order;
    auto rows = parse_report(out / "report.csv", order);
    const std::vector<std::string> expected = {
        "front_count_monotone", "tv_u", "tv_z", "mass_drift",
        "rh_residual", "energy", "entropy_min", "lipschitz_l1"};
    CHECK(order == expected);
    for (const auto& [name, row] : rows) {
        INFO(name);
        CHECK(row.pass);
        CHECK(row.value <= row.bound);
    }
}

TEST_CASE("verify: unbounded tails drop the mass row but still pass") {
    fs::path cfg = write_config(shock_config);
    fs::path out = fresh_dir();
    CHECK(run("verify --config " + cfg.string() + " --out " + out.string()) == 0);
    std::vector<std::string> order;
    parse_report(out / "report.csv", order);
    CHECK(order.size() == 7);
    for (const std::string& name : order) CHECK(name != "mass_drift");
}

TEST_CASE("verify: corrupted speed trips the RH check") {
    fs::path cfg = write_config(interacting_config);
    fs::path out = fresh_dir();
    CHECK(run("verify --_corrupt-speed --config " + cfg.string() + " --out " +
              out.string()) == 1);
    std::vector<std::string> order;
    auto rows = parse_report(out / "report.csv", order);
    CHECK(!rows.at("rh_residual").pass);
    CHECK(rows.at("rh_residual").value > 1e-12);
}

TEST_CASE("verify: replay agreement, tampering, and missing stores") {
    fs::path cfg = write_config(interacting_config);
    fs::path store = fresh_dir();
    REQUIRE(run("cauchy --config " + cfg.string() + " --out " + store.string()) == 0);
    std::string base = "verify --config " + cfg.string() + " --out ";

    CHECK(run(base + fresh_dir().string() + " --replay " + store.string()) == 0);

    std::string ev = read_text(store / "events.csv");
    write_text(store / "events.csv", ev + "999,0,uu_annihilate,2,0\n");
    CHECK(run(base + fresh_dir().string() + " --replay " + store.string()) == 1);

    write_text(store / "events.csv", "wrong,header\n" + ev);
    CHECK(run(base + fresh_dir().string() + " --replay " + store.string()) == 2);

    CHECK(run(base + fresh_dir().string() + " --replay " +
              (store / "missing_subdir").string()) == 2);
}

TEST_CASE("oracle: bank sweep emits one row per size") {
    fs::path out = fresh_dir();
    CHECK(run("oracle --sizes 16 32 --out " + out.string()) == 0);
    std::istringstream in(read_text(out / "oracle.csv"));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "N,max_abs_dw,max_abs_dpsi");
    std::vector<int> ns;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string n, dw, dpsi;
        REQUIRE(std::getline(ls, n, ','));
        REQUIRE(std::getline(ls, dw, ','));
        REQUIRE(std::getline(ls, dpsi, ','));
        ns.push_back(std::stoi(n));
        CHECK(std::stod(dw) <= 8.0 / std::stoi(n));
        CHECK(std::stod(dw) > 0);
    }
    CHECK(ns == std::vector<int>{16, 32});

    CHECK(run("oracle --sizes 1 --out " + fresh_dir().string()) == 2);
}

TEST_CASE("oracle: seed override changes the batch, same seed repeats it") {
    fs::path o1 = fresh_dir(), o2 = fresh_dir(), o3 = fresh_dir();
    CHECK(run("oracle --sizes 24 --seed 5 --out " + o1.string()) == 0);
    CHECK(run("oracle --sizes 24 --seed 5 --out " + o2.string()) == 0);
    CHECK(run("oracle --sizes 24 --seed 6 --out " + o3.string()) == 0);
    CHECK(read_text(o1 / "oracle.csv") == read_text(o2 / "oracle.csv"));
    CHECK(read_text(o1 / "oracle.csv") != read_text(o3 / "oracle.csv"));
}

TEST_CASE("config parsing: golden scenario covers every key") {
    scenario_config cfg = parse_config_text(
        "# full grammar exercise\n"
        "a = 1\n"
        "n = 2\n"
        "t_end = 3\n"
        "checkpoints = 1 2 3\n"
        "out = some/dir\n"
        "event_cap = 77\n"
        "seed = 9\n"
        "\n"
        "[u_piece]\n"
        "x_left = -2   # trailing comment\n"
        "x_right = 0\n"
        "u = 0.25\n"
        "[u_piece]\n"
        "x_left = 0\n"
        "x_right = 2\n"
        "u = 0\n"
        "\n"
        "[curve_piece]\n"
        "x_left = -2\n"
        "x_right = 2\n"
        "signal = 0.5 0.25\n"
        "\n"
        "[probe]\n"
        "k = 0.25\n"
        "curve = 1; 0; -0.5; 0.25\n");
    CHECK(cfg.a == 1.0);
    CHECK(cfg.n == 2);
    CHECK(cfg.t_end == 3.0);
    CHECK(cfg.checkpoints == std::vector<double>{1, 2, 3});
    CHECK(cfg.out_dir == "some/dir");
    CHECK(cfg.event_cap == 77);
    CHECK(cfg.seed == 9);
    REQUIRE(cfg.u_pieces.size() == 2);
    CHECK(cfg.u_pieces[0].x_left == -2.0);
    CHECK(cfg.u_pieces[0].u == 0.25);
    REQUIRE(cfg.curve_pieces.size() == 1);
    memory_curve expect =
        apply_monotone(apply_monotone(virgin(triangle{1}), 0.5).first, 0.25).first;
    CHECK(cfg.curve_pieces[0].curve == expect);
    REQUIRE(cfg.probes.size() == 1);
    CHECK(cfg.probes[0].k == 0.25);
    CHECK(cfg.probes[0].k_hat == curve_from_string("1; 0; -0.5; 0.25"));

    initial_datum d = config_to_datum(cfg);
    REQUIRE(d.boundaries == std::vector<double>{0.0});
    CHECK(d.u == std::vector<double>{0.25, 0.0});
    CHECK(d.curves[0] == expect);
    CHECK(d.curves[1] == expect);
}

TEST_CASE("config parsing: defaults and minimal scenario") {
    scenario_config cfg = parse_config_text(
        "[u_piece]\n"
        "x_left = 0\n"
        "x_right = 1\n"
        "u = 0\n"
        "[curve_piece]\n"
        "x_left = 0\n"
        "x_right = 1\n"
        "signal =\n");
    CHECK(cfg.a == 1.0);
    CHECK(cfg.n == 3);
    CHECK(cfg.t_end == 1.0);
    CHECK(cfg.checkpoints.empty());
    CHECK(cfg.event_cap == 1000000);
    CHECK(cfg.probes.empty());
}

TEST_CASE("config parsing: malformed inputs throw incompatible_data") {
    const char* head =
        "[u_piece]\nx_left = 0\nx_right = 1\nu = 0\n"
        "[curve_piece]\nx_left = 0\nx_right = 1\nsignal =\n";
    const std::vector<std::string> bad = {
        "mystery = 1\n" + std::string(head),          // unknown top-level key
        "a = -1\n" + std::string(head),               // nonpositive a
        "t_end = 0\n" + std::string(head),            // nonpositive t_end
        "n = -2\n" + std::string(head),               // negative n
        "event_cap = 0\n" + std::string(head),        // nonpositive cap
        "checkpoints = 0.5 2\n" + std::string(head),  // checkpoint past t_end
        "a = zebra\n" + std::string(head),            // unparseable number
        "a\n" + std::string(head),                    // missing '='
        "[u_piece\nx_left = 0\n",                     // unterminated header
        "[mystery]\nx = 1\n" + std::string(head),     // unknown section
        std::string(head) + "[u_piece]\nx_left = 2\nx_right = 1\nu = 0\n",
        std::string(head) + "[u_piece]\nx_left = 3\nx_right = 4\nu = 0\n", // gap
        "[u_piece]\nx_left = 0\nx_right = 1\n",       // missing key
        "[u_piece]\nx_left = 0\nx_right = 1\nu = 0\nextra = 1\n"
            "[curve_piece]\nx_left = 0\nx_right = 1\nsignal =\n",
        "[u_piece]\nx_left = 0\nx_right = 1\nu = 0\n", // no curve_piece
        "[curve_piece]\nx_left = 0\nx_right = 1\nsignal =\n", // no u_piece
        std::string(head) + "[probe]\nk = 0.5\nsignal = 0.25\n", // anchor != k
        std::string(head) + "[probe]\nk = 0.5\n",     // probe without curve
        std::string(head) +
            "[probe]\nk = 0.25\nsignal = 0.25\ncurve = 1; 1;; 0.25\n", // both
        "a = 2\n" + std::string(head) +
            "[curve_piece]\nx_left = 1\nx_right = 2\ncurve = 1; 1;; 0\n", // tri mismatch
    };
    for (const std::string& text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_config_text(text), incompatible_data);
    }
}

TEST_CASE("cauchy: out-of-triangle data exit 2") {
    std::string cfg_text = shock_config;
    size_t pos = cfg_text.find("u = 0.5");
    cfg_text.replace(pos, 7, "u = 1.5");
    fs::path cfg = write_config(cfg_text.c_str());
    CHECK(run("cauchy --config " + cfg.string() + " --out " + fresh_dir().string()) == 2);
}

TEST_CASE("checkpoint override is validated against t_end") {
    fs::path cfg = write_config(shock_config);
    std::string base = " --config " + cfg.string() + " --out ";
    CHECK(run("cauchy" + base + fresh_dir().string() + " --checkpoints 0.5") == 0);
    CHECK(run("cauchy" + base + fresh_dir().string() + " --checkpoints 5") == 2);
}

} // TEST_SUITE
