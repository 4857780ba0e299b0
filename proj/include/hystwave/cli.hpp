#pragma once

#include <string>
#include <vector>

#include "hystwave/analysis.hpp"
#include "hystwave/oracle.hpp"

namespace hystwave {

// =============================================================================
// Configuration ingestion and the four subcommands (riemann, cauchy, verify,
// oracle).  Everything returns process exit codes: 0 ok, 1 verification
// failure, 2 input error, 3 internal guard.
// =============================================================================

struct u_piece_cfg {
    double x_left = 0, x_right = 0, u = 0;
};

struct curve_piece_cfg {
    double x_left = 0, x_right = 0;
    memory_curve curve;
};

struct scenario_config {
    double a = 1;
    int n = 3;
    double t_end = 1;
    std::vector<u_piece_cfg> u_pieces;
    std::vector<curve_piece_cfg> curve_pieces;
    std::vector<double> checkpoints;
    std::vector<entropy_probe> probes;
    std::string out_dir = ".";
    long event_cap = 1000000;
    unsigned long seed = 1;
};

// flat key = value lines plus repeated [u_piece] / [curve_piece] / [probe]
// sections; '#' starts a comment
scenario_config parse_config_text(const std::string& text);
scenario_config parse_config_file(const std::string& path);

// refine the u and curve partitions into matched cells; rejects pairs that
// violate the confinement inequalities
initial_datum config_to_datum(const scenario_config& cfg);

int cmd_riemann(const scenario_config& cfg);
int cmd_cauchy(const scenario_config& cfg);
int cmd_verify(const scenario_config& cfg, const std::string& replay_dir,
               bool corrupt_speed);
int cmd_oracle(const scenario_config& cfg, const std::vector<int>& sizes);

// argument parsing + dispatch + exception-to-exit-code mapping
int run_cli(int argc, char** argv);

} // namespace hystwave
