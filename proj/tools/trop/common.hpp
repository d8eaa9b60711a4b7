#pragma once

#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "trop/laurent.hpp"

namespace tropcli {

// Thrown by subcommands to force a specific process exit code:
// 2 bad input, 3 numeric degradation, 4 empty or degenerate geometry,
// 5 verification mismatch.
struct Failure {
    int code;
    std::string msg;
};

std::vector<std::string> split(const std::string& s, char sep);
std::vector<double> parse_double_list(const std::string& s);
std::pair<int, int> parse_grid(const std::string& s);        // "96x64"
trop::OrthantSign parse_orthant(const std::string& s);       // "+,-"
std::pair<double, double> parse_window(const std::string& s);  // "-6,6"

// Relative output paths land in $TROP_OUT_DIR when that is set (the directory
// is created on demand); absolute paths and the empty string pass through.
std::string resolve_out(const std::string& path);
void emit(const std::string& path, const std::string& content);

void setup_eval(CLI::App& app);
void setup_amoeba(CLI::App& app);
void setup_deform(CLI::App& app);
void setup_newton(CLI::App& app);
void setup_markov(CLI::App& app);

}  // namespace tropcli
