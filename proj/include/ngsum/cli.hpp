#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ngsum {

struct CliConfig {
    std::string command;  // bounds | params | verify | enumerate | certificate | rho0
    std::string graph6;
    std::string profile;     // inline JSON or @path
    std::string edges_path;  // edge-list file
    int n = 0;
    int from = 0, to = 0;  // rho0 range
    int k_max = 0;
    std::string space = "staircase";   // verify: all | staircase
    std::string klass = "sym";         // enumerate: sym | star
    std::string format = "text";       // text | json | csv | g6
    int parallel = 0;                  // 0: take NG_PARALLEL, else 1
    bool allow_n8 = false;
    std::string out;  // output path; empty = stdout
};

// Dispatches one command. Exit code 0 on success, 1 on usage/input error,
// 2 when a verification reports counterexamples.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ngsum
