#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twotype/serialize.hpp"

namespace cli {

struct Report {
    tt::json doc = tt::json::object();
    std::vector<std::string> lines;
    std::optional<std::string> raw; // printed verbatim, ignoring --json
    void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Options {
    bool json = false;
    bool oracle = false;
    std::string workspace;

    std::string group, module, pi1, pi2 = "Z1", gamma, type, k3_cochain;
    int degree = 0;
    long long k3 = 0;
    std::string outer, a2;
    std::string src, dst, f;
    int from = 0, to = 0, cls = 0;
    std::string signature;
    std::string input, output;
};

// exit codes: 0 success, 1 mathematical failure; errors propagate as tt::Error
int cohomology(const Options& o, Report& r);
int verify_2group(const Options& o, Report& r);
int classify_0cells(const Options& o, Report& r);
int classify_1cells(const Options& o, Report& r);
int classify_2cells(const Options& o, Report& r);
int classify_extensions(const Options& o, Report& r);
int extend(const Options& o, Report& r);
int sequence(const Options& o, Report& r);
int orbifold(const Options& o, Report& r);
int selftest(const Options& o, Report& r);
int canonicalize(const Options& o, Report& r);

} // namespace cli
