#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fracapprox/designers.hpp"

namespace testing {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, rel_diff(a[i], b[i]));
    return worst;
}

// Random design with alpha away from 0.5 and a band of 2..8 decades.
inline fracapprox::DesignSpec random_spec(std::mt19937_64& rng, fracapprox::Method method) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    fracapprox::DesignSpec s;
    s.method = method;
    double a = 0.02 + 0.96 * unit(rng);
    if (std::abs(a - 0.5) < 0.01) a += 0.02;
    s.alpha = a;
    const double lo = -4.0 + 2.0 * unit(rng);
    const double decades = 2.0 + 6.0 * unit(rng);
    s.omega_l = std::pow(10.0, lo);
    s.omega_h = std::pow(10.0, lo + decades);
    s.n = 3 + static_cast<int>(unit(rng) * 12);
    s.k = 1 + static_cast<int>(unit(rng) * 3);
    return fracapprox::with_default_epsilon(s);
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout (and stderr when merged by the caller).
inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace testing
