#ifndef QNL_REPORT_HPP
#define QNL_REPORT_HPP

#include "qnl/json_io.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace qnl {

struct Check {
    std::string name;
    bool pass = false;
    json observed;
    json expected;
    json witness; // null when absent
};

struct Report {
    std::string command;
    std::string inputs_digest;
    std::vector<Check> checks;
    uint64_t seed = 0;
    int64_t elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
    json to_json() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
};

// FNV-1a over the raw input bytes, rendered as hex
std::string digest_hex(const std::string& bytes);

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

} // namespace qnl

#endif
