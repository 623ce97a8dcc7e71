#include "qnl/report.hpp"

#include <cstdio>

namespace qnl {

json Report::to_json() const {
    json j = json::object();
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    json cs = json::array();
    for (const auto& c : checks) {
        json jc = json::object();
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["observed"] = c.observed;
        jc["expected"] = c.expected;
        if (!c.witness.is_null()) jc["witness"] = c.witness;
        cs.push_back(std::move(jc));
    }
    j["checks"] = std::move(cs);
    j["seed"] = seed;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string digest_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace qnl
