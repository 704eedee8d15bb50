#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocolim/homology_group.hpp"
#include "hocolim/properties.hpp"
#include "json.hpp"

namespace hocolim::dsl {

/// The result of one command. Text and JSON are both rendered from these
/// fields; only the fields a command fills in are printed.
struct Report {
    std::string command;
    std::string ring = "Z";
    std::optional<std::pair<int, int>> window;
    std::vector<std::pair<int, HomologyGroup>> homology;
    std::optional<int> levels_used;
    std::vector<std::map<int, std::size_t>> bar_levels;
    std::optional<std::vector<std::string>> elementary_divisors;
    std::optional<std::size_t> rank;
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<PropertyResult> properties;
    std::optional<std::uint64_t> seed;

    bool ok() const {
        for (const auto& p : properties)
            if (!p.ok()) return false;
        return true;
    }
};

namespace detail {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::ordered_json integer_json(const std::string& digits) {
    const Integer v(digits);
    if (v <= Integer(std::numeric_limits<long long>::max()) && v >= Integer(std::numeric_limits<long long>::min()))
        return static_cast<long long>(v);
    return digits;
}

} // namespace detail

inline std::string to_text(const Report& r) {
    std::string out = r.command + "\n";
    for (const auto& [n, g] : r.homology) out += "H_" + std::to_string(n) + " = " + g.to_string(r.ring) + "\n";
    if (r.levels_used) out += "levels used: " + std::to_string(*r.levels_used) + "\n";
    for (std::size_t k = 0; k < r.bar_levels.size(); ++k) {
        std::size_t total = 0;
        std::string by_degree;
        for (const auto& [l, n] : r.bar_levels[k]) {
            total += n;
            by_degree += (by_degree.empty() ? "" : ", ") + std::to_string(l) + ": " + std::to_string(n);
        }
        out += "B_" + std::to_string(k) + ": rank " + std::to_string(total) + " (" + by_degree + ")\n";
    }
    if (r.shape) out += "shape: " + std::to_string(r.shape->first) + "x" + std::to_string(r.shape->second) + "\n";
    if (r.elementary_divisors) {
        out += "elementary divisors:";
        for (const auto& d : *r.elementary_divisors) out += " " + d;
        out += "\n";
    }
    if (r.rank) out += "rank: " + std::to_string(*r.rank) + "\n";
    if (r.seed) out += "seed: " + std::to_string(*r.seed) + "\n";
    for (const auto& p : r.properties) {
        out += std::string(p.ok() ? "PASS " : "FAIL ") + p.name + " " + std::to_string(p.passed) + "/" + std::to_string(p.trials) + "\n";
        if (!p.ok()) out += "  " + p.first_failure + "\n";
    }
    return out;
}

/// {"command", "ring", "window": [lo, hi], "homology": [{"degree", "free_rank",
/// "torsion"}], ...} with the command-specific fields after.
inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["ring"] = r.ring;
    if (r.window) j["window"] = {r.window->first, r.window->second};
    if (r.window || !r.homology.empty()) {
        auto h = nlohmann::ordered_json::array();
        for (const auto& [n, g] : r.homology) {
            nlohmann::ordered_json e;
            e["degree"] = n;
            e["free_rank"] = g.free_rank;
            auto t = nlohmann::ordered_json::array();
            for (const auto& d : g.torsion) t.push_back(detail::integer_json(d.str()));
            e["torsion"] = t;
            h.push_back(e);
        }
        j["homology"] = h;
    }
    if (r.levels_used) j["levels_used"] = *r.levels_used;
    if (!r.bar_levels.empty()) {
        auto levels = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < r.bar_levels.size(); ++k) {
            nlohmann::ordered_json e;
            e["level"] = k;
            std::size_t total = 0;
            auto ranks = nlohmann::ordered_json::array();
            for (const auto& [l, n] : r.bar_levels[k]) {
                total += n;
                ranks.push_back({{"degree", l}, {"rank", n}});
            }
            e["rank"] = total;
            e["ranks"] = ranks;
            levels.push_back(e);
        }
        j["levels"] = levels;
    }
    if (r.shape) j["shape"] = {r.shape->first, r.shape->second};
    if (r.elementary_divisors) {
        auto d = nlohmann::ordered_json::array();
        for (const auto& x : *r.elementary_divisors) d.push_back(detail::integer_json(x));
        j["elementary_divisors"] = d;
    }
    if (r.rank) j["rank"] = *r.rank;
    if (r.seed) j["seed"] = *r.seed;
    if (!r.properties.empty()) {
        auto ps = nlohmann::ordered_json::array();
        for (const auto& p : r.properties) {
            nlohmann::ordered_json e;
            e["name"] = p.name;
            e["passed"] = p.passed;
            e["trials"] = p.trials;
            e["ok"] = p.ok();
            if (!p.ok()) e["first_failure"] = p.first_failure;
            ps.push_back(e);
        }
        j["properties"] = ps;
        j["ok"] = r.ok();
    }
    return j;
}

} // namespace hocolim::dsl
