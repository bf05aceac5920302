#pragma once

// Runtime configuration shared by the command-line tool: search and
// reduction budgets, output format, and the random seed.  Defaults can be
// overridden by a JSON object in the BRAIDWORD_CONFIG environment
// variable; command-line flags override both.

#include <cstdint>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "core.hpp"

namespace braidword {

struct Config {
    std::size_t max_states = 1'000'000;  // equality search state budget
    int max_slices = -1;                 // -1: derived from the input size
    int crossing_limit = 20;             // state-sum crossing cap
    long fuse = 10'000'000;              // handle reduction step budget
    std::string output = "human";        // "human" or "json"
    std::uint64_t seed = 0;

    friend bool operator==(const Config&, const Config&) = default;
};

inline constexpr const char* config_env_var = "BRAIDWORD_CONFIG";

[[nodiscard]] inline Config parse_config(const std::string& text) {
    Config c;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "max_states") {
                c.max_states = value.get<std::size_t>();
            } else if (key == "max_slices") {
                c.max_slices = value.get<int>();
            } else if (key == "crossing_limit") {
                c.crossing_limit = value.get<int>();
            } else if (key == "fuse") {
                c.fuse = value.get<long>();
            } else if (key == "output") {
                c.output = value.get<std::string>();
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else {
                throw ParseError("unknown config key '" + key + "'");
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad config value for '" + key + "': " + e.what());
        }
    }
    if (c.output != "human" && c.output != "json")
        throw ParseError("config output must be \"human\" or \"json\"");
    return c;
}

// Reads BRAIDWORD_CONFIG; an unset or empty variable yields the defaults.
[[nodiscard]] inline Config load_config() {
    const char* env = std::getenv(config_env_var);
    if (env == nullptr || *env == '\0') return {};
    return parse_config(env);
}

}  // namespace braidword
