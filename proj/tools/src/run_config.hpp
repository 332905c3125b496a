#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace aperiodic::cli {

enum class FlagKind { value, list, toggle };

struct FlagSpec {
    std::string name;
    FlagKind kind = FlagKind::value;
    std::string default_value;
    std::string help;
};

struct CommandSpec {
    /// "gen", "analyze", "annihilate verify", ...
    std::string name;
    std::string help;
    std::vector<FlagSpec> flags;
};

/// Every command with its flags, including the flags shared by all commands.
const std::vector<CommandSpec>& commands();
const CommandSpec& command(const std::string& name);

/// A command with every flag resolved to a value: a string, a list of strings
/// or a bool.
struct RunConfig {
    std::string command;
    std::map<std::string, nlohmann::json> flags;

    const std::string& str(const std::string& name) const;
    const std::vector<std::string> list(const std::string& name) const;
    bool toggle(const std::string& name) const;
    bool given(const std::string& name) const;

    nlohmann::json to_json() const;
    /// Rejects unknown commands and unknown keys; absent flags take their defaults.
    static RunConfig from_json(const nlohmann::json& j);
};

/// Default value of --precision-bits: APERIODIC_PRECISION_BITS, else 128.
std::string default_precision_bits();

}  // namespace aperiodic::cli
