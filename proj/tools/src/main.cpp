#include "commands.hpp"
#include "run_config.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace aperiodic;
using namespace aperiodic::cli;

namespace {

// Storage for one command's flags while CLI11 parses.
struct Slots {
    std::map<std::string, std::string> values;
    std::map<std::string, std::vector<std::string>> lists;
    std::map<std::string, bool> toggles;
};

void add_flags(CLI::App* app, const CommandSpec& spec, Slots& slots) {
    for (const auto& f : spec.flags) {
        const std::string opt = "--" + f.name;
        switch (f.kind) {
            case FlagKind::value:
                slots.values[f.name] = f.default_value;
                app->add_option(opt, slots.values[f.name], f.help)->default_str(f.default_value);
                break;
            case FlagKind::list:
                slots.lists[f.name];
                app->add_option(opt, slots.lists[f.name], f.help)->allow_extra_args();
                break;
            case FlagKind::toggle:
                slots.toggles[f.name] = false;
                app->add_flag(opt, slots.toggles[f.name], f.help);
                break;
        }
    }
}

RunConfig resolve(const CommandSpec& spec, const Slots& slots) {
    RunConfig rc;
    rc.command = spec.name;
    for (const auto& [k, v] : slots.values) rc.flags[k] = v;
    for (const auto& [k, v] : slots.lists) rc.flags[k] = v;
    for (const auto& [k, v] : slots.toggles) rc.flags[k] = v;
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for periodicity and annihilators of configurations and Delone sets"};
    app.set_version_flag("--version", std::string(APERIODIC_VERSION));
    std::string replay;
    app.add_option("--run", replay, "re-run the run config stored in a JSON file or report");

    std::map<std::string, Slots> slots;
    std::map<std::string, CLI::App*> apps;
    CLI::App* annihilate = app.add_subcommand("annihilate", "annihilator engine");
    annihilate->require_subcommand(1);
    for (const auto& spec : commands()) {
        CLI::App* sub = nullptr;
        if (spec.name.rfind("annihilate ", 0) == 0) {
            sub = annihilate->add_subcommand(spec.name.substr(11), spec.help);
        } else {
            sub = app.add_subcommand(spec.name, spec.help);
        }
        add_flags(sub, spec, slots[spec.name]);
        apps[spec.name] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (!replay.empty()) {
            if (app.get_subcommands().size() != 0) throw Error("--run cannot be combined with a subcommand");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_text_file(replay));
            } catch (const nlohmann::json::parse_error& e) {
                throw Error(replay + ": " + e.what());
            }
            return execute(RunConfig::from_json(j.contains("run_config") ? j["run_config"] : j));
        }
        for (const auto& [name, sub] : apps) {
            if (sub->parsed()) return execute(resolve(command(name), slots[name]));
        }
        std::cerr << app.help();
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
