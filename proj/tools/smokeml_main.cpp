#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "smokeml/commands.hpp"
#include "smokeml/errors.hpp"
#include "smokeml/run_config.hpp"

namespace {

int dispatch(const smokeml::RunConfig& cfg, const std::string& command,
             const smokeml::ConfusionMatrix& cm) {
    if (command == "inspect") return smokeml::cmd_inspect(cfg, std::cout);
    if (command == "correlations") return smokeml::cmd_correlations(cfg, std::cout);
    if (command == "compare") return smokeml::cmd_compare(cfg, std::cout);
    if (command == "ensemble") return smokeml::cmd_ensemble(cfg, std::cout);
    if (command == "config") {
        std::cout << smokeml::emit_config(cfg);
        return 0;
    }
    if (command == "metrics") {
        if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0) {
            throw smokeml::ArgumentError("confusion counts must be non-negative");
        }
        return smokeml::cmd_metrics(cm, std::cout);
    }
    throw smokeml::ArgumentError("unknown command \"" + command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smokeml: smoke-alarm classification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path,
                   "config file of `key = value` lines (default: $SMOKEML_CONFIG)");
    bool synthetic_flag = false;
    app.add_flag("--synthetic", synthetic_flag, "shorthand for --data.synthetic true");

    // Every config key doubles as a CLI flag; overrides apply after the
    // config file, in command-line order.
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const std::string& key : smokeml::config_keys()) {
        app.add_option_function<std::string>(
               "--" + key,
               [key, &overrides](const std::string& value) { overrides.emplace_back(key, value); },
               smokeml::config_key_help(key))
            ->expected(1);
    }

    app.add_subcommand("inspect", "dataset summary: sizes, class balance, SMOTE effect");
    app.add_subcommand("correlations", "feature-to-label correlation table");
    app.add_subcommand("compare", "fit and evaluate the configured models, write reports");
    app.add_subcommand("ensemble", "fit the density-weighted KNN+GBT ensemble, write reports");
    app.add_subcommand("config", "print the effective configuration");
    auto* metrics_cmd =
        app.add_subcommand("metrics", "metrics for a hand-entered confusion matrix");
    std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
    metrics_cmd->add_option("--tp", tp, "true positives")->required();
    metrics_cmd->add_option("--fp", fp, "false positives")->required();
    metrics_cmd->add_option("--fn", fn, "false negatives")->required();
    metrics_cmd->add_option("--tn", tn, "true negatives")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        smokeml::RunConfig cfg;
        std::string path = config_path;
        if (path.empty()) {
            if (const char* env = std::getenv("SMOKEML_CONFIG")) path = env;
        }
        if (!path.empty()) {
            cfg = smokeml::load_config_file(path);
        }
        if (synthetic_flag) {
            smokeml::set_config_value(cfg, "data.synthetic", "true");
        }
        for (const auto& [key, value] : overrides) {
            smokeml::set_config_value(cfg, key, value);
        }
        smokeml::validate_config(cfg);

        const std::string command = app.get_subcommands().front()->get_name();
        return dispatch(cfg, command, {tp, fp, fn, tn});
    } catch (const smokeml::TrainingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const smokeml::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const smokeml::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const smokeml::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
