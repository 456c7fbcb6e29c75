#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chainsim/scenarios.hpp"

namespace {

void report(const chainsim::CommandResult& result) {
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    if (!result.summary.empty()) std::cout << result.summary.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Excitation transport on emitter chains with collective decay and cavity coupling"};
    app.require_subcommand(1);
    app.set_version_flag("--version", chainsim::version());

    std::string config_path;
    std::string out_dir = "out";

    for (const std::string& name : chainsim::command_names()) {
        CLI::App* sub = app.add_subcommand(name, "Run the '" + name + "' command on a run config");
        sub->add_option("-c,--config", config_path, "JSON run config")->required()->check(CLI::ExistingFile);
        sub->add_option("-o,--out", out_dir, "Output directory")->capture_default_str();
    }

    std::string figure;
    CLI::App* fig = app.add_subcommand("figure", "Reproduce a figure's data set");
    fig->add_option("name", figure, "Figure name")
        ->required()
        ->check(CLI::IsMember(chainsim::figure_names()));
    fig->add_option("-c,--config", config_path, "JSON figure config (defaults when omitted)")
        ->check(CLI::ExistingFile);
    fig->add_option("-o,--out", out_dir, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub == fig) {
            const chainsim::Json config = config_path.empty()
                                              ? chainsim::Json{{"figure", figure}}
                                              : chainsim::load_json(config_path);
            report(chainsim::run_figure(figure, config, out_dir));
        } else {
            const chainsim::RunConfig rc =
                chainsim::parse_run_config(chainsim::load_json(config_path));
            report(chainsim::run_command(sub->get_name(), rc, out_dir));
        }
    } catch (const chainsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const chainsim::PhysicsError& e) {
        std::cerr << "physics error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
