#include "rsg/report.hpp"
#include "rsg/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int write_or_print(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content << "\n";
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 3;
    }
    out << content;
    return 0;
}

int run(const rsg::RunOptions &options, const std::string &out_path,
        const std::string &dot_path) {
    rsg::RunResult result;
    try {
        result = rsg::run_command(options);
    } catch (const rsg::ParseError &ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 3;
    } catch (const rsg::BudgetExceeded &ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 2;
    } catch (const rsg::AnalysisError &ex) {
        std::cerr << "analysis impossible: " << ex.what() << "\n";
        return 4;
    }
    int rc = write_or_print(out_path, result.report.dump(2));
    if (rc)
        return rc;
    if (!dot_path.empty()) {
        if (result.dot.empty()) {
            std::cerr << "error: --dot is not supported by '" << options.command << "'\n";
            return 3;
        }
        rc = write_or_print(dot_path, result.dot);
        if (rc)
            return rc;
    }
    return result.exit_code;
}

int emit_scenario(const std::string &name, const std::string &out_path) {
    for (const rsg::ScenarioInfo &info : rsg::scenario_registry()) {
        if (info.name != name)
            continue;
        rsg::LoadedGame game =
            info.bayesian ? rsg::LoadedGame(rsg::build_signaling_game())
            : name == "nonfip"      ? rsg::LoadedGame(rsg::build_nonfip_game())
            : name == "fip"         ? rsg::LoadedGame(rsg::build_fip_game())
                                    : rsg::LoadedGame(rsg::build_two_vehicle_game());
        return write_or_print(out_path, rsg::serialize_loaded(game).dump(2));
    }
    std::cerr << "error: unknown scenario '" << name << "'; available:\n";
    for (const rsg::ScenarioInfo &info : rsg::scenario_registry())
        std::cerr << "  " << info.name << " - " << info.summary << "\n";
    return 3;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"ride sharing game analysis"};
    app.require_subcommand(1);

    rsg::RunOptions options;
    std::string out_path;
    std::string dot_path;

    auto add_analysis = [&](const std::string &name, const std::string &help,
                            bool dynamics_flags, bool dot_flag) {
        CLI::App *cmd = app.add_subcommand(name, help);
        cmd->add_option("--game", options.game_path, "game definition JSON file")->required();
        cmd->add_option("--budget", options.budget, "profile enumeration budget");
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
        if (dynamics_flags) {
            cmd->add_option("--initial", options.initial, "starting joint profile id");
            cmd->add_option("--order", options.order, "roundrobin or random:<seed>");
            cmd->add_option("--max-steps", options.max_steps, "improvement step limit");
        }
        if (dot_flag)
            cmd->add_option("--dot", dot_path, "write a graphviz rendering here");
        cmd->callback([&, name] { options.command = name; });
        return cmd;
    };

    add_analysis("dynamics", "run best-response play from a profile", true, true);
    add_analysis("pne", "enumerate pure equilibria", false, false);
    add_analysis("fip", "test the finite improvement property", false, true);
    add_analysis("poa", "price of anarchy against the social optimum", false, false);
    add_analysis("potential-check", "verify the min-cost ordinal potential", false, false);
    add_analysis("hypotheses", "check the convergence sufficient conditions", false, false);
    add_analysis("pbne", "enumerate pure equilibria of the expected game", false, false);
    add_analysis("bce", "optimal obedient recommendation policy", false, false);

    std::string scenario_name;
    CLI::App *scenario = app.add_subcommand("scenario", "emit a built-in example game file");
    scenario->add_option("name", scenario_name, "scenario name")->required();
    scenario->add_option("--out", out_path, "write the game file here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (scenario->parsed())
        return emit_scenario(scenario_name, out_path);
    options.want_dot = !dot_path.empty();
    return run(options, out_path, dot_path);
}
