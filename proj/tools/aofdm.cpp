// aofdm: analog and digital OFDM baseband simulation library
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "aofdm/presets.hpp"
#include "aofdm/scenario.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

// Precedence: environment override, then the --out flag, then the config's
// own out_dir, then out/<name>.
std::string output_dir(const std::string& flag_value,
                       const aofdm::scenario::ScenarioConfig& cfg) {
    if (const char* env = std::getenv("ANALOG_OFDM_OUT_DIR")) return std::string(env);
    if (!flag_value.empty()) return flag_value;
    if (!cfg.out_dir.empty()) return cfg.out_dir;
    return "out/" + cfg.name;
}

int cmd_run(const std::string& config_arg, const std::string& out_flag, int parallel) {
    using namespace aofdm::scenario;
    ScenarioConfig cfg;
    try {
        if (const Preset* p = find_preset(config_arg))
            cfg = parse_config(p->config_json);
        else
            cfg = load_config_file(config_arg);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        validate(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitValidation;
    }
    try {
        const std::string dir = output_dir(out_flag, cfg);
        const RunOutcome outcome = run_scenario(cfg, dir, parallel);
        for (const std::string& f : outcome.files) std::cout << "wrote " << f << "\n";
    } catch (const std::exception& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}

int cmd_design(int n, double ts, const std::string& band) {
    const auto report = aofdm::scenario::design_report(n, ts, band);
    if (!report.ok) {
        std::cerr << report.text;
        return kExitValidation;
    }
    std::cout << report.text << report.json;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analog/digital OFDM baseband simulator"};
    app.require_subcommand(1);

    std::string config_arg, out_flag;
    int parallel = 1;
    CLI::App* run = app.add_subcommand("run", "run a scenario config or bundled preset");
    run->add_option("config", config_arg, "path to a JSON config, or a preset name")
        ->required();
    run->add_option("--out", out_flag, "output directory (ANALOG_OFDM_OUT_DIR overrides)");
    run->add_option("--parallel-seeds", parallel, "worker count for Monte Carlo seeds")
        ->check(CLI::PositiveNumber);

    CLI::App* presets_cmd = app.add_subcommand("presets", "list bundled presets");

    int n = 64;
    double ts = 1e-9;
    std::string band;
    CLI::App* design = app.add_subcommand("design", "derive phaser parameters");
    design->add_option("--n", n, "subcarrier count")->required();
    design->add_option("--ts", ts, "symbol period in seconds")->required();
    design->add_option("--band", band, "band preset (sub6, 28ghz, 60ghz, thz)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    if (run->parsed()) return cmd_run(config_arg, out_flag, parallel);
    if (presets_cmd->parsed()) {
        std::cout << aofdm::scenario::presets_table();
        return 0;
    }
    if (design->parsed()) return cmd_design(n, ts, band);
    return kExitParse;
}
