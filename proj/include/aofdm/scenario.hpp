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

#pragma once

#include <string>

#include "aofdm/pipeline.hpp"

namespace aofdm::scenario {

/// What a scenario produces.  `Transceive` is the generic TX -> channel ->
/// RX run; the other tasks emit the figure-style datasets (waveforms,
/// spectra, discrete-sample comparisons, prefix comparisons, group delay).
enum class Task {
    Transceive,
    Subcarriers,
    RtftWaveform,
    IdftVsRtft,
    PrefixCompare,
    GroupDelay,
};

struct ChannelConfig {
    enum class Kind { Ideal, Taps, Rician };
    Kind kind = Kind::Ideal;
    std::vector<ChannelTap> taps;  // Kind::Taps
    RicianSpec rician;             // Kind::Rician
    std::uint64_t seed = 0;        // Kind::Rician
};

struct SymbolsConfig {
    enum class Kind { Explicit, Qpsk };
    Kind kind = Kind::Explicit;
    std::vector<cvec> blocks;    // Kind::Explicit
    std::size_t block_count = 1; // Kind::Qpsk
    std::uint64_t seed = 1;      // Kind::Qpsk
};

/// Monte Carlo fan-out: rerun the scenario on channel seeds
/// base, base+1, ..., base+count-1 with a deterministic merge.
struct SeedFan {
    std::size_t count = 1;
    std::uint64_t base = 0;
};

struct ScenarioConfig {
    std::string name = "scenario";
    Task task = Task::Transceive;
    SystemKind system = SystemKind::RtftIdeal;
    int n = 64;
    double ts = 1e-6;
    Phi1Case phi1_case = Phi1Case::PhaseAligned;
    Phi2Sign phi2_sign = Phi2Sign::Plus;
    PrefixSpec prefix;
    ChannelConfig channel;
    SymbolsConfig symbols;
    SeedFan seeds;
    int oversampling = 16;
    bool emit_isi_table = false;
    double bandwidth_hz = 1e9;   // GroupDelay / feasibility reporting
    std::string out_dir;         // optional default output directory

    OfdmProfile profile() const { return {n, ts, phi1_case, phi2_sign}; }
};

/// Config-file problems.  ParseError covers JSON syntax and missing or
/// mistyped fields (the message names the field); ValidationError covers
/// semantically bad values.  Anything else thrown during a run is a
/// simulation error.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config_file(const std::string& path);
void validate(const ScenarioConfig& cfg);

struct RunOutcome {
    std::vector<std::string> files;  // paths written, manifest last
    std::string report_json;         // contents of the run report
};

/// Runs a validated scenario and writes its CSV/JSON artifacts under
/// out_dir (created if needed).  All randomness is seeded by the config, so
/// identical configs produce byte-identical files.  parallel > 1 fans
/// Monte Carlo seeds across that many workers; results merge in seed order.
RunOutcome run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                        int parallel = 1);

/// Text + JSON report for the design subcommand.
struct DesignReport {
    std::string text;
    std::string json;
    bool ok = true;
};
DesignReport design_report(int n, double ts, const std::string& band_name);

}  // namespace aofdm::scenario
