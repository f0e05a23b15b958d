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

#include "aofdm/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <atomic>
#include <future>
#include <sstream>

#include <json.hpp>

#include "aofdm/csv.hpp"
#include "aofdm/presets.hpp"
#include "aofdm/rng.hpp"
#include "aofdm/transforms.hpp"

namespace aofdm::scenario {

using nlohmann::json;

namespace {

// ---- JSON field access with messages that name the field ---------------

const json& need(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field: ") + key);
    return *it;
}

double need_number(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number()) throw ParseError(std::string("field is not a number: ") + key);
    return v.get<double>();
}

double opt_number(const json& j, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    return need_number(j, key);
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string("field is not a string: ") + key);
    return v.get<std::string>();
}

std::string opt_string(const json& j, const char* key, const std::string& dflt) {
    if (!j.contains(key)) return dflt;
    return need_string(j, key);
}

bool opt_bool(const json& j, const char* key, bool dflt) {
    if (!j.contains(key)) return dflt;
    const json& v = j.at(key);
    if (!v.is_boolean()) throw ParseError(std::string("field is not a boolean: ") + key);
    return v.get<bool>();
}

Task parse_task(const std::string& s) {
    if (s == "transceive") return Task::Transceive;
    if (s == "subcarriers") return Task::Subcarriers;
    if (s == "rtft_waveform") return Task::RtftWaveform;
    if (s == "idft_vs_rtft") return Task::IdftVsRtft;
    if (s == "prefix_compare") return Task::PrefixCompare;
    if (s == "group_delay") return Task::GroupDelay;
    throw ParseError("field has an unknown value: task = " + s);
}

SystemKind parse_system(const std::string& s) {
    if (s == "conventional_fft") return SystemKind::ConventionalFft;
    if (s == "rtft_ideal") return SystemKind::RtftIdeal;
    if (s == "rtft_physical") return SystemKind::RtftPhysical;
    throw ParseError("field has an unknown value: system = " + s);
}

cplx parse_symbol(const json& v) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    if (v.is_object())
        return cplx(need_number(v, "re"), need_number(v, "im"));
    throw ParseError("field has a malformed entry: symbols.blocks");
}

std::string task_name(Task t) {
    switch (t) {
        case Task::Transceive: return "transceive";
        case Task::Subcarriers: return "subcarriers";
        case Task::RtftWaveform: return "rtft_waveform";
        case Task::IdftVsRtft: return "idft_vs_rtft";
        case Task::PrefixCompare: return "prefix_compare";
        case Task::GroupDelay: return "group_delay";
    }
    return "?";
}

std::string system_name(SystemKind k) {
    switch (k) {
        case SystemKind::ConventionalFft: return "conventional_fft";
        case SystemKind::RtftIdeal: return "rtft_ideal";
        case SystemKind::RtftPhysical: return "rtft_physical";
    }
    return "?";
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config root must be a JSON object");

    ScenarioConfig cfg;
    cfg.name = opt_string(j, "name", "scenario");
    cfg.task = parse_task(opt_string(j, "task", "transceive"));
    cfg.system = parse_system(opt_string(j, "system", "rtft_ideal"));
    const double n = need_number(j, "n");
    if (n != std::floor(n)) throw ParseError("field is not an integer: n");
    cfg.n = static_cast<int>(n);
    cfg.ts = need_number(j, "ts_s");
    cfg.oversampling = static_cast<int>(opt_number(j, "oversampling", 16));
    cfg.emit_isi_table = opt_bool(j, "emit_isi_table", false);
    cfg.bandwidth_hz = opt_number(j, "bandwidth_hz", 1e9);
    cfg.out_dir = opt_string(j, "out_dir", "");

    const std::string c1 = opt_string(j, "phi1_case", "phase_aligned");
    if (c1 == "zero_start")
        cfg.phi1_case = Phi1Case::ZeroStart;
    else if (c1 == "phase_aligned")
        cfg.phi1_case = Phi1Case::PhaseAligned;
    else
        throw ParseError("field has an unknown value: phi1_case = " + c1);

    const std::string sg = opt_string(j, "phi2_sign", "plus");
    if (sg == "plus")
        cfg.phi2_sign = Phi2Sign::Plus;
    else if (sg == "minus")
        cfg.phi2_sign = Phi2Sign::Minus;
    else
        throw ParseError("field has an unknown value: phi2_sign = " + sg);

    if (j.contains("prefix")) {
        const json& p = j.at("prefix");
        const std::string kind = need_string(p, "kind");
        if (kind == "none") {
            cfg.prefix.enabled = false;
        } else if (kind == "cp" || kind == "zp") {
            cfg.prefix.enabled = true;
            cfg.prefix.kind = kind == "cp" ? PrefixKind::Cp : PrefixKind::Zp;
            cfg.prefix.length = static_cast<std::size_t>(need_number(p, "length"));
        } else {
            throw ParseError("field has an unknown value: prefix.kind = " + kind);
        }
    }

    if (j.contains("channel")) {
        const json& c = j.at("channel");
        const std::string kind = need_string(c, "kind");
        if (kind == "ideal") {
            cfg.channel.kind = ChannelConfig::Kind::Ideal;
        } else if (kind == "taps") {
            cfg.channel.kind = ChannelConfig::Kind::Taps;
            const json& taps = need(c, "taps");
            if (!taps.is_array() || taps.empty())
                throw ParseError("field must be a non-empty array: channel.taps");
            for (const json& t : taps)
                cfg.channel.taps.push_back(
                    {cplx(need_number(t, "re"), need_number(t, "im")),
                     need_number(t, "delay_s")});
        } else if (kind == "rician") {
            cfg.channel.kind = ChannelConfig::Kind::Rician;
            cfg.channel.rician.s = need_number(c, "s");
            cfg.channel.rician.sigma = need_number(c, "sigma");
            cfg.channel.rician.tap_count = static_cast<int>(need_number(c, "taps"));
            cfg.channel.rician.tau0 = opt_number(c, "tau0_s", 0.0);
            cfg.channel.rician.spacing =
                cfg.ts * opt_number(c, "spacing_symbols", 1.0);
            cfg.channel.seed = static_cast<std::uint64_t>(opt_number(c, "seed", 0));
        } else {
            throw ParseError("field has an unknown value: channel.kind = " + kind);
        }
    }

    const json& sy = need(j, "symbols");
    const std::string skind = need_string(sy, "kind");
    if (skind == "explicit") {
        cfg.symbols.kind = SymbolsConfig::Kind::Explicit;
        const json& blocks = need(sy, "blocks");
        if (!blocks.is_array() || blocks.empty())
            throw ParseError("field must be a non-empty array: symbols.blocks");
        for (const json& b : blocks) {
            if (!b.is_array()) throw ParseError("field entries must be arrays: symbols.blocks");
            cvec block;
            for (const json& v : b) block.push_back(parse_symbol(v));
            cfg.symbols.blocks.push_back(std::move(block));
        }
    } else if (skind == "qpsk") {
        cfg.symbols.kind = SymbolsConfig::Kind::Qpsk;
        cfg.symbols.block_count = static_cast<std::size_t>(opt_number(sy, "blocks", 1));
        cfg.symbols.seed = static_cast<std::uint64_t>(opt_number(sy, "seed", 1));
    } else {
        throw ParseError("field has an unknown value: symbols.kind = " + skind);
    }

    if (j.contains("seeds")) {
        const json& s = j.at("seeds");
        cfg.seeds.count = static_cast<std::size_t>(need_number(s, "count"));
        cfg.seeds.base = static_cast<std::uint64_t>(opt_number(s, "base", 0));
    }
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

void validate(const ScenarioConfig& cfg) {
    if (cfg.n < 1) throw ValidationError("n must be >= 1");
    if (cfg.ts <= 0.0) throw ValidationError("ts_s must be positive");
    if (cfg.oversampling < 1) throw ValidationError("oversampling must be >= 1");
    if (cfg.prefix.enabled) {
        if (cfg.prefix.length < 1) throw ValidationError("prefix.length must be >= 1");
        if (cfg.prefix.kind == PrefixKind::Cp &&
            cfg.prefix.length > static_cast<std::size_t>(cfg.n))
            throw ValidationError("prefix.length cannot exceed n for a cyclic prefix");
    }
    if (cfg.symbols.kind == SymbolsConfig::Kind::Explicit) {
        for (const cvec& b : cfg.symbols.blocks)
            if (b.size() > static_cast<std::size_t>(cfg.n))
                throw ValidationError("symbols.blocks entries cannot exceed n symbols");
    } else if (cfg.symbols.block_count < 1) {
        throw ValidationError("symbols.blocks must be >= 1");
    }
    if (cfg.channel.kind == ChannelConfig::Kind::Taps) {
        double prev = -1.0;
        for (const ChannelTap& t : cfg.channel.taps) {
            if (t.delay <= prev) throw ValidationError("channel.taps delays must increase");
            prev = t.delay;
            const double d = t.delay / cfg.ts;
            if (std::abs(d - std::round(d)) > 1e-9)
                throw ValidationError(
                    "channel.taps delays must be integer multiples of ts_s");
        }
        if (std::round(prev / cfg.ts) >= static_cast<double>(cfg.n))
            throw ValidationError("channel cannot be longer than one block");
    }
    if (cfg.channel.kind == ChannelConfig::Kind::Rician) {
        const RicianSpec& r = cfg.channel.rician;
        if (r.sigma <= 0.0) throw ValidationError("channel.sigma must be positive");
        if (r.s < 0.0) throw ValidationError("channel.s must be nonnegative");
        if (r.tap_count < 1) throw ValidationError("channel.taps must be >= 1");
        if (std::abs(r.spacing / cfg.ts - std::round(r.spacing / cfg.ts)) > 1e-9)
            throw ValidationError("channel.spacing_symbols must be an integer");
        if (std::abs(r.tau0 / cfg.ts - std::round(r.tau0 / cfg.ts)) > 1e-9)
            throw ValidationError("channel.tau0_s must be a multiple of ts_s");
        const double span =
            (r.tau0 + static_cast<double>(r.tap_count - 1) * r.spacing) / cfg.ts;
        if (std::round(span) >= static_cast<double>(cfg.n))
            throw ValidationError("channel cannot be longer than one block");
    }
    if (cfg.seeds.count < 1) throw ValidationError("seeds.count must be >= 1");
    if (cfg.seeds.count > 1 && cfg.channel.kind != ChannelConfig::Kind::Rician)
        throw ValidationError("seeds.count > 1 needs a rician channel");
    if (cfg.task == Task::PrefixCompare) {
        if (cfg.system == SystemKind::RtftPhysical)
            throw ValidationError("prefix_compare supports the discrete systems only");
        if (!cfg.prefix.enabled)
            throw ValidationError("prefix_compare needs a prefix configuration");
        if (cfg.channel.kind == ChannelConfig::Kind::Ideal)
            throw ValidationError("prefix_compare needs a multipath channel");
        if (cfg.symbols.kind != SymbolsConfig::Kind::Explicit ||
            cfg.symbols.blocks.size() < 2)
            throw ValidationError("prefix_compare needs two explicit symbol blocks");
    }
    if (cfg.task == Task::Subcarriers && cfg.symbols.kind != SymbolsConfig::Kind::Explicit)
        throw ValidationError("subcarriers task needs explicit symbols");
}

// ------------------------------------------------------------------------

namespace {

struct FileSet {
    std::vector<std::pair<std::string, std::string>> files;  // name -> content
    json manifest_files = json::array();

    void add(const std::string& name, const std::string& content,
             const std::string& description, const std::vector<std::string>& columns) {
        files.emplace_back(name, content);
        json entry;
        entry["file"] = name;
        entry["description"] = description;
        if (!columns.empty()) entry["columns"] = columns;
        manifest_files.push_back(entry);
    }
};

std::vector<SymbolBlock> build_blocks(const ScenarioConfig& cfg) {
    std::vector<SymbolBlock> blocks;
    const auto n = static_cast<std::size_t>(cfg.n);
    if (cfg.symbols.kind == SymbolsConfig::Kind::Explicit) {
        for (std::size_t m = 0; m < cfg.symbols.blocks.size(); ++m) {
            SymbolBlock b;
            b.symbols = cfg.symbols.blocks[m];
            b.symbols.resize(n, cplx(0.0, 0.0));  // short lists are zero padded
            b.block_index = static_cast<int>(m);
            b.symbol_period = cfg.ts;
            blocks.push_back(std::move(b));
        }
    } else {
        Rng rng(cfg.symbols.seed);
        for (std::size_t m = 0; m < cfg.symbols.block_count; ++m) {
            SymbolBlock b;
            b.symbols = random_qpsk(n, rng);
            b.block_index = static_cast<int>(m);
            b.symbol_period = cfg.ts;
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

PipelineConfig pipeline_config(const ScenarioConfig& cfg) {
    PipelineConfig p;
    p.kind = cfg.system;
    p.profile = cfg.profile();
    p.prefix = cfg.prefix;
    p.oversampling = cfg.oversampling;
    return p;
}

std::optional<ChannelRealization> realize_channel(const ScenarioConfig& cfg,
                                                  std::uint64_t seed) {
    switch (cfg.channel.kind) {
        case ChannelConfig::Kind::Ideal:
            return std::nullopt;
        case ChannelConfig::Kind::Taps:
            return ChannelRealization{cfg.channel.taps};
        case ChannelConfig::Kind::Rician:
            return sample_channel(seed, cfg.channel.rician);
    }
    return std::nullopt;
}

json channel_json(const ChannelRealization& ch) {
    json taps = json::array();
    for (const ChannelTap& t : ch.taps) {
        json e;
        e["re"] = t.gain.real();
        e["im"] = t.gain.imag();
        e["delay_s"] = t.delay;
        taps.push_back(e);
    }
    json out;
    out["taps"] = taps;
    return out;
}

io::Table waveform_table(const ComplexSequence& seq) {
    io::Table t;
    t.columns = {"t_seconds", "re", "im"};
    t.rows.reserve(seq.size());
    for (std::size_t k = 0; k < seq.size(); ++k)
        t.add_row({seq.time_at(k), seq.samples[k].real(), seq.samples[k].imag()});
    return t;
}

io::Table waveform_table_norm(const ComplexSequence& seq) {
    io::Table t;
    t.columns = {"t_seconds", "re", "im", "re_norm", "im_norm"};
    const cvec norm = plot_normalize(seq.samples);
    for (std::size_t k = 0; k < seq.size(); ++k)
        t.add_row({seq.time_at(k), seq.samples[k].real(), seq.samples[k].imag(),
                   norm[k].real(), norm[k].imag()});
    return t;
}

struct SeedResult {
    std::uint64_t seed = 0;
    RunReport report;
    std::optional<ChannelRealization> channel;
    ComplexSequence tx;
    ComplexSequence rx;
    std::vector<SymbolBlock> blocks;
};

SeedResult run_one_seed(const ScenarioConfig& cfg, std::uint64_t seed) {
    SeedResult r;
    r.seed = seed;
    r.blocks = build_blocks(cfg);
    const PipelineConfig pipe = pipeline_config(cfg);
    r.tx = transmit(pipe, r.blocks);
    r.channel = realize_channel(cfg, seed);
    std::optional<cvec> gains;
    if (r.channel) {
        gains = r.channel->discrete_kernel(cfg.ts);
        if (cfg.system == SystemKind::RtftPhysical) {
            r.rx = apply_continuous(r.tx, *r.channel);
        } else {
            r.rx = r.tx;
            r.rx.samples = linear_convolve(r.tx.samples, *gains);
        }
    } else {
        r.rx = r.tx;
    }
    r.report = receive(pipe, r.rx, gains, &r.blocks);
    return r;
}

json seed_summary(const SeedResult& r) {
    json s;
    s["seed"] = r.seed;
    s["max_abs_error"] = r.report.max_abs_error;
    s["evm_rms"] = r.report.evm_rms;
    s["per_block_max_abs_error"] = r.report.per_block_max_abs_error;
    return s;
}

io::Table symbols_table(const std::vector<SymbolBlock>& truth, const RunReport& rep) {
    io::Table t;
    t.columns = {"block", "n", "tx_re", "tx_im", "rx_re", "rx_im", "abs_err"};
    for (std::size_t m = 0; m < rep.recovered_blocks.size(); ++m) {
        const cvec& rx = rep.recovered_blocks[m].symbols;
        const cvec& tx = truth[m].symbols;
        for (std::size_t i = 0; i < rx.size(); ++i)
            t.add_row({static_cast<double>(m), static_cast<double>(i), tx[i].real(),
                       tx[i].imag(), rx[i].real(), rx[i].imag(),
                       std::abs(rx[i] - tx[i])});
    }
    return t;
}

json isi_table_json(const ScenarioConfig& cfg, FileSet& out) {
    const double an = 1.0 / std::sqrt(static_cast<double>(cfg.n));
    io::Table t;
    t.columns = {"delta_tau_s", "subcarrier", "wsc_distortion", "subcarrier_distortion"};
    json rows = json::array();
    const std::vector<int> carriers = {0, cfg.n / 4, cfg.n / 2, 3 * cfg.n / 4, cfg.n - 1};
    for (int step = 1; step <= 10; ++step) {
        const double dtau = 0.05 * cfg.ts * static_cast<double>(step);
        const double wsc = isi_distortion_wsc(dtau, cfg.ts);
        for (int n : carriers) {
            const double sub = isi_distortion_ofdm(n, cfg.n, dtau, cfg.ts, an);
            t.add_row({dtau, static_cast<double>(n), wsc, sub});
            json row;
            row["delta_tau_s"] = dtau;
            row["subcarrier"] = n;
            row["wsc_distortion"] = wsc;
            row["subcarrier_distortion"] = sub;
            rows.push_back(row);
        }
    }
    out.add("isi_table.csv", io::render_csv(t),
            "two-path amplitude distortion of a wideband single carrier vs "
            "individual subcarriers",
            t.columns);
    return rows;
}

// Continuous rendering of one block for the figure-style outputs.
ComplexSequence render_block_waveform(const ScenarioConfig& cfg, const SymbolBlock& block) {
    const auto n = static_cast<std::size_t>(cfg.n);
    const int os = cfg.oversampling;
    if (cfg.system == SystemKind::ConventionalFft) return modulate_continuous(block, os);
    const PhaserParams tx = tx_params(cfg.profile());
    const double a = -block.block_duration() / 2.0 - tx.phi1;
    ComplexSequence seq;
    seq.dt = cfg.ts / static_cast<double>(os);
    seq.t0 = 0.0;  // block-local stream time; the window offset is implicit
    seq.samples.resize(n * static_cast<std::size_t>(os));
    for (std::size_t k = 0; k < seq.samples.size(); ++k)
        seq.samples[k] = cfg.ts * rtft_impulse_train_at(
                                       block, tx.mapping(),
                                       a + static_cast<double>(k) * seq.dt);
    return seq;
}

ComplexSequence assemble_stream(const ScenarioConfig& cfg,
                                const std::vector<SymbolBlock>& blocks,
                                bool with_prefix) {
    const int os = cfg.oversampling;
    const std::size_t guard =
        with_prefix ? cfg.prefix.length * static_cast<std::size_t>(os) : 0;
    ComplexSequence stream;
    stream.dt = cfg.ts / static_cast<double>(os);
    stream.t0 = 0.0;
    for (const SymbolBlock& b : blocks) {
        const ComplexSequence wf = render_block_waveform(cfg, b);
        if (guard) {
            if (cfg.prefix.kind == PrefixKind::Zp) {
                stream.samples.insert(stream.samples.end(), guard, cplx(0.0, 0.0));
            } else {
                stream.samples.insert(stream.samples.end(), wf.samples.end() - guard,
                                      wf.samples.end());
            }
        }
        stream.samples.insert(stream.samples.end(), wf.samples.begin(), wf.samples.end());
    }
    return stream;
}

// ---- per-task runners ----------------------------------------------------

void run_transceive(const ScenarioConfig& cfg, int parallel, FileSet& out, json& report) {
    std::vector<std::uint64_t> seeds(cfg.seeds.count);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        seeds[i] = (cfg.seeds.count > 1 ? cfg.seeds.base : cfg.channel.seed) + i;

    std::vector<SeedResult> results(seeds.size());
    if (parallel > 1 && seeds.size() > 1) {
        std::vector<std::future<void>> workers;
        std::atomic<std::size_t> next{0};
        const int nw = std::min<int>(parallel, static_cast<int>(seeds.size()));
        for (int w = 0; w < nw; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < seeds.size();
                     i = next.fetch_add(1))
                    results[i] = run_one_seed(cfg, seeds[i]);
            }));
        for (auto& f : workers) f.get();
    } else {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            results[i] = run_one_seed(cfg, seeds[i]);
    }

    const SeedResult& first = results.front();
    out.add("waveform_tx.csv", io::render_csv(waveform_table(first.tx)),
            "transmitted baseband stream (first seed)", {"t_seconds", "re", "im"});
    out.add("waveform_rx.csv", io::render_csv(waveform_table(first.rx)),
            "received baseband stream (first seed)", {"t_seconds", "re", "im"});
    out.add("symbols.csv", io::render_csv(symbols_table(first.blocks, first.report)),
            "transmitted vs recovered symbols (first seed)",
            {"block", "n", "tx_re", "tx_im", "rx_re", "rx_im", "abs_err"});
    if (first.channel) {
        report["channel"] = channel_json(*first.channel);
        out.add("channel.json", channel_json(*first.channel).dump(2) + "\n",
                "channel realization used by the first seed", {});
    }

    json seed_list = json::array();
    double worst = 0.0, evm_acc = 0.0;
    for (const SeedResult& r : results) {
        seed_list.push_back(seed_summary(r));
        worst = std::max(worst, r.report.max_abs_error);
        evm_acc += r.report.evm_rms;
    }
    report["seeds"] = seed_list;
    report["max_abs_error"] = worst;
    report["evm_rms_mean"] = evm_acc / static_cast<double>(results.size());
    report["blocks"] = first.blocks.size();
    if (cfg.emit_isi_table) report["isi_metrics"] = isi_table_json(cfg, out);
}

void run_subcarriers(const ScenarioConfig& cfg, FileSet& out, json& report) {
    const std::vector<SymbolBlock> blocks = build_blocks(cfg);
    const SymbolBlock& block = blocks.front();
    const auto n = static_cast<std::size_t>(cfg.n);
    const double t0 = block.block_duration();
    const double an = 1.0 / std::sqrt(static_cast<double>(n));
    const int os = cfg.oversampling;
    const double dt = cfg.ts / static_cast<double>(os);
    const std::size_t count = n * static_cast<std::size_t>(os);

    for (std::size_t sub = 0; sub < n; ++sub) {
        io::Table t;
        t.columns = {"t_seconds", "re", "im"};
        for (std::size_t k = 0; k < count; ++k) {
            const double time = static_cast<double>(k) * dt;
            const cplx v = block.symbols[sub] *
                           std::polar(an, kTwoPi * static_cast<double>(sub) * time / t0);
            t.add_row({time, v.real(), v.imag()});
        }
        out.add("waveform_sub" + std::to_string(sub) + ".csv", io::render_csv(t),
                "windowed subcarrier " + std::to_string(sub) + " times its symbol",
                t.columns);
    }
    out.add("waveform_total.csv",
            io::render_csv(waveform_table(modulate_continuous(block, os))),
            "sum of the windowed subcarriers", {"t_seconds", "re", "im"});

    std::vector<double> grid;
    const double f_lo = -2.0 / t0, f_hi = (static_cast<double>(n) + 2.0) / t0;
    for (int k = 0; k <= 1200; ++k)
        grid.push_back(f_lo + (f_hi - f_lo) * static_cast<double>(k) / 1200.0);

    for (std::size_t sub = 0; sub < n; ++sub) {
        io::Table t;
        t.columns = {"f_hz", "re", "im", "abs"};
        for (double f : grid) {
            const cplx v = spectrum_term(block, static_cast<int>(sub), f);
            t.add_row({f, v.real(), v.imag(), std::abs(v)});
        }
        out.add("spectrum_sub" + std::to_string(sub) + ".csv", io::render_csv(t),
                "sinc spectrum of subcarrier " + std::to_string(sub), t.columns);
    }
    io::Table total;
    total.columns = {"f_hz", "re", "im", "abs"};
    const cvec spec = spectrum(block, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
        total.add_row({grid[k], spec[k].real(), spec[k].imag(), std::abs(spec[k])});
    out.add("spectrum_total.csv", io::render_csv(total), "block spectrum",
            total.columns);
    report["blocks"] = 1;
}

void run_rtft_waveform(const ScenarioConfig& cfg, FileSet& out, json& report) {
    const std::vector<SymbolBlock> blocks = build_blocks(cfg);
    const SymbolBlock& block = blocks.front();
    const int os = cfg.oversampling;

    io::Table sym;
    sym.columns = {"n", "re", "im"};
    for (std::size_t i = 0; i < block.size(); ++i)
        sym.add_row({static_cast<double>(i), block.symbols[i].real(),
                     block.symbols[i].imag()});
    out.add("symbols.csv", io::render_csv(sym), "transmitted symbols", sym.columns);

    for (auto c : {Phi1Case::ZeroStart, Phi1Case::PhaseAligned}) {
        OfdmProfile profile = cfg.profile();
        profile.phi1_case = c;
        const PhaserParams tx = tx_params(profile);
        const OutputWindow w = output_window(tx.mapping(), cfg.ts);
        TimeGrid grid{w.t_min, cfg.ts / static_cast<double>(os),
                      static_cast<std::size_t>(cfg.n) * static_cast<std::size_t>(os) + 1};
        const ComplexSequence wf = rtft_impulse_train(block, tx.mapping(), grid);
        const std::string name = c == Phi1Case::ZeroStart ? "rtft_zero_start.csv"
                                                          : "rtft_phase_aligned.csv";
        out.add(name, io::render_csv(waveform_table_norm(wf)),
                "dispersive block waveform over its mapped window",
                {"t_seconds", "re", "im", "re_norm", "im_norm"});
    }
    report["blocks"] = 1;
}

void run_idft_vs_rtft(const ScenarioConfig& cfg, FileSet& out, json& report) {
    const std::vector<SymbolBlock> blocks = build_blocks(cfg);
    const SymbolBlock& block = blocks.front();
    const auto n = static_cast<std::size_t>(cfg.n);

    const cvec viaidft = modulate_discrete(block);
    const cvec viadisp = rtft_ofdm_discrete(block);
    const cvec idft_norm = plot_normalize(viaidft);
    const cvec disp_norm = plot_normalize(viadisp);

    auto emit = [&](const char* name, const cvec& raw, const cvec& norm,
                    const char* what) {
        io::Table t;
        t.columns = {"k", "re", "im", "re_norm", "im_norm"};
        for (std::size_t k = 0; k < n; ++k)
            t.add_row({static_cast<double>(k), raw[k].real(), raw[k].imag(),
                       norm[k].real(), norm[k].imag()});
        out.add(name, io::render_csv(t), what, t.columns);
    };
    emit("idft_symbols.csv", viaidft, idft_norm, "IDFT modem samples");
    emit("rtft_symbols.csv", viadisp, disp_norm, "dispersive modem samples");

    io::Table cmp;
    cmp.columns = {"k", "idft_re_norm", "rtft_shifted_re_norm", "abs_diff"};
    for (std::size_t k = 0; k < n; ++k) {
        const cplx shifted = disp_norm[(k + n / 2) % n];
        cmp.add_row({static_cast<double>(k), idft_norm[k].real(), shifted.real(),
                     std::abs(idft_norm[k] - shifted)});
    }
    out.add("compare_shifted.csv", io::render_csv(cmp),
            "IDFT samples against the half-block-shifted dispersive samples",
            cmp.columns);
    report["blocks"] = 1;
}

void run_prefix_compare(const ScenarioConfig& cfg, FileSet& out, json& report) {
    const std::vector<SymbolBlock> blocks = build_blocks(cfg);
    const std::optional<ChannelRealization> ch = realize_channel(cfg, cfg.channel.seed);
    const cvec gains = ch->discrete_kernel(cfg.ts);

    io::Table taps;
    taps.columns = {"l", "delay_s", "re", "im"};
    for (std::size_t l = 0; l < ch->taps.size(); ++l)
        taps.add_row({static_cast<double>(l), ch->taps[l].delay,
                      ch->taps[l].gain.real(), ch->taps[l].gain.imag()});
    out.add("channel_taps.csv", io::render_csv(taps), "channel impulse response",
            taps.columns);
    out.add("channel.json", channel_json(*ch).dump(2) + "\n",
            "channel realization as JSON", {});
    report["channel"] = channel_json(*ch);

    for (bool with_prefix : {false, true}) {
        const ComplexSequence tx = assemble_stream(cfg, blocks, with_prefix);
        const ComplexSequence rx = apply_continuous(tx, *ch);
        const char* txname = with_prefix ? "tx_prefix.csv" : "tx_noprefix.csv";
        const char* rxname = with_prefix ? "rx_prefix.csv" : "rx_noprefix.csv";
        out.add(txname, io::render_csv(waveform_table_norm(tx)),
                with_prefix ? "transmitted stream with guard intervals"
                            : "transmitted stream without guards",
                {"t_seconds", "re", "im", "re_norm", "im_norm"});
        out.add(rxname, io::render_csv(waveform_table_norm(rx)),
                with_prefix ? "received stream with guard intervals"
                            : "received stream without guards",
                {"t_seconds", "re", "im", "re_norm", "im_norm"});
    }

    // symbol recovery through the discrete pipeline with the prefix on
    PipelineConfig pipe = pipeline_config(cfg);
    const ComplexSequence tx = transmit(pipe, blocks);
    ComplexSequence rx = tx;
    rx.samples = linear_convolve(tx.samples, gains);
    const RunReport rep = receive(pipe, rx, gains, &blocks);
    out.add("symbols.csv", io::render_csv(symbols_table(blocks, rep)),
            "transmitted vs equalized recovered symbols",
            {"block", "n", "tx_re", "tx_im", "rx_re", "rx_im", "abs_err"});
    report["max_abs_error"] = rep.max_abs_error;
    report["evm_rms"] = rep.evm_rms;
    report["blocks"] = blocks.size();
    if (cfg.emit_isi_table) report["isi_metrics"] = isi_table_json(cfg, out);
}

void run_group_delay(const ScenarioConfig& cfg, FileSet& out, json& report) {
    const PhaserParams tx = tx_params(cfg.profile());
    const PhaserParams rx = rx_params(tx);
    const double half_band = 1.2 * kPi / cfg.ts;

    io::Table t;
    t.columns = {"omega_rad_s", "f_hz", "tau_tx_s", "tau_rx_s"};
    for (int k = 0; k <= 800; ++k) {
        const double w = tx.omega_c - half_band +
                         2.0 * half_band * static_cast<double>(k) / 800.0;
        t.add_row({w, w / kTwoPi, group_delay(w, tx), group_delay(w, rx)});
    }
    out.add("group_delay.csv", io::render_csv(t),
            "linear group delay of the transmit and receive phasers", t.columns);

    const FeasibilityReport fr = feasibility(cfg.profile(), cfg.bandwidth_hz);
    json f;
    f["phi2_s2_per_rad"] = tx.phi2;
    f["phi1_s"] = tx.phi1;
    f["omega_c_rad_s"] = tx.omega_c;
    f["phi2_magnitude"] = fr.phi2_magnitude;
    f["delay_swing_s"] = fr.delay_swing;
    f["center_delay_s"] = fr.center_delay;
    f["practical"] = fr.practical;
    f["notes"] = fr.notes;
    out.add("feasibility.json", f.dump(2) + "\n", "phaser realizability summary", {});
    report["feasibility"] = f;
}

}  // namespace

RunOutcome run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                        int parallel) {
    validate(cfg);

    FileSet out;
    json report;
    report["scenario"] = cfg.name;
    report["task"] = task_name(cfg.task);
    report["system"] = system_name(cfg.system);
    report["n"] = cfg.n;
    report["ts_s"] = cfg.ts;
    if (cfg.system != SystemKind::ConventionalFft)
        report["omega_c_rad_s"] = default_omega_c(cfg.profile());
    if (cfg.prefix.enabled) {
        report["prefix"] = {{"kind", cfg.prefix.kind == PrefixKind::Cp ? "cp" : "zp"},
                            {"length", cfg.prefix.length}};
    } else {
        report["prefix"] = {{"kind", "none"}};
    }

    switch (cfg.task) {
        case Task::Transceive: run_transceive(cfg, parallel, out, report); break;
        case Task::Subcarriers: run_subcarriers(cfg, out, report); break;
        case Task::RtftWaveform: run_rtft_waveform(cfg, out, report); break;
        case Task::IdftVsRtft: run_idft_vs_rtft(cfg, out, report); break;
        case Task::PrefixCompare: run_prefix_compare(cfg, out, report); break;
        case Task::GroupDelay: run_group_delay(cfg, out, report); break;
    }

    json file_list = json::array();
    for (const auto& [name, content] : out.files) file_list.push_back(name);
    file_list.push_back("report.json");
    file_list.push_back("manifest.json");
    report["files"] = file_list;

    const std::string report_text = report.dump(2) + "\n";
    json manifest;
    manifest["scenario"] = cfg.name;
    manifest["files"] = out.manifest_files;
    {
        json entry;
        entry["file"] = "report.json";
        entry["description"] = "run summary and error metrics";
        manifest["files"].push_back(entry);
    }

    // Everything simulated successfully; only now touch the filesystem.
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    RunOutcome outcome;
    for (const auto& [name, content] : out.files) {
        const std::string path = (fs::path(out_dir) / name).string();
        io::write_text_file(path, content);
        outcome.files.push_back(path);
    }
    const std::string report_path = (fs::path(out_dir) / "report.json").string();
    io::write_text_file(report_path, report_text);
    outcome.files.push_back(report_path);
    const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
    io::write_text_file(manifest_path, manifest.dump(2) + "\n");
    outcome.files.push_back(manifest_path);
    outcome.report_json = report_text;
    return outcome;
}

DesignReport design_report(int n, double ts, const std::string& band_name) {
    DesignReport out;
    const BandPreset* band = nullptr;
    if (!band_name.empty()) {
        band = find_band_preset(band_name);
        if (!band) {
            out.ok = false;
            out.text = "unknown band preset: " + band_name + " (available:";
            for (const BandPreset& b : band_presets()) out.text += " " + b.name;
            out.text += ")\n";
            return out;
        }
    }
    OfdmProfile profile{n, ts, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    const PhaserParams tx = tx_params(profile);
    const PhaserParams rx = rx_params(tx);
    const double bandwidth = 1.0 / ts;
    const FeasibilityReport fr = feasibility(profile, bandwidth);

    std::ostringstream text;
    text << "phaser design for N=" << n << ", Ts=" << io::format_double(ts) << " s\n"
         << "  tx: phi1 = " << io::format_double(tx.phi1)
         << " s, phi2 = " << io::format_double(tx.phi2) << " s^2/rad\n"
         << "  rx: phi1 = " << io::format_double(rx.phi1)
         << " s, phi2 = " << io::format_double(rx.phi2) << " s^2/rad\n"
         << "  |phi2| = " << io::format_double(fr.phi2_magnitude)
         << " s^2/rad, center delay = " << io::format_double(fr.center_delay)
         << " s, delay swing over " << io::format_double(bandwidth)
         << " Hz = " << io::format_double(fr.delay_swing) << " s\n";
    if (band) {
        text << "  band " << band->name << " (" << band->description << ")";
        if (ts > band->ts_max)
            text << ": Ts exceeds the band's typical bound of "
                 << io::format_double(band->ts_max) << " s";
        text << "\n";
    }
    text << "  verdict: " << (fr.practical ? "practical" : "impractical");
    if (!fr.notes.empty()) text << " - " << fr.notes;
    text << "\n";

    json j;
    j["n"] = n;
    j["ts_s"] = ts;
    j["tx"] = {{"phi0", tx.phi0}, {"phi1_s", tx.phi1}, {"phi2_s2_per_rad", tx.phi2},
               {"omega_c_rad_s", tx.omega_c}};
    j["rx"] = {{"phi0", rx.phi0}, {"phi1_s", rx.phi1}, {"phi2_s2_per_rad", rx.phi2},
               {"omega_c_rad_s", rx.omega_c}};
    j["phi2_magnitude"] = fr.phi2_magnitude;
    j["delay_swing_s"] = fr.delay_swing;
    j["center_delay_s"] = fr.center_delay;
    j["practical"] = fr.practical;
    j["notes"] = fr.notes;
    if (band) j["band"] = band->name;

    out.text = text.str();
    out.json = j.dump(2) + "\n";
    return out;
}

}  // namespace aofdm::scenario
