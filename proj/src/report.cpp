// SPDX-License-Identifier: Apache-2.0
//
// rdars-sim: link-level Monte-Carlo simulator for RIS, active RIS and RDARS uplinks
// Copyright (C) 2026 The rdars-sim authors
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

#include "rdars/report.hpp"

#include "rdars/errors.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rdars {

using nlohmann::json;

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_summary_csv(const SweepResult &result, std::ostream &out)
{
    out << kSummaryCsvHeader << '\n';
    for (const auto &r : result.rows)
        out << format_number(r.sweep_value) << ',' << r.architecture << ',' << format_number(linear_to_db(r.mean_snr_linear))
            << ',' << format_number(r.mean_capacity) << ',' << format_number(r.mean_ee) << ','
            << format_number(r.total_power_w) << ',' << format_number(r.stderr_ee) << '\n';
}

void write_cdf_csv(const SweepResult &result, std::ostream &out)
{
    out << kCdfCsvHeader << '\n';
    for (const auto &curve : result.cdf)
        for (const auto &p : curve.points)
            out << curve.architecture << ',' << format_number(p.value) << ',' << format_number(p.probability) << '\n';
}

json to_input_json(const ExperimentConfig &cfg, Figure figure)
{
    const auto pos = [](const Position3D &p) { return json::array({p.x, p.y, p.z}); };
    const auto &r = cfg.radio;

    json doc;
    doc["band"] = std::string(to_string(r.band));
    doc["seed"] = cfg.master_seed;
    doc["n_trials"] = cfg.n_trials;
    doc["averaging"] = std::string(to_string(cfg.averaging));
    doc["scene"] = {{"bs", pos(cfg.scene.bs)}, {"rs", pos(cfg.scene.rs)}, {"ue", pos(cfg.scene.ue)}};
    doc["radio"] = {{"carrier_frequency_ghz", r.carrier_frequency_ghz},
                    {"transmit_power_dbm", r.transmit_power_dbm},
                    {"bandwidth_hz", r.bandwidth_hz},
                    {"noise_power_bs_dbm", r.noise_power_bs_dbm},
                    {"noise_power_rs_dbm", r.noise_power_rs_dbm},
                    {"rician_k_db", r.rician_k_db},
                    {"shadow_fading", r.shadow_fading},
                    {"links",
                     {{"ue_bs", std::string(to_string(r.links.ue_bs))},
                      {"ue_rs", std::string(to_string(r.links.ue_rs))},
                      {"rs_bs", std::string(to_string(r.links.rs_bs))}}}};
    doc["power"] = {{"p_c_w", cfg.power.p_c},           {"p_dc_w", cfg.power.p_dc},
                    {"p_rf_sub6_w", cfg.power.p_rf_sub6}, {"p_rf_mmwave_w", cfg.power.p_rf_mmwave},
                    {"zeta", cfg.power.zeta},           {"p_out_w", cfg.power.p_out}};

    json surface = json::object();
    json archs = json::array();
    for (const auto &s : cfg.architectures)
    {
        if (s.kind == SurfaceKind::RDARS)
            surface["connected_selection"] = std::string(to_string(s.connected_selection));
        if (s.kind == SurfaceKind::ActiveRIS && s.amplitude_ceiling)
            surface["active_amplitude_ceiling"] = *s.amplitude_ceiling;
        archs.push_back({{"kind", std::string(to_string(s.kind))},
                         {"n_elements", s.n_elements},
                         {"n_connected", s.n_connected}});
    }
    doc["surface"] = surface;
    doc["architectures"] = archs;
    if (figure != Figure::Cdf)
        doc["sweeps"] = {{std::string(to_string(figure)), cfg.sweep.points}};
    return doc;
}

namespace {

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.close();
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
}

std::string axis_label(Figure figure)
{
    switch (figure)
    {
    case Figure::Cdf:
        return "Received SNR (dB)";
    case Figure::EeVsN:
        return "Number of RS elements N";
    case Figure::EeVsXrs:
        return "BS-RS horizontal distance x_RS (m)";
    case Figure::EeVsUe:
        return "BS-UE distance (m)";
    }
    return "";
}

std::string plot_script(Figure figure, const std::string &summary_csv, const std::string &cdf_csv)
{
    std::ostringstream s;
    s << "#!/usr/bin/env python3\n"
      << "# Generated by rdars-sim " << kToolVersion << ". Reads CSV files next to this script.\n"
      << "import csv\nimport os\nfrom collections import defaultdict\n\nimport matplotlib.pyplot as plt\n\n"
      << "here = os.path.dirname(os.path.abspath(__file__))\n"
      << "series = defaultdict(lambda: ([], []))\n";
    if (figure == Figure::Cdf)
    {
        s << "with open(os.path.join(here, '" << cdf_csv << "')) as f:\n"
          << "    for row in csv.DictReader(f):\n"
          << "        xs, ys = series[row['architecture']]\n"
          << "        xs.append(float(row['snr_db']))\n"
          << "        ys.append(float(row['cumulative_probability']))\n"
          << "for label, (xs, ys) in series.items():\n"
          << "    plt.step(xs, ys, where='post', label=label)\n"
          << "plt.ylabel('CDF')\n";
    }
    else
    {
        s << "with open(os.path.join(here, '" << summary_csv << "')) as f:\n"
          << "    for row in csv.DictReader(f):\n"
          << "        xs, ys = series[row['architecture']]\n"
          << "        xs.append(float(row['sweep_value']))\n"
          << "        ys.append(float(row['mean_ee_bpj']))\n"
          << "for label, (xs, ys) in series.items():\n"
          << "    plt.plot(xs, ys, marker='o', label=label)\n"
          << "plt.ylabel('Energy efficiency (bit/J)')\n"
          << "plt.yscale('log')\n";
    }
    s << "plt.xlabel('" << axis_label(figure) << "')\n"
      << "plt.grid(True, which='both', alpha=0.3)\n"
      << "plt.legend()\n"
      << "plt.savefig(os.path.join(here, '" << std::filesystem::path(summary_csv).stem().string()
      << ".png'), dpi=150)\n";
    return s.str();
}

} // namespace

RunManifest run_command(Figure figure, const std::filesystem::path &config_path,
                        const std::filesystem::path &out_dir, const ConfigOverrides &overrides)
{
    const auto cfg = load_config(config_path, figure, overrides);
    const SweepResult result = figure == Figure::Cdf ? run_cdf(cfg) : run_sweep(cfg);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw Error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    const std::string stem = std::string(to_string(figure)) + "_" + std::string(to_string(cfg.radio.band));
    const auto summary_path = out_dir / (stem + ".csv");
    const auto cdf_path = out_dir / (stem + "_cdf.csv");
    const auto plot_path = out_dir / (stem + "_plot.py");
    const auto config_out = out_dir / (stem + "_config.json");
    const auto manifest_path = out_dir / (stem + "_manifest.json");

    RunManifest manifest;
    manifest.config_digest = config_digest(cfg);
    manifest.tool_version = kToolVersion;
    manifest.timestamp = utc_timestamp();

    {
        std::ostringstream csv;
        write_summary_csv(result, csv);
        write_file(summary_path, csv.str());
        manifest.output_paths.push_back(summary_path);
    }
    if (figure == Figure::Cdf)
    {
        std::ostringstream csv;
        write_cdf_csv(result, csv);
        write_file(cdf_path, csv.str());
        manifest.output_paths.push_back(cdf_path);
    }
    write_file(plot_path, plot_script(figure, summary_path.filename().string(), cdf_path.filename().string()));
    manifest.output_paths.push_back(plot_path);
    write_file(config_out, to_input_json(cfg, figure).dump(2) + "\n");
    manifest.output_paths.push_back(config_out);
    manifest.output_paths.push_back(manifest_path);

    json doc;
    doc["config_digest"] = manifest.config_digest;
    doc["tool_version"] = manifest.tool_version;
    doc["timestamp"] = manifest.timestamp;
    doc["figure"] = std::string(to_string(figure));
    doc["band"] = std::string(to_string(cfg.radio.band));
    doc["csv_schema"] = kSummaryCsvHeader;
    json paths = json::array();
    for (const auto &p : manifest.output_paths)
        paths.push_back(p.string());
    doc["output_paths"] = paths;
    doc["resolved_config"] = to_json(cfg);
    doc["reproduce"] = "rdars-sim " + std::string(to_string(figure)) + " --config " + config_out.filename().string();
    if (figure == Figure::Cdf)
    {
        json medians = json::object();
        for (const auto &c : result.cdf)
            medians[c.architecture] = c.median_snr_db;
        doc["median_snr_db"] = medians;
    }
    write_file(manifest_path, doc.dump(2) + "\n");
    return manifest;
}

} // namespace rdars
