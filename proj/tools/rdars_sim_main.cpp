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

#include "rdars/errors.hpp"
#include "rdars/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Monte-Carlo SNR and energy-efficiency simulator for RIS, active RIS and RDARS uplinks"};
    app.set_version_flag("--version", rdars::kToolVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> band;
    std::optional<unsigned> workers;

    const char *env_out = std::getenv(rdars::kOutDirEnv);
    out_dir = env_out && *env_out ? env_out : "results";

    const struct {
        rdars::Figure figure;
        const char *help;
    } commands[] = {
        {rdars::Figure::Cdf, "CDF of the received SNR (N = 1024)"},
        {rdars::Figure::EeVsN, "Energy efficiency versus number of surface elements"},
        {rdars::Figure::EeVsXrs, "Energy efficiency versus BS-RS horizontal distance (N = 256)"},
        {rdars::Figure::EeVsUe, "Energy efficiency versus BS-UE distance (N = 256)"},
    };

    for (const auto &c : commands)
    {
        auto *sub = app.add_subcommand(std::string(rdars::to_string(c.figure)), c.help);
        sub->add_option("--config", config_path, "JSON config file (defaults used if omitted)")->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, std::string("Output directory (default: $") + rdars::kOutDirEnv +
                                              " or ./results)");
        sub->add_option("--seed", seed, "Master seed");
        sub->add_option("--trials", trials, "Monte-Carlo trials per point")->check(CLI::PositiveNumber);
        sub->add_option("--band", band, "Radio band")->check(CLI::IsMember({"sub6", "mmwave"}));
        sub->add_option("--workers", workers, "Worker threads (0 = all cores); does not change results");
    }

    CLI11_PARSE(app, argc, argv);

    try
    {
        rdars::ConfigOverrides overrides;
        overrides.seed = seed;
        overrides.trials = trials;
        overrides.workers = workers;
        if (band)
            overrides.band = rdars::band_from_string(*band);

        const auto *sub = app.get_subcommands().front();
        const auto figure = rdars::figure_from_string(sub->get_name());
        const auto manifest = rdars::run_command(figure, config_path, out_dir, overrides);

        std::cout << "config digest " << manifest.config_digest << '\n';
        for (const auto &p : manifest.output_paths)
            std::cout << "wrote " << p.string() << '\n';
    }
    catch (const rdars::Error &e)
    {
        std::cerr << "rdars-sim: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
