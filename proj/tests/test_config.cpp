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

#include "doctest.h"

#include "rdars/config.hpp"
#include "rdars/errors.hpp"

#include <filesystem>
#include <fstream>

using namespace rdars;
using nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string &name, const std::string &text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("empty sub-6 GHz config takes the band defaults")
{
    const auto cfg = resolve_config(json::object(), Figure::Cdf);
    CHECK(cfg.radio.band == Band::Sub6);
    CHECK(cfg.radio.transmit_power_dbm == 10.0);
    CHECK(cfg.radio.bandwidth_hz == 20e6);
    CHECK(cfg.radio.carrier_frequency_ghz == 3.7);
    CHECK(cfg.radio.noise_power_bs_dbm == -100.0);
    CHECK(cfg.n_trials == 30000);
    CHECK(cfg.scene == Scene{});
    REQUIRE(cfg.architectures.size() == 6);
    for (const auto &s : cfg.architectures)
        CHECK(s.n_elements == 1024);
    CHECK(cfg.architectures[0].label() == "RIS");
    CHECK(cfg.architectures[1].label() == "ARIS");
    CHECK(cfg.architectures[5].label() == "RDARS a=4");
}

TEST_CASE("mmWave band defaults")
{
    const auto cfg = resolve_config(json{{"band", "mmwave"}}, Figure::Cdf);
    CHECK(cfg.radio.noise_power_bs_dbm == -87.0);
    CHECK(cfg.radio.noise_power_rs_dbm == -87.0);
    CHECK(cfg.radio.transmit_power_dbm == 20.0);
    CHECK(cfg.radio.bandwidth_hz == 500e6);
    CHECK(cfg.radio.carrier_frequency_ghz == 28.0);

    ConfigOverrides o;
    o.band = Band::MmWave;
    CHECK(resolve_config(json::object(), Figure::Cdf, o).radio == cfg.radio);
}

TEST_CASE("figure defaults")
{
    const auto n = resolve_config(json::object(), Figure::EeVsN);
    CHECK(n.sweep.variable == SweepVariable::NumElements);
    CHECK(n.sweep.points == std::vector<double>{16, 32, 64, 128, 256, 512, 1024, 2048});

    for (auto fig : {Figure::EeVsXrs, Figure::EeVsUe})
    {
        const auto cfg = resolve_config(json::object(), fig);
        for (const auto &s : cfg.architectures)
            CHECK(s.n_elements == 256);
    }
    CHECK(resolve_config(json::object(), Figure::EeVsXrs).sweep.points.front() == 20.0);
    CHECK(resolve_config(json::object(), Figure::EeVsUe).sweep.points.back() == 400.0);
}

TEST_CASE("field overrides")
{
    const json doc = json::parse(R"({
        "seed": 99,
        "n_trials": 10,
        "radio": {"noise_power_dbm": -90, "links": {"ue_rs": "UMiNLOS"}},
        "power": {"p_c_w": 0.01, "p_rf_sub6_w": 0.25},
        "scene": {"rs": [30, 10, 12]},
        "surface": {"n_elements": 64, "connected_modes": [2], "connected_selection": "largest_ue_gain"},
        "sweeps": {"ee_vs_n": [8, 64]}
    })");
    const auto cfg = resolve_config(doc, Figure::EeVsN);
    CHECK(cfg.master_seed == 99);
    CHECK(cfg.n_trials == 10);
    CHECK(cfg.radio.noise_power_bs_dbm == -90.0);
    CHECK(cfg.radio.noise_power_rs_dbm == -90.0);
    CHECK(cfg.radio.links.ue_rs == PathLossModel::UMiNLOS);
    CHECK(cfg.power.p_c == 0.01);
    CHECK(cfg.power.p_rf_sub6 == 0.25);
    CHECK(cfg.scene.rs == Position3D{30, 10, 12});
    REQUIRE(cfg.architectures.size() == 3);
    CHECK(cfg.architectures[2].n_connected == 2);
    CHECK(cfg.architectures[2].connected_selection == ConnectedSelection::LargestUeGain);
    CHECK(cfg.sweep.points == std::vector<double>{8, 64});

    ConfigOverrides o;
    o.seed = 3;
    o.trials = 5;
    const auto over = resolve_config(doc, Figure::EeVsN, o);
    CHECK(over.master_seed == 3);
    CHECK(over.n_trials == 5);
}

TEST_CASE("explicit architecture list")
{
    const json doc = json::parse(R"({"architectures": [
        {"kind": "RDARS", "n_connected": 3, "n_elements": 16},
        {"kind": "ARIS"}
    ]})");
    const auto cfg = resolve_config(doc, Figure::Cdf);
    REQUIRE(cfg.architectures.size() == 2);
    CHECK(cfg.architectures[0].label() == "RDARS a=3");
    CHECK(cfg.architectures[0].n_elements == 16);
    CHECK(cfg.architectures[1].n_elements == 1024);
}

TEST_CASE("invalid configs")
{
    CHECK_THROWS_AS(resolve_config(json::parse(R"({"surface": {"n_elements": 2, "connected_modes": [3]}})"),
                                   Figure::Cdf),
                    ValidationError);
    CHECK_THROWS_AS(resolve_config(json::parse(R"({"architectures": [{"kind": "RDARS", "n_connected": 5,
                                                   "n_elements": 4}]})"),
                                   Figure::Cdf),
                    ValidationError);
    CHECK_THROWS_AS(resolve_config(json{{"trials", 5}}, Figure::Cdf), ParseError);
    CHECK_THROWS_AS(resolve_config(json{{"radio", {{"power_dbm", 5}}}}, Figure::Cdf), ParseError);
    CHECK_THROWS_AS(resolve_config(json{{"radio", {{"bandwidth_hz", "wide"}}}}, Figure::Cdf), ParseError);
    CHECK_THROWS_AS(resolve_config(json{{"n_trials", 0}}, Figure::Cdf), ValidationError);
    CHECK_THROWS_AS(resolve_config(json{{"band", "lte"}}, Figure::Cdf), ValidationError);
    CHECK_THROWS_AS(resolve_config(json{{"power", {{"p_c_w", -1}}}}, Figure::Cdf), ValidationError);
    CHECK_THROWS_AS(resolve_config(json{{"sweeps", {{"ee_vs_n", {64, 32}}}}}, Figure::EeVsN), InvalidSweepPoint);
}

TEST_CASE("load_config from files")
{
    const auto good = write_temp("rdars_cfg_good.json", "{\n  // comment\n  \"band\": \"mmwave\"\n}\n");
    CHECK(load_config(good, Figure::Cdf).radio.band == Band::MmWave);
    CHECK(load_config({}, Figure::Cdf).radio.band == Band::Sub6);

    const auto bad = write_temp("rdars_cfg_bad.json", "{\n  \"band\": \"sub6\",\n  \"seed\": \n}\n");
    try
    {
        load_config(bad, Figure::Cdf);
        FAIL("expected ParseError");
    }
    catch (const ParseError &e)
    {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/rdars.json", Figure::Cdf), ParseError);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("config digest")
{
    const auto a = resolve_config(json::parse(R"({"seed": 4, "band": "mmwave", "n_trials": 20})"), Figure::EeVsUe);
    const auto b = resolve_config(json::parse(R"({"n_trials": 20, "band": "mmwave", "seed": 4})"), Figure::EeVsUe);
    const auto digest = config_digest(a);
    CHECK(digest.size() == 64);
    CHECK(digest == config_digest(b));

    auto workers = a;
    workers.workers = 7;
    CHECK(config_digest(workers) == digest);

    auto seed = a;
    seed.master_seed = 5;
    CHECK(config_digest(seed) != digest);
}
