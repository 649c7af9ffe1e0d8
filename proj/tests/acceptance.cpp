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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "rdars/config.hpp"
#include "rdars/errors.hpp"
#include "rdars/experiments.hpp"
#include "rdars/power.hpp"
#include "rdars/random_stream.hpp"
#include "rdars/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rdars;
using cd = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Detail {
public:
    template <typename T>
    Detail &operator<<(const T &v)
    {
        s_ << v;
        return *this;
    }
    std::string str() const { return s_.str(); }

private:
    std::ostringstream s_;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ChannelRealization random_channel(std::mt19937_64 &eng, std::size_t n)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    ChannelRealization ch;
    ch.h_ub = {g(eng), g(eng)};
    for (std::size_t i = 0; i < n; ++i)
    {
        ch.h_ur.emplace_back(g(eng), g(eng));
        ch.h_rb.emplace_back(g(eng), g(eng));
    }
    return ch;
}

ExperimentConfig default_config(Figure figure, Band band)
{
    ConfigOverrides o;
    o.band = band;
    return resolve_config(nlohmann::json::object(), figure, o);
}

// mean EE per (sweep point, label)
std::map<std::string, std::vector<double>> ee_by_label(const SweepResult &res)
{
    std::map<std::string, std::vector<double>> out;
    for (const auto &row : res.rows)
        out[row.architecture].push_back(row.mean_ee);
    return out;
}

bool strictly_decreasing(const std::vector<double> &v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1]))
            return false;
    return true;
}

bool nondecreasing(const std::vector<double> &v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1])
            return false;
    return true;
}

const char *band_name(Band b) { return b == Band::Sub6 ? "sub6" : "mmwave"; }

const std::vector<std::string> kRdars = {"RDARS a=1", "RDARS a=2", "RDARS a=3", "RDARS a=4"};

Outcome criterion_oracle()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 eng(101);
    double worst_gap = 0.0;
    int above = 0;
    for (int k = 0; k < 200; ++k)
    {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 4);
        const std::size_t a = static_cast<std::size_t>(k / 4) % (n + 1);
        const auto ch = random_channel(eng, n);
        const auto spec = SurfaceSpec::rdars(n, a);
        const double opt = snr_rdars_optimal(ch, spec, 1.0).snr_linear;
        const double bf = brute_force_best_snr(ch, spec, 64, 1.0).snr_linear;
        if (bf > opt * (1 + 1e-12))
            ++above;
        worst_gap = std::max(worst_gap, (opt - bf) / opt);
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = above == 0 && worst_gap < 0.01 && t < 30.0;
    o.detail = (Detail() << "200 channels, N<=4, L=64: exceedances=" << above << ", worst gap=" << worst_gap
                         << ", " << t << " s")
                   .str();
    return o;
}

Outcome criterion_equivalence()
{
    std::mt19937_64 eng(202);
    double worst = 0.0;
    for (int k = 0; k < 100000; ++k)
    {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 16);
        const std::size_t a = static_cast<std::size_t>(k % 5) % (n + 1);
        const auto ch = random_channel(eng, n);
        const auto spec = SurfaceSpec::rdars(n, a);
        const double closed = snr_rdars_optimal(ch, spec, 1.0).snr_linear;
        const double general = snr_rdars_general(ch, spec, optimal_phases_rdars(ch, spec), 1.0).snr_linear;
        worst = std::max(worst, std::abs(general - closed) / closed);
    }
    return {worst < 1e-12, (Detail() << "1e5 instances, max relative error=" << worst).str()};
}

Outcome criterion_reduction()
{
    std::mt19937_64 eng(303);
    int mismatches = 0;
    for (int k = 0; k < 100000; ++k)
    {
        const std::size_t n = static_cast<std::size_t>(k % 33);
        const auto ch = random_channel(eng, n);
        if (snr_rdars_optimal(ch, SurfaceSpec::rdars(n, 0), 1e4).snr_linear != snr_ris(ch, 1e4).snr_linear)
            ++mismatches;
    }
    return {mismatches == 0, (Detail() << "1e5 instances, bitwise mismatches=" << mismatches).str()};
}

Outcome criterion_cdf_ordering()
{
    Outcome o;
    Detail d;
    const auto t0 = std::chrono::steady_clock::now();
    for (Band band : {Band::Sub6, Band::MmWave})
    {
        auto cfg = default_config(Figure::Cdf, band);
        for (auto &spec : cfg.architectures)
            if (spec.kind == SurfaceKind::RDARS)
                spec.connected_selection = ConnectedSelection::LargestUeGain;
        const auto res = run_cdf(cfg);
        std::map<std::string, double> med;
        for (const auto &c : res.cdf)
            med[c.architecture] = c.median_snr_db;
        const bool ok = med["ARIS"] > med["RDARS a=4"] && med["RDARS a=4"] >= med["RDARS a=1"] &&
                        med["RDARS a=1"] > med["RIS"] && med["RDARS a=1"] <= med["RDARS a=2"] &&
                        med["RDARS a=2"] <= med["RDARS a=3"] && med["RDARS a=3"] <= med["RDARS a=4"];
        o.pass = o.pass && ok;
        d << band_name(band) << " medians dB: RIS=" << med["RIS"] << " a1=" << med["RDARS a=1"]
          << " a4=" << med["RDARS a=4"] << " ARIS=" << med["ARIS"] << (ok ? "" : " (ordering violated)") << "; ";
    }
    const double t = seconds_since(t0);
    o.pass = o.pass && t < 120.0;
    d << t << " s";
    o.detail = d.str();
    return o;
}

Outcome criterion_ee_vs_n()
{
    Outcome o;
    Detail d;
    for (Band band : {Band::Sub6, Band::MmWave})
    {
        const auto cfg = default_config(Figure::EeVsN, band);
        const auto ee = ee_by_label(run_sweep(cfg));
        const auto &pts = cfg.sweep.points;
        const auto &ris = ee.at("RIS");
        const auto &aris = ee.at("ARIS");
        bool ok = strictly_decreasing(ris) && strictly_decreasing(aris);
        if (!ok)
            d << band_name(band) << " RIS/ARIS not strictly decreasing; ";
        if (band == Band::Sub6)
        {
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (!(ris[i] > aris[i]))
                {
                    ok = false;
                    d << "sub6 ARIS >= RIS at N=" << pts[i] << "; ";
                }
        }
        else
        {
            double spread = 0.0;
            for (const auto &label : kRdars)
            {
                std::vector<double> tail;
                for (std::size_t i = 0; i < pts.size(); ++i)
                    if (pts[i] >= 256)
                        tail.push_back(ee.at(label)[i]);
                const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
                spread = std::max(spread, *hi / *lo - 1.0);
            }
            d << "mmwave RDARS spread over N>=256=" << spread << "; ";
            ok = ok && spread < 0.1;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (pts[i] >= 64 && !(aris[i] > ris[i]))
                {
                    ok = false;
                    d << "mmwave RIS >= ARIS at N=" << pts[i] << "; ";
                }
        }
        o.pass = o.pass && ok;
    }
    o.detail = d.str();
    if (o.detail.empty())
        o.detail = "all trends hold";
    return o;
}

Outcome criterion_ee_vs_xrs()
{
    Outcome o;
    Detail d;
    for (Band band : {Band::Sub6, Band::MmWave})
    {
        const auto cfg = default_config(Figure::EeVsXrs, band);
        const auto ee = ee_by_label(run_sweep(cfg));
        for (const auto &label : kRdars)
            if (!nondecreasing(ee.at(label)))
            {
                o.pass = false;
                d << band_name(band) << " " << label << " not monotone; ";
            }
        if (band == Band::Sub6)
            for (const auto &label : {"RDARS a=1", "RDARS a=2", "RDARS a=3"})
                for (std::size_t i = 0; i < cfg.sweep.points.size(); ++i)
                    if (!(ee.at(label)[i] > ee.at("ARIS")[i]))
                    {
                        o.pass = false;
                        d << "sub6 " << label << " <= ARIS at x=" << cfg.sweep.points[i] << "; ";
                    }
        d << band_name(band) << " a=1 EE " << ee.at("RDARS a=1").front() << " -> " << ee.at("RDARS a=1").back()
          << "; ";
    }
    o.detail = d.str();
    return o;
}

Outcome criterion_ee_vs_ue()
{
    Outcome o;
    Detail d;
    for (Band band : {Band::Sub6, Band::MmWave})
    {
        const auto cfg = default_config(Figure::EeVsUe, band);
        const auto ee = ee_by_label(run_sweep(cfg));
        const auto &pts = cfg.sweep.points;
        const auto &aris = ee.at("ARIS");
        if (band == Band::Sub6)
        {
            for (const auto &[label, v] : ee)
                if (label != "ARIS")
                    for (std::size_t i = 0; i < pts.size(); ++i)
                        if (!(v[i] > aris[i]))
                        {
                            o.pass = false;
                            d << "sub6 ARIS >= " << label << " at d=" << pts[i] << "; ";
                        }
        }
        else
        {
            std::vector<bool> win(pts.size(), true);
            for (const auto &[label, v] : ee)
                if (label != "ARIS")
                    for (std::size_t i = 0; i < pts.size(); ++i)
                        win[i] = win[i] && aris[i] > v[i];
            // smallest index from which ARIS wins at every farther point
            std::size_t start = pts.size();
            while (start > 0 && win[start - 1])
                --start;
            const bool crossover = start > 0 && start < pts.size();
            if (crossover)
                d << "mmwave crossover between d=" << pts[start - 1] << " and d=" << pts[start] << "; ";
            else
                d << "mmwave has no crossover in the tested range; ";
            o.pass = o.pass && crossover;
        }
    }
    o.detail = d.str();
    return o;
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion_determinism()
{
    const auto root = std::filesystem::temp_directory_path() / "rdars_acceptance_determinism";
    std::filesystem::remove_all(root);
    ConfigOverrides one;
    one.workers = 1;
    ConfigOverrides many;
    many.workers = 4;
    run_command(Figure::Cdf, {}, root / "a", one);
    run_command(Figure::Cdf, {}, root / "b", one);
    run_command(Figure::Cdf, {}, root / "c", many);

    Outcome o;
    for (const char *name : {"cdf_sub6.csv", "cdf_sub6_cdf.csv"})
    {
        const auto a = slurp(root / "a" / name);
        const bool same = !a.empty() && a == slurp(root / "b" / name) && a == slurp(root / "c" / name);
        o.pass = o.pass && same;
    }
    o.detail = o.pass ? "repeated runs and 1 vs 4 workers give identical CSV bytes" : "CSV bytes differ";
    std::filesystem::remove_all(root);
    return o;
}

Outcome criterion_power()
{
    PowerConfig cfg;
    cfg.p_c = 0.01;
    cfg.p_dc = 0.03;
    cfg.p_rf_sub6 = 0.25;
    int failures = 0;
    const auto expect = [&](double got, double want) {
        if (std::abs(got - want) > 1e-12 * std::max(1.0, std::abs(want)))
            ++failures;
    };
    expect(power_rdars(1024, 0, cfg, Band::Sub6), 10.24);
    expect(power_rdars(1024, 1, cfg, Band::Sub6), 10.48);
    expect(power_rdars(8, 8, cfg, Band::Sub6), 8 * 0.25);
    expect(power_ris(0, cfg), 0.0);
    expect(power_ris(256, cfg), 2.56);
    expect(power_active(0, cfg), 0.0);
    expect(power_active(256, cfg), 10.24);
    expect(energy_efficiency(1.0, 20e6, 1.0).ee, 2.0e7);
    expect(energy_efficiency(0.0, 20e6, 1.0).ee, 0.0);
    expect(energy_efficiency(3.0, 500e6, 2.0).ee, 5.0e8);
    bool threw = false;
    try
    {
        energy_efficiency(1.0, 20e6, 0.0);
    }
    catch (const ZeroPower &)
    {
        threw = true;
    }
    if (!threw)
        ++failures;
    return {failures == 0, (Detail() << "11 arithmetic examples, failures=" << failures).str()};
}

Outcome criterion_normalization()
{
    Outcome o;
    Detail d;
    const Scene scene;
    for (Band band : {Band::Sub6, Band::MmWave})
    {
        const auto radio = RadioConfig::for_band(band);
        const auto gains = link_gains(scene, radio);
        double ub = 0.0;
        double ur = 0.0;
        double rb = 0.0;
        const int n = 100000;
        for (int t = 0; t < n; ++t)
        {
            RandomStream rng(2718, static_cast<std::uint64_t>(t));
            const auto ch = draw_channels(gains, radio, 1, rng);
            ub += std::norm(ch.h_ub);
            ur += std::norm(ch.h_ur[0]);
            rb += std::norm(ch.h_rb[0]);
        }
        const double e_ub = std::abs(ub / n / gains.ue_bs - 1.0);
        const double e_ur = std::abs(ur / n / gains.ue_rs - 1.0);
        const double e_rb = std::abs(rb / n / gains.rs_bs - 1.0);
        o.pass = o.pass && e_ub < 0.02 && e_ur < 0.02 && e_rb < 0.02;
        d << band_name(band) << " deviations ue-bs=" << e_ub << " ue-rs=" << e_ur << " rs-bs=" << e_rb << "; ";
    }
    o.detail = d.str();
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"oracle optimality", criterion_oracle},
        {"general and closed-form SNR agree", criterion_equivalence},
        {"RIS is RDARS without connected modes", criterion_reduction},
        {"SNR CDF median ordering", criterion_cdf_ordering},
        {"EE versus element count trends", criterion_ee_vs_n},
        {"EE versus RS position trends", criterion_ee_vs_xrs},
        {"EE versus UE distance crossover", criterion_ee_vs_ue},
        {"determinism", criterion_determinism},
        {"power model arithmetic", criterion_power},
        {"channel normalization", criterion_normalization},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass)
            ++failed;
        std::printf("%s criterion %zu: %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    seconds_since(t0), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
