#include "bhdeco/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bhdeco/decoherence.hpp"
#include "bhdeco/errors.hpp"
#include "bhdeco/evolve.hpp"
#include "bhdeco/numfmt.hpp"
#include "bhdeco/physcore.hpp"
#include "bhdeco/spectra.hpp"
#include "bhdeco/verify.hpp"

namespace bhdeco::cli {

namespace {

using nlohmann::ordered_json;
using numfmt::Cell;
using numfmt::Table;

struct CommonArgs {
    std::string format = "csv";
    std::string out_path;
    int species = 1;
};

struct RateArgs {
    double mass = 0.0;
    std::optional<double> dx;
    std::optional<double> dx_over_rs;
    std::string mode = "vacuum";
    std::string variant = "canonical";
};

struct SweepArgs {
    double mass = 0.0;
    std::vector<double> range;
    int points = 71;
    std::string spacing = "log";
    std::string mode = "vacuum";
    std::string variant = "canonical";
};

struct EvolveArgs {
    double mass = 0.0;
    double dx = 0.0;
    double t_max = 0.0;
    int steps = 100;
    bool evaporate = false;
    std::string mode = "vacuum";
    std::string variant = "canonical";
};

const std::vector<std::string> kVariantNames = {"canonical", "canonical_appendix", "printed_eq8"};

Variant parse_variant(const std::string& s) {
    return s == "printed_eq8" ? Variant::printed_eq8 : Variant::canonical_appendix;
}

EnvironmentMode parse_mode(const std::string& s) {
    return s == "thermal" ? EnvironmentMode::thermal : EnvironmentMode::vacuum;
}

void add_common(CLI::App* cmd, CommonArgs& common, bool with_species = true) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "Write output to this file instead of stdout");
    if (with_species) {
        cmd->add_option("--species", common.species, "Number of massless species emitted")
            ->check(CLI::Range(1, 1000000))
            ->capture_default_str();
    }
}

void add_mode_variant(CLI::App* cmd, std::string& mode, std::string& variant) {
    cmd->add_option("--mode", mode, "Environment: vacuum emission or thermal bath")
        ->check(CLI::IsMember({"vacuum", "thermal"}))
        ->capture_default_str();
    cmd->add_option("--variant", variant, "Vacuum rate variant")
        ->check(CLI::IsMember(kVariantNames))
        ->capture_default_str();
}

ordered_json base_meta(const std::string& command) {
    ordered_json meta;
    meta["command"] = command;
    meta["constants"] = kConstantsVersion;
    return meta;
}

void emit(const CommonArgs& common, const Table& table, ordered_json meta, std::ostream& out) {
    std::ostringstream buf;
    if (common.format == "json") {
        numfmt::write_json(buf, table, std::move(meta));
    } else {
        numfmt::write_csv(buf, table);
    }
    if (common.out_path.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file " + common.out_path);
    }
    file << buf.str();
}

void warn_printed(const std::string& variant, std::ostream& err) {
    if (parse_variant(variant) == Variant::printed_eq8) {
        err << "warning: printed_eq8 keeps the published closed-form prefactors and is "
               "4x the canonical rate\n";
    }
}

/// Rate and overlap at one point; overlap is empty for the thermal bath.
struct PointRate {
    double rate;
    Cell overlap;
};

PointRate point_rate(const SuperpositionGeometry& g, EnvironmentMode mode, Variant variant,
                     int species) {
    if (mode == EnvironmentMode::thermal) {
        return {thermal_bh_rate(g, {}, species), Cell{}};
    }
    RateOptions ro;
    ro.variant = variant;
    ro.species_multiplicity = species;
    const DecoherenceResult r = vacuum_rate(g, ro);
    return {r.rate, Cell{r.overlap}};
}

int cmd_info(double mass, const CommonArgs& common, std::ostream& out) {
    const BlackHole hole(mass);
    SpectrumOptions so;
    so.species_multiplicity = common.species;
    const double lambda = EmissionSpectrum::for_black_hole(hole, so).total_emission_rate();
    Table t;
    t.columns = {"mass_kg",  "r_s_m",           "t_hawking_k",
                 "t_evap_s", "lambda_total_per_s", "planck_length_m"};
    t.rows.push_back({hole.mass(), hole.schwarzschild_radius(), hole.hawking_temperature(),
                      hole.evaporation_time(), lambda, planck_length()});
    ordered_json meta = base_meta("info");
    meta["inputs"] = {{"mass_kg", numfmt::round_sig9(mass)}, {"species", common.species}};
    emit(common, t, std::move(meta), out);
    return kExitOk;
}

int cmd_rate(const RateArgs& a, const CommonArgs& common, std::ostream& out, std::ostream& err) {
    if (a.dx.has_value() == a.dx_over_rs.has_value()) {
        err << "rate: give exactly one of --dx or --dx-over-rs\n";
        return kExitUsage;
    }
    const double r_s = schwarzschild_radius(a.mass);
    const double dx = a.dx ? *a.dx : *a.dx_over_rs * r_s;
    const SuperpositionGeometry g{dx, r_s};
    g.validate();
    const EnvironmentMode mode = parse_mode(a.mode);
    const Variant variant = parse_variant(a.variant);
    if (mode == EnvironmentMode::vacuum) {
        warn_printed(a.variant, err);
    }
    const PointRate p = point_rate(g, mode, variant, common.species);
    const double tau = p.rate > 0.0 ? 1.0 / p.rate : INFINITY;

    Table t;
    t.columns = {"mass_kg", "dx_m",    "dx_over_rs", "mode",    "variant",
                 "rate_si", "tau_d_s", "overlap",    "regime"};
    t.rows.push_back({a.mass, dx, g.separation_ratio(), std::string(to_string(mode)),
                      mode == EnvironmentMode::vacuum ? Cell{std::string(to_string(variant))}
                                                      : Cell{},
                      p.rate, tau, p.overlap,
                      std::string(to_string(classify_regime(g.separation_ratio())))});
    ordered_json meta = base_meta("rate");
    meta["inputs"] = {{"mass_kg", numfmt::round_sig9(a.mass)},
                      {"dx_m", numfmt::round_sig9(dx)},
                      {"mode", to_string(mode)},
                      {"species", common.species}};
    meta["variant"] = to_string(variant);
    emit(common, t, std::move(meta), out);
    return kExitOk;
}

int cmd_sweep(const SweepArgs& a, const CommonArgs& common, std::ostream& out,
              std::ostream& err) {
    if (a.range.size() != 2) {
        err << "sweep: --dx-over-rs takes START STOP\n";
        return kExitUsage;
    }
    const double start = a.range[0];
    const double stop = a.range[1];
    const bool log = a.spacing == "log";
    if (a.points < 2 || !(stop > start) || (log && !(start > 0.0)) || start < 0.0) {
        err << "sweep: need points >= 2, stop > start >= 0, and start > 0 for log spacing\n";
        return kExitUsage;
    }
    const EnvironmentMode mode = parse_mode(a.mode);
    const Variant variant = parse_variant(a.variant);
    if (mode == EnvironmentMode::vacuum) {
        warn_printed(a.variant, err);
    }
    const double r_s = schwarzschild_radius(a.mass);
    const double c_over_rs = PhysicalConstants{}.c / r_s;

    Table t;
    t.columns = {"dx_over_rs", "rate_c_over_rs", "rate_si", "overlap", "regime"};
    for (int i = 0; i < a.points; ++i) {
        const double frac = static_cast<double>(i) / (a.points - 1);
        double y = log ? start * std::pow(stop / start, frac) : start + (stop - start) * frac;
        if (i == a.points - 1) {
            y = stop;
        }
        const SuperpositionGeometry g{y * r_s, r_s};
        const PointRate p = point_rate(g, mode, variant, common.species);
        t.rows.push_back({y, p.rate / c_over_rs, p.rate, p.overlap,
                          std::string(to_string(classify_regime(y)))});
    }
    ordered_json meta = base_meta("sweep");
    meta["inputs"] = {{"mass_kg", numfmt::round_sig9(a.mass)},
                      {"dx_over_rs_start", numfmt::round_sig9(start)},
                      {"dx_over_rs_stop", numfmt::round_sig9(stop)},
                      {"points", a.points},
                      {"spacing", a.spacing},
                      {"mode", to_string(mode)},
                      {"species", common.species}};
    meta["variant"] = to_string(variant);
    emit(common, t, std::move(meta), out);
    return kExitOk;
}

int cmd_evolve(const EvolveArgs& a, const CommonArgs& common, std::ostream& out,
               std::ostream& err) {
    EvolveOptions opts;
    opts.evaporate = a.evaporate;
    opts.mode = parse_mode(a.mode);
    opts.rate.variant = parse_variant(a.variant);
    opts.rate.species_multiplicity = common.species;
    if (opts.mode == EnvironmentMode::vacuum) {
        warn_printed(a.variant, err);
    }
    const CoherenceTrace trace = evolve_coherence(a.dx, a.mass, a.t_max, a.steps, opts);

    Table t;
    t.columns = {"t_s", "coherence", "mass_kg"};
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        t.rows.push_back({trace.times[i], trace.coherence[i], trace.mass[i]});
    }
    t.summary = {{"tau_d_s", trace.initial_decoherence_time},
                 {"t_evap_s", evaporation_time(a.mass)},
                 {"quasi_static_valid", std::string(trace.quasi_static_valid ? "true" : "false")}};
    ordered_json meta = base_meta("evolve");
    meta["inputs"] = {{"mass_kg", numfmt::round_sig9(a.mass)},
                      {"dx_m", numfmt::round_sig9(a.dx)},
                      {"t_max_s", numfmt::round_sig9(a.t_max)},
                      {"steps", a.steps},
                      {"evaporate", a.evaporate},
                      {"mode", to_string(opts.mode)},
                      {"species", common.species}};
    meta["variant"] = to_string(opts.rate.variant);
    emit(common, t, std::move(meta), out);
    return kExitOk;
}

int cmd_verify(const std::string& format, std::ostream& out) {
    const VerifyReport report = run_verification();
    if (format == "json") {
        ordered_json doc;
        doc["meta"] = base_meta("verify");
        doc["meta"]["passed"] = report.passed();
        doc["rows"] = ordered_json::array();
        for (const CheckResult& c : report.checks) {
            doc["rows"].push_back(
                {{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        }
        out << doc.dump(2) << '\n';
    } else {
        for (const CheckResult& c : report.checks) {
            out << to_string(c.status) << "  " << c.name << ": " << c.detail << '\n';
        }
        out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decoherence of black hole superpositions by Hawking radiation"};
    app.require_subcommand(1);

    CommonArgs common;

    double info_mass = 0.0;
    CLI::App* info = app.add_subcommand("info", "Radius, temperature, lifetime, emission rate");
    info->add_option("--mass", info_mass, "Black hole mass (kg)")->required();
    add_common(info, common);

    RateArgs rate_args;
    CLI::App* rate = app.add_subcommand("rate", "Decoherence rate at one separation");
    rate->add_option("--mass", rate_args.mass, "Black hole mass (kg)")->required();
    rate->add_option("--dx", rate_args.dx, "Branch separation (m)");
    rate->add_option("--dx-over-rs", rate_args.dx_over_rs, "Branch separation in units of r_s");
    add_mode_variant(rate, rate_args.mode, rate_args.variant);
    add_common(rate, common);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Rate table over a dx/r_s range");
    sweep->add_option("--mass", sweep_args.mass, "Black hole mass (kg)")->required();
    sweep->add_option("--dx-over-rs", sweep_args.range, "START STOP in units of r_s")
        ->expected(2)
        ->required();
    sweep->add_option("--points", sweep_args.points, "Number of rows")->capture_default_str();
    sweep->add_option("--spacing", sweep_args.spacing, "Grid spacing")
        ->check(CLI::IsMember({"log", "linear"}))
        ->capture_default_str();
    add_mode_variant(sweep, sweep_args.mode, sweep_args.variant);
    add_common(sweep, common);

    EvolveArgs evolve_args;
    CLI::App* evolve = app.add_subcommand("evolve", "Coherence decay over time");
    evolve->add_option("--mass", evolve_args.mass, "Initial black hole mass (kg)")->required();
    evolve->add_option("--dx", evolve_args.dx, "Branch separation (m)")->required();
    evolve->add_option("--t-max", evolve_args.t_max, "End time (s)")->required();
    evolve->add_option("--steps", evolve_args.steps, "Uniform time steps")->capture_default_str();
    evolve->add_flag("--evaporate", evolve_args.evaporate, "Shrink the mass quasi-statically");
    add_mode_variant(evolve, evolve_args.mode, evolve_args.variant);
    add_common(evolve, common);

    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "Run the cross-check suite");
    verify->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::vector<const char*> argv{"bhdeco"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*info) {
            return cmd_info(info_mass, common, out);
        }
        if (*rate) {
            return cmd_rate(rate_args, common, out, err);
        }
        if (*sweep) {
            return cmd_sweep(sweep_args, common, out, err);
        }
        if (*evolve) {
            return cmd_evolve(evolve_args, common, out, err);
        }
        if (*verify) {
            return cmd_verify(verify_format, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bhdeco::cli
