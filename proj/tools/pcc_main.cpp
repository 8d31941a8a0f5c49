#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcc/errors.hpp"
#include "pcc/experiments.hpp"
#include "pcc/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

const char* kUnitsNote =
    "Units: time is measured in symbol durations (T_b = 1). Rates A and Lambda0 are per\n"
    "symbol, tau is a fraction of a symbol, and T_s defaults to 1/L. The capacity command\n"
    "uses T_s = tau unless --sampling-interval is given. Information is in nats; capacity\n"
    "also has a bits column.\n";

struct FlagSpec {
    const char* key;
    const char* help;
};

const std::vector<FlagSpec> kFlags{
    {"peak-rate", "peak photon rate A"},
    {"background", "background rate Lambda0"},
    {"dead-time", "dead time tau"},
    {"sampling-interval", "sampling interval T_s (>= tau)"},
    {"samples", "samples per symbol L"},
    {"mu-grid", "duty-cycle grid: lin:a:b:n, log:a:b:n or a comma list"},
    {"a-grid", "peak-rate grid, same syntax"},
    {"l-grid", "L grid for the large-L gap scenario"},
    {"lambda-grid", "background grid for the low-lambda gap scenario"},
    {"tau-grid", "capacity: sweep tau at fixed A instead of A"},
    {"scenario", "gap scenario: large-L, large-A, low-lambda, zero-lambda, low-A"},
    {"seed", "Monte Carlo seed"},
    {"symbols", "Monte Carlo symbol count"},
    {"path", "simulate: bernoulli or arrivals"},
    {"bootstrap", "simulate: bootstrap replicates for the MI z-score (0 = off)"},
    {"threads", "worker threads (0 = hardware concurrency)"},
    {"out", "write CSV to this path instead of stdout"},
};

std::string preset_listing() {
    std::ostringstream os;
    os << "Presets (--preset NAME; each reproduces one figure as CSV):\n";
    for (const auto& p : pcc::presets()) {
        os << "  " << p.name << std::string(p.name.size() < 16 ? 16 - p.name.size() : 1, ' ')
           << p.command << ": " << p.figure << "\n";
    }
    return os.str();
}

struct Sub {
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::string preset;
    std::string config;
};

void add_common(Sub& s) {
    for (const auto& f : kFlags)
        s.app->add_option("--" + std::string(f.key), s.values[f.key], f.help);
    s.app->add_option("--config", s.config, "flat key=value file; flags override it");
    s.app->add_option("--preset", s.preset, "start from a named preset (see --help)");
}

pcc::ExperimentConfig build_config(const Sub& s, const std::string& command) {
    pcc::ExperimentConfig cfg;
    if (command == "capacity") {
        cfg.a_grid = "log:0.01:100000:71";
    }
    if (!s.preset.empty()) {
        const auto* p = pcc::find_preset(s.preset);
        if (!p)
            throw pcc::UsageError("unknown preset '" + s.preset + "'");
        if (p->command != command)
            throw pcc::UsageError("preset '" + s.preset + "' belongs to the '" + p->command +
                                  "' command");
        for (const auto& [k, v] : p->settings)
            pcc::apply_setting(cfg, k, v);
    }
    if (!s.config.empty())
        pcc::apply_config_file(cfg, s.config);
    for (const auto& f : kFlags) {
        const auto* opt = s.app->get_option("--" + std::string(f.key));
        if (opt->count() > 0)
            pcc::apply_setting(cfg, f.key, s.values.at(f.key));
    }
    return cfg;
}

int emit(const pcc::Table& table, const pcc::ExperimentConfig& cfg) {
    if (cfg.out.empty()) {
        pcc::write_csv(std::cout, table);
        std::cout.flush();
        return kExitOk;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out)
        throw pcc::UsageError("cannot open output file '" + cfg.out + "'");
    pcc::write_csv(out, table);
    return kExitOk;
}

int run_validate(const std::string& only) {
    std::vector<int> ids;
    if (only.empty()) {
        for (int i = 1; i <= pcc::kCriterionCount; ++i)
            ids.push_back(i);
    } else {
        for (double v : pcc::parse_grid(only)) {
            const int id = static_cast<int>(v);
            if (id != v || id < 1 || id > pcc::kCriterionCount)
                throw pcc::UsageError("--only takes criterion numbers 1..15");
            ids.push_back(id);
        }
    }
    int failed = 0;
    for (int id : ids) {
        const auto r = pcc::run_criterion(id);
        std::cout << pcc::format_result(r) << "\n" << std::flush;
        failed += !r.pass;
    }
    std::cout << (ids.size() - failed) << " of " << ids.size() << " criteria passed\n";
    return failed ? kExitValidation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dead-time photon-counting OOK channel: rate bounds, capacity and simulation.",
                 "pcc"};
    app.footer(std::string("\n") + kUnitsNote + "\n" + preset_listing() +
               "\nExit codes: 0 success, 1 validation failure, 2 usage or parameter error,\n"
               "3 numerical failure.");
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands{
        {"mi-sweep", "MI, its bounds, the approximation and the discrete Poisson MI over mu"},
        {"duty-imax", "optimal and bound-derived duty cycles and maximal MI over A"},
        {"gap", "bound gap, its asymptotic formulas and fitted decay rates"},
        {"capacity", "capacity of the T_s = tau receiver over A (or tau)"},
        {"simulate", "Monte Carlo run with estimates at decade checkpoints"},
    };
    std::map<std::string, Sub> subs;
    for (const auto& [name, desc] : commands) {
        Sub& s = subs[name];
        s.app = app.add_subcommand(name, desc);
        add_common(s);
    }
    std::string only;
    auto* validate = app.add_subcommand("validate", "run the acceptance criteria and report");
    validate->add_option("--only", only, "comma list of criterion numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed())
            return run_validate(only);
        for (auto& [name, s] : subs) {
            if (!s.app->parsed())
                continue;
            const auto cfg = build_config(s, name);
            if (name == "mi-sweep")
                return emit(pcc::run_mi_sweep(cfg), cfg);
            if (name == "duty-imax")
                return emit(pcc::run_duty_imax(cfg), cfg);
            if (name == "gap")
                return emit(pcc::run_gap(cfg), cfg);
            if (name == "capacity")
                return emit(pcc::run_capacity(cfg), cfg);
            return emit(pcc::run_simulate(cfg), cfg);
        }
    } catch (const pcc::UsageError& e) {
        std::cerr << "pcc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pcc::DomainError& e) {
        std::cerr << "pcc: invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pcc::NumericalError& e) {
        std::cerr << "pcc: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const pcc::EstimationError& e) {
        std::cerr << "pcc: estimation failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "pcc: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
