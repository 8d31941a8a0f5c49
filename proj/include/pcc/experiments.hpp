#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcc {

// Settings shared by all sweep commands. Rates and times follow the T_b = 1
// convention: one symbol lasts one time unit, so T_s defaults to 1/L.
struct ExperimentConfig {
    double peak_rate = 10.0;
    double background = 0.02;
    double dead_time = 0.02;
    std::optional<double> sampling_interval;
    int samples = 30;

    std::string mu_grid = "lin:0:1:101";
    std::string a_grid = "log:0.1:1000:41";
    std::string l_grid = "lin:50:400:36";
    std::string lambda_grid = "log:1e-5:1e-3:9";
    std::string tau_grid;  // capacity: sweep tau instead of A when set

    std::string scenario = "large-L";
    std::uint64_t seed = 1;
    std::int64_t symbols = 1000000;
    std::string path = "bernoulli";
    int bootstrap = 50;
    unsigned threads = 0;
    std::string out;

    double effective_sampling_interval() const;
};

// Sweep specification: "lin:a:b:n", "log:a:b:n" or a comma-separated list.
std::vector<double> parse_grid(std::string_view spec);

// Applies one key=value setting; keys are the long flag names without "--".
// Unknown keys and malformed values raise UsageError.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Flat key=value text; '#' starts a comment, blank lines are ignored.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in);
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

bool is_setting_key(const std::string& key);

struct Preset {
    std::string name;
    std::string command;
    std::string figure;  // what the CSV reproduces
    std::vector<std::pair<std::string, std::string>> settings;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// UTF-8, comma separated, LF line endings, header row, 17 significant digits.
void write_csv(std::ostream& out, const Table& table);
std::string format_number(double x);

Table run_mi_sweep(const ExperimentConfig& cfg);
Table run_duty_imax(const ExperimentConfig& cfg);
Table run_gap(const ExperimentConfig& cfg);
Table run_capacity(const ExperimentConfig& cfg);
Table run_simulate(const ExperimentConfig& cfg);

inline const std::vector<std::string>& gap_scenarios() {
    static const std::vector<std::string> names{"large-L", "large-A", "low-lambda", "zero-lambda",
                                                "low-A"};
    return names;
}

}  // namespace pcc
