// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gausskit/io.hpp"
#include "gausskit/states.hpp"
#include "gausskit/tomography.hpp"

namespace gausskit::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string state = "-";
    int cutoff = 20;
    double tol = kDefaultTol;
    uint64_t seed = 0;
    std::string format = "json";
    uint64_t shots = 1000000;
    std::string split;
    std::string z;
    std::string battery = "full";
};

std::string read_input(const std::string &path, std::istream &in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw UsageError("cannot open '" + path + "'");
        }
        buf << file.rdbuf();
    }
    return buf.str();
}

GaussianState load_state(const Json &j, double tol) {
    if (j.is_object() && j.contains("S")) {
        return GaussianState::from_covariance(io::cov_from_json(j), tol);
    }
    return GaussianState::from_e2(io::e2_from_json(j), tol);
}

// "1,3" -> {0, 2}.
std::vector<size_t> parse_modes(const std::string &text, size_t n) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = -1;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos != item.size() || v < 1 || (size_t)v > n) {
            throw UsageError("--split: '" + item + "' is not a mode in 1.." + std::to_string(n));
        }
        out.push_back((size_t)v - 1);
    }
    try {
        ModeBipartition{out}.validate(n);
    } catch (const DomainError &e) {
        throw UsageError(std::string("--split: ") + e.what());
    }
    return out;
}

std::string split_label(const ModeBipartition &split, size_t n) {
    auto join = [](const std::vector<size_t> &modes) {
        std::string s;
        for (size_t m : modes) {
            s += (s.empty() ? "" : ",") + std::to_string(m + 1);
        }
        return s;
    };
    std::vector<size_t> sorted = split.subset;
    std::sort(sorted.begin(), sorted.end());
    return join(sorted) + "|" + join(split.complement(n));
}

void require_json(const Config &cfg, const std::string &command) {
    if (cfg.format != "json") {
        throw UsageError(command + ": only json output is available");
    }
}

void emit(std::ostream &out, const Json &j) {
    out << io::dump(j, 2) << '\n';
}

int cmd_convert(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "convert");
    Json j = io::parse(read_input(cfg.state, in));
    GaussianState state = load_state(j, cfg.tol);
    emit(out, j.contains("S") ? io::to_json(state.params()) : io::to_json(state.cov()));
    return kExitOk;
}

int cmd_validate(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "validate");
    Json j = io::parse(read_input(cfg.state, in));
    E2Params p;
    Json report;
    if (j.is_object() && j.contains("S")) {
        CovarianceParams cov = io::cov_from_json(j);
        report["uncertainty_margin"] = uncertainty_margin(cov.s);
        try {
            p = cov_to_e2(cov, cfg.tol);
        } catch (const Error &e) {
            report = Json{{"valid", false}, {"reason", e.what()}, {"uncertainty_margin", uncertainty_margin(cov.s)}};
            emit(out, report);
            return kExitInvalid;
        }
    } else {
        p = io::e2_from_json(j);
    }
    bool m_ok = is_valid_state(p.a, p.lambda, cfg.tol);
    double lambda_min = p.n() ? min_eigenvalue(p.lambda) : 0.0;
    bool lambda_ok = lambda_min >= -cfg.tol * (1 + (p.n() ? spectral_norm(p.lambda) : 0.0));
    bool valid = m_ok && lambda_ok;
    Json out_j;
    out_j["min_eig_M"] = p.n() ? min_eigenvalue(build_M(p.a, p.lambda)) : 1.0;
    out_j["min_eig_Lambda"] = lambda_min;
    if (m_ok) {
        double tr = trace_of_positive(p, cfg.tol);
        out_j["trace"] = tr;
        valid = valid && std::abs(tr - 1) <= 1e-10;
        out_j["pure"] = is_pure(p, cfg.tol);
    }
    if (report.is_object()) {
        out_j["uncertainty_margin"] = report["uncertainty_margin"];
    }
    Json result;
    result["valid"] = valid;
    result.update(out_j);
    emit(out, result);
    return valid ? kExitOk : kExitInvalid;
}

int cmd_dmf(const Config &cfg, std::istream &in, std::ostream &out) {
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    TruncatedOperator rho = density_matrix(state.params(), cfg.cutoff, cfg.tol);
    if (cfg.format == "csv") {
        out << io::to_csv(rho);
        return kExitOk;
    }
    Json j = io::to_json(rho);
    j["tail_bound"] = tail_bound(rho);
    emit(out, j);
    return kExitOk;
}

int cmd_statevec(const Config &cfg, std::istream &in, std::ostream &out) {
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    if (!is_pure(state.params(), cfg.tol)) {
        throw UnsupportedError("statevec: the state is mixed (Lambda != 0)");
    }
    TruncatedVector psi = pure_state_vector(state.params(), cfg.cutoff, cfg.tol);
    if (cfg.format == "csv") {
        out << io::to_csv(psi);
    } else {
        emit(out, io::to_json(psi));
    }
    return kExitOk;
}

int cmd_marginal(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "marginal");
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    if (cfg.split.empty()) {
        throw UsageError("marginal: --split is required");
    }
    emit(out, io::to_json(marginal(state, parse_modes(cfg.split, state.n())).params()));
    return kExitOk;
}

int cmd_entanglement(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "entanglement");
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    std::vector<ModeBipartition> splits;
    if (cfg.split.empty()) {
        splits = all_bipartitions(state.n());
    } else {
        splits.push_back({parse_modes(cfg.split, state.n())});
    }
    Json report = Json::object();
    for (const auto &split : splits) {
        report[split_label(split, state.n())] = {{"separable", is_pure_separable(state, split)},
                                                 {"offdiag_norm", offdiag_norm(state, split)}};
    }
    emit(out, report);
    return kExitOk;
}

int cmd_charfn(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "charfn");
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    if (cfg.z.empty()) {
        throw UsageError("charfn: --z is required");
    }
    Json zj;
    try {
        zj = io::parse(cfg.z);
    } catch (const io::ParseError &) {
        throw io::ParseError("--z", "expected a JSON list of [re, im] pairs");
    }
    CVec z = io::cvec_from_json(zj, "--z");
    if ((size_t)z.size() != state.n()) {
        throw io::ParseError("--z", "expected " + std::to_string(state.n()) + " entries");
    }
    Json j;
    j["z"] = io::to_json(z);
    j["value"] = io::to_json(characteristic_function(state, z));
    emit(out, j);
    return kExitOk;
}

int cmd_tomo_simulate(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "tomo-simulate");
    GaussianState state = load_state(io::parse(read_input(cfg.state, in)), cfg.tol);
    auto battery = cfg.battery == "standard" ? standard_battery(state.n()) : full_battery(state.n());
    Json j;
    j["n"] = state.n();
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    j["measurements"] = Json::array();
    for (const auto &rec : simulate(state.params(), battery, cfg.shots, cfg.seed)) {
        j["measurements"].push_back(io::to_json(rec));
    }
    emit(out, j);
    return kExitOk;
}

int cmd_tomo_estimate(const Config &cfg, std::istream &in, std::ostream &out) {
    require_json(cfg, "tomo-estimate");
    Json input = io::parse(read_input(cfg.state, in));
    EstimationReport report = estimate(io::records_from_json(input));
    Json j;
    j["n"] = report.n;
    j["measurements"] = Json::array();
    for (const auto &rec : report.records) {
        j["measurements"].push_back(io::to_json(rec));
    }
    j["estimates"] = io::to_json(report.state);
    Json se = Json::object();
    for (const auto &row : report.table) {
        se[row.name] = row.std_error;
    }
    j["stderr"] = se;
    emit(out, j);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gaussian state toolkit", "gausskit"};
    app.require_subcommand(1);
    Config cfg;
    using Handler = int (*)(const Config &, std::istream &, std::ostream &);
    std::vector<std::pair<CLI::App *, Handler>> commands;
    auto add = [&](const char *name, const char *about, Handler h) {
        CLI::App *sub = app.add_subcommand(name, about);
        sub->add_option("--state", cfg.state, "Input JSON path, '-' for stdin")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber)->capture_default_str();
        commands.emplace_back(sub, h);
        return sub;
    };
    add("convert", "Convert between E2 and covariance parameters", cmd_convert);
    add("validate", "Check the state conditions", cmd_validate);
    for (auto *sub : {add("dmf", "Truncated density matrix", cmd_dmf),
                      add("statevec", "Truncated state vector of a pure state", cmd_statevec)}) {
        sub->add_option("--cutoff", cfg.cutoff, "Largest total particle number")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    }
    add("marginal", "Reduced state on the listed modes", cmd_marginal)
        ->add_option("--split", cfg.split, "Comma-separated 1-based modes to keep");
    add("entanglement", "Separability across basis-aligned splits", cmd_entanglement)
        ->add_option("--split", cfg.split, "Comma-separated 1-based modes of one side");
    add("charfn", "Characteristic function", cmd_charfn)
        ->add_option("--z", cfg.z, "JSON list of [re, im] pairs");
    auto *sim = add("tomo-simulate", "Sample the tomography battery", cmd_tomo_simulate);
    sim->add_option("--shots", cfg.shots, "Draws per measurement")->capture_default_str();
    sim->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sim->add_option("--battery", cfg.battery, "Measurement set")
        ->check(CLI::IsMember({"full", "standard"}))
        ->capture_default_str();
    add("tomo-estimate", "Estimate parameters from counts", cmd_tomo_estimate);
    for (auto &[sub, h] : commands) {
        if (sub->get_name() != "dmf" && sub->get_name() != "statevec") {
            sub->add_option("--format", cfg.format, "Output format")
                ->check(CLI::IsMember({"json", "csv"}))
                ->capture_default_str();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "gausskit: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        for (auto &[sub, h] : commands) {
            if (sub->parsed()) {
                return h(cfg, in, out);
            }
        }
        return kExitUsage;
    } catch (const io::ParseError &e) {
        err << "gausskit: malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "gausskit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ShapeError &e) {
        err << "gausskit: malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "gausskit: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace gausskit::cli
