// gmprune: batch front end for robust data pruning. Subcommands wire the
// library stages together through files:
//   simulate -> gm -> select -> report, plus sweep for rate/breakdown grids.
// Human-readable output goes to stdout, diagnostics to stderr. Exit codes:
// 0 success, 1 usage or input error, 2 produced output without convergence.

#include "gmprune/corrupt.hpp"
#include "gmprune/gm.hpp"
#include "gmprune/io.hpp"
#include "gmprune/json_io.hpp"
#include "gmprune/metrics.hpp"
#include "gmprune/rng.hpp"
#include "gmprune/select.hpp"
#include "gmprune/simulate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

namespace {

using gmprune::Error;
using gmprune::ErrorCode;
using gmprune::Index;
using gmprune::Matrix;
using gmprune::Vector;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(std::stod(tok));
    }
    return out;
}

std::vector<Index> parse_indices(const std::string& csv) {
    std::vector<Index> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(static_cast<Index>(std::stoll(tok)));
    }
    return out;
}

Vector vector_of(const std::vector<double>& values) {
    Vector v(static_cast<Index>(values.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v(i) = values[static_cast<std::size_t>(i)];
    }
    return v;
}

Matrix square_matrix_of(const std::vector<double>& values) {
    const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(values.size()))));
    if (d * d != static_cast<Index>(values.size())) {
        throw Error(ErrorCode::PreconditionViolated, "covariance needs d*d entries");
    }
    Matrix m(d, d);
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            m(r, c) = values[static_cast<std::size_t>(r * d + c)];
        }
    }
    return m;
}

gmprune::FileFormat resolve_format(const std::string& format, const std::string& path) {
    if (format == "binary") return gmprune::FileFormat::Binary;
    if (format == "csv") return gmprune::FileFormat::Csv;
    if (format == "auto") {
        return path.size() >= 4 && path.substr(path.size() - 4) == ".csv"
                   ? gmprune::FileFormat::Csv
                   : gmprune::FileFormat::Binary;
    }
    throw Error(ErrorCode::PreconditionViolated, "unknown format '" + format + "'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path);
    }
    json j;
    in >> j;
    return j;
}

// A config file may be a bare config object or a previously written artifact
// holding one under "config".
json load_config_overrides(const std::string& path) {
    json j = load_json_file(path);
    if (j.contains("config")) {
        return j.at("config");
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    }
    out << j.dump(2) << '\n';
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_thread_env() {
    const char* env = std::getenv("GMPRUNE_THREADS");
    if (env == nullptr) {
        return;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
        throw Error(ErrorCode::PreconditionViolated,
                    "GMPRUNE_THREADS must be a positive integer, got '" + std::string(env) + "'");
    }
    // All reductions are fixed-order, so any cap is honored as-is.
}

// ---------------------------------------------------------------------------
// gm

struct GmCmd {
    std::string input;
    std::string format = "auto";
    bool csv_labels = false;
    std::string out;
    std::string eps_ref;
    std::string given;
    gmprune::GmConfig gm;
    std::string init = "coordinate-median";

    json to_config_json() const {
        json j{{"command", "gm"},     {"input", input},     {"format", format},
               {"csv_labels", csv_labels}, {"eps_ref", eps_ref}, {"gm", gmprune::to_json(gm)}};
        return j;
    }

    void apply_overrides(const json& j) {
        input = j.value("input", input);
        format = j.value("format", format);
        csv_labels = j.value("csv_labels", csv_labels);
        eps_ref = j.value("eps_ref", eps_ref);
        if (j.contains("gm")) {
            gm = gmprune::gm_config_from_json(j.at("gm"));
        }
    }
};

int run_gm(GmCmd& cmd, const std::string& config_path) {
    cmd.gm.init = gmprune::gm_init_from_string(cmd.init);
    if (!cmd.given.empty()) {
        cmd.gm.given_point = vector_of(parse_doubles(cmd.given));
    }
    if (!config_path.empty()) {
        cmd.apply_overrides(load_config_overrides(config_path));
    }
    const auto set = gmprune::load_embeddings(cmd.input, resolve_format(cmd.format, cmd.input),
                                              {cmd.csv_labels});
    const gmprune::GmResult result = gmprune::geometric_median(set, cmd.gm);

    json j = gmprune::to_json(result, cmd.gm);
    j["config"] = cmd.to_config_json();
    j["seed_context"] = json{{"command", "gm"}, {"input", cmd.input}};
    if (!cmd.eps_ref.empty()) {
        const gmprune::GmResult ref = gmprune::gm_result_from_json(load_json_file(cmd.eps_ref));
        j["eps_hat_ratio"] = gmprune::epsilon_estimate(result, set, ref.objective);
        j["eps_abs_gap"] = result.objective - ref.objective;
    }
    if (set.dim() == 2) {
        const auto radius = gmprune::interiority_radius(set, result.point);
        j["interiority_radius"] = radius ? json(*radius) : json(nullptr);
    }
    write_json_file(cmd.out, j);

    std::cout << "gm: objective " << format_double(result.objective) << ", iters " << result.iters
              << ", converged " << (result.converged ? "yes" : "no") << "\n";
    return result.converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------------------
// select

struct SelectCmd {
    std::string input;
    std::string format = "auto";
    bool csv_labels = false;
    std::string out;
    std::string emit_subset;
    std::string gm_json;
    std::string method = "gm-match";
    std::string replacement = "without";
    std::string theta0 = "gm-point";
    std::string theta0_vec;
    gmprune::SelectorConfig sel;
    gmprune::GmConfig gm;

    json to_config_json() const {
        return json{{"command", "select"},
                    {"input", input},
                    {"format", format},
                    {"csv_labels", csv_labels},
                    {"gm_json", gm_json},
                    {"selector", gmprune::to_json(sel)},
                    {"gm", gmprune::to_json(gm)}};
    }

    void apply_overrides(const json& j) {
        input = j.value("input", input);
        format = j.value("format", format);
        csv_labels = j.value("csv_labels", csv_labels);
        gm_json = j.value("gm_json", gm_json);
        if (j.contains("selector")) {
            sel = gmprune::selector_config_from_json(j.at("selector"));
        }
        if (j.contains("gm")) {
            gm = gmprune::gm_config_from_json(j.at("gm"));
        }
    }
};

int run_select(SelectCmd& cmd, const std::string& config_path) {
    cmd.sel.method = gmprune::select_method_from_string(cmd.method);
    cmd.sel.replacement = gmprune::replacement_from_string(cmd.replacement);
    cmd.sel.theta0 = gmprune::theta0_mode_from_string(cmd.theta0);
    if (!cmd.theta0_vec.empty()) {
        cmd.sel.theta0_vector = vector_of(parse_doubles(cmd.theta0_vec));
    }
    if (!config_path.empty()) {
        cmd.apply_overrides(load_config_overrides(config_path));
    }
    const auto set = gmprune::load_embeddings(cmd.input, resolve_format(cmd.format, cmd.input),
                                              {cmd.csv_labels});

    std::optional<gmprune::GmResult> precomputed;
    if (!cmd.gm_json.empty()) {
        precomputed = gmprune::gm_result_from_json(load_json_file(cmd.gm_json));
    }

    bool gm_converged = true;
    std::optional<gmprune::GmResult> solved;
    const gmprune::GmResult* gm_ptr = nullptr;
    if (cmd.sel.method == gmprune::SelectMethod::GmMatch && !cmd.sel.group_by_labels) {
        if (precomputed) {
            gm_ptr = &*precomputed;
        } else {
            const auto& space = cmd.sel.normalize ? gmprune::l2_normalized(set) : set;
            solved = gmprune::geometric_median(space, cmd.gm);
            gm_converged = solved->converged;
            gm_ptr = &*solved;
        }
    }
    const gmprune::SelectionResult result =
        gmprune::run_selector(set, cmd.sel, cmd.gm, gm_ptr);

    json j = gmprune::to_json(result, cmd.sel);
    j["config"] = cmd.to_config_json();
    if (solved) {
        j["gm"] = gmprune::to_json(*solved, cmd.gm);
    }
    write_json_file(cmd.out, j);

    if (!cmd.emit_subset.empty()) {
        gmprune::save_embeddings(gmprune::subset_rows(set, result.indices), cmd.emit_subset,
                                 gmprune::FileFormat::Binary);
    }
    std::cout << "select: " << result.indices.size() << " rows via "
              << gmprune::to_string(result.method) << ", final residual "
              << format_double(result.residual_trace.empty() ? 0.0
                                                             : result.residual_trace.back())
              << "\n";
    if (!gm_converged) {
        std::cerr << "warning: internal GM solve did not converge\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateCmd {
    Index n = 1000;
    std::string clean_mean = "0,0";
    std::string cov = "1,0.5,0.5,1";
    std::string adv_mean = "-5,5";
    double psi = 0.2;
    std::string mode = "gaussian-cluster";
    double magnitude = 1e6;
    std::string hijack_target;
    std::uint32_t num_classes = 0;
    std::uint32_t classes = 0;
    double class_radius = 4.0;
    std::uint64_t seed = 0;
    std::string out;

    json to_config_json() const {
        return json{{"command", "simulate"},
                    {"n", n},
                    {"clean_mean", clean_mean},
                    {"cov", cov},
                    {"adv_mean", adv_mean},
                    {"psi", psi},
                    {"mode", mode},
                    {"magnitude", magnitude},
                    {"hijack_target", hijack_target},
                    {"num_classes", num_classes},
                    {"classes", classes},
                    {"class_radius", class_radius},
                    {"seed", seed}};
    }

    void apply_overrides(const json& j) {
        n = j.value("n", n);
        clean_mean = j.value("clean_mean", clean_mean);
        cov = j.value("cov", cov);
        adv_mean = j.value("adv_mean", adv_mean);
        psi = j.value("psi", psi);
        mode = j.value("mode", mode);
        magnitude = j.value("magnitude", magnitude);
        hijack_target = j.value("hijack_target", hijack_target);
        num_classes = j.value("num_classes", num_classes);
        classes = j.value("classes", classes);
        class_radius = j.value("class_radius", class_radius);
        seed = j.value("seed", seed);
    }
};

int run_simulate(SimulateCmd& cmd, const std::string& config_path) {
    if (!config_path.empty()) {
        cmd.apply_overrides(load_config_overrides(config_path));
    }
    const Vector mean = vector_of(parse_doubles(cmd.clean_mean));
    const Matrix cov = square_matrix_of(parse_doubles(cmd.cov));
    const Index d = mean.size();

    // generation seed = seed, corruption seed = seed + 1
    gmprune::Rng rng(cmd.seed);
    Matrix data;
    std::optional<std::vector<std::uint32_t>> labels;
    if (cmd.classes >= 1) {
        // labeled mixture: class means evenly spaced on a circle (first two
        // coordinates) around the clean mean, contiguous row blocks per class
        data.resize(cmd.n, d);
        labels.emplace(static_cast<std::size_t>(cmd.n));
        Index row = 0;
        for (std::uint32_t c = 0; c < cmd.classes; ++c) {
            const Index quota = cmd.n * (c + 1) / cmd.classes - cmd.n * c / cmd.classes;
            Vector class_mean = mean;
            if (d >= 2 && cmd.classes > 1) {
                const double angle =
                    2.0 * std::numbers::pi * static_cast<double>(c) / cmd.classes;
                class_mean(0) += cmd.class_radius * std::cos(angle);
                class_mean(1) += cmd.class_radius * std::sin(angle);
            }
            const Matrix block = gmprune::sample_gaussian(quota, class_mean, cov, rng);
            data.middleRows(row, quota) = block;
            for (Index i = 0; i < quota; ++i) {
                (*labels)[static_cast<std::size_t>(row + i)] = c;
            }
            row += quota;
        }
    } else {
        data = gmprune::sample_gaussian(cmd.n, mean, cov, rng);
    }
    gmprune::EmbeddingSet clean(std::move(data), std::move(labels));

    gmprune::CorruptionSpec spec;
    spec.psi = cmd.psi;
    spec.mode = gmprune::corruption_mode_from_string(cmd.mode);
    spec.seed = cmd.seed + 1;
    spec.cluster_mean = vector_of(parse_doubles(cmd.adv_mean));
    spec.cluster_cov = cov;
    spec.magnitude = cmd.magnitude;
    if (!cmd.hijack_target.empty()) {
        spec.target = vector_of(parse_doubles(cmd.hijack_target));
    }
    spec.num_classes = cmd.num_classes;
    const gmprune::EmbeddingSet corrupted = gmprune::inject(clean, spec);

    gmprune::save_embeddings(corrupted, cmd.out, gmprune::FileFormat::Binary);
    json meta{{"config", cmd.to_config_json()},
              {"corruption", gmprune::to_json(spec)},
              {"n", corrupted.n()},
              {"d", corrupted.dim()}};
    write_json_file(cmd.out + ".meta.json", meta);

    Index corrupt_rows = 0;
    for (const auto flag : corrupted.flags()) {
        if (flag == gmprune::Flag::Corrupt) ++corrupt_rows;
    }
    std::cout << "simulate: wrote " << corrupted.n() << " x " << corrupted.dim() << " ("
              << corrupt_rows << " corrupt) to " << cmd.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepCmd {
    std::string input;
    std::string format = "auto";
    std::string methods = "gm-match,random";
    std::string ks = "8,16,32,64,128,256,512";
    int num_seeds = 1;
    std::uint64_t seed = 0;
    std::string replacement = "without";
    bool breakdown = false;
    std::string psis = "0.1,0.2,0.45";
    std::string mags = "1e3,1e6,1e9";
    std::string out_csv;
    std::string out_json;

    json to_config_json() const {
        return json{{"command", "sweep"}, {"input", input},   {"format", format},
                    {"methods", methods}, {"ks", ks},         {"num_seeds", num_seeds},
                    {"seed", seed},       {"replacement", replacement},
                    {"breakdown", breakdown}, {"psis", psis}, {"mags", mags}};
    }

    void apply_overrides(const json& j) {
        input = j.value("input", input);
        format = j.value("format", format);
        methods = j.value("methods", methods);
        ks = j.value("ks", ks);
        num_seeds = j.value("num_seeds", num_seeds);
        seed = j.value("seed", seed);
        replacement = j.value("replacement", replacement);
        breakdown = j.value("breakdown", breakdown);
        psis = j.value("psis", psis);
        mags = j.value("mags", mags);
    }
};

int run_sweep(SweepCmd& cmd, const std::string& config_path) {
    if (!config_path.empty()) {
        cmd.apply_overrides(load_config_overrides(config_path));
    }
    const auto set =
        gmprune::load_embeddings(cmd.input, resolve_format(cmd.format, cmd.input), {});

    std::ofstream csv;
    if (!cmd.out_csv.empty()) {
        csv.open(cmd.out_csv, std::ios::trunc);
        if (!csv) {
            throw Error(ErrorCode::IoFailure, "cannot open " + cmd.out_csv + " for writing");
        }
    }

    json summary{{"config", cmd.to_config_json()}};

    if (cmd.breakdown) {
        const auto table = gmprune::breakdown_sweep(set, parse_doubles(cmd.psis),
                                                    parse_doubles(cmd.mags),
                                                    {gmprune::Estimator::Mean,
                                                     gmprune::Estimator::Gm},
                                                    cmd.seed, {});
        if (csv.is_open()) {
            csv << "psi,magnitude,estimator,error\n";
            for (const auto& cell : table) {
                csv << format_double(cell.psi) << ',' << format_double(cell.magnitude) << ','
                    << gmprune::to_string(cell.estimator) << ',' << format_double(cell.error)
                    << '\n';
            }
        }
        std::cout << "sweep: " << table.size() << " breakdown cells\n";
        if (!cmd.out_json.empty()) {
            summary["cells"] = table.size();
            write_json_file(cmd.out_json, summary);
        }
        return kExitOk;
    }

    std::stringstream methods_ss(cmd.methods);
    std::string method_name;
    const std::vector<Index> ks = parse_indices(cmd.ks);
    if (csv.is_open()) {
        csv << "method,k,seed,error\n";
    }
    json fits = json::object();
    while (std::getline(methods_ss, method_name, ',')) {
        const gmprune::SelectMethod method = gmprune::select_method_from_string(method_name);

        // one GM solve per method, shared across the grid
        std::optional<gmprune::GmResult> gm;
        if (method == gmprune::SelectMethod::GmMatch) {
            gm = gmprune::geometric_median(set, {});
        }

        std::vector<std::pair<double, double>> averaged;
        for (const Index k : ks) {
            double error_sum = 0.0;
            for (int s = 0; s < cmd.num_seeds; ++s) {
                gmprune::SelectorConfig sel;
                sel.method = method;
                sel.k = k;
                sel.replacement = gmprune::replacement_from_string(cmd.replacement);
                sel.seed = cmd.seed + static_cast<std::uint64_t>(s);
                const auto result = gmprune::run_selector(set, sel, {}, gm ? &*gm : nullptr);
                const double error = result.residual_trace.back();
                error_sum += error;
                if (csv.is_open()) {
                    csv << method_name << ',' << k << ',' << sel.seed << ','
                        << format_double(error) << '\n';
                }
            }
            averaged.emplace_back(static_cast<double>(k),
                                  error_sum / static_cast<double>(cmd.num_seeds));
        }
        try {
            fits[method_name] = gmprune::to_json(gmprune::loglog_slope(averaged));
        } catch (const Error& e) {
            fits[method_name] = json{{"error", gmprune::error_code_name(e.code())}};
            std::cerr << "warning: slope fit for " << method_name << " failed: " << e.what()
                      << "\n";
        }
    }
    summary["fits"] = fits;
    if (!cmd.out_json.empty()) {
        write_json_file(cmd.out_json, summary);
    }
    std::cout << "sweep: done\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportCmd {
    std::string input;
    std::string format = "auto";
    std::string selection;
    double eps_abs = 0.0;
    std::string gm_json;
    std::string gm_ref;
    std::string out;
    std::string out_format = "json";

    json to_config_json() const {
        return json{{"command", "report"},   {"input", input},   {"format", format},
                    {"selection", selection}, {"eps_abs", eps_abs}, {"gm_json", gm_json},
                    {"gm_ref", gm_ref},       {"out_format", out_format}};
    }

    void apply_overrides(const json& j) {
        input = j.value("input", input);
        format = j.value("format", format);
        selection = j.value("selection", selection);
        eps_abs = j.value("eps_abs", eps_abs);
        gm_json = j.value("gm_json", gm_json);
        gm_ref = j.value("gm_ref", gm_ref);
        out_format = j.value("out_format", out_format);
    }
};

int run_report(ReportCmd& cmd, const std::string& config_path) {
    if (!config_path.empty()) {
        cmd.apply_overrides(load_config_overrides(config_path));
    }
    const auto set =
        gmprune::load_embeddings(cmd.input, resolve_format(cmd.format, cmd.input), {});
    const auto selection =
        gmprune::selection_result_from_json(load_json_file(cmd.selection));

    double eps_abs = cmd.eps_abs;
    if (!cmd.gm_json.empty() && !cmd.gm_ref.empty()) {
        const auto run = gmprune::gm_result_from_json(load_json_file(cmd.gm_json));
        const auto ref = gmprune::gm_result_from_json(load_json_file(cmd.gm_ref));
        eps_abs = std::max(run.objective - ref.objective, 0.0);
    }

    json report{{"config", cmd.to_config_json()}, {"method", gmprune::to_string(selection.method)},
                {"k", selection.k}};
    std::vector<std::pair<std::string, double>> human;

    if (set.has_flags()) {
        Vector mu_g = Vector::Zero(set.dim());
        Index n_clean = 0;
        for (Index i = 0; i < set.n(); ++i) {
            if (set.flags()[static_cast<std::size_t>(i)] == gmprune::Flag::Clean) {
                mu_g += set.data().row(i).transpose();
                ++n_clean;
            }
        }
        mu_g /= static_cast<double>(n_clean);
        const double error = gmprune::subset_mean_error(set, selection.indices, mu_g);
        const double rhs = gmprune::theorem_bound(set, eps_abs);
        const double rhs_normalized = gmprune::theorem_bound_normalized(set, eps_abs);
        const double precision = gmprune::clean_precision(selection.indices, set.flags());
        report["subset_mean_error"] = error;
        report["theorem_rhs"] = rhs;
        report["theorem_rhs_normalized"] = rhs_normalized;
        report["bound_satisfied"] = error <= rhs;
        report["clean_precision"] = precision;
        report["eps_abs"] = eps_abs;
        human = {{"subset_mean_error", error},
                 {"theorem_rhs", rhs},
                 {"theorem_rhs_normalized", rhs_normalized},
                 {"bound_satisfied", error <= rhs ? 1.0 : 0.0},
                 {"clean_precision", precision},
                 {"eps_abs", eps_abs}};
    } else {
        std::cerr << "warning: input carries no flags; reporting against the empirical mean, "
                     "clean_precision and theorem bound omitted\n";
        const Vector mu = set.data().colwise().mean().transpose();
        const double error = gmprune::subset_mean_error(set, selection.indices, mu);
        report["subset_mean_error_vs_empirical_mean"] = error;
        human = {{"subset_mean_error_vs_empirical_mean", error}};
    }

    for (const auto& [key, value] : human) {
        std::cout << key << ": " << format_double(value) << "\n";
    }
    if (!cmd.out.empty()) {
        if (cmd.out_format == "csv") {
            std::ofstream out(cmd.out, std::ios::trunc);
            if (!out) {
                throw Error(ErrorCode::IoFailure, "cannot open " + cmd.out + " for writing");
            }
            out << "metric,value\n";
            for (const auto& [key, value] : human) {
                out << key << ',' << format_double(value) << '\n';
            }
        } else {
            write_json_file(cmd.out, report);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust data pruning via geometric-median matching"};
    app.require_subcommand(1);

    GmCmd gm_cmd;
    SelectCmd select_cmd;
    SimulateCmd simulate_cmd;
    SweepCmd sweep_cmd;
    ReportCmd report_cmd;
    std::string config_path;

    auto* gm = app.add_subcommand("gm", "Compute the geometric median of an embedding set");
    gm->add_option("--input", gm_cmd.input)->required();
    gm->add_option("--format", gm_cmd.format)->check(CLI::IsMember({"auto", "binary", "csv"}));
    gm->add_flag("--csv-labels", gm_cmd.csv_labels);
    gm->add_option("--out", gm_cmd.out)->required();
    gm->add_option("--eps-ref", gm_cmd.eps_ref);
    gm->add_option("--step-tol", gm_cmd.gm.step_tol);
    gm->add_option("--obj-tol", gm_cmd.gm.obj_tol);
    gm->add_option("--max-iters", gm_cmd.gm.max_iters);
    gm->add_option("--anchor-eps", gm_cmd.gm.anchor_eps);
    gm->add_option("--init", gm_cmd.init)
        ->check(CLI::IsMember({"coordinate-median", "mean", "given"}));
    gm->add_option("--given", gm_cmd.given);
    gm->add_option("--config", config_path);

    auto* select = app.add_subcommand("select", "Select a k-subset");
    select->add_option("--input", select_cmd.input)->required();
    select->add_option("--format", select_cmd.format)
        ->check(CLI::IsMember({"auto", "binary", "csv"}));
    select->add_flag("--csv-labels", select_cmd.csv_labels);
    select->add_option("--out", select_cmd.out)->required();
    select->add_option("--emit-subset", select_cmd.emit_subset);
    select->add_option("--gm", select_cmd.gm_json);
    select->add_option("--method", select_cmd.method)
        ->check(CLI::IsMember({"gm-match", "mean-herd", "random", "easy", "hard", "moderate"}));
    select->add_option("--k", select_cmd.sel.k);
    select->add_option("--replacement", select_cmd.replacement)
        ->check(CLI::IsMember({"without", "with"}));
    select->add_flag_callback("--with-replacement",
                              [&] { select_cmd.replacement = "with"; });
    select->add_option("--theta0", select_cmd.theta0)
        ->check(CLI::IsMember({"gm-point", "zero", "given"}));
    select->add_option("--theta0-vec", select_cmd.theta0_vec);
    select->add_flag("--group-by-labels", select_cmd.sel.group_by_labels);
    select->add_option("--seed", select_cmd.sel.seed);
    select->add_flag("--normalize", select_cmd.sel.normalize);
    select->add_option("--step-tol", select_cmd.gm.step_tol);
    select->add_option("--obj-tol", select_cmd.gm.obj_tol);
    select->add_option("--max-iters", select_cmd.gm.max_iters);
    select->add_option("--config", config_path);

    auto* simulate = app.add_subcommand("simulate", "Generate a synthetic corrupted set");
    simulate->add_option("--n", simulate_cmd.n);
    simulate->add_option("--clean-mean", simulate_cmd.clean_mean);
    simulate->add_option("--cov", simulate_cmd.cov);
    simulate->add_option("--adv-mean", simulate_cmd.adv_mean);
    simulate->add_option("--psi", simulate_cmd.psi);
    simulate->add_option("--mode", simulate_cmd.mode)
        ->check(CLI::IsMember(
            {"gaussian-cluster", "point-at-magnitude", "mean-hijack", "label-flip"}));
    simulate->add_option("--magnitude", simulate_cmd.magnitude);
    simulate->add_option("--hijack-target", simulate_cmd.hijack_target);
    simulate->add_option("--num-classes", simulate_cmd.num_classes);
    simulate->add_option("--classes", simulate_cmd.classes);
    simulate->add_option("--class-radius", simulate_cmd.class_radius);
    simulate->add_option("--seed", simulate_cmd.seed);
    simulate->add_option("--out", simulate_cmd.out)->required();
    simulate->add_option("--config", config_path);

    auto* sweep = app.add_subcommand("sweep", "Run selector x k x seed grids");
    sweep->add_option("--input", sweep_cmd.input)->required();
    sweep->add_option("--format", sweep_cmd.format)
        ->check(CLI::IsMember({"auto", "binary", "csv"}));
    sweep->add_option("--methods", sweep_cmd.methods);
    sweep->add_option("--ks", sweep_cmd.ks);
    sweep->add_option("--seeds", sweep_cmd.num_seeds);
    sweep->add_option("--seed", sweep_cmd.seed);
    sweep->add_option("--replacement", sweep_cmd.replacement)
        ->check(CLI::IsMember({"without", "with"}));
    sweep->add_flag_callback("--with-replacement", [&] { sweep_cmd.replacement = "with"; });
    sweep->add_flag("--breakdown", sweep_cmd.breakdown);
    sweep->add_option("--psis", sweep_cmd.psis);
    sweep->add_option("--mags", sweep_cmd.mags);
    sweep->add_option("--out-csv", sweep_cmd.out_csv);
    sweep->add_option("--out-json", sweep_cmd.out_json);
    sweep->add_option("--config", config_path);

    auto* report = app.add_subcommand("report", "Join a selection with metrics");
    report->add_option("--input", report_cmd.input)->required();
    report->add_option("--format", report_cmd.format)
        ->check(CLI::IsMember({"auto", "binary", "csv"}));
    report->add_option("--selection", report_cmd.selection)->required();
    report->add_option("--eps-abs", report_cmd.eps_abs);
    report->add_option("--gm", report_cmd.gm_json);
    report->add_option("--gm-ref", report_cmd.gm_ref);
    report->add_option("--out", report_cmd.out);
    report->add_option("--out-format", report_cmd.out_format)
        ->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--config", config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        check_thread_env();
        if (gm->parsed()) return run_gm(gm_cmd, config_path);
        if (select->parsed()) return run_select(select_cmd, config_path);
        if (simulate->parsed()) return run_simulate(simulate_cmd, config_path);
        if (sweep->parsed()) return run_sweep(sweep_cmd, config_path);
        if (report->parsed()) return run_report(report_cmd, config_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
