#include "gmprune/json_io.hpp"

namespace gmprune {

using nlohmann::json;

std::string to_string(SelectMethod method) {
    switch (method) {
        case SelectMethod::GmMatch: return "gm-match";
        case SelectMethod::MeanHerd: return "mean-herd";
        case SelectMethod::Random: return "random";
        case SelectMethod::Easy: return "easy";
        case SelectMethod::Hard: return "hard";
        case SelectMethod::Moderate: return "moderate";
    }
    return "?";
}

std::string to_string(Replacement replacement) {
    return replacement == Replacement::Without ? "without" : "with";
}

std::string to_string(Theta0Mode mode) {
    switch (mode) {
        case Theta0Mode::GmPoint: return "gm-point";
        case Theta0Mode::Zero: return "zero";
        case Theta0Mode::Given: return "given";
    }
    return "?";
}

std::string to_string(GmInit init) {
    switch (init) {
        case GmInit::CoordinateMedian: return "coordinate-median";
        case GmInit::Mean: return "mean";
        case GmInit::GivenPoint: return "given";
    }
    return "?";
}

std::string to_string(CorruptionMode mode) {
    switch (mode) {
        case CorruptionMode::GaussianCluster: return "gaussian-cluster";
        case CorruptionMode::PointAtMagnitude: return "point-at-magnitude";
        case CorruptionMode::MeanHijack: return "mean-hijack";
        case CorruptionMode::LabelFlip: return "label-flip";
    }
    return "?";
}

std::string to_string(Estimator estimator) {
    return estimator == Estimator::Mean ? "mean" : "gm";
}

namespace {

[[noreturn]] void bad_enum(const std::string& what, const std::string& value) {
    throw Error(ErrorCode::PreconditionViolated, "unknown " + what + " '" + value + "'");
}

}  // namespace

SelectMethod select_method_from_string(const std::string& s) {
    if (s == "gm-match") return SelectMethod::GmMatch;
    if (s == "mean-herd") return SelectMethod::MeanHerd;
    if (s == "random") return SelectMethod::Random;
    if (s == "easy") return SelectMethod::Easy;
    if (s == "hard") return SelectMethod::Hard;
    if (s == "moderate") return SelectMethod::Moderate;
    bad_enum("method", s);
}

Replacement replacement_from_string(const std::string& s) {
    if (s == "without") return Replacement::Without;
    if (s == "with") return Replacement::With;
    bad_enum("replacement", s);
}

Theta0Mode theta0_mode_from_string(const std::string& s) {
    if (s == "gm-point") return Theta0Mode::GmPoint;
    if (s == "zero") return Theta0Mode::Zero;
    if (s == "given") return Theta0Mode::Given;
    bad_enum("theta0", s);
}

GmInit gm_init_from_string(const std::string& s) {
    if (s == "coordinate-median") return GmInit::CoordinateMedian;
    if (s == "mean") return GmInit::Mean;
    if (s == "given") return GmInit::GivenPoint;
    bad_enum("init", s);
}

CorruptionMode corruption_mode_from_string(const std::string& s) {
    if (s == "gaussian-cluster") return CorruptionMode::GaussianCluster;
    if (s == "point-at-magnitude") return CorruptionMode::PointAtMagnitude;
    if (s == "mean-hijack") return CorruptionMode::MeanHijack;
    if (s == "label-flip") return CorruptionMode::LabelFlip;
    bad_enum("corruption mode", s);
}

json to_json(const Vector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        arr.push_back(v(i));
    }
    return arr;
}

Vector vector_from_json(const json& j) {
    Vector v(static_cast<Index>(j.size()));
    Index i = 0;
    for (const auto& entry : j) {
        v(i++) = entry.get<double>();
    }
    return v;
}

json to_json(const GmConfig& cfg) {
    json j{{"step_tol", cfg.step_tol},
           {"obj_tol", cfg.obj_tol},
           {"max_iters", cfg.max_iters},
           {"init", to_string(cfg.init)},
           {"anchor_eps", cfg.anchor_eps}};
    if (cfg.init == GmInit::GivenPoint) {
        j["given_point"] = to_json(cfg.given_point);
    }
    return j;
}

GmConfig gm_config_from_json(const json& j) {
    GmConfig cfg;
    cfg.step_tol = j.value("step_tol", cfg.step_tol);
    cfg.obj_tol = j.value("obj_tol", cfg.obj_tol);
    cfg.max_iters = j.value("max_iters", cfg.max_iters);
    if (j.contains("init")) {
        cfg.init = gm_init_from_string(j.at("init").get<std::string>());
    }
    cfg.anchor_eps = j.value("anchor_eps", cfg.anchor_eps);
    if (j.contains("given_point")) {
        cfg.given_point = vector_from_json(j.at("given_point"));
    }
    return cfg;
}

json to_json(const GmResult& result, const GmConfig& cfg) {
    return json{{"point", to_json(result.point)},
                {"objective", result.objective},
                {"iters", result.iters},
                {"converged", result.converged},
                {"final_step", result.final_step},
                {"grad_norm", result.grad_norm},
                {"config", to_json(cfg)}};
}

GmResult gm_result_from_json(const json& j) {
    GmResult result;
    result.point = vector_from_json(j.at("point"));
    result.objective = j.at("objective").get<double>();
    result.iters = j.at("iters").get<int>();
    result.converged = j.at("converged").get<bool>();
    result.final_step = j.at("final_step").get<double>();
    result.grad_norm = j.at("grad_norm").get<double>();
    return result;
}

json to_json(const SelectorConfig& cfg) {
    json j{{"method", to_string(cfg.method)},
           {"k", cfg.k},
           {"replacement", to_string(cfg.replacement)},
           {"theta0", to_string(cfg.theta0)},
           {"group_by_labels", cfg.group_by_labels},
           {"seed", cfg.seed},
           {"normalize", cfg.normalize}};
    if (cfg.theta0 == Theta0Mode::Given) {
        j["theta0_vector"] = to_json(cfg.theta0_vector);
    }
    return j;
}

SelectorConfig selector_config_from_json(const json& j) {
    SelectorConfig cfg;
    if (j.contains("method")) {
        cfg.method = select_method_from_string(j.at("method").get<std::string>());
    }
    cfg.k = j.value("k", cfg.k);
    if (j.contains("replacement")) {
        cfg.replacement = replacement_from_string(j.at("replacement").get<std::string>());
    }
    if (j.contains("theta0")) {
        cfg.theta0 = theta0_mode_from_string(j.at("theta0").get<std::string>());
    }
    if (j.contains("theta0_vector")) {
        cfg.theta0_vector = vector_from_json(j.at("theta0_vector"));
    }
    cfg.group_by_labels = j.value("group_by_labels", cfg.group_by_labels);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.normalize = j.value("normalize", cfg.normalize);
    return cfg;
}

json to_json(const SelectionResult& result, const SelectorConfig& cfg) {
    json j{{"method", to_string(result.method)},
           {"k", result.k},
           {"indices", result.indices},
           {"target", to_json(result.target)},
           {"residual_trace", result.residual_trace},
           {"theta_norm_trace", result.theta_norm_trace},
           {"config", to_json(cfg)},
           {"seed", cfg.seed}};
    if (!result.groups.empty()) {
        json groups = json::array();
        for (const GroupTrace& g : result.groups) {
            groups.push_back(
                json{{"label", g.label}, {"quota", g.quota}, {"target", to_json(g.target)}});
        }
        j["groups"] = groups;
    }
    return j;
}

SelectionResult selection_result_from_json(const json& j) {
    SelectionResult result;
    result.method = select_method_from_string(j.at("method").get<std::string>());
    result.k = j.at("k").get<Index>();
    result.indices = j.at("indices").get<std::vector<Index>>();
    result.target = vector_from_json(j.at("target"));
    result.residual_trace = j.at("residual_trace").get<std::vector<double>>();
    result.theta_norm_trace = j.at("theta_norm_trace").get<std::vector<double>>();
    return result;
}

json to_json(const CorruptionSpec& spec) {
    json j{{"psi", spec.psi}, {"mode", to_string(spec.mode)}, {"seed", spec.seed}};
    switch (spec.mode) {
        case CorruptionMode::GaussianCluster: {
            j["cluster_mean"] = to_json(spec.cluster_mean);
            json cov = json::array();
            for (Index r = 0; r < spec.cluster_cov.rows(); ++r) {
                json row = json::array();
                for (Index c = 0; c < spec.cluster_cov.cols(); ++c) {
                    row.push_back(spec.cluster_cov(r, c));
                }
                cov.push_back(row);
            }
            j["cluster_cov"] = cov;
            break;
        }
        case CorruptionMode::PointAtMagnitude:
            j["magnitude"] = spec.magnitude;
            break;
        case CorruptionMode::MeanHijack:
            j["target"] = to_json(spec.target);
            break;
        case CorruptionMode::LabelFlip:
            j["num_classes"] = spec.num_classes;
            break;
    }
    return j;
}

CorruptionSpec corruption_spec_from_json(const json& j) {
    CorruptionSpec spec;
    spec.psi = j.at("psi").get<double>();
    spec.mode = corruption_mode_from_string(j.at("mode").get<std::string>());
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("cluster_mean")) {
        spec.cluster_mean = vector_from_json(j.at("cluster_mean"));
    }
    if (j.contains("cluster_cov")) {
        const auto& cov = j.at("cluster_cov");
        const Index rows = static_cast<Index>(cov.size());
        const Index cols = rows > 0 ? static_cast<Index>(cov.at(0).size()) : 0;
        spec.cluster_cov.resize(rows, cols);
        for (Index r = 0; r < rows; ++r) {
            for (Index c = 0; c < cols; ++c) {
                spec.cluster_cov(r, c) = cov.at(static_cast<std::size_t>(r))
                                             .at(static_cast<std::size_t>(c))
                                             .get<double>();
            }
        }
    }
    spec.magnitude = j.value("magnitude", spec.magnitude);
    if (j.contains("target")) {
        spec.target = vector_from_json(j.at("target"));
    }
    spec.num_classes = j.value("num_classes", spec.num_classes);
    return spec;
}

json to_json(const LoglogFit& fit) {
    return json{{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
}

}  // namespace gmprune
