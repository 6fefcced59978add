#pragma once

// JSON encodings for every value that crosses a process boundary: matrices,
// maps, families, function specs, generator configs, instances, reports.
// Complex entries are emitted as a bare number when the imaginary part is
// exactly zero and as [re, im] otherwise; both forms parse. Structural
// problems (missing keys, wrong types, bad sizes) raise ParseError; semantic
// violations (a non-Hermitian operator) keep their own error types.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "opineq/checkers.hpp"
#include "opineq/errors.hpp"
#include "opineq/generate.hpp"
#include "opineq/maps.hpp"
#include "opineq/report.hpp"
#include "opineq/scalar_function.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

using json = nlohmann::json;

inline json complex_to_json(const Complex& z) {
    if (z.imag() == 0.0) return json(z.real());
    return json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
        if (!j[0].is_number() || (j.size() == 2 && !j[1].is_number()))
            throw ParseError("complex entry components must be numbers");
        return Complex(j[0].get<double>(), j.size() == 2 ? j[1].get<double>() : 0.0);
    }
    throw ParseError("complex entry must be a number or [re, im]");
}

inline json to_json(const HermitianMatrix& h) {
    json entries = json::array();
    for (const auto& z : h.entries()) entries.push_back(complex_to_json(z));
    return json{{"dim", h.dim()}, {"entries", std::move(entries)}};
}

inline HermitianMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix needs \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw ParseError("matrix dim must be a positive integer");
    int dim = j["dim"].get<int>();
    const json& ej = j["entries"];
    if (!ej.is_array() || ej.size() != static_cast<std::size_t>(dim) * dim)
        throw ParseError("matrix entries must hold dim*dim values");
    std::vector<Complex> entries;
    entries.reserve(ej.size());
    for (const auto& e : ej) entries.push_back(complex_from_json(e));
    return HermitianMatrix(dim, std::move(entries));
}

// Kraus operators may be rectangular; square ones reuse the matrix shape.
inline json kraus_to_json(const Eigen::MatrixXcd& k) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j) entries.push_back(complex_to_json(k(i, j)));
    if (k.rows() == k.cols()) return json{{"dim", k.rows()}, {"entries", std::move(entries)}};
    return json{{"rows", k.rows()}, {"cols", k.cols()}, {"entries", std::move(entries)}};
}

inline Eigen::MatrixXcd kraus_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw ParseError("Kraus operator needs \"entries\"");
    Eigen::Index rows = 0, cols = 0;
    if (j.contains("dim")) {
        rows = cols = j["dim"].get<Eigen::Index>();
    } else if (j.contains("rows") && j.contains("cols")) {
        rows = j["rows"].get<Eigen::Index>();
        cols = j["cols"].get<Eigen::Index>();
    } else {
        throw ParseError("Kraus operator needs \"dim\" or \"rows\"/\"cols\"");
    }
    if (rows < 1 || cols < 1) throw ParseError("Kraus dimensions must be positive");
    const json& ej = j["entries"];
    if (!ej.is_array() || ej.size() != static_cast<std::size_t>(rows * cols))
        throw ParseError("Kraus entries must hold rows*cols values");
    Eigen::MatrixXcd k(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) k(r, c) = complex_from_json(ej[idx++]);
    return k;
}

inline json to_json(const PositiveLinearMap& phi) {
    json ks = json::array();
    for (const auto& k : phi.kraus()) ks.push_back(kraus_to_json(k));
    return json{{"dim_in", phi.dim_in()}, {"dim_out", phi.dim_out()}, {"kraus", std::move(ks)}};
}

inline PositiveLinearMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim_in") || !j.contains("dim_out") || !j.contains("kraus"))
        throw ParseError("map needs \"dim_in\", \"dim_out\" and \"kraus\"");
    if (!j["kraus"].is_array() || j["kraus"].empty())
        throw ParseError("map needs a nonempty kraus list");
    std::vector<Eigen::MatrixXcd> ks;
    for (const auto& kj : j["kraus"]) ks.push_back(kraus_from_json(kj));
    return PositiveLinearMap(j["dim_in"].get<int>(), j["dim_out"].get<int>(), std::move(ks));
}

inline json to_json(const MapFamily& fam) {
    json maps = json::array();
    for (const auto& phi : fam.maps()) maps.push_back(to_json(phi));
    return json{{"maps", std::move(maps)}, {"normalization", fam.normalization()}};
}

inline MapFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("maps") || !j.contains("normalization"))
        throw ParseError("family needs \"maps\" and \"normalization\"");
    if (!j["maps"].is_array() || j["maps"].empty())
        throw ParseError("family needs a nonempty maps list");
    std::vector<PositiveLinearMap> maps;
    for (const auto& mj : j["maps"]) maps.push_back(map_from_json(mj));
    return MapFamily(std::move(maps), j["normalization"].get<double>());
}

inline json to_json(const FunctionSpec& spec) {
    switch (spec.kind) {
    case FunctionSpec::Kind::Power: return json{{"kind", "power"}, {"p", spec.p}};
    case FunctionSpec::Kind::Exp: return json{{"kind", "exp"}};
    case FunctionSpec::Kind::Log: return json{{"kind", "log"}};
    case FunctionSpec::Kind::Affine: return json{{"kind", "affine"}, {"a", spec.a}, {"b", spec.b}};
    case FunctionSpec::Kind::Polynomial:
        return json{{"kind", "polynomial"}, {"coeffs", spec.coeffs}};
    case FunctionSpec::Kind::Custom: break;
    }
    throw ParseError("custom functions are not serializable");
}

inline FunctionSpec function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("function needs a string \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "power") {
        if (!j.contains("p") || !j["p"].is_number())
            throw ParseError("power function needs numeric \"p\"");
        return FunctionSpec::power(j["p"].get<double>());
    }
    if (kind == "exp") return FunctionSpec::exp();
    if (kind == "log") return FunctionSpec::log();
    if (kind == "affine") {
        if (!j.contains("a") || !j.contains("b"))
            throw ParseError("affine function needs \"a\" and \"b\"");
        return FunctionSpec::affine(j["a"].get<double>(), j["b"].get<double>());
    }
    if (kind == "polynomial") {
        if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
            throw ParseError("polynomial needs a nonempty \"coeffs\" array");
        return FunctionSpec::polynomial(j["coeffs"].get<std::vector<double>>());
    }
    throw ParseError("unknown function kind \"" + kind + "\"");
}

inline json to_json(const GenConfig& cfg) {
    json j{{"dim", cfg.dim},
           {"m", cfg.m},
           {"M", cfg.M},
           {"seed", cfg.seed},
           {"max_retries", cfg.max_retries}};
    if (cfg.spread) j["spread"] = *cfg.spread;
    if (cfg.spectrum_floor) j["spectrum_floor"] = *cfg.spectrum_floor;
    return j;
}

inline GenConfig genconfig_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("generator config must be an object");
    GenConfig cfg;
    if (j.contains("dim")) cfg.dim = j["dim"].get<int>();
    if (j.contains("m")) cfg.m = j["m"].get<double>();
    if (j.contains("M")) cfg.M = j["M"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("max_retries")) cfg.max_retries = j["max_retries"].get<int>();
    if (j.contains("spread")) cfg.spread = j["spread"].get<double>();
    if (j.contains("spectrum_floor")) cfg.spectrum_floor = j["spectrum_floor"].get<double>();
    cfg.validate();
    return cfg;
}

inline json instance_to_json(const InstanceData& d) {
    json ops = json::object();
    auto put = [&](const char* key, const std::vector<HermitianMatrix>& xs) {
        if (xs.empty()) return;
        json arr = json::array();
        for (const auto& x : xs) arr.push_back(to_json(x));
        ops[key] = std::move(arr);
    };
    put("A", d.A);
    put("B", d.B);
    put("C", d.C);
    put("D", d.D);
    json j{{"m", d.m}, {"M", d.M}, {"theorem", d.theorem}, {"operators", std::move(ops)}};
    j["function"] = to_json(d.f().spec());
    if (!d.families.empty()) {
        json fams = json::object();
        for (const auto& [role, fam] : d.families) fams[role] = to_json(fam);
        j["families"] = std::move(fams);
    }
    if (d.theorem == "main") j["variant"] = d.variant;
    if (!d.condition.empty()) j["condition"] = d.condition;
    if (d.lambda) j["lambda"] = *d.lambda;
    if (d.q) j["q"] = *d.q;
    return j;
}

inline json instance_to_json(const Instance& inst) { return instance_to_json(inst.data()); }

// Certifies the function on the instance's own [m, M]; checkers that need a
// different window (petrovic, superadd, the dilated sums) recertify inside.
inline Instance instance_from_json(const json& j,
                                   ValidationMode mode = ValidationMode::Enforce,
                                   double tol = default_tolerance()) {
    if (!j.is_object()) throw ParseError("instance must be an object");
    for (const char* key : {"m", "M", "function", "theorem"})
        if (!j.contains(key)) throw ParseError(std::string("instance needs \"") + key + "\"");
    InstanceData d;
    d.m = j["m"].get<double>();
    d.M = j["M"].get<double>();
    if (!j["theorem"].is_string()) throw ParseError("theorem must be a string");
    d.theorem = j["theorem"].get<std::string>();
    if (!(d.m < d.M)) throw ParseError("instance needs m < M");
    d.function = ScalarFunction(function_from_json(j["function"]), d.m, d.M);
    if (j.contains("operators")) {
        const json& ops = j["operators"];
        if (!ops.is_object()) throw ParseError("operators must be an object");
        auto grab = [&](const char* key, std::vector<HermitianMatrix>& out) {
            if (!ops.contains(key)) return;
            if (!ops[key].is_array()) throw ParseError(std::string(key) + " must be an array");
            for (const auto& mj : ops[key]) out.push_back(matrix_from_json(mj));
        };
        grab("A", d.A);
        grab("B", d.B);
        grab("C", d.C);
        grab("D", d.D);
    }
    if (j.contains("families")) {
        if (!j["families"].is_object()) throw ParseError("families must be an object");
        for (const auto& [role, fj] : j["families"].items())
            d.families.emplace(role, family_from_json(fj));
    }
    if (j.contains("variant")) d.variant = j["variant"].get<std::string>();
    if (j.contains("condition")) d.condition = j["condition"].get<std::string>();
    if (j.contains("lambda")) d.lambda = j["lambda"].get<double>();
    if (j.contains("q")) d.q = j["q"].get<double>();
    return Instance(std::move(d), mode, tol);
}

inline json to_json(const LoewnerVerdict& v) {
    json j{{"ordering", to_string(v.ordering)},
           {"min_eig_diff", v.min_eig_diff},
           {"max_eig_diff", v.max_eig_diff},
           {"scale", v.scale}};
    if (!v.witness.empty()) {
        json w = json::array();
        for (const auto& z : v.witness) w.push_back(complex_to_json(z));
        j["witness"] = std::move(w);
    }
    return j;
}

inline Ordering ordering_from_string(const std::string& s) {
    if (s == "LessEq") return Ordering::LessEq;
    if (s == "GreaterEq") return Ordering::GreaterEq;
    if (s == "Equal") return Ordering::Equal;
    if (s == "Incomparable") return Ordering::Incomparable;
    throw ParseError("unknown ordering \"" + s + "\"");
}

inline LoewnerVerdict verdict_from_json(const json& j) {
    for (const char* key : {"ordering", "min_eig_diff", "max_eig_diff", "scale"})
        if (!j.contains(key)) throw ParseError(std::string("verdict needs \"") + key + "\"");
    LoewnerVerdict v;
    v.ordering = ordering_from_string(j["ordering"].get<std::string>());
    v.min_eig_diff = j["min_eig_diff"].get<double>();
    v.max_eig_diff = j["max_eig_diff"].get<double>();
    v.scale = j["scale"].get<double>();
    if (j.contains("witness"))
        for (const auto& wj : j["witness"]) v.witness.push_back(complex_from_json(wj));
    return v;
}

inline json report_to_json(const InequalityReport& rep) {
    json chain = json::array();
    for (const auto& link : rep.chain)
        chain.push_back(json{{"lhs_label", link.lhs_label},
                             {"rhs_label", link.rhs_label},
                             {"verdict", to_json(link.verdict)}});
    json scalars = json::object();
    for (const auto& [k, v] : rep.scalars) scalars[k] = v;
    json matrices = json::object();
    for (const auto& [k, v] : rep.matrices) matrices[k] = to_json(v);
    return json{{"direction", to_string(rep.direction)},
                {"passed", rep.passed},
                {"chain", std::move(chain)},
                {"scalars", std::move(scalars)},
                {"matrices", std::move(matrices)}};
}

inline InequalityReport report_from_json(const json& j) {
    for (const char* key : {"direction", "passed", "chain", "scalars", "matrices"})
        if (!j.contains(key)) throw ParseError(std::string("report needs \"") + key + "\"");
    InequalityReport rep;
    rep.direction = ordering_from_string(j["direction"].get<std::string>());
    for (const auto& lj : j["chain"]) {
        ChainLink link;
        link.lhs_label = lj.at("lhs_label").get<std::string>();
        link.rhs_label = lj.at("rhs_label").get<std::string>();
        link.verdict = verdict_from_json(lj.at("verdict"));
        rep.chain.push_back(std::move(link));
    }
    for (const auto& [k, v] : j["scalars"].items()) rep.scalars[k] = v.get<double>();
    for (const auto& [k, v] : j["matrices"].items()) rep.matrices.emplace(k, matrix_from_json(v));
    rep.passed = j["passed"].get<bool>();
    return rep;
}

} // namespace opineq
