#pragma once

/*
 * Run configuration: JSON ingestion with strict validation. Exact values
 * travel as strings ("p/q", integers, or decimals); unknown keys are
 * rejected so typos cannot silently change a run.
 */

#include "fieldzero/box.hpp"
#include "fieldzero/charge_system.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fieldzero {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContourConfig {
    double xlo = -100, xhi = 100, ylo = -100, yhi = 100;
    int grid_n = 512;
};

struct OutputConfig {
    std::string report = "report.json";
    std::string contour_x = "zeroset_X.csv";
    std::string contour_y = "zeroset_Y.csv";
    std::string poly = "poly.txt";
};

struct RunConfig {
    std::vector<Charge> charges;  // as given, before normalization
    std::optional<Box> search_box;  // input-frame coordinates
    std::optional<Rational> tolerance;
    std::optional<long> precision_bits;
    std::optional<long> lmax;
    std::optional<size_t> expansion_limit;
    std::optional<ContourConfig> contour;
    OutputConfig outputs;

    std::pair<ChargeSystem, Rational> normalized_system() const {
        return ChargeSystem::normalized(charges);
    }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& known,
                                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

inline Rational rational_field(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_number_float()) return parse_rational(nlohmann::json(v).dump());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(e.what()) + " (at " + where + ")");
    }
    throw ConfigError("expected a number or \"p/q\" string at " + where);
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("configuration root must be a JSON object");
    detail::reject_unknown_keys(j,
                                {"charges", "search_box", "tolerance", "precision_bits", "lmax",
                                 "expansion_limit", "contour", "outputs"},
                                "configuration root");
    RunConfig cfg;
    if (!j.contains("charges") || !j["charges"].is_array() || j["charges"].empty())
        throw ConfigError("\"charges\" must be a non-empty array");
    for (size_t i = 0; i < j["charges"].size(); ++i) {
        const auto& c = j["charges"][i];
        std::string where = "charges[" + std::to_string(i) + "]";
        if (!c.is_object()) throw ConfigError(where + " must be an object");
        detail::reject_unknown_keys(c, {"x", "a"}, where);
        if (!c.contains("x") || !c.contains("a"))
            throw ConfigError(where + " needs both \"x\" (position) and \"a\" (amplitude)");
        Charge ch{detail::rational_field(c["x"], where + ".x"), detail::rational_field(c["a"], where + ".a")};
        if (ch.amplitude == 0) throw ConfigError(where + ": amplitude must be nonzero");
        cfg.charges.push_back(std::move(ch));
    }
    for (size_t i = 0; i < cfg.charges.size(); ++i)
        for (size_t k = i + 1; k < cfg.charges.size(); ++k)
            if (cfg.charges[i].position == cfg.charges[k].position)
                throw ConfigError("duplicate charge positions at indices " + std::to_string(i) + " and " +
                                  std::to_string(k));

    if (j.contains("search_box")) {
        const auto& b = j["search_box"];
        if (!b.is_array() || b.size() != 4)
            throw ConfigError("\"search_box\" must be [xlo, xhi, ylo, yhi]");
        Rational xlo = detail::rational_field(b[0], "search_box[0]");
        Rational xhi = detail::rational_field(b[1], "search_box[1]");
        Rational ylo = detail::rational_field(b[2], "search_box[2]");
        Rational yhi = detail::rational_field(b[3], "search_box[3]");
        if (!(xlo < xhi) || !(ylo < yhi)) throw ConfigError("\"search_box\" is empty");
        cfg.search_box = Box(xlo, xhi, ylo, yhi);
    }
    if (j.contains("tolerance")) {
        cfg.tolerance = detail::rational_field(j["tolerance"], "tolerance");
        if (*cfg.tolerance <= 0) throw ConfigError("\"tolerance\" must be positive");
    }
    if (j.contains("precision_bits")) {
        if (!j["precision_bits"].is_number_integer())
            throw ConfigError("\"precision_bits\" must be an integer");
        cfg.precision_bits = j["precision_bits"].get<long>();
        if (*cfg.precision_bits < 64) throw ConfigError("\"precision_bits\" must be at least 64");
    }
    if (j.contains("lmax")) {
        if (!j["lmax"].is_number_integer() || j["lmax"].get<long>() < 1)
            throw ConfigError("\"lmax\" must be a positive integer");
        cfg.lmax = j["lmax"].get<long>();
    }
    if (j.contains("expansion_limit")) {
        if (!j["expansion_limit"].is_number_integer() || j["expansion_limit"].get<long>() < 1)
            throw ConfigError("\"expansion_limit\" must be a positive integer");
        cfg.expansion_limit = static_cast<size_t>(j["expansion_limit"].get<long>());
    }
    if (j.contains("contour")) {
        const auto& c = j["contour"];
        detail::reject_unknown_keys(c, {"window", "grid"}, "contour");
        ContourConfig cc;
        if (c.contains("window")) {
            const auto& w = c["window"];
            if (!w.is_array() || w.size() != 4)
                throw ConfigError("contour \"window\" must be [xlo, xhi, ylo, yhi]");
            cc.xlo = w[0].get<double>();
            cc.xhi = w[1].get<double>();
            cc.ylo = w[2].get<double>();
            cc.yhi = w[3].get<double>();
            if (!(cc.xlo < cc.xhi) || !(cc.ylo < cc.yhi)) throw ConfigError("contour window is empty");
        }
        if (c.contains("grid")) {
            if (!c["grid"].is_number_integer() || c["grid"].get<int>() < 16)
                throw ConfigError("contour \"grid\" must be an integer >= 16");
            cc.grid_n = c["grid"].get<int>();
        }
        cfg.contour = cc;
    }
    if (j.contains("outputs")) {
        const auto& o = j["outputs"];
        detail::reject_unknown_keys(o, {"report", "contour_x", "contour_y", "poly"}, "outputs");
        if (o.contains("report")) cfg.outputs.report = o["report"].get<std::string>();
        if (o.contains("contour_x")) cfg.outputs.contour_x = o["contour_x"].get<std::string>();
        if (o.contains("contour_y")) cfg.outputs.contour_y = o["contour_y"].get<std::string>();
        if (o.contains("poly")) cfg.outputs.poly = o["poly"].get<std::string>();
    }
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("JSON parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

}  // namespace fieldzero
