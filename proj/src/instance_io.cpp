#include "flatdist/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace flatdist {

namespace {

using nlohmann::json;

Vec parse_vector(const json& j, const std::string& name, std::size_t m) {
    if (!j.is_array()) throw ParseError(name + ": expected an array of numbers");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) throw ParseError(name + ": entries must be finite numbers");
        const double val = x.get<double>();
        if (!std::isfinite(val)) throw ParseError(name + ": non-finite entry");
        v.push_back(val);
    }
    if (v.size() != m) {
        throw DimensionError(name + ": length " + std::to_string(v.size()) +
                             " does not match m = " + std::to_string(m));
    }
    return v;
}

Matrix parse_columns(const json& j, const std::string& name, std::size_t m) {
    if (!j.is_array()) throw ParseError(name + ": expected a list of columns");
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < j.size(); ++k) {
        cols.push_back(parse_vector(j[k], name + "[" + std::to_string(k) + "]", m));
    }
    return Matrix::from_columns(m, cols);
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    for (const char* field : {"m", "b", "B", "c", "C"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("missing required field '") + field + "'");
        }
    }
    if (!doc["m"].is_number_integer() || doc["m"].get<long long>() < 1) {
        throw ParseError("m must be a positive integer");
    }
    const auto m = doc["m"].get<std::size_t>();

    Instance inst;
    inst.vb.base = parse_vector(doc["b"], "b", m);
    inst.vb.directions = parse_columns(doc["B"], "B", m);
    inst.vb.orientation = Orientation::Plus;
    inst.vc.base = parse_vector(doc["c"], "c", m);
    inst.vc.directions = parse_columns(doc["C"], "C", m);
    inst.vc.orientation = Orientation::Minus;

    if (doc.contains("tol")) {
        if (!doc["tol"].is_number()) throw ParseError("tol must be a number");
        const double tol = doc["tol"].get<double>();
        if (!(tol > 0.0) || !std::isfinite(tol)) throw ParseError("tol must be positive");
        inst.tol_override = tol;
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

}  // namespace flatdist
