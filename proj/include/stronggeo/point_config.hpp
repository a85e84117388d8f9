#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/rational.hpp"
#include "stronggeo/vec.hpp"

namespace stronggeo {

enum class ConfigMode { linear, affine };

// Labeled rational point/vector configuration. Labels are dense 0..n-1 in
// order; affine points live in R^d and homogenize to {1} x R^d.
struct PointConfig {
    ConfigMode mode = ConfigMode::affine;
    int dim = 0;
    std::vector<Vec> points;

    int size() const { return static_cast<int>(points.size()); }

    const Vec& at(int label) const {
        if (label < 0 || label >= size()) throw UnknownLabel("no point labeled " + std::to_string(label));
        return points[static_cast<std::size_t>(label)];
    }
};

inline PointConfig make_config(ConfigMode mode, int dim, std::vector<Vec> points) {
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatch("point has wrong dimension");
    return PointConfig{mode, dim, std::move(points)};
}

// Affine inclusion in: R^d ~ {1} x R^d. Linear configs pass through.
inline PointConfig homogenize(const PointConfig& x) {
    if (x.mode == ConfigMode::linear) return x;
    PointConfig r;
    r.mode = ConfigMode::linear;
    r.dim = x.dim + 1;
    r.points.reserve(x.points.size());
    for (const Vec& p : x.points) {
        Vec q(static_cast<std::size_t>(x.dim) + 1);
        q[0] = 1;
        for (int i = 0; i < x.dim; ++i) q[static_cast<std::size_t>(i) + 1] = p[static_cast<std::size_t>(i)];
        r.points.push_back(std::move(q));
    }
    return r;
}

// Points file: "# comment" lines ignored, blank lines ignored, data lines
// "LABEL: c1 c2 ... cd" with rational coordinates; labels must be 0..n-1 in
// order. The mode is chosen by the caller.
inline PointConfig parse_points(const std::string& text, ConfigMode mode) {
    PointConfig cfg;
    cfg.mode = mode;
    cfg.dim = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int expected_label = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw SyntaxError(lineno, 1, "'LABEL:' prefix");
        std::string label_str = line.substr(start, colon - start);
        int label;
        try {
            std::size_t used = 0;
            label = std::stoi(label_str, &used);
            if (used != label_str.size()) throw std::invalid_argument("");
        } catch (...) {
            throw SyntaxError(lineno, static_cast<int>(start) + 1, "integer label");
        }
        if (label != expected_label)
            throw SyntaxError(lineno, static_cast<int>(start) + 1,
                              "label " + std::to_string(expected_label) + " (labels are dense and ordered)");
        ++expected_label;
        std::vector<Rational> coords;
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        while (rest >> tok) coords.push_back(parse_rational(tok, lineno, static_cast<int>(colon) + 2));
        if (coords.empty()) throw SyntaxError(lineno, static_cast<int>(colon) + 2, "coordinates");
        if (cfg.dim < 0) cfg.dim = static_cast<int>(coords.size());
        if (static_cast<int>(coords.size()) != cfg.dim)
            throw SyntaxError(lineno, static_cast<int>(colon) + 2,
                              std::to_string(cfg.dim) + " coordinates");
        cfg.points.emplace_back(std::move(coords));
    }
    if (cfg.points.empty()) throw SyntaxError(lineno + 1, 1, "at least one point");
    return cfg;
}

inline std::string serialize_points(const PointConfig& cfg) {
    std::string out;
    for (int i = 0; i < cfg.size(); ++i) {
        out += std::to_string(i) + ":";
        for (const Rational& c : cfg.points[static_cast<std::size_t>(i)]) out += " " + format_rational(c);
        out += "\n";
    }
    return out;
}

}  // namespace stronggeo
