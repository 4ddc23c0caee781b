// Copyright 2026 The qtime Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON and CSV serialization.
 *
 * Problem documents:
 *
 *     {"spectrum": {"kind": "harmonic", "omega": 1.0, "n": 16, "hbar": 1.0},
 *      "state": {"re": [...], "im": [...]}}
 *
 * `kind` is "harmonic" (omega), "box" (scale) or "custom" (levels). `state`
 * is optional. Matrices are {"n": N, "re": [[...]], "im": [[...]]}.
 * Numbers are written with 17 significant digits.
 */

#pragma once

#include <cstddef>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "galapon_operator.hpp"
#include "linalg.hpp"
#include "spectral_core.hpp"

namespace qtime {

using json = nlohmann::json;

/// How a spectrum was specified, kept so it can be written back verbatim.
struct SpectrumDescriptor {
    SpectrumKind kind = SpectrumKind::Harmonic;
    std::size_t n = 2;
    SpectrumParams params;

    [[nodiscard]] EnergySpectrum build() const { return build_spectrum(kind, n, params); }
    friend bool operator==(const SpectrumDescriptor &a, const SpectrumDescriptor &b) {
        return a.kind == b.kind && a.n == b.n && a.params.omega == b.params.omega &&
               a.params.scale == b.params.scale && a.params.levels == b.params.levels &&
               a.params.hbar == b.params.hbar;
    }
};

struct Problem {
    SpectrumDescriptor descriptor;
    EnergySpectrum spectrum;
    std::optional<QuantumState> state;
};

/// %.17g
inline std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

namespace detail {
template <typename T>
T required(const json &j, const char *key, const char *where) {
    if (!j.contains(key)) {
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(std::string(where) + ": field '" + key +
                         "' has the wrong type (" + e.what() + ")");
    }
}

template <typename T>
T optional_field(const json &j, const char *key, T fallback, const char *where) {
    return j.contains(key) ? required<T>(j, key, where) : fallback;
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string &text,
                                                       std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}
} // namespace detail

inline SpectrumDescriptor descriptor_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("spectrum: expected an object");
    }
    SpectrumDescriptor d;
    const auto kind = detail::required<std::string>(j, "kind", "spectrum");
    if (kind != "harmonic" && kind != "box" && kind != "custom") {
        throw ParseError("spectrum: unknown kind '" + kind + "'");
    }
    d.kind = parse_spectrum_kind(kind);
    d.params.hbar = detail::optional_field<double>(j, "hbar", 1.0, "spectrum");
    switch (d.kind) {
    case SpectrumKind::Harmonic:
        d.params.omega = detail::optional_field<double>(j, "omega", 1.0, "spectrum");
        d.n = detail::required<std::size_t>(j, "n", "spectrum");
        break;
    case SpectrumKind::Box:
        d.params.scale = detail::optional_field<double>(j, "scale", 1.0, "spectrum");
        d.n = detail::required<std::size_t>(j, "n", "spectrum");
        break;
    case SpectrumKind::Custom:
        d.params.levels = detail::required<std::vector<double>>(j, "levels", "spectrum");
        d.n = detail::optional_field<std::size_t>(j, "n", d.params.levels.size(),
                                                  "spectrum");
        break;
    }
    return d;
}

inline json descriptor_to_json(const SpectrumDescriptor &d) {
    json j;
    j["kind"] = std::string(to_string(d.kind));
    j["n"] = d.n;
    j["hbar"] = d.params.hbar;
    switch (d.kind) {
    case SpectrumKind::Harmonic:
        j["omega"] = d.params.omega;
        break;
    case SpectrumKind::Box:
        j["scale"] = d.params.scale;
        break;
    case SpectrumKind::Custom:
        j["levels"] = d.params.levels;
        break;
    }
    return j;
}

inline QuantumState state_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("state: expected an object");
    }
    const auto re = detail::required<std::vector<double>>(j, "re", "state");
    const auto im = detail::optional_field<std::vector<double>>(
        j, "im", std::vector<double>(re.size(), 0.0), "state");
    if (re.size() != im.size()) {
        throw ParseError("state: 're' and 'im' have different lengths");
    }
    std::vector<complex_t> c(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        c[i] = complex_t{re[i], im[i]};
    }
    return QuantumState(std::move(c));
}

inline json state_to_json(const QuantumState &s) {
    std::vector<double> re(s.size());
    std::vector<double> im(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        re[i] = s[i].real();
        im[i] = s[i].imag();
    }
    return json{{"re", re}, {"im", im}};
}

/// Schema errors raise ParseError; physics violations (degenerate levels,
/// non-unit state) raise the corresponding qtime::Error.
inline Problem problem_from_json(const json &j) {
    if (!j.is_object() || !j.contains("spectrum")) {
        throw ParseError("document: missing 'spectrum' object");
    }
    SpectrumDescriptor d = descriptor_from_json(j.at("spectrum"));
    EnergySpectrum spectrum = d.build();
    std::optional<QuantumState> state;
    if (j.contains("state") && !j.at("state").is_null()) {
        state = state_from_json(j.at("state"));
        if (state->size() != spectrum.size()) {
            throw DimensionError("state has " + std::to_string(state->size()) +
                                 " coefficients but the spectrum has " +
                                 std::to_string(spectrum.size()) + " levels");
        }
    }
    return {std::move(d), std::move(spectrum), std::move(state)};
}

inline json problem_to_json(const Problem &p) {
    json j;
    j["spectrum"] = descriptor_to_json(p.descriptor);
    if (p.state) {
        j["state"] = state_to_json(*p.state);
    }
    return j;
}

/// Parses text, reporting malformed JSON with its line and column.
inline json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        auto [line, col] = detail::line_column(text, e.byte);
        throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + e.what());
    }
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Problem load_problem(const std::string &path) {
    return problem_from_json(parse_json_text(read_text_file(path)));
}

inline json matrix_to_json(const OperatorMatrix &m) {
    const std::size_t n = m.size();
    json re = json::array();
    json im = json::array();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> r(n);
        std::vector<double> i(n);
        for (std::size_t k = 0; k < n; ++k) {
            r[k] = m(j, k).real();
            i[k] = m(j, k).imag();
        }
        re.push_back(std::move(r));
        im.push_back(std::move(i));
    }
    return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline OperatorMatrix matrix_from_json(const json &j, bool hermitian = false) {
    const auto n = detail::required<std::size_t>(j, "n", "matrix");
    const auto re = detail::required<std::vector<std::vector<double>>>(j, "re", "matrix");
    const auto im = detail::required<std::vector<std::vector<double>>>(j, "im", "matrix");
    if (re.size() != n || im.size() != n) {
        throw ParseError("matrix: row count does not match n");
    }
    std::vector<complex_t> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (re[r].size() != n || im[r].size() != n) {
            throw ParseError("matrix: row " + std::to_string(r) + " has wrong length");
        }
        for (std::size_t k = 0; k < n; ++k) {
            entries.emplace_back(re[r][k], im[r][k]);
        }
    }
    return OperatorMatrix(n, std::move(entries), hermitian);
}

/// CSV with a header row; every value printed with 17 significant digits.
inline void write_csv(std::ostream &os, const std::vector<std::string> &header,
                      const std::vector<std::vector<double>> &columns) {
    for (std::size_t c = 0; c < header.size(); ++c) {
        os << (c ? "," : "") << header[c];
    }
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            os << (c ? "," : "") << format_double(columns[c][r]);
        }
        os << '\n';
    }
}

inline void write_deviation_csv(std::ostream &os, const DeviationSeries &series) {
    write_csv(os, {"tau", "value"}, {series.taus, series.values});
}

} // namespace qtime
