/*
   Copyright 2026 The gaglrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file descriptor.hpp
 * @brief Code descriptors and structured reports (JSON, schema documented in docs/FORMATS.md).
 *
 * Descriptor example:
 * @code{.json}
 * {
 *   "format": "gaglrc-descriptor",
 *   "version": 1,
 *   "field": {"p": 3, "m": 1},
 *   "places": ["2,2,1", "1,0,1", "2,1,1"],
 *   "divisor_degree": 4,
 *   "inner": {"kind": "rs", "n": 3, "points": ["0", "1", "2"]}
 * }
 * @endcode
 */

#ifndef GAGLRC_DESCRIPTOR_HPP
#define GAGLRC_DESCRIPTOR_HPP

#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "linear_code.hpp"
#include "lrc.hpp"
#include "matrix.hpp"

namespace gaglrc {

inline constexpr const char* kDescriptorFormat = "gaglrc-descriptor";
inline constexpr const char* kReportFormat = "gaglrc-report";
inline constexpr int kFormatVersion = 1;

class DescriptorError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct InnerSpec {
    enum class Kind { ReedSolomon, Parity, Explicit };
    Kind kind = Kind::ReedSolomon;
    std::optional<std::size_t> n;       // rs: length (default deg + 1)
    std::vector<Symbol> points;         // rs: evaluation points (default first n elements)
    std::vector<std::vector<Symbol>> rows;  // matrix: generator rows
};

struct CodeDescriptor {
    Field field;
    std::vector<Place> places;
    std::uint32_t divisor_degree = 0;
    std::vector<InnerSpec> inner;  // one per place
};

inline LinearCode make_inner(const InnerSpec& spec, const Field& f, std::size_t degree) {
    switch (spec.kind) {
        case InnerSpec::Kind::ReedSolomon:
            if (!spec.points.empty()) return rs_code(f, spec.points, degree);
            return rs_code(f, spec.n.value_or(degree + 1), degree);
        case InnerSpec::Kind::Parity:
            return parity_check_code(f, degree);
        case InnerSpec::Kind::Explicit:
            return LinearCode(Matrix(f, spec.rows));
    }
    throw DescriptorError("unknown inner code kind");
}

inline GagLrcCode build(const CodeDescriptor& d) {
    std::vector<LinearCode> inner;
    for (std::size_t i = 0; i < d.places.size(); ++i)
        inner.push_back(make_inner(d.inner[i], d.field, static_cast<std::size_t>(d.places[i].degree())));
    return build_gag_lrc(d.field, d.places, d.divisor_degree, inner);
}

namespace detail {

using nlohmann::json;

inline InnerSpec parse_inner(const json& j, const Field& f) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DescriptorError("inner code spec needs a string 'kind'");
    InnerSpec spec;
    const std::string kind = j["kind"];
    if (kind == "rs") {
        spec.kind = InnerSpec::Kind::ReedSolomon;
        if (j.contains("n")) spec.n = j["n"].get<std::size_t>();
        if (j.contains("points"))
            for (const auto& p : j["points"]) spec.points.push_back(f.parse(p.get<std::string>()));
        if (spec.n && !spec.points.empty() && *spec.n != spec.points.size())
            throw DescriptorError("rs inner code: 'n' disagrees with the number of points");
    } else if (kind == "parity") {
        spec.kind = InnerSpec::Kind::Parity;
    } else if (kind == "matrix") {
        spec.kind = InnerSpec::Kind::Explicit;
        if (!j.contains("rows") || !j["rows"].is_array()) throw DescriptorError("matrix inner code needs 'rows'");
        for (const auto& row : j["rows"]) {
            std::vector<Symbol> r;
            std::istringstream is(row.get<std::string>());
            std::string tok;
            while (is >> tok) r.push_back(f.parse(tok));
            spec.rows.push_back(std::move(r));
        }
    } else {
        throw DescriptorError("unknown inner code kind '" + kind + "'");
    }
    return spec;
}

inline json inner_to_json(const InnerSpec& s, const Field& f) {
    json j;
    switch (s.kind) {
        case InnerSpec::Kind::ReedSolomon: {
            j["kind"] = "rs";
            if (s.n) j["n"] = *s.n;
            if (!s.points.empty()) {
                j["points"] = json::array();
                for (Symbol p : s.points) j["points"].push_back(f.render(p));
            }
            break;
        }
        case InnerSpec::Kind::Parity:
            j["kind"] = "parity";
            break;
        case InnerSpec::Kind::Explicit: {
            j["kind"] = "matrix";
            j["rows"] = json::array();
            for (const auto& r : s.rows) {
                std::string line;
                for (std::size_t t = 0; t < r.size(); ++t) {
                    if (t) line += ' ';
                    line += f.render(r[t]);
                }
                j["rows"].push_back(line);
            }
            break;
        }
    }
    return j;
}

}  // namespace detail

/// @throws DescriptorError (an std::invalid_argument) for malformed or inconsistent descriptors.
inline CodeDescriptor parse_descriptor(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DescriptorError(std::string("descriptor is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw DescriptorError("descriptor must be a JSON object");
        if (j.value("format", std::string()) != kDescriptorFormat)
            throw DescriptorError(std::string("descriptor 'format' must be \"") + kDescriptorFormat + "\"");
        if (j.value("version", 0) != kFormatVersion) throw DescriptorError("unsupported descriptor version");
        if (!j.contains("field")) throw DescriptorError("descriptor needs 'field'");
        CodeDescriptor d;
        const auto p = j["field"].at("p").get<std::int64_t>();
        const auto m = j["field"].value("m", std::int64_t{1});
        if (p < 0 || m < 0 || p > INT32_MAX || m > 64) throw DescriptorError("field parameters out of range");
        try {
            d.field = Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
        } catch (const std::invalid_argument& e) {
            throw DescriptorError(std::string("bad field: ") + e.what());
        }
        if (j.contains("places")) {
            for (const auto& pl : j["places"]) {
                try {
                    d.places.push_back(Place::finite(parse_polynomial(d.field, pl.get<std::string>())));
                } catch (const std::invalid_argument& e) {
                    throw DescriptorError(std::string("bad place: ") + e.what());
                }
            }
        } else if (j.contains("place_degree")) {
            d.places = enumerate_places(d.field, j["place_degree"].get<unsigned>());
            if (j["place_degree"].get<unsigned>() == 1) d.places.pop_back();  // drop P_inf
            if (j.contains("place_count")) {
                const auto c = j["place_count"].get<std::size_t>();
                if (c > d.places.size())
                    throw DescriptorError("only " + std::to_string(d.places.size()) + " places of that degree exist");
                d.places.erase(d.places.begin() + static_cast<std::ptrdiff_t>(c), d.places.end());
            }
        } else {
            throw DescriptorError("descriptor needs 'places' or 'place_degree'");
        }
        if (d.places.empty()) throw DescriptorError("descriptor lists no places");
        if (!j.contains("divisor_degree")) throw DescriptorError("descriptor needs 'divisor_degree'");
        const auto dg = j["divisor_degree"].get<std::int64_t>();
        if (dg < 0) throw DescriptorError("divisor degree must be non-negative");
        d.divisor_degree = static_cast<std::uint32_t>(dg);
        if (!j.contains("inner")) throw DescriptorError("descriptor needs 'inner'");
        if (j["inner"].is_array()) {
            if (j["inner"].size() != d.places.size()) throw DescriptorError("need one inner code spec per place");
            for (const auto& s : j["inner"]) d.inner.push_back(detail::parse_inner(s, d.field));
        } else {
            d.inner.assign(d.places.size(), detail::parse_inner(j["inner"], d.field));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw DescriptorError(std::string("malformed descriptor: ") + e.what());
    }
}

/// Canonical form: explicit place list, inner collapsed to one object when uniform.
inline std::string to_json(const CodeDescriptor& d) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = kDescriptorFormat;
    j["version"] = kFormatVersion;
    j["field"] = {{"p", d.field.characteristic()}, {"m", d.field.degree()}};
    j["places"] = ordered_json::array();
    for (const auto& p : d.places) j["places"].push_back(to_compact(p.poly()));
    j["divisor_degree"] = d.divisor_degree;
    std::vector<nlohmann::json> inner;
    for (const auto& s : d.inner) inner.push_back(detail::inner_to_json(s, d.field));
    bool uniform = true;
    for (const auto& s : inner) uniform = uniform && s == inner.front();
    if (uniform && !inner.empty())
        j["inner"] = ordered_json::parse(inner.front().dump());
    else
        j["inner"] = ordered_json::parse(nlohmann::json(inner).dump());
    return j.dump(2) + "\n";
}

/// Structured report object with the common envelope.
inline nlohmann::ordered_json report_envelope(const std::string& name, const std::string& tag) {
    nlohmann::ordered_json j;
    j["format"] = kReportFormat;
    j["version"] = kFormatVersion;
    j["name"] = name;
    j["tag"] = tag;
    j["inputs"] = nlohmann::ordered_json::object();
    j["flags"] = nlohmann::ordered_json::array();
    return j;
}

inline nlohmann::ordered_json rational_json(const Rational& r) {
    return {{"exact", to_string(r)}, {"approx", to_double(r)}};
}

inline nlohmann::ordered_json to_json(const ParamReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["locality"] = rep.locality;
    j["d_design"] = rep.d_design;
    j["d_singleton"] = rep.d_singleton;
    if (rep.d_actual)
        j["d_actual"] = *rep.d_actual;
    else
        j["d_actual"] = nullptr;
    j["defect"] = rep.defect;
    j["pessimistic"] = rep.pessimistic;
    j["rate_bound"] = rational_json(rep.rate_bound);
    j["rate_cap"] = rational_json(rep.rate_cap);
    j["flags"] = rep.flags;
    return j;
}

}  // namespace gaglrc

#endif  // GAGLRC_DESCRIPTOR_HPP
