/*
   Copyright 2026 The tautint authors

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
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tautint/errors.hpp"
#include "tautint/fixture.hpp"

namespace tautint {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object())
        throw UsageError("fixture: " + where + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw UsageError("fixture: missing field '" + key + "' in " + where);
    return *it;
}

int require_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw UsageError("fixture: " + where + " must be an integer");
    return v.get<int>();
}

} // namespace

CurveFixture fixture_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("fixture: invalid JSON: ") + e.what());
    }
    CurveFixture f;
    const json& name = require_field(doc, "name", "document");
    if (!name.is_string()) throw UsageError("fixture: 'name' must be a string");
    f.name = name.get<std::string>();
    const json& compact = require_field(doc, "compact", "document");
    if (!compact.is_boolean()) throw UsageError("fixture: 'compact' must be a boolean");
    f.compact = compact.get<bool>();
    const json& points = require_field(doc, "points", "document");
    if (!points.is_array()) throw UsageError("fixture: 'points' must be an array");
    int idx = 0;
    for (const json& p : points) {
        const std::string where = "points[" + std::to_string(idx) + "]";
        FixedPointChart chart;
        chart.cotangent_weight =
            require_int(require_field(p, "cotangent_weight", where), where + ".cotangent_weight");
        const json& bw = require_field(p, "bundle_weights", where);
        if (!bw.is_array())
            throw UsageError("fixture: " + where + ".bundle_weights must be an array");
        int widx = 0;
        for (const json& w : bw) {
            chart.bundle_weights.push_back(
                require_int(w, where + ".bundle_weights[" + std::to_string(widx) + "]"));
            ++widx;
        }
        f.points.push_back(std::move(chart));
        ++idx;
    }
    try {
        f.validate();
    } catch (const DegenerateFixture& e) {
        throw UsageError(std::string("fixture: ") + e.what());
    }
    return f;
}

std::string fixture_to_json_text(const CurveFixture& fixture) {
    json doc;
    doc["name"] = fixture.name;
    doc["compact"] = fixture.compact;
    doc["points"] = json::array();
    for (const auto& p : fixture.points) {
        json chart;
        chart["cotangent_weight"] = p.cotangent_weight;
        chart["bundle_weights"] = p.bundle_weights;
        doc["points"].push_back(chart);
    }
    return doc.dump(2);
}

CurveFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fixture_from_json_text(buf.str());
}

} // namespace tautint
