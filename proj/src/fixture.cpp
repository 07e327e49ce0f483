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
#include "tautint/fixture.hpp"

#include <string>

#include "tautint/errors.hpp"

namespace tautint {

void CurveFixture::validate() const {
    if (points.empty())
        throw DegenerateFixture("fixture '" + name + "' has no fixed points");
    const size_t r = points[0].bundle_weights.size();
    if (r == 0)
        throw DegenerateFixture("fixture '" + name + "' has no bundle summands");
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].cotangent_weight == 0)
            throw DegenerateFixture("fixture '" + name + "' has zero cotangent weight at point " +
                                    std::to_string(i));
        if (points[i].bundle_weights.size() != r)
            throw DegenerateFixture("fixture '" + name + "' has inconsistent rank at point " +
                                    std::to_string(i));
    }
}

CurveFixture p1_bundle(const std::vector<int>& degrees) {
    CurveFixture f;
    f.name = "p1";
    f.compact = true;
    FixedPointChart p0, p1;
    p0.cotangent_weight = -1;
    p1.cotangent_weight = 1;
    for (int d : degrees) {
        p0.bundle_weights.push_back(0);
        p1.bundle_weights.push_back(-d);
    }
    f.points = {p0, p1};
    f.validate();
    return f;
}

CurveFixture p1_line_bundle(int d) {
    CurveFixture f = p1_bundle({d});
    f.name = "p1_O(" + std::to_string(d) + ")";
    return f;
}

CurveFixture p1_trivial_sum(int r) {
    if (r < 1) throw DegenerateFixture("rank must be >= 1");
    CurveFixture f = p1_bundle(std::vector<int>(static_cast<size_t>(r), 0));
    f.name = std::to_string(r) + "O";
    return f;
}

CurveFixture p1_mixed_sum(int r) {
    if (r < 1) throw DegenerateFixture("rank must be >= 1");
    std::vector<int> degrees(static_cast<size_t>(r), 0);
    degrees.back() = -1;
    CurveFixture f = p1_bundle(degrees);
    f.name = std::to_string(r - 1) + "O+O(-1)";
    return f;
}

CurveFixture affine_line(int a) {
    CurveFixture f;
    f.name = "affine_line(" + std::to_string(a) + ")";
    f.compact = false;
    FixedPointChart p;
    p.cotangent_weight = 1;
    p.bundle_weights = {a};
    f.points = {p};
    f.validate();
    return f;
}

FixtureInvariants fixture_invariants(const CurveFixture& fixture) {
    fixture.validate();
    if (!fixture.compact)
        throw DegenerateFixture("fixture invariants require a compact fixture");
    FixtureInvariants inv;
    // localization of the integral of c1(T): each fixed point contributes
    // w/w = 1 for its tangent weight w.
    inv.euler = fixture.num_points();
    const int r = fixture.rank();
    for (int j = 0; j < r; ++j) {
        Rational deg;
        for (const auto& p : fixture.points)
            deg += Rational(p.bundle_weights[static_cast<size_t>(j)], -p.cotangent_weight);
        if (!deg.is_integer()) inv.formal = true;
        inv.degrees.push_back(deg);
    }
    return inv;
}

} // namespace tautint
