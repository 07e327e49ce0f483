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
#ifndef TAUTINT_FIXTURE_HPP
#define TAUTINT_FIXTURE_HPP

#include <string>
#include <vector>

#include "tautint/rational.hpp"

namespace tautint {

/// Local data of a torus action at one fixed point of a curve: the weight of
/// the cotangent line and the weights of the bundle fibers (one integer per
/// summand of a direct sum of line bundles).
struct FixedPointChart {
    int cotangent_weight = 0;
    std::vector<int> bundle_weights;
};

/// A curve with torus action, described purely by its fixed-point weight
/// data. The only honest geometric instances are P^1 (two points, opposite
/// cotangent weights) and the affine line (one point), but arbitrary charts
/// are accepted as formal objects so the localization algebra can be
/// stress-tested; compactness-dependent claims are gated on `compact`.
struct CurveFixture {
    std::string name;
    bool compact = true;
    std::vector<FixedPointChart> points;

    int num_points() const { return static_cast<int>(points.size()); }
    /// Number of bundle summands (consistent across charts after validate()).
    int rank() const { return points.empty() ? 0 : static_cast<int>(points[0].bundle_weights.size()); }

    /// Throws DegenerateFixture unless there is at least one point, every
    /// cotangent weight is nonzero, and all charts agree on the rank (>= 1).
    void validate() const;
};

/// P^1 with the line bundle O(d): cotangent weights (-1, +1), fiber weights
/// (0, -d).
CurveFixture p1_line_bundle(int d);
/// P^1 with a direct sum of line bundles O(d_1) + ... + O(d_r).
CurveFixture p1_bundle(const std::vector<int>& degrees);
/// P^1 with the rank-r trivial bundle (all weights zero).
CurveFixture p1_trivial_sum(int r);
/// P^1 with (r-1) trivial summands plus one O(-1) summand.
CurveFixture p1_mixed_sum(int r);
/// The affine line with one fixed point, cotangent weight +1, and a single
/// bundle weight a. Not compact.
CurveFixture affine_line(int a);

/// Nonequivariant invariants recovered from the weight data by localization:
/// the Euler characteristic of the curve and the degree of each bundle
/// summand. A summand degree can come out non-integral for hand-written
/// weight data; `formal` flags that case (the fixture is then formal, not
/// geometric).
struct FixtureInvariants {
    int euler = 0;
    std::vector<Rational> degrees;
    bool formal = false;
};

/// Requires a compact fixture (throws DegenerateFixture otherwise).
FixtureInvariants fixture_invariants(const CurveFixture& fixture);

/// Parse a fixture from its JSON serialization
/// {"name": str, "compact": bool, "points": [{"cotangent_weight": int,
/// "bundle_weights": [int,...]}, ...]}. Field-level problems throw UsageError
/// with the offending path; the parsed fixture is validated before return.
CurveFixture fixture_from_json_text(const std::string& text);
std::string fixture_to_json_text(const CurveFixture& fixture);
/// Load and parse a fixture file; throws UsageError when unreadable.
CurveFixture load_fixture(const std::string& path);

} // namespace tautint

#endif
