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
#ifndef TAUTINT_REPORT_HPP
#define TAUTINT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace tautint {

/// First failing comparison of a verification: which index disagreed and the
/// two exact values, rendered canonically.
struct Witness {
    long long index = 0;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one named check. pass is true iff no witness was recorded.
/// Notes carry resolution details for the sign-adjudication checks (which
/// printed variant of an ambiguous formula actually holds).
struct VerificationReport {
    std::string name;
    bool pass = true;
    int order = 0;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    VerificationReport() = default;
    VerificationReport(std::string check_name, int checked_order)
        : name(std::move(check_name)), order(checked_order) {}

    /// Record a failure; only the first witness is kept.
    void fail(long long index, std::string lhs, std::string rhs) {
        pass = false;
        if (!witness) witness = Witness{index, std::move(lhs), std::move(rhs)};
    }
    void note(std::string text) { notes.push_back(std::move(text)); }

    /// Fold a sub-check into this report (first witness wins, notes appended).
    void absorb(const VerificationReport& sub) {
        if (!sub.pass) {
            pass = false;
            if (!witness && sub.witness) witness = sub.witness;
        }
        for (const auto& n : sub.notes) notes.push_back(n);
    }

    /// Notes joined with "; " for flat serialization.
    std::string notes_joined() const {
        std::string out;
        for (size_t i = 0; i < notes.size(); ++i) {
            if (i) out += "; ";
            out += notes[i];
        }
        return out;
    }
};

} // namespace tautint

#endif
