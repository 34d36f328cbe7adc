#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tss::report {

/// The identity catalogue the verifiers can check. Each entry is an exact
/// statement about generated pitch classes; the CLI token is in parentheses.
enum class Identity {
    RecurrenceAgreement,    // series built by recurrence == closed form  (part of `all`)
    FullRowShift,           // pc(n+12) = pc(n) + 6 mod 12                (f3)
    PrefixReversal,         // 6-prefix reversed: pc(5-n) = pc(n) + 6n + 3 (f4)
    HalfRowShift,           // pc(n+6) = pc(n) + 6n + 9 mod 12            (f5)
    ReversalShiftLink,      // pc(n+6) = reversed-prefix(n) + 6 mod 12    (combined)
    RetrogradeCoincidence,  // sounds 12..23 == reversal of the basic row, up to a
                            // discovered transposition level             (part of `all`)
    QuartShift,             // mode pc(n+3) = pc(n) + 5 mod 12            (f9)
};

/// CLI-facing name of an identity ("f3", "combined", ...).
const char* identity_name(Identity id);

struct Counterexample {
    std::int64_t n;
    int lhs;
    int rhs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Result of exhaustively checking one identity over an inclusive range.
/// holds is true exactly when counterexamples is empty.
struct IdentityReport {
    Identity id;
    std::string subject;  // "prime", "inversion", or a mode kind name
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool holds = false;
    std::vector<Counterexample> counterexamples;
    std::optional<int> transposition_level;  // RetrogradeCoincidence only
    std::string detail;                      // extra findings, empty otherwise
};

/// An exact non-negative rational, kept reduced with den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction make_fraction(std::int64_t num, std::int64_t den);

/// "23" when integral, "23/2" otherwise.
std::string to_string(const Fraction& f);

}  // namespace tss::report
