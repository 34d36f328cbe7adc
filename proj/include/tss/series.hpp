#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tss/report.hpp"
#include "tss/ring.hpp"
#include "tss/row.hpp"

namespace tss::series {

/// The two forms of the tone-semitone series: the prime form climbs the
/// keyboard by the intervals 1,2,3,...; the inversion form descends by the
/// same intervals, so its pitch classes are the negated prime ones.
enum class Form { Prime, Inversion };

const char* form_name(Form form);
std::optional<Form> form_from_name(const std::string& name);

/// A generated prefix of the series in both absolute-semitone and
/// pitch-class form. absolute[n] is the distance in semitones from the
/// first sound (the prime form ascends, the inversion descends by the same
/// amounts); pitch_classes live in Z/12Z.
struct Series {
    Form form;
    std::vector<std::int64_t> absolute;
    rows::Row pitch_classes;
};

/// Distance of sound n from sound 0 in semitones: n(n+1)/2, exact and
/// unreduced. n must be non-negative and small enough that n(n+1)/2 fits in
/// 64 bits (n up to ~4.2e9; every caller here stays far below).
std::int64_t absolute_offset(std::int64_t n);

/// Pitch class of sound n straight from the closed form n(n+1)/2 mod 12,
/// negated for the inversion form. Wide intermediates, no reduction
/// shortcuts, so the period search below discovers rather than assumes.
ring::Residue closed_form(std::int64_t n, Form form);

/// The first `count` sounds of the prime form built strictly by the
/// recurrence pc(n) = pc(n-1) + n, with absolute offsets as cumulative sums
/// of the intervals 1,2,3,.... Kept separate from closed_form so the two
/// routes can check each other.
Series by_recurrence(int count);

/// The first `count` sounds of either form, from the closed form.
Series generate(Form form, int count);

/// Smallest p >= 1 with closed_form(n+p) = closed_form(n) for all n in
/// 0..search_limit, found by search. search_limit must be at least 48; if no
/// period below search_limit/2 exists the search signals a generation bug by
/// throwing.
std::int64_t pitch_class_period(Form form, std::int64_t search_limit);

/// Exhaustively check one series identity over the inclusive range [lo, hi].
/// PrefixReversal and ReversalShiftLink act on the 6-sound prefix, so their
/// range must stay within 0..5; RetrogradeCoincidence compares 12-sound
/// windows position by position, range within 0..11. QuartShift belongs to
/// the modes module and is rejected here.
report::IdentityReport verify_identity(report::Identity id, std::int64_t lo, std::int64_t hi);

/// Which pitch classes one full period of a form reaches, with the smallest
/// index reaching each. reachable and missing partition Z/12Z.
struct CoverageReport {
    Form form;
    std::set<int> reachable;
    std::map<int, int> witnesses;  // pitch class -> smallest index in 0..23
    std::set<int> missing;
};

/// Brute force over one full period (indices 0..23).
CoverageReport coverage(Form form);

/// Smallest index n in 0..23 whose pitch class in the given form equals m,
/// if any.
std::optional<int> solvable(ring::Residue m, Form form);

/// Duplicated pitch classes among the 12 sounds of the basic form.
struct ReiterationReport {
    std::vector<std::pair<int, int>> pairs;  // positions (i, j), i < j, in 0..11
    int distinct_count = 0;
    std::set<int> non_reiterated;  // pitch classes sounded exactly once
};

/// All-pairs scan of the first 12 pitch classes of the prime form.
ReiterationReport reiterations();

/// Period facts computed from the series itself. Both forms share the
/// period. span_semitones is the absolute offset of the last sound inside
/// one period; first_return marks the first sound after 0 that lands back on
/// pitch class 0.
struct PeriodReport {
    std::int64_t period = 0;
    std::int64_t span_semitones = 0;
    report::Fraction span_octaves;
    std::int64_t first_return_index = 0;
    std::int64_t first_return_absolute = 0;
};

PeriodReport period_report();

}  // namespace tss::series
