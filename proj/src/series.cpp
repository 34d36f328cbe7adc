#include "tss/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tss::series {

namespace {

const ring::Modulus kChromatic = ring::Modulus::chromatic();

void require_range(std::int64_t lo, std::int64_t hi, std::int64_t max_hi,
                   const char* domain) {
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("range must satisfy 0 <= lo <= hi, got " +
                                    std::to_string(lo) + ".." + std::to_string(hi));
    if (hi > max_hi)
        throw std::invalid_argument(std::string(domain) + " is limited to 0.." +
                                    std::to_string(max_hi) + ", got hi=" +
                                    std::to_string(hi));
}

report::IdentityReport base_report(report::Identity id, std::int64_t lo, std::int64_t hi) {
    report::IdentityReport r;
    r.id = id;
    r.subject = "prime";
    r.lo = lo;
    r.hi = hi;
    return r;
}

void compare(report::IdentityReport& r, std::int64_t n, ring::Residue lhs,
             ring::Residue rhs) {
    if (lhs != rhs) r.counterexamples.push_back({n, lhs.value(), rhs.value()});
}

report::IdentityReport verify_retrograde_coincidence(std::int64_t lo, std::int64_t hi) {
    auto r = base_report(report::Identity::RetrogradeCoincidence, lo, hi);
    // Window under test: sounds 12..23 against the reversed basic row,
    // position by position, at a transposition level found by search.
    std::vector<int> window;
    std::vector<int> reversed;
    for (std::int64_t n = 0; n < 12; ++n) {
        window.push_back(closed_form(n + 12, Form::Prime).value());
        reversed.push_back(closed_form(11 - n, Form::Prime).value());
    }
    auto matches_at = [&](const std::vector<int>& candidate, int level) {
        for (std::int64_t n = lo; n <= hi; ++n)
            if (window[static_cast<std::size_t>(n)] !=
                (candidate[static_cast<std::size_t>(n)] + level) % 12)
                return false;
        return true;
    };
    std::optional<int> level;
    for (int t = 0; t < 12 && !level; ++t)
        if (matches_at(reversed, t)) level = t;
    r.holds = level.has_value();
    r.transposition_level = level;
    if (!r.holds)
        for (std::int64_t n = lo; n <= hi; ++n)
            compare(r, n, ring::Residue(window[static_cast<std::size_t>(n)], kChromatic),
                    ring::Residue(reversed[static_cast<std::size_t>(n)], kChromatic));
    std::vector<int> negated_reversed;
    for (int p : reversed) negated_reversed.push_back((12 - p) % 12);
    bool negated_matches = false;
    for (int t = 0; t < 12 && !negated_matches; ++t)
        negated_matches = matches_at(negated_reversed, t);
    r.detail = negated_matches
                   ? "the negated reversed row also matches at some level"
                   : "the reversed row matches as-is; negating it first matches at no level";
    return r;
}

}  // namespace

const char* form_name(Form form) { return form == Form::Prime ? "prime" : "inversion"; }

std::optional<Form> form_from_name(const std::string& name) {
    if (name == "prime") return Form::Prime;
    if (name == "inversion") return Form::Inversion;
    return std::nullopt;
}

std::int64_t absolute_offset(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("sound index must be non-negative");
    return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
}

ring::Residue closed_form(std::int64_t n, Form form) {
    const ring::Residue prime(absolute_offset(n), kChromatic);
    return form == Form::Prime ? prime : ring::neg(prime);
}

Series by_recurrence(int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    std::vector<std::int64_t> absolute{0};
    std::vector<std::int64_t> pitches{0};
    absolute.reserve(static_cast<std::size_t>(count));
    pitches.reserve(static_cast<std::size_t>(count));
    ring::Residue pc(0, kChromatic);
    for (int n = 1; n < count; ++n) {
        pc = ring::add(pc, ring::Residue(n, kChromatic));
        absolute.push_back(absolute.back() + n);
        pitches.push_back(pc.value());
    }
    return Series{Form::Prime, std::move(absolute), rows::Row(kChromatic, pitches)};
}

Series generate(Form form, int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    std::vector<std::int64_t> absolute;
    std::vector<std::int64_t> pitches;
    absolute.reserve(static_cast<std::size_t>(count));
    pitches.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        absolute.push_back(absolute_offset(n));
        pitches.push_back(closed_form(n, form).value());
    }
    return Series{form, std::move(absolute), rows::Row(kChromatic, pitches)};
}

std::int64_t pitch_class_period(Form form, std::int64_t search_limit) {
    if (search_limit < 48)
        throw std::invalid_argument("period search needs a limit of at least 48");
    for (std::int64_t p = 1; p <= search_limit / 2; ++p) {
        bool periodic = true;
        for (std::int64_t n = 0; n <= search_limit && periodic; ++n)
            periodic = closed_form(n + p, form) == closed_form(n, form);
        if (periodic) return p;
    }
    throw std::logic_error("no period found below half the search limit");
}

report::IdentityReport verify_identity(report::Identity id, std::int64_t lo,
                                       std::int64_t hi) {
    using report::Identity;
    switch (id) {
        case Identity::RecurrenceAgreement: {
            require_range(lo, hi, 1'000'000, "recurrence agreement");
            auto r = base_report(id, lo, hi);
            const Series s = by_recurrence(static_cast<int>(hi) + 1);
            for (std::int64_t n = lo; n <= hi; ++n)
                compare(r, n,
                        ring::Residue(s.pitch_classes.pitches()[static_cast<std::size_t>(n)],
                                      kChromatic),
                        closed_form(n, Form::Prime));
            r.holds = r.counterexamples.empty();
            return r;
        }
        case Identity::FullRowShift: {
            require_range(lo, hi, 1'000'000'000, "full-row shift");
            auto r = base_report(id, lo, hi);
            const ring::Residue six(6, kChromatic);
            for (std::int64_t n = lo; n <= hi; ++n)
                compare(r, n, closed_form(n + 12, Form::Prime),
                        ring::add(closed_form(n, Form::Prime), six));
            r.holds = r.counterexamples.empty();
            return r;
        }
        case Identity::PrefixReversal: {
            require_range(lo, hi, 5, "the 6-sound prefix reversal");
            auto r = base_report(id, lo, hi);
            for (std::int64_t n = lo; n <= hi; ++n)
                compare(r, n, closed_form(5 - n, Form::Prime),
                        ring::add(closed_form(n, Form::Prime),
                                  ring::Residue(6 * n + 3, kChromatic)));
            r.holds = r.counterexamples.empty();
            return r;
        }
        case Identity::HalfRowShift: {
            require_range(lo, hi, 1'000'000'000, "half-row shift");
            auto r = base_report(id, lo, hi);
            for (std::int64_t n = lo; n <= hi; ++n)
                compare(r, n, closed_form(n + 6, Form::Prime),
                        ring::add(closed_form(n, Form::Prime),
                                  ring::Residue(6 * n + 9, kChromatic)));
            r.holds = r.counterexamples.empty();
            return r;
        }
        case Identity::ReversalShiftLink: {
            require_range(lo, hi, 5, "the reversal-shift link");
            auto r = base_report(id, lo, hi);
            const ring::Residue six(6, kChromatic);
            for (std::int64_t n = lo; n <= hi; ++n)
                compare(r, n, closed_form(n + 6, Form::Prime),
                        ring::add(closed_form(5 - n, Form::Prime), six));
            r.holds = r.counterexamples.empty();
            return r;
        }
        case Identity::RetrogradeCoincidence:
            require_range(lo, hi, 11, "the retrograde coincidence window");
            return verify_retrograde_coincidence(lo, hi);
        case Identity::QuartShift:
            throw std::invalid_argument(
                "the quart shift applies to modes; use the modes verifier");
    }
    throw std::invalid_argument("unknown identity");
}

CoverageReport coverage(Form form) {
    CoverageReport report;
    report.form = form;
    for (int n = 0; n < 24; ++n) {
        const int m = closed_form(n, form).value();
        report.reachable.insert(m);
        report.witnesses.emplace(m, n);
    }
    for (int m = 0; m < 12; ++m)
        if (!report.reachable.contains(m)) report.missing.insert(m);
    return report;
}

std::optional<int> solvable(ring::Residue m, Form form) {
    if (m.modulus() != kChromatic)
        throw std::invalid_argument("solvability is asked within the chromatic ring");
    for (int n = 0; n < 24; ++n)
        if (closed_form(n, form) == m) return n;
    return std::nullopt;
}

ReiterationReport reiterations() {
    const auto pitches = by_recurrence(12).pitch_classes.pitches();
    ReiterationReport report;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (pitches[static_cast<std::size_t>(i)] == pitches[static_cast<std::size_t>(j)])
                report.pairs.emplace_back(i, j);
    std::set<int> distinct(pitches.begin(), pitches.end());
    report.distinct_count = static_cast<int>(distinct.size());
    for (int m : distinct)
        if (std::count(pitches.begin(), pitches.end(), m) == 1)
            report.non_reiterated.insert(m);
    return report;
}

PeriodReport period_report() {
    PeriodReport report;
    report.period = pitch_class_period(Form::Prime, 1000);
    report.span_semitones = absolute_offset(report.period - 1);
    report.span_octaves = report::make_fraction(report.span_semitones, 12);
    std::int64_t n = 1;
    while (closed_form(n, Form::Prime).value() != 0) ++n;
    report.first_return_index = n;
    report.first_return_absolute = absolute_offset(n);
    return report;
}

}  // namespace tss::series
