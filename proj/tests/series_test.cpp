#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tss/report.hpp"
#include "tss/ring.hpp"
#include "tss/series.hpp"

using namespace tss;
using report::Identity;
using series::Form;

namespace {

// Test-local oracle for the pitch class of sound n, on a route the library
// does not use: reduce the index into one period before squaring, so even
// huge indices stay tiny.
int oracle_pc(std::int64_t n, Form form) {
    const std::int64_t r = n % 24;
    const int prime = static_cast<int>((r * (r + 1) / 2) % 12);
    return form == Form::Prime ? prime : (12 - prime) % 12;
}

const std::vector<int> kBasicTwelve = {0, 1, 3, 6, 10, 3, 9, 4, 0, 9, 7, 6};

}  // namespace

TEST_CASE("recurrence reproduces the basic twelve-sound form") {
    auto s = series::by_recurrence(12);
    CHECK(s.pitch_classes.pitches() == kBasicTwelve);
    CHECK(s.absolute ==
          std::vector<std::int64_t>{0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66});
    CHECK(s.absolute.back() == 66);
    for (int n = 0; n < 12; ++n) CHECK(s.pitch_classes.pitches()[n] == oracle_pc(n, Form::Prime));
}

TEST_CASE("recurrence edge cases") {
    CHECK(series::by_recurrence(1).pitch_classes.pitches() == std::vector<int>{0});
    CHECK(series::by_recurrence(3).absolute == std::vector<std::int64_t>{0, 1, 3});
    CHECK_THROWS_AS(series::by_recurrence(0), std::invalid_argument);
    CHECK_THROWS_AS(series::by_recurrence(-4), std::invalid_argument);
}

TEST_CASE("closed form") {
    CHECK(series::closed_form(11, Form::Prime).value() == 6);
    CHECK(series::closed_form(0, Form::Prime).value() == 0);
    CHECK(series::closed_form(4, Form::Inversion).value() == 2);
    CHECK_THROWS_AS(series::closed_form(-1, Form::Prime), std::invalid_argument);
}

TEST_CASE("closed form is overflow-safe far past a million") {
    for (std::int64_t n : {1000000LL, 1000001LL, 9999999LL, 123456789LL})
        for (Form f : {Form::Prime, Form::Inversion})
            CHECK(series::closed_form(n, f).value() == oracle_pc(n, f));
}

TEST_CASE("recurrence and closed form agree below ten thousand") {
    auto s = series::by_recurrence(10000);
    for (int n = 0; n < 10000; ++n)
        CHECK(s.pitch_classes.pitches()[static_cast<std::size_t>(n)] ==
              series::closed_form(n, Form::Prime).value());
}

TEST_CASE("absolute offsets") {
    CHECK(series::absolute_offset(11) == 66);
    CHECK(series::absolute_offset(0) == 0);
    CHECK(series::absolute_offset(23) == 276);
    CHECK_THROWS_AS(series::absolute_offset(-1), std::invalid_argument);
}

TEST_CASE("successive absolute differences realize every interval in order") {
    auto s = series::generate(Form::Prime, 2000);
    for (std::size_t n = 0; n + 1 < s.absolute.size(); ++n)
        CHECK(s.absolute[n + 1] - s.absolute[n] == static_cast<std::int64_t>(n) + 1);
}

TEST_CASE("generated inversion negates the prime pitch classes over shared offsets") {
    auto prime = series::generate(Form::Prime, 48);
    auto inv = series::generate(Form::Inversion, 48);
    CHECK(prime.absolute == inv.absolute);
    for (int n = 0; n < 48; ++n) {
        CHECK(inv.pitch_classes.pitches()[static_cast<std::size_t>(n)] ==
              (12 - prime.pitch_classes.pitches()[static_cast<std::size_t>(n)]) % 12);
        CHECK(inv.pitch_classes.pitches()[static_cast<std::size_t>(n)] ==
              oracle_pc(n, Form::Inversion));
    }
    CHECK(series::generate(Form::Inversion, 2).pitch_classes.pitches() ==
          std::vector<int>{0, 11});
}

TEST_CASE("pitch class period is discovered as 24 for both forms") {
    CHECK(series::pitch_class_period(Form::Prime, 1000) == 24);
    CHECK(series::pitch_class_period(Form::Inversion, 1000) == 24);
    CHECK(series::pitch_class_period(Form::Prime, 48) == 24);
    CHECK_THROWS_AS(series::pitch_class_period(Form::Prime, 47), std::invalid_argument);
}

TEST_CASE("no smaller period exists") {
    for (std::int64_t p = 1; p < 24; ++p) {
        bool mismatch = false;
        for (std::int64_t n = 0; n <= 48 && !mismatch; ++n)
            mismatch = series::closed_form(n + p, Form::Prime) !=
                       series::closed_form(n, Form::Prime);
        CHECK(mismatch);
    }
    for (std::int64_t n = 0; n <= 1000; ++n)
        CHECK(series::closed_form(n + 24, Form::Prime) == series::closed_form(n, Form::Prime));
}

TEST_CASE("identity: full-row shift") {
    auto r = series::verify_identity(Identity::FullRowShift, 0, 1000);
    CHECK(r.holds);
    CHECK(r.counterexamples.empty());
    CHECK(r.lo == 0);
    CHECK(r.hi == 1000);
}

TEST_CASE("identity: prefix reversal") {
    auto r = series::verify_identity(Identity::PrefixReversal, 0, 5);
    CHECK(r.holds);
    CHECK_THROWS_AS(series::verify_identity(Identity::PrefixReversal, 0, 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(series::verify_identity(Identity::PrefixReversal, -1, 5),
                    std::invalid_argument);
}

TEST_CASE("identity: half-row shift") {
    CHECK(series::verify_identity(Identity::HalfRowShift, 0, 1000).holds);
}

TEST_CASE("identity: reversal-shift link") {
    CHECK(series::verify_identity(Identity::ReversalShiftLink, 0, 5).holds);
    CHECK_THROWS_AS(series::verify_identity(Identity::ReversalShiftLink, 0, 6),
                    std::invalid_argument);
}

TEST_CASE("identity: recurrence agreement") {
    auto r = series::verify_identity(Identity::RecurrenceAgreement, 0, 9999);
    CHECK(r.holds);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("identity: retrograde coincidence") {
    auto r = series::verify_identity(Identity::RetrogradeCoincidence, 0, 11);
    CHECK(r.holds);
    CHECK(r.counterexamples.empty());
    REQUIRE(r.transposition_level.has_value());
    CHECK(*r.transposition_level == 0);
    CHECK_FALSE(r.detail.empty());
    CHECK_THROWS_AS(series::verify_identity(Identity::RetrogradeCoincidence, 0, 12),
                    std::invalid_argument);
}

TEST_CASE("quart shift belongs to the modes module") {
    CHECK_THROWS_AS(series::verify_identity(Identity::QuartShift, 0, 10),
                    std::invalid_argument);
}

TEST_CASE("every identity report couples holds to its counterexample list") {
    using report::IdentityReport;
    for (const IdentityReport& r : {
             series::verify_identity(Identity::RecurrenceAgreement, 0, 100),
             series::verify_identity(Identity::FullRowShift, 5, 50),
             series::verify_identity(Identity::PrefixReversal, 1, 4),
             series::verify_identity(Identity::HalfRowShift, 0, 200),
             series::verify_identity(Identity::ReversalShiftLink, 0, 5),
             series::verify_identity(Identity::RetrogradeCoincidence, 0, 11),
         })
        CHECK(r.holds == r.counterexamples.empty());
}

TEST_CASE("coverage of the prime form") {
    auto c = series::coverage(Form::Prime);
    CHECK(c.reachable == std::set<int>{0, 1, 3, 4, 6, 7, 9, 10});
    CHECK(c.missing == std::set<int>{2, 5, 8, 11});
    CHECK(c.witnesses ==
          std::map<int, int>{{0, 0}, {1, 1}, {3, 2}, {4, 7}, {6, 3}, {7, 10}, {9, 6}, {10, 4}});
}

TEST_CASE("coverage of the inversion form") {
    auto c = series::coverage(Form::Inversion);
    CHECK(c.reachable == std::set<int>{0, 2, 3, 5, 6, 8, 9, 11});
    CHECK(c.missing == std::set<int>{1, 4, 7, 10});
}

TEST_CASE("the two coverages are negations and jointly fill the octave") {
    auto p = series::coverage(Form::Prime);
    auto i = series::coverage(Form::Inversion);
    std::set<int> negated;
    for (int m : p.reachable) negated.insert((12 - m) % 12);
    CHECK(i.reachable == negated);
    std::set<int> all;
    all.insert(p.reachable.begin(), p.reachable.end());
    all.insert(i.reachable.begin(), i.reachable.end());
    CHECK(all == std::set<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    // reachable and missing partition the octave, for both forms
    for (const auto& c : {p, i}) {
        CHECK(c.reachable.size() + c.missing.size() == 12);
        for (int m : c.reachable) CHECK_FALSE(c.missing.contains(m));
        for (const auto& [m, n] : c.witnesses) {
            CHECK(c.reachable.contains(m));
            CHECK(series::closed_form(n, c.form).value() == m);
        }
    }
}

TEST_CASE("solvable") {
    const ring::Modulus z12 = ring::Modulus::chromatic();
    CHECK(series::solvable(ring::Residue(10, z12), Form::Prime) == 4);
    CHECK_FALSE(series::solvable(ring::Residue(2, z12), Form::Prime).has_value());
    CHECK(series::solvable(ring::Residue(0, z12), Form::Prime) == 0);
    CHECK(series::solvable(ring::Residue(2, z12), Form::Inversion) == 4);
}

TEST_CASE("parity form of the solvability condition") {
    for (std::int64_t n = 0; n <= 1000; ++n) {
        const std::int64_t m = series::closed_form(n, Form::Prime).value();
        CHECK((n * (n + 1) - 2 * m) % 24 == 0);
    }
}

TEST_CASE("reiterations in the basic form") {
    auto r = series::reiterations();
    CHECK(r.pairs == std::vector<std::pair<int, int>>{{0, 8}, {2, 5}, {3, 11}, {6, 9}});
    CHECK(r.pairs.size() == 4);
    CHECK(r.distinct_count == 8);
    CHECK(r.non_reiterated == std::set<int>{1, 4, 7, 10});
}

TEST_CASE("duplicate positions are characterized by the zero-divisor product") {
    auto r = series::reiterations();
    std::set<std::pair<int, int>> reported(r.pairs.begin(), r.pairs.end());
    for (int m = 0; m < 12; ++m)
        for (int n = m + 1; n < 12; ++n) {
            const bool divisible = ((n - m) * (n + m + 1)) % 24 == 0;
            const bool equal_pc = series::closed_form(m, Form::Prime) ==
                                  series::closed_form(n, Form::Prime);
            CHECK(divisible == equal_pc);
            CHECK(reported.contains({m, n}) == divisible);
        }
}

TEST_CASE("period report carries the computed span and first return") {
    auto p = series::period_report();
    CHECK(p.period == 24);
    CHECK(p.span_semitones == 276);
    CHECK(p.span_octaves == report::make_fraction(23, 1));
    CHECK(p.first_return_index == 8);
    CHECK(p.first_return_absolute == 36);
}

TEST_CASE("form names round-trip") {
    CHECK(series::form_name(Form::Prime) == std::string("prime"));
    CHECK(series::form_name(Form::Inversion) == std::string("inversion"));
    CHECK(series::form_from_name("prime") == Form::Prime);
    CHECK(series::form_from_name("inversion") == Form::Inversion);
    CHECK_FALSE(series::form_from_name("retrograde").has_value());
}
