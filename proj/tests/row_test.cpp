#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "tss/ring.hpp"
#include "tss/row.hpp"

using namespace tss;
using ring::Modulus;
using ring::Residue;
using rows::Row;

namespace {

const Modulus z12{12};

Row random_row(std::mt19937& rng) {
    std::uniform_int_distribution<int> len_dist(1, 16);
    std::uniform_int_distribution<std::int64_t> pitch_dist(-30, 30);
    std::vector<std::int64_t> pitches(static_cast<std::size_t>(len_dist(rng)));
    for (auto& p : pitches) p = pitch_dist(rng);
    return Row(z12, std::move(pitches));
}

// Multiset of successive intervals, mod the row's modulus.
std::map<int, int> interval_multiset(const Row& r) {
    std::map<int, int> counts;
    const int n = r.modulus().value();
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        ++counts[((r.pitches()[i + 1] - r.pitches()[i]) % n + n) % n];
    return counts;
}

}  // namespace

TEST_CASE("rows keep one modulus and reject empties") {
    Row r(z12, {0, 13, -1});
    CHECK(r.pitches() == std::vector<int>{0, 1, 11});
    CHECK(r.modulus() == z12);
    CHECK(r.at(2) == Residue(11, z12));
    CHECK_THROWS_AS(Row(z12, std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("transpose") {
    Row r(z12, {0, 1, 3});
    CHECK(rows::transpose(r, 6).pitches() == std::vector<int>{6, 7, 9});
    CHECK(rows::transpose(r, 0) == r);
    CHECK_THROWS_AS(rows::transpose(r, Residue(1, Modulus{5})), std::invalid_argument);
}

TEST_CASE("transposed retrograde of the first six sounds continues the series") {
    // First 6 pitch classes of the basic form, from n(n+1)/2 mod 12.
    Row first_six(z12, {0, 1, 3, 6, 10, 3});
    Row continued = rows::transpose(rows::retrograde(first_six), rows::kTritone);
    CHECK(continued.pitches() == std::vector<int>{9, 4, 0, 9, 7, 6});
}

TEST_CASE("invert") {
    CHECK(rows::invert(Row(z12, {0, 1, 3})).pitches() == std::vector<int>{0, 11, 9});
    CHECK(rows::invert(Row(z12, {0})).pitches() == std::vector<int>{0});
    Row basic(z12, {0, 1, 3, 6, 10, 3, 9, 4, 0, 9, 7, 6});
    CHECK(rows::invert(basic).pitches() ==
          std::vector<int>{0, 11, 9, 6, 2, 9, 3, 8, 0, 3, 5, 6});
}

TEST_CASE("retrograde") {
    CHECK(rows::retrograde(Row(z12, {0, 1, 3})).pitches() == std::vector<int>{3, 1, 0});
    CHECK(rows::retrograde(Row(z12, {5})).pitches() == std::vector<int>{5});
    CHECK(rows::retrograde(Row(z12, {0, 1, 3, 6, 10, 3})).pitches() ==
          std::vector<int>{3, 10, 6, 3, 1, 0});
}

TEST_CASE("retrograde inversion is the commuting composite") {
    CHECK(rows::retrograde_inversion(Row(z12, {0, 1, 3})).pitches() ==
          std::vector<int>{9, 11, 0});
    CHECK(rows::retrograde_inversion(Row(z12, {0})).pitches() == std::vector<int>{0});
}

TEST_CASE("the basic row's tritone transposition is its exact retrograde") {
    // The coincidence the series continuation realizes: reversing the basic
    // row gives the same pitches as raising it a tritone. Reverse-then-negate
    // does not match it at any transposition level.
    Row basic(z12, {0, 1, 3, 6, 10, 3, 9, 4, 0, 9, 7, 6});
    Row up_tritone = rows::transpose(basic, rows::kTritone);
    CHECK(rows::retrograde(basic) == up_tritone);
    Row ri = rows::retrograde_inversion(basic);
    for (int level = 0; level < 12; ++level)
        CHECK_FALSE(rows::rows_equal(rows::transpose(ri, level), up_tritone));
}

TEST_CASE("rows_equal") {
    Row a(z12, {0, 1});
    Row b(z12, {0, 1});
    Row c(z12, {1, 0});
    CHECK(rows::rows_equal(a, b));
    CHECK_FALSE(rows::rows_equal(a, c));
    CHECK(rows::rows_equal(rows::transpose(a, 0), a));
    CHECK_FALSE(rows::rows_equal(Row(z12, {0}), Row(Modulus{5}, {0})));
    CHECK_FALSE(rows::rows_equal(Row(z12, {0}), Row(z12, {0, 0})));
}

TEST_CASE("transformation group laws over random rows") {
    std::mt19937 rng(0x5eed);
    for (int trial = 0; trial < 1200; ++trial) {
        Row r = random_row(rng);
        std::uniform_int_distribution<std::int64_t> k_dist(-20, 20);
        const std::int64_t a = k_dist(rng);
        const std::int64_t b = k_dist(rng);

        // involutions
        CHECK(rows::invert(rows::invert(r)) == r);
        CHECK(rows::retrograde(rows::retrograde(r)) == r);

        // transposition additivity
        CHECK(rows::transpose(rows::transpose(r, a), b) == rows::transpose(r, a + b));

        // inversion and retrograde commute
        CHECK(rows::invert(rows::retrograde(r)) == rows::retrograde(rows::invert(r)));
        CHECK(rows::retrograde_inversion(r) == rows::invert(rows::retrograde(r)));

        // every transformation preserves length and modulus
        for (const Row& t : {rows::transpose(r, a), rows::invert(r), rows::retrograde(r),
                             rows::retrograde_inversion(r)}) {
            CHECK(t.size() == r.size());
            CHECK(t.modulus() == r.modulus());
        }

        // transposition preserves the successive-interval multiset
        CHECK(interval_multiset(rows::transpose(r, a)) == interval_multiset(r));

        // retrograde reverses and negates the interval sequence
        const int n = r.modulus().value();
        std::vector<int> fwd, rev;
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            fwd.push_back(((r.pitches()[i + 1] - r.pitches()[i]) % n + n) % n);
            const Row rr = rows::retrograde(r);
            rev.push_back(((rr.pitches()[i + 1] - rr.pitches()[i]) % n + n) % n);
        }
        std::reverse(rev.begin(), rev.end());
        for (std::size_t i = 0; i < fwd.size(); ++i) CHECK((fwd[i] + rev[i]) % n == 0);
    }
}
