#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tss/report.hpp"
#include "tss/ring.hpp"
#include "tss/row.hpp"

namespace tss::modes {

/// One quart cell: three positive semitone steps summing to exactly 5.
class Pattern {
public:
    Pattern(int first, int second, int third);

    const std::array<int, 3>& steps() const { return steps_; }
    int step(int i) const { return steps_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::array<int, 3> steps_;
};

/// The six quart modes: the custom-mode family (seconds only) and the
/// synagogue family (one step of 3).
enum class Kind {
    Large,         // 2+2+1
    Small,         // 2+1+2
    Reduced,       // 1+2+2
    Synagogue113,  // 1+1+3
    Synagogue131,  // 1+3+1
    Synagogue311,  // 3+1+1
};

inline constexpr std::array<Kind, 6> kAllKinds = {
    Kind::Large,        Kind::Small,        Kind::Reduced,
    Kind::Synagogue113, Kind::Synagogue131, Kind::Synagogue311,
};

const char* kind_name(Kind kind);  // "large", "small", ..., "sg-311"
std::optional<Kind> kind_from_name(const std::string& name);
Pattern pattern_of(Kind kind);

/// A generated prefix of a continued quart mode, starting at absolute 0
/// (transposed starts go through rows::transpose instead).
struct ModeSeries {
    Kind kind;
    std::vector<std::int64_t> absolute;
    rows::Row pitch_classes;  // in Z/12Z
};

/// Cumulative sums of the cyclically repeated pattern, reduced mod 12 for
/// the pitch classes. Every third sound lands on the quart backbone:
/// absolute[3k] = 5k.
ModeSeries generate(Kind kind, int count);

/// Exhaustively check pc(n+3) = pc(n) + 5 mod 12 over [lo, hi].
report::IdentityReport verify_quart_shift(Kind kind, std::int64_t lo, std::int64_t hi);

/// The smallest window after which a continued mode's pitch-class sequence
/// repeats: the sound count, the semitone span, and the span in octaves.
/// The counts are exclusive of the returning sound itself.
struct ModePeriod {
    std::int64_t sounds = 0;
    std::int64_t semitones = 0;
    report::Fraction octaves;
};

/// Discovered by brute force over at least three candidate periods, then
/// cross-checked against lcm(5,12).
ModePeriod mode_period(Kind kind);

/// The mode's quart cell seen inside Z/5Z: cumulative step sums mod 5.
struct Projection {
    Kind kind;
    std::array<ring::Residue, 3> triple;
};

Projection project(Kind kind);

/// Every ordered triple of positive steps summing to 5, by brute force.
/// Exactly the six named patterns come back, sorted.
std::vector<Pattern> enumerate_patterns();

/// The g in Z/5Z with triple = (0, g, 2g), i.e. the triple is the length-3
/// prefix of additive_orbit(g), if such a generator exists.
std::optional<ring::Residue> cyclic_generator(const Projection& projection);

}  // namespace tss::modes
