#include "tss/modes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tss::modes {

namespace {

const ring::Modulus kChromatic = ring::Modulus::chromatic();
const ring::Modulus kQuart = ring::Modulus::quart();

}  // namespace

Pattern::Pattern(int first, int second, int third) : steps_{first, second, third} {
    for (int s : steps_)
        if (s < 1)
            throw std::invalid_argument("every step must be at least 1, got " +
                                        std::to_string(s));
    if (first + second + third != 5)
        throw std::invalid_argument("steps must sum to 5, got " +
                                    std::to_string(first + second + third));
}

const char* kind_name(Kind kind) {
    switch (kind) {
        case Kind::Large: return "large";
        case Kind::Small: return "small";
        case Kind::Reduced: return "reduced";
        case Kind::Synagogue113: return "sg-113";
        case Kind::Synagogue131: return "sg-131";
        case Kind::Synagogue311: return "sg-311";
    }
    throw std::invalid_argument("unknown mode kind");
}

std::optional<Kind> kind_from_name(const std::string& name) {
    for (Kind k : kAllKinds)
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

Pattern pattern_of(Kind kind) {
    switch (kind) {
        case Kind::Large: return Pattern(2, 2, 1);
        case Kind::Small: return Pattern(2, 1, 2);
        case Kind::Reduced: return Pattern(1, 2, 2);
        case Kind::Synagogue113: return Pattern(1, 1, 3);
        case Kind::Synagogue131: return Pattern(1, 3, 1);
        case Kind::Synagogue311: return Pattern(3, 1, 1);
    }
    throw std::invalid_argument("unknown mode kind");
}

ModeSeries generate(Kind kind, int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    const Pattern pattern = pattern_of(kind);
    std::vector<std::int64_t> absolute{0};
    std::vector<std::int64_t> pitches{0};
    absolute.reserve(static_cast<std::size_t>(count));
    pitches.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n < count; ++n) {
        absolute.push_back(absolute.back() + pattern.step((n - 1) % 3));
        pitches.push_back(ring::Residue(absolute.back(), kChromatic).value());
    }
    return ModeSeries{kind, std::move(absolute), rows::Row(kChromatic, pitches)};
}

report::IdentityReport verify_quart_shift(Kind kind, std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("range must satisfy 0 <= lo <= hi, got " +
                                    std::to_string(lo) + ".." + std::to_string(hi));
    if (hi > 1'000'000)
        throw std::invalid_argument("quart-shift range is limited to 0..1000000");
    report::IdentityReport r;
    r.id = report::Identity::QuartShift;
    r.subject = kind_name(kind);
    r.lo = lo;
    r.hi = hi;
    const ModeSeries m = generate(kind, static_cast<int>(hi) + 4);
    const auto& pc = m.pitch_classes.pitches();
    const ring::Residue five(5, kChromatic);
    for (std::int64_t n = lo; n <= hi; ++n) {
        const ring::Residue lhs(pc[static_cast<std::size_t>(n + 3)], kChromatic);
        const ring::Residue rhs =
            ring::add(ring::Residue(pc[static_cast<std::size_t>(n)], kChromatic), five);
        if (lhs != rhs) r.counterexamples.push_back({n, lhs.value(), rhs.value()});
    }
    r.holds = r.counterexamples.empty();
    return r;
}

ModePeriod mode_period(Kind kind) {
    const int window = 150;
    const ModeSeries m = generate(kind, window);
    const auto& pc = m.pitch_classes.pitches();
    for (std::int64_t p = 1; p <= 108; ++p) {
        bool periodic = true;
        for (std::size_t n = 0; n + static_cast<std::size_t>(p) < pc.size() && periodic; ++n)
            periodic = pc[n + static_cast<std::size_t>(p)] == pc[n];
        if (!periodic) continue;
        const std::int64_t semitones = m.absolute[static_cast<std::size_t>(p)];
        if (semitones != ring::lcm(5, 12))
            throw std::logic_error("mode period span disagrees with lcm(5, 12)");
        return ModePeriod{p, semitones, report::make_fraction(semitones, 12)};
    }
    throw std::logic_error("no mode period found in a three-period window");
}

Projection project(Kind kind) {
    const Pattern p = pattern_of(kind);
    return Projection{kind,
                      {ring::Residue(0, kQuart), ring::Residue(p.step(0), kQuart),
                       ring::Residue(p.step(0) + p.step(1), kQuart)}};
}

std::vector<Pattern> enumerate_patterns() {
    std::vector<Pattern> found;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c)
                if (a + b + c == 5) found.emplace_back(a, b, c);
    std::sort(found.begin(), found.end());
    return found;
}

std::optional<ring::Residue> cyclic_generator(const Projection& projection) {
    for (int g = 0; g < kQuart.value(); ++g) {
        const ring::Orbit orbit = ring::additive_orbit(ring::Residue(g, kQuart));
        if (orbit.elements.size() < 3) continue;
        if (orbit.elements[0] == projection.triple[0] &&
            orbit.elements[1] == projection.triple[1] &&
            orbit.elements[2] == projection.triple[2])
            return orbit.generator;
    }
    return std::nullopt;
}

}  // namespace tss::modes
