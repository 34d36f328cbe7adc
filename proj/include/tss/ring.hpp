#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace tss::ring {

/// Modulus of a residue class ring Z/nZ. Moduli 0 and 1 are rejected at
/// construction.
class Modulus {
public:
    explicit Modulus(int value);

    int value() const { return value_; }

    /// Z/12Z, the pitch classes of one octave.
    static Modulus chromatic() { return Modulus{12}; }
    /// Z/5Z, the semitone positions inside one quart cell.
    static Modulus quart() { return Modulus{5}; }

    friend bool operator==(Modulus, Modulus) = default;
    friend auto operator<=>(Modulus, Modulus) = default;

private:
    int value_;
};

/// An element of Z/nZ, always stored as its canonical representative in
/// [0, n). Any integer, negative or out of range, is reduced on entry; no
/// operation ever observes a non-canonical value.
class Residue {
public:
    Residue(std::int64_t value, Modulus modulus);

    int value() const { return value_; }
    Modulus modulus() const { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;

private:
    int value_;
    Modulus modulus_;
};

/// Sum in the ring. Mixed moduli are an error, never coerced.
Residue add(Residue a, Residue b);
/// Product in the ring. Mixed moduli are an error.
Residue mul(Residue a, Residue b);
/// Additive inverse, n -> (modulus - n) mod modulus.
Residue neg(Residue a);

/// The nonzero elements a for which some nonzero b has a*b = 0, found by
/// exhaustive scan over all nonzero pairs. Sorted ascending. Empty exactly
/// when the modulus is prime.
std::vector<Residue> zero_divisors(Modulus m);

/// Smallest nonzero b with a*b = 0, if a is zero or a zero divisor.
std::optional<Residue> zero_divisor_partner(Residue a);

/// True iff Z/mZ has no zero divisors.
bool is_field(Modulus m);

/// The cyclic subgroup generated by repeated addition of one element.
struct Orbit {
    Residue generator;
    std::vector<Residue> elements;  // 0, g, 2g, ... up to the first repeat
};

/// Walk 0, g, 2g, ... and stop just before the first repeat. The result has
/// modulus / gcd(generator, modulus) elements.
Orbit additive_orbit(Residue g);

/// Least common multiple of two positive integers. Zero or negative inputs
/// are an error.
std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace tss::ring
