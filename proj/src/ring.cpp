#include "tss/ring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tss::ring {

namespace {

void require_same_modulus(Residue a, Residue b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("mixed moduli: " + std::to_string(a.modulus().value()) +
                                    " and " + std::to_string(b.modulus().value()));
}

}  // namespace

Modulus::Modulus(int value) : value_(value) {
    if (value < 2)
        throw std::invalid_argument("modulus must be at least 2, got " +
                                    std::to_string(value));
}

Residue::Residue(std::int64_t value, Modulus modulus) : value_(0), modulus_(modulus) {
    const std::int64_t m = modulus.value();
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<int>(r);
}

Residue add(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue(static_cast<std::int64_t>(a.value()) + b.value(), a.modulus());
}

Residue mul(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue(static_cast<std::int64_t>(a.value()) * b.value(), a.modulus());
}

Residue neg(Residue a) { return Residue(-static_cast<std::int64_t>(a.value()), a.modulus()); }

std::vector<Residue> zero_divisors(Modulus m) {
    std::vector<Residue> found;
    for (int a = 1; a < m.value(); ++a) {
        for (int b = 1; b < m.value(); ++b) {
            if (static_cast<std::int64_t>(a) * b % m.value() == 0) {
                found.emplace_back(a, m);
                break;
            }
        }
    }
    return found;
}

std::optional<Residue> zero_divisor_partner(Residue a) {
    const Modulus m = a.modulus();
    for (int b = 1; b < m.value(); ++b)
        if (static_cast<std::int64_t>(a.value()) * b % m.value() == 0) return Residue(b, m);
    return std::nullopt;
}

bool is_field(Modulus m) { return zero_divisors(m).empty(); }

Orbit additive_orbit(Residue g) {
    Orbit orbit{g, {}};
    Residue current(0, g.modulus());
    do {
        orbit.elements.push_back(current);
        current = add(current, g);
    } while (current.value() != 0);
    return orbit;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("lcm needs positive integers, got " + std::to_string(a) +
                                    " and " + std::to_string(b));
    return std::lcm(a, b);
}

}  // namespace tss::ring
