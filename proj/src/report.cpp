#include "tss/report.hpp"

#include <numeric>
#include <stdexcept>

namespace tss::report {

const char* identity_name(Identity id) {
    switch (id) {
        case Identity::RecurrenceAgreement: return "recurrence";
        case Identity::FullRowShift: return "f3";
        case Identity::PrefixReversal: return "f4";
        case Identity::HalfRowShift: return "f5";
        case Identity::ReversalShiftLink: return "combined";
        case Identity::RetrogradeCoincidence: return "retrograde";
        case Identity::QuartShift: return "f9";
    }
    throw std::invalid_argument("unknown identity");
}

Fraction make_fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("fraction denominator must be positive");
    if (num < 0) throw std::invalid_argument("fraction numerator must be non-negative");
    const std::int64_t g = num == 0 ? den : std::gcd(num, den);
    return Fraction{num / g, den / g};
}

std::string to_string(const Fraction& f) {
    if (f.den == 1) return std::to_string(f.num);
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

}  // namespace tss::report
