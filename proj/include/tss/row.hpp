#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tss/ring.hpp"

namespace tss::rows {

/// The tritone, half an octave. Transposition by it is the named special
/// case of transpose().
inline constexpr int kTritone = 6;

/// An ordered, non-empty sequence of pitch classes sharing one modulus.
/// Immutable after construction; inputs are canonically reduced.
class Row {
public:
    Row(ring::Modulus modulus, std::vector<std::int64_t> pitches);
    Row(ring::Modulus modulus, std::initializer_list<std::int64_t> pitches);

    const std::vector<int>& pitches() const { return pitches_; }
    ring::Modulus modulus() const { return modulus_; }
    std::size_t size() const { return pitches_.size(); }
    ring::Residue at(std::size_t position) const;

    friend bool operator==(const Row&, const Row&) = default;

private:
    ring::Modulus modulus_;
    std::vector<int> pitches_;
};

/// Element-wise addition of the interval k. Order is preserved; k must share
/// the row's modulus.
Row transpose(const Row& row, ring::Residue k);
/// Same, with k reduced into the row's modulus first.
Row transpose(const Row& row, std::int64_t k);

/// Element-wise negation. An involution.
Row invert(const Row& row);

/// Exact reversal: position s maps to size()-1-s. An involution.
Row retrograde(const Row& row);

/// invert(retrograde(row)); the two orders commute element-wise.
Row retrograde_inversion(const Row& row);

/// Same modulus, same length, same pitch at every position.
bool rows_equal(const Row& a, const Row& b);

}  // namespace tss::rows
