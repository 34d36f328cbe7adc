#include "tss/row.hpp"

#include <algorithm>
#include <stdexcept>

namespace tss::rows {

Row::Row(ring::Modulus modulus, std::vector<std::int64_t> pitches) : modulus_(modulus) {
    if (pitches.empty()) throw std::invalid_argument("a row needs at least one pitch");
    pitches_.reserve(pitches.size());
    for (std::int64_t p : pitches) pitches_.push_back(ring::Residue(p, modulus).value());
}

Row::Row(ring::Modulus modulus, std::initializer_list<std::int64_t> pitches)
    : Row(modulus, std::vector<std::int64_t>(pitches)) {}

ring::Residue Row::at(std::size_t position) const {
    if (position >= pitches_.size()) throw std::out_of_range("row position out of range");
    return ring::Residue(pitches_[position], modulus_);
}

namespace {

Row map_pitches(const Row& row, ring::Residue (*f)(ring::Residue)) {
    std::vector<std::int64_t> out;
    out.reserve(row.size());
    for (int p : row.pitches()) out.push_back(f(ring::Residue(p, row.modulus())).value());
    return Row(row.modulus(), std::move(out));
}

}  // namespace

Row transpose(const Row& row, ring::Residue k) {
    if (k.modulus() != row.modulus())
        throw std::invalid_argument("transposition interval has a different modulus");
    std::vector<std::int64_t> out;
    out.reserve(row.size());
    for (int p : row.pitches())
        out.push_back(ring::add(ring::Residue(p, row.modulus()), k).value());
    return Row(row.modulus(), std::move(out));
}

Row transpose(const Row& row, std::int64_t k) {
    return transpose(row, ring::Residue(k, row.modulus()));
}

Row invert(const Row& row) { return map_pitches(row, &ring::neg); }

Row retrograde(const Row& row) {
    std::vector<std::int64_t> out(row.pitches().rbegin(), row.pitches().rend());
    return Row(row.modulus(), std::move(out));
}

Row retrograde_inversion(const Row& row) { return invert(retrograde(row)); }

bool rows_equal(const Row& a, const Row& b) { return a == b; }

}  // namespace tss::rows
