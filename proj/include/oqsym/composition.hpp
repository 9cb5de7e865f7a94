#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace oqsym {

// A composition: finite tuple of positive integers. The empty composition
// is a legal value, distinct from every non-empty one, and acts as the unit
// for both concatenation and the overlapping shuffle.
//
// Immutable value type with structural equality and a stable hash, so it can
// key sparse coefficient maps.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<std::uint32_t> parts);
    explicit Composition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t weight() const;

    std::uint32_t operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;

    // Lexicographic order: the empty composition is least, the first
    // differing part decides, and a proper prefix precedes the longer tuple.
    std::strong_ordering operator<=>(const Composition& other) const;

    // "(1,2,3)"; "()" for the empty composition.
    std::string str() const;

    // Accepts the parenthesized form and, when every part is a single
    // digit, the compact digit string ("232" = (2,3,2)).
    static Composition parse(std::string_view text);

private:
    std::vector<std::uint32_t> parts_;
};

// (a1,...,al,b1,...,bm); associative, unit is the empty composition.
Composition concat(const Composition& a, const Composition& b);

// Coordinatewise sum; the shorter tuple is padded with the surviving parts
// of the longer one. Commutative and associative.
Composition dotplus(const Composition& a, const Composition& b);

// Parts in reverse order; an involution.
Composition reversed(const Composition& a);

struct CompositionHash {
    std::size_t operator()(const Composition& c) const;
};

}  // namespace oqsym
