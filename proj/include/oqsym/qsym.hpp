#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oqsym/composition.hpp"

namespace oqsym {

// Coefficients are unbounded signed integers: products of generating
// functions of ~10-element posets already overflow 64 bits.
using Int = boost::multiprecision::cpp_int;

// Support iterates lex-descending, so the leading term is always first and
// serialization is deterministic.
struct CompositionLexDescending {
    bool operator()(const Composition& a, const Composition& b) const { return b < a; }
};

// An element of QSym in the monomial basis: a finitely supported map from
// compositions to nonzero integer coefficients. The zero element has empty
// support.
class QSymElement {
public:
    using TermMap = std::map<Composition, Int, CompositionLexDescending>;

    QSymElement() = default;

    static QSymElement one() { return monomial(Composition{}); }
    static QSymElement monomial(Composition alpha, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;  // zero or a multiple of the unit
    const TermMap& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    Int coefficient(const Composition& alpha) const;

    // Max weight over the support; 0 for constants and zero.
    std::uint64_t degree() const;

    // Adds c to the coefficient of alpha, erasing the entry if it cancels.
    void add_term(const Composition& alpha, const Int& c);

    QSymElement& operator+=(const QSymElement& other);
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const Int& scalar);

    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const Int& c) { return a *= c; }
    friend QSymElement operator*(const Int& c, QSymElement a) { return a *= c; }

    friend bool operator==(const QSymElement&, const QSymElement&) = default;

    // "M_12 + 2M_111" (lex-descending support, compact digit compositions);
    // falls back to the parenthesized form when a part exceeds 9. "0" when zero.
    std::string compact() const;

    // Parses the compact rendering, e.g. "M_232 + 2M_2311 - M_(1,10)".
    static Composition parse_support_token(std::string_view tok);
    static QSymElement parse_compact(std::string_view text);

    // {"terms": [[[1,2],1],[[1,1,1],2]]}, support lex-descending. Exact
    // round-trip; coefficients beyond 64 bits travel as decimal strings.
    std::string to_json() const;
    static QSymElement from_json(std::string_view text);

private:
    TermMap terms_;
};

// A pair of strictly order-preserving maps f:[l]->[n], g:[m]->[n] whose
// images cover [n]; the index set of the direct product formula. f and g
// hold the images in increasing order (1-based values).
struct OverlapPattern {
    std::vector<int> f;
    std::vector<int> g;
    int n = 0;

    bool valid() const;

    // wt_{a,b}(f,g): part k of the result collects the parts of a and b
    // placed at position k.
    Composition weight_of(const Composition& a, const Composition& b) const;
};

// All overlap patterns for lengths (l,m); n runs from max(l,m) to l+m.
std::vector<OverlapPattern> overlap_patterns(std::size_t l, std::size_t m);

// M_a * M_b expanded by direct enumeration of overlap patterns. The sum of
// the coefficients of the result equals the number of patterns.
QSymElement oshuffle_compositions_direct(const Composition& a, const Composition& b);

// Same product by the three-term recurrence
//   a (*) b = (a1)*(a' (*) b) + (b1)*(a (*) b') + (a1+b1)*(a' (*) b'),
// memoized per call. Retained permanently as a cross-check for the direct
// enumeration.
QSymElement oshuffle_compositions_rec(const Composition& a, const Composition& b);

// Bilinear extension of the overlapping shuffle; commutative, unit M_(). When
// cross_check is set every composition-level product is recomputed with the
// recurrence and a mismatch throws.
QSymElement mul_oshuffle(const QSymElement& p, const QSymElement& q, bool cross_check = false);

// Bilinear extension of concatenation; associative, noncommutative, unit M_().
QSymElement mul_concat(const QSymElement& p, const QSymElement& q);

// The involution reversing every support composition.
QSymElement rho(const QSymElement& p);

// Lex-greatest support composition and its coefficient. Throws on zero.
std::pair<Composition, Int> leading_term(const QSymElement& p);

// gcd of the coefficients is 1. Throws on zero.
bool is_primitive(const QSymElement& p);

enum class IrredCertificate { left, right, inconclusive };

// Certifies irreducibility in QSym when p factors as M_(1) * q (left) or
// q * M_(1) (right) with q primitive. `inconclusive` asserts nothing about
// reducibility. Throws on zero or constant input.
IrredCertificate irreducible_by_lemma(const QSymElement& p);

// Integer polynomial in `vars` commuting variables, truncated above degree
// `maxdeg`. Serves as the multiplication oracle: realizing M_alpha in
// finitely many variables is independent of the shuffle machinery.
class TruncatedPoly {
public:
    using Monomial = std::vector<std::uint32_t>;  // exponent per variable

    TruncatedPoly(int vars, int maxdeg);

    int vars() const { return vars_; }
    int maxdeg() const { return maxdeg_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c);

    TruncatedPoly& operator+=(const TruncatedPoly& other);
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

private:
    int vars_;
    int maxdeg_;
    std::map<Monomial, Int> terms_;
};

// Substitutes the defining monomial expansion of each M_alpha using the
// variables x_1..x_vars, dropping monomials of degree > maxdeg.
TruncatedPoly expand_truncated(const QSymElement& p, int vars, int maxdeg);

}  // namespace oqsym
