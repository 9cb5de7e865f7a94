#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oqsym {

using ElementMask = std::uint32_t;

// A finite strict partial order on {0,...,n-1}. The full relation is stored
// as bitset rows (transitive closure) and the cover list is its transitive
// reduction. The empty poset is a legal value: it is the unit of both the
// disjoint union and the ordinal sum.
class Poset {
public:
    static constexpr int kMaxElements = 31;

    Poset() = default;

    // Computes the transitive closure, rejecting cycles and out-of-range
    // indices; redundant cover pairs are dropped by recomputing the
    // reduction.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    static Poset chain(int n);
    static Poset antichain(int n);

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    ElementMask all() const { return n_ == 0 ? 0 : (ElementMask{1} << n_) - 1; }

    bool less(int u, int v) const { return (above_[static_cast<std::size_t>(u)] >> v) & 1u; }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }

    ElementMask strictly_below(int v) const { return below_[static_cast<std::size_t>(v)]; }
    ElementMask strictly_above(int u) const { return above_[static_cast<std::size_t>(u)]; }

    // Cover pairs (u,v) with v covering u, sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    ElementMask minimal_elements() const;
    ElementMask maximal_elements() const;

    // Is s closed downward (an order ideal)?
    bool is_ideal(ElementMask s) const;

    // Connectivity classes of the Hasse diagram as full subposets, ordered
    // by least element index.
    std::vector<Poset> connected_components() const;
    std::vector<ElementMask> component_masks() const;
    bool connected() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::vector<ElementMask> below_;  // below_[v] = {u : u < v}
    std::vector<ElementMask> above_;  // above_[u] = {v : u < v}
    std::vector<std::pair<int, int>> covers_;

    static Poset from_closure(int n, std::vector<ElementMask> below);
};

std::vector<int> mask_elements(ElementMask m);
int mask_size(ElementMask m);

// Elements relabeled 0..|p|+|q|-1 with no cross relations.
Poset disjoint_union(const Poset& p, const Poset& q);

// Everything in p below everything in q.
Poset ordinal_sum(const Poset& p, const Poset& q);

// The induced order on the members of the mask, re-indexed in increasing
// element order.
Poset full_subposet(const Poset& p, ElementMask members);
Poset full_subposet(const Poset& p, const std::vector<int>& members);

// A canonical byte string: equal strings iff isomorphic posets. Backtracking
// over labelings with iterated invariant refinement and pruning of
// interchangeable elements; throws when size() exceeds the bound.
std::string canonical_form(const Poset& p, int bound = 12);

bool isomorphic(const Poset& p, const Poset& q, int bound = 12);

enum class LabelingKind { strict, natural };

// A poset together with a bijective labeling onto {1,...,n}.
class LabeledPoset {
public:
    LabeledPoset(Poset poset, std::vector<int> omega);

    const Poset& poset() const { return poset_; }
    int label(int v) const { return omega_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& labels() const { return omega_; }

    // u < v implies label(u) > label(v)
    bool is_strict() const;
    // u < v implies label(u) < label(v)
    bool is_natural() const;

private:
    Poset poset_;
    std::vector<int> omega_;
};

// natural: labels follow a linear extension; strict: its complement.
LabeledPoset make_labeling(const Poset& p, LabelingKind kind);

// omega_bar(v) = n+1-omega(v); swaps strict and natural labelings.
LabeledPoset complement_labeling(const LabeledPoset& lp);

// One stanza of the poset text format.
struct PosetFile {
    std::string name;
    Poset poset;
    std::optional<std::vector<int>> labels;
};

// Text format, '#' comments, stanzas separated by blank lines:
//   poset <name>
//   elements <n>
//   cover <u> <v>     (v covers u, 0-based)
//   label <u> <k>     (optional)
// Duplicate covers and non-bijective labels are rejected; errors carry line
// numbers.
std::vector<PosetFile> parse_poset_stream(std::istream& in);
std::vector<PosetFile> parse_poset_file(const std::string& path);
std::string render_poset(const PosetFile& pf);

}  // namespace oqsym
