#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oqsym/poset.hpp"

namespace oqsym {

// An unlabeled rooted tree held in canonical form: children are sorted by
// their own encodings, so two trees are isomorphic iff their encodings are
// equal.
class RootedTree {
public:
    RootedTree();  // a single node
    explicit RootedTree(std::vector<RootedTree> children);

    // Nested parentheses: "()" is a single node, "(()())" a root with two
    // leaves.
    static RootedTree parse(std::string_view text);

    const std::vector<RootedTree>& children() const { return children_; }
    const std::string& encoding() const { return encoding_; }
    int size() const { return size_; }

    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return a.encoding_ == b.encoding_;
    }
    friend bool operator<(const RootedTree& a, const RootedTree& b) {
        return a.encoding_ < b.encoding_;
    }

private:
    std::vector<RootedTree> children_;
    std::string encoding_;
    int size_;
};

// The order "u <= v iff the path from v to the root passes through u": the
// root is the unique minimal element and covers are parent-child edges.
Poset rooted_tree_to_poset(const RootedTree& t);

// One parenthesized tree per line; '#' comments and blank lines are skipped.
std::vector<RootedTree> parse_tree_stream(std::istream& in);
std::vector<RootedTree> parse_tree_file(const std::string& path);

// One representative per isomorphism class, sorted by encoding.
std::vector<RootedTree> enumerate_rooted_trees(int n);

// The two forbidden 4-element posets: a<b>c<d, and the same plus a<d.
const Poset& poset_n_shape();
const Poset& poset_bowtie();

struct ForbiddenScan {
    bool free;                                  // no induced copy found
    std::optional<std::array<int, 4>> witness;  // offending 4-set when !free
};

// Scans all 4-element subsets for a full subposet isomorphic to either
// forbidden poset.
ForbiddenScan is_njoinfree_scan(const Poset& p);

// How a poset was assembled from singletons: a leaf, a disjoint union of
// components, or an ordinal sum with a singleton on one side.
struct BuildTrace {
    enum class Kind { singleton, parallel, series };
    Kind kind = Kind::singleton;
    std::vector<BuildTrace> children;  // series traces have exactly two
};

std::string render_trace(const BuildTrace& t);
Poset replay_trace(const BuildTrace& t);

struct ClassCResult {
    bool member;
    std::optional<BuildTrace> trace;  // present iff member
};

// Membership in the class generated by the singleton under disjoint union
// and attaching a singleton below or above everything. Decided recursively:
// components must all belong; a connected poset must shed a unique minimal
// element (preferred) or a unique maximal one.
ClassCResult class_c_membership(const Poset& p);

// All members of the class with exactly n elements, one per isomorphism
// class, ordered by canonical form. Throws beyond the bound.
std::vector<Poset> enumerate_njoinfree(int n, int bound = 8);

// Every poset on n elements up to isomorphism, built by repeatedly adjoining
// a maximal element with an ideal as its down-set. Hard bound 6.
std::vector<Poset> enumerate_all_posets(int n);

}  // namespace oqsym
