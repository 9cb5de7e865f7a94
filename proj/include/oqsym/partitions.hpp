#pragma once

#include <vector>

#include "oqsym/composition.hpp"
#include "oqsym/poset.hpp"
#include "oqsym/qsym.hpp"

namespace oqsym {

// An ordered tuple of non-empty disjoint blocks covering a labeled poset:
//  (1) the blocks partition the elements,
//  (2) u <= v with u in block i, v in block j forces i <= j,
//  (3) u < v with label(u) > label(v) forces i < j.
struct StableOrderedPartition {
    std::vector<ElementMask> blocks;

    Composition type() const;
    friend bool operator==(const StableOrderedPartition&, const StableOrderedPartition&) = default;
    friend auto operator<=>(const StableOrderedPartition&, const StableOrderedPartition&) = default;
};

// Does the block tuple satisfy the three conditions above? Used by tests as
// the ground-truth predicate.
bool is_stable(const LabeledPoset& lp, const StableOrderedPartition& pi);

// Every stable ordered partition exactly once, in the deterministic order
// produced by choosing first blocks in increasing mask order.
//
// First-block rule (equivalent to the defining conditions): a non-empty
// order ideal S of the remaining poset with no pair u < v inside S labeled
// label(u) > label(v). Condition (2) makes earlier blocks closed downward;
// condition (3) bars inverted pairs from sharing a block; conversely any
// such ideal extends to a stable partition of the rest. For strict
// labelings this reduces to non-empty subsets of the current minimal
// elements.
std::vector<StableOrderedPartition> enumerate_stable_partitions(const LabeledPoset& lp);

// The (P,omega)-partition generating function: coefficient of M_alpha counts
// the stable ordered partitions of type alpha. Computed by the same
// recursion with counts-by-type memoized on the remaining up-set. Gamma of
// the empty poset is M_().
QSymElement gamma(const LabeledPoset& lp);

// Gamma under a strict (resp. natural) labeling; independent of which one
// is chosen.
QSymElement gamma_strict(const Poset& p);
QSymElement gamma_weak(const Poset& p);

// jump(v) = max number of strict edges over saturated chains from v down to
// a minimal element (computed over the cover DAG); part i of the result
// counts elements of jump i. The leading composition of gamma.
Composition jump_sequence(const LabeledPoset& lp);

}  // namespace oqsym
