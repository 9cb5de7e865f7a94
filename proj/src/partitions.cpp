#include "oqsym/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace oqsym {

Composition StableOrderedPartition::type() const {
    std::vector<std::uint32_t> parts;
    parts.reserve(blocks.size());
    for (ElementMask b : blocks) parts.push_back(static_cast<std::uint32_t>(mask_size(b)));
    return Composition(std::move(parts));
}

bool is_stable(const LabeledPoset& lp, const StableOrderedPartition& pi) {
    const Poset& p = lp.poset();
    ElementMask seen = 0;
    for (ElementMask b : pi.blocks) {
        if (b == 0 || (b & seen) || (b & ~p.all())) return false;
        seen |= b;
    }
    if (seen != p.all()) return false;

    std::vector<int> block_of(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < pi.blocks.size(); ++i)
        for (int v : mask_elements(pi.blocks[i])) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

    for (int u = 0; u < p.size(); ++u) {
        for (int v : mask_elements(p.strictly_above(u))) {
            int bu = block_of[static_cast<std::size_t>(u)];
            int bv = block_of[static_cast<std::size_t>(v)];
            if (bu > bv) return false;
            if (lp.label(u) > lp.label(v) && bu >= bv) return false;
        }
    }
    return true;
}

namespace {

// Applies fn to every subset of `universe` listed in increasing mask value,
// optionally including the empty set.
template <typename F>
void for_each_subset_ascending(ElementMask universe, bool include_empty, F&& fn) {
    std::vector<int> bits = mask_elements(universe);
    ElementMask count = ElementMask{1} << bits.size();
    for (ElementMask x = include_empty ? 0 : 1; x < count; ++x) {
        ElementMask s = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if ((x >> i) & 1u) s |= ElementMask{1} << bits[i];
        fn(s);
    }
}

// Valid first blocks of the remaining set, in increasing mask order.
template <typename F>
void for_each_first_block(const LabeledPoset& lp, ElementMask remaining, bool strict_labeling,
                          F&& fn) {
    const Poset& p = lp.poset();
    if (strict_labeling) {
        // every comparable pair is label-inverted, so a valid block is an
        // antichain ideal: a subset of the current minimal elements
        ElementMask mins = 0;
        for (int v : mask_elements(remaining))
            if ((p.strictly_below(v) & remaining) == 0) mins |= ElementMask{1} << v;
        for_each_subset_ascending(mins, false, fn);
        return;
    }
    for_each_subset_ascending(remaining, false, [&](ElementMask s) {
        for (int v : mask_elements(s)) {
            if (p.strictly_below(v) & remaining & ~s) return;  // not an ideal
            for (int u : mask_elements(p.strictly_below(v) & s))
                if (lp.label(u) > lp.label(v)) return;  // inverted pair inside the block
        }
        fn(s);
    });
}

}  // namespace

std::vector<StableOrderedPartition> enumerate_stable_partitions(const LabeledPoset& lp) {
    std::vector<StableOrderedPartition> out;
    bool strict = lp.is_strict();
    std::vector<ElementMask> blocks;
    auto rec = [&](auto&& self, ElementMask remaining) -> void {
        if (remaining == 0) {
            out.push_back(StableOrderedPartition{blocks});
            return;
        }
        for_each_first_block(lp, remaining, strict, [&](ElementMask s) {
            blocks.push_back(s);
            self(self, remaining & ~s);
            blocks.pop_back();
        });
    };
    rec(rec, lp.poset().all());
    return out;
}

namespace {

// memo: remaining up-set -> (type -> count), reusing the sparse
// composition-to-integer map
const QSymElement& gamma_rec(const LabeledPoset& lp, bool strict, ElementMask remaining,
                             std::unordered_map<ElementMask, QSymElement>& memo) {
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    QSymElement acc;
    if (remaining == 0) {
        acc = QSymElement::one();
    } else {
        for_each_first_block(lp, remaining, strict, [&](ElementMask s) {
            const QSymElement& sub = gamma_rec(lp, strict, remaining & ~s, memo);
            Composition head{static_cast<std::uint32_t>(mask_size(s))};
            for (const auto& [type, count] : sub.terms()) acc.add_term(concat(head, type), count);
        });
    }
    return memo.emplace(remaining, std::move(acc)).first->second;
}

}  // namespace

QSymElement gamma(const LabeledPoset& lp) {
    std::unordered_map<ElementMask, QSymElement> memo;
    return gamma_rec(lp, lp.is_strict(), lp.poset().all(), memo);
}

QSymElement gamma_strict(const Poset& p) { return gamma(make_labeling(p, LabelingKind::strict)); }

QSymElement gamma_weak(const Poset& p) { return gamma(make_labeling(p, LabelingKind::natural)); }

Composition jump_sequence(const LabeledPoset& lp) {
    const Poset& p = lp.poset();
    int n = p.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return mask_size(p.strictly_below(a)) < mask_size(p.strictly_below(b));
    });
    std::vector<int> jump(static_cast<std::size_t>(n), 0);
    for (int v : order)
        for (auto [a, b] : p.covers())
            if (b == v) {
                int via = jump[static_cast<std::size_t>(a)] + (lp.label(a) > lp.label(b) ? 1 : 0);
                jump[static_cast<std::size_t>(v)] = std::max(jump[static_cast<std::size_t>(v)], via);
            }
    int levels = n == 0 ? 0 : 1 + *std::max_element(jump.begin(), jump.end());
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(levels), 0);
    for (int v = 0; v < n; ++v) ++counts[static_cast<std::size_t>(jump[static_cast<std::size_t>(v)])];
    return Composition(std::move(counts));
}

}  // namespace oqsym
