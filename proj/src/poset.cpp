#include "oqsym/poset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oqsym {

std::vector<int> mask_elements(ElementMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int mask_size(ElementMask m) { return std::popcount(m); }

Poset Poset::from_closure(int n, std::vector<ElementMask> below) {
    Poset p;
    p.n_ = n;
    p.below_ = std::move(below);
    p.above_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : mask_elements(p.below_[static_cast<std::size_t>(v)]))
            p.above_[static_cast<std::size_t>(u)] |= ElementMask{1} << v;
    // covers = transitive reduction: u covered by v iff nothing lies between
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (p.less(u, v) && (p.strictly_above(u) & p.strictly_below(v)) == 0)
                p.covers_.emplace_back(u, v);
    return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > kMaxElements)
        throw std::invalid_argument("poset size must be between 0 and " +
                                    std::to_string(kMaxElements));
    std::vector<ElementMask> above(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : covers) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("cover pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range");
        above[static_cast<std::size_t>(u)] |= ElementMask{1} << v;
    }
    // Floyd-Warshall closure on bitset rows
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if ((above[static_cast<std::size_t>(u)] >> k) & 1u)
                above[static_cast<std::size_t>(u)] |= above[static_cast<std::size_t>(k)];
    std::vector<ElementMask> below(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        if ((above[static_cast<std::size_t>(u)] >> u) & 1u)
            throw std::invalid_argument("not a partial order");
        for (int v : mask_elements(above[static_cast<std::size_t>(u)]))
            below[static_cast<std::size_t>(v)] |= ElementMask{1} << u;
    }
    return from_closure(n, std::move(below));
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

ElementMask Poset::minimal_elements() const {
    ElementMask out = 0;
    for (int v = 0; v < n_; ++v)
        if (below_[static_cast<std::size_t>(v)] == 0) out |= ElementMask{1} << v;
    return out;
}

ElementMask Poset::maximal_elements() const {
    ElementMask out = 0;
    for (int v = 0; v < n_; ++v)
        if (above_[static_cast<std::size_t>(v)] == 0) out |= ElementMask{1} << v;
    return out;
}

bool Poset::is_ideal(ElementMask s) const {
    for (int v : mask_elements(s))
        if (below_[static_cast<std::size_t>(v)] & ~s) return false;
    return true;
}

std::vector<ElementMask> Poset::component_masks() const {
    std::vector<ElementMask> out;
    ElementMask todo = all();
    while (todo) {
        int start = std::countr_zero(todo);
        ElementMask comp = ElementMask{1} << start;
        ElementMask fringe = comp;
        while (fringe) {
            int v = std::countr_zero(fringe);
            fringe &= fringe - 1;
            ElementMask nb = (below_[static_cast<std::size_t>(v)] |
                              above_[static_cast<std::size_t>(v)]) &
                             ~comp;
            comp |= nb;
            fringe |= nb;
        }
        out.push_back(comp);
        todo &= ~comp;
    }
    return out;
}

std::vector<Poset> Poset::connected_components() const {
    std::vector<Poset> out;
    for (ElementMask m : component_masks()) out.push_back(full_subposet(*this, m));
    return out;
}

bool Poset::connected() const { return component_masks().size() == 1; }

Poset disjoint_union(const Poset& p, const Poset& q) {
    int n = p.size() + q.size();
    if (n > Poset::kMaxElements)
        throw std::invalid_argument("disjoint union exceeds the size limit");
    std::vector<std::pair<int, int>> covers = p.covers();
    for (auto [u, v] : q.covers()) covers.emplace_back(u + p.size(), v + p.size());
    return Poset::from_covers(n, covers);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
    int n = p.size() + q.size();
    if (n > Poset::kMaxElements)
        throw std::invalid_argument("ordinal sum exceeds the size limit");
    std::vector<std::pair<int, int>> covers = p.covers();
    for (auto [u, v] : q.covers()) covers.emplace_back(u + p.size(), v + p.size());
    // every maximal of p below every minimal of q; closure fills in the rest
    for (int u : mask_elements(p.maximal_elements()))
        for (int v : mask_elements(q.minimal_elements())) covers.emplace_back(u, v + p.size());
    return Poset::from_covers(n, covers);
}

Poset full_subposet(const Poset& p, ElementMask members) {
    if (members & ~p.all()) throw std::invalid_argument("subposet members out of range");
    std::vector<int> elems = mask_elements(members);
    return full_subposet(p, elems);
}

Poset full_subposet(const Poset& p, const std::vector<int>& members) {
    std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        int v = members[i];
        if (v < 0 || v >= p.size() || index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("subposet members out of range");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && p.less(members[i], members[j]))
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset::from_covers(static_cast<int>(members.size()), covers);
}

namespace {

// Iterated refinement: elements are ranked by (rank, ranks below, ranks
// above) until the partition stabilizes. Ranks depend only on the order
// structure, never on element indices.
std::vector<int> refined_colors(const Poset& p) {
    int n = p.size();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& key = keys[static_cast<std::size_t>(v)];
            key.push_back(color[static_cast<std::size_t>(v)]);
            key.push_back(-1);
            std::vector<int> nb;
            for (int u : mask_elements(p.strictly_below(v)))
                nb.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            key.push_back(-2);
            nb.clear();
            for (int u : mask_elements(p.strictly_above(v)))
                nb.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) -
                sorted.begin());
        int next_classes = static_cast<int>(sorted.size());
        if (next_classes == classes && round > 0) break;
        classes = next_classes;
    }
    return color;
}

struct CanonSearch {
    const Poset& p;
    int n;
    std::vector<int> color;
    std::vector<int> class_at_pos;  // color required at each position
    std::vector<int> perm;
    std::vector<bool> used;
    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    std::vector<int> best_perm;
    bool has_best = false;

    explicit CanonSearch(const Poset& poset) : p(poset), n(poset.size()) {
        color = refined_colors(p);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
        });
        for (int v : order) class_at_pos.push_back(color[static_cast<std::size_t>(v)]);
        used.assign(static_cast<std::size_t>(n), false);
    }

    // The transposition (u v) is an automorphism: skipping one of the two
    // cannot lose a canonical labeling.
    bool interchangeable(int u, int v) const {
        if (p.comparable(u, v)) return false;
        ElementMask others = p.all() & ~((ElementMask{1} << u) | (ElementMask{1} << v));
        return (p.strictly_below(u) & others) == (p.strictly_below(v) & others) &&
               (p.strictly_above(u) & others) == (p.strictly_above(v) & others);
    }

    // Returns true when this subtree replaced the best encoding; `tied`
    // means the current bit prefix equals the prefix of the best.
    bool rec(std::size_t k, bool tied) {
        if (static_cast<int>(k) == n) {
            if (!has_best || !tied) {
                best = cur;
                best_perm = perm;
                has_best = true;
                return true;
            }
            return false;
        }
        bool replaced = false;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] ||
                color[static_cast<std::size_t>(v)] != class_at_pos[k])
                continue;
            bool dup = false;
            for (int u : tried)
                if (interchangeable(u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);

            std::size_t base = cur.size();
            for (std::size_t i = 0; i < k; ++i) {
                cur.push_back(p.less(perm[i], v) ? 1 : 0);
                cur.push_back(p.less(v, perm[i]) ? 1 : 0);
            }
            bool child_tied = false;
            bool prune = false;
            if (has_best && tied) {
                int cmp = 0;
                for (std::size_t t = base; t < cur.size(); ++t) {
                    if (cur[t] != best[t]) {
                        cmp = cur[t] < best[t] ? -1 : 1;
                        break;
                    }
                }
                prune = cmp > 0;
                child_tied = cmp == 0;
            }
            if (!prune) {
                perm.push_back(v);
                used[static_cast<std::size_t>(v)] = true;
                if (rec(k + 1, child_tied)) {
                    replaced = true;
                    tied = true;  // the new best extends the prefix placed here
                }
                used[static_cast<std::size_t>(v)] = false;
                perm.pop_back();
            }
            cur.resize(base);
        }
        return replaced;
    }
};

}  // namespace

std::string canonical_form(const Poset& p, int bound) {
    if (p.size() > bound)
        throw std::invalid_argument("canonical_form: poset size " + std::to_string(p.size()) +
                                    " exceeds bound " + std::to_string(bound));
    int n = p.size();
    std::string out;
    out.push_back(static_cast<char>(n));
    if (n == 0) return out;

    CanonSearch search(p);
    search.rec(0, false);

    const std::vector<int>& perm = search.best_perm;
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | (p.less(perm[static_cast<std::size_t>(i)],
                                                                 perm[static_cast<std::size_t>(j)])
                                                              ? 1
                                                              : 0));
            if (++nbits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
}

bool isomorphic(const Poset& p, const Poset& q, int bound) {
    if (p.size() != q.size()) return false;
    return canonical_form(p, bound) == canonical_form(q, bound);
}

LabeledPoset::LabeledPoset(Poset poset, std::vector<int> omega)
    : poset_(std::move(poset)), omega_(std::move(omega)) {
    int n = poset_.size();
    if (static_cast<int>(omega_.size()) != n)
        throw std::invalid_argument("labeling size does not match the poset");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int k : omega_) {
        if (k < 1 || k > n || seen[static_cast<std::size_t>(k)])
            throw std::invalid_argument("labeling must be a bijection onto 1..n");
        seen[static_cast<std::size_t>(k)] = true;
    }
}

bool LabeledPoset::is_strict() const {
    for (int u = 0; u < poset_.size(); ++u)
        for (int v : mask_elements(poset_.strictly_above(u)))
            if (label(u) < label(v)) return false;
    return true;
}

bool LabeledPoset::is_natural() const {
    for (int u = 0; u < poset_.size(); ++u)
        for (int v : mask_elements(poset_.strictly_above(u)))
            if (label(u) > label(v)) return false;
    return true;
}

LabeledPoset make_labeling(const Poset& p, LabelingKind kind) {
    // linear extension, lowest index first among current minimals
    int n = p.size();
    std::vector<int> omega(static_cast<std::size_t>(n), 0);
    ElementMask remaining = p.all();
    int pos = 0;
    while (remaining) {
        int pick = -1;
        for (int v : mask_elements(remaining))
            if ((p.strictly_below(v) & remaining) == 0) {
                pick = v;
                break;
            }
        omega[static_cast<std::size_t>(pick)] = kind == LabelingKind::natural ? pos + 1 : n - pos;
        remaining &= ~(ElementMask{1} << pick);
        ++pos;
    }
    return LabeledPoset(p, omega);
}

LabeledPoset complement_labeling(const LabeledPoset& lp) {
    int n = lp.poset().size();
    std::vector<int> omega(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) omega[static_cast<std::size_t>(v)] = n + 1 - lp.label(v);
    return LabeledPoset(lp.poset(), omega);
}

namespace {

struct Stanza {
    std::string name;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    std::set<std::pair<int, int>> cover_set;
    std::vector<int> labels;  // 0 = unset
    bool any_label = false;
    int first_line = 0;
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

PosetFile finish_stanza(Stanza& st) {
    if (st.n < 0) parse_fail(st.first_line, "poset '" + st.name + "' has no 'elements' line");
    PosetFile pf;
    pf.name = st.name;
    try {
        pf.poset = Poset::from_covers(st.n, st.covers);
    } catch (const std::invalid_argument& e) {
        parse_fail(st.first_line, "poset '" + st.name + "': " + e.what());
    }
    if (st.any_label) {
        std::vector<bool> seen(static_cast<std::size_t>(st.n) + 1, false);
        for (int v = 0; v < st.n; ++v) {
            int k = st.labels[static_cast<std::size_t>(v)];
            if (k == 0)
                parse_fail(st.first_line, "poset '" + st.name + "': element " +
                                              std::to_string(v) + " has no label");
            if (seen[static_cast<std::size_t>(k)])
                parse_fail(st.first_line,
                           "poset '" + st.name + "': label " + std::to_string(k) + " repeated");
            seen[static_cast<std::size_t>(k)] = true;
        }
        pf.labels = st.labels;
    }
    return pf;
}

}  // namespace

std::vector<PosetFile> parse_poset_stream(std::istream& in) {
    std::vector<PosetFile> out;
    std::optional<Stanza> st;
    std::string line;
    int line_no = 0;
    auto flush = [&] {
        if (st) {
            out.push_back(finish_stanza(*st));
            st.reset();
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            flush();  // blank line separates stanzas
            continue;
        }
        if (word == "poset") {
            flush();
            st.emplace();
            st->first_line = line_no;
            if (!(ls >> st->name)) parse_fail(line_no, "expected 'poset <name>'");
        } else if (!st) {
            parse_fail(line_no, "expected 'poset <name>' before '" + word + "'");
        } else if (word == "elements") {
            if (st->n >= 0) parse_fail(line_no, "duplicate 'elements' line");
            if (!(ls >> st->n) || st->n < 0) parse_fail(line_no, "expected 'elements <n>'");
            st->labels.assign(static_cast<std::size_t>(st->n), 0);
        } else if (word == "cover") {
            if (st->n < 0) parse_fail(line_no, "'cover' before 'elements'");
            int u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "expected 'cover <u> <v>'");
            if (u < 0 || u >= st->n || v < 0 || v >= st->n)
                parse_fail(line_no, "cover element out of range");
            if (!st->cover_set.insert({u, v}).second)
                parse_fail(line_no, "duplicate cover " + std::to_string(u) + " " +
                                        std::to_string(v));
            st->covers.emplace_back(u, v);
        } else if (word == "label") {
            if (st->n < 0) parse_fail(line_no, "'label' before 'elements'");
            int u, k;
            if (!(ls >> u >> k)) parse_fail(line_no, "expected 'label <u> <k>'");
            if (u < 0 || u >= st->n) parse_fail(line_no, "label element out of range");
            if (k < 1 || k > st->n) parse_fail(line_no, "label value out of range");
            if (st->labels[static_cast<std::size_t>(u)] != 0)
                parse_fail(line_no, "element " + std::to_string(u) + " labeled twice");
            st->labels[static_cast<std::size_t>(u)] = k;
            st->any_label = true;
        } else {
            parse_fail(line_no, "unknown directive '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
    }
    flush();
    return out;
}

std::vector<PosetFile> parse_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open poset file: " + path);
    return parse_poset_stream(in);
}

std::string render_poset(const PosetFile& pf) {
    std::ostringstream out;
    out << "poset " << (pf.name.empty() ? "unnamed" : pf.name) << "\n";
    out << "elements " << pf.poset.size() << "\n";
    for (auto [u, v] : pf.poset.covers()) out << "cover " << u << " " << v << "\n";
    if (pf.labels)
        for (int v = 0; v < pf.poset.size(); ++v)
            out << "label " << v << " " << (*pf.labels)[static_cast<std::size_t>(v)] << "\n";
    return out.str();
}

}  // namespace oqsym
