#include "oqsym/classes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oqsym {

RootedTree::RootedTree() : encoding_("()"), size_(1) {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    encoding_ = "(";
    size_ = 1;
    for (const RootedTree& c : children_) {
        encoding_ += c.encoding();
        size_ += c.size();
    }
    encoding_ += ')';
}

RootedTree RootedTree::parse(std::string_view text) {
    std::size_t pos = 0;
    auto rec = [&](auto&& self) -> RootedTree {
        if (pos >= text.size() || text[pos] != '(')
            throw std::invalid_argument("bad tree string: " + std::string(text));
        ++pos;
        std::vector<RootedTree> children;
        while (pos < text.size() && text[pos] == '(') children.push_back(self(self));
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("bad tree string: " + std::string(text));
        ++pos;
        return children.empty() ? RootedTree() : RootedTree(std::move(children));
    };
    RootedTree t = rec(rec);
    if (pos != text.size()) throw std::invalid_argument("trailing tree data: " + std::string(text));
    return t;
}

Poset rooted_tree_to_poset(const RootedTree& t) {
    std::vector<std::pair<int, int>> covers;
    int next = 0;
    auto rec = [&](auto&& self, const RootedTree& node) -> int {
        int me = next++;
        for (const RootedTree& c : node.children()) covers.emplace_back(me, self(self, c));
        return me;
    };
    rec(rec, t);
    return Poset::from_covers(t.size(), covers);
}

std::vector<RootedTree> parse_tree_stream(std::istream& in) {
    std::vector<RootedTree> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                out.push_back(RootedTree::parse(tok));
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    return out;
}

std::vector<RootedTree> parse_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file: " + path);
    return parse_tree_stream(in);
}

std::vector<RootedTree> enumerate_rooted_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree size must be positive");
    // by_size[k] holds all trees with k nodes, sorted by encoding
    std::vector<std::vector<RootedTree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1] = {RootedTree()};
    for (int k = 2; k <= n; ++k) {
        // global index of candidate subtrees, size-major then encoding order
        std::vector<const RootedTree*> pool;
        for (int s = 1; s < k; ++s)
            for (const RootedTree& t : by_size[static_cast<std::size_t>(s)]) pool.push_back(&t);
        std::vector<RootedTree> forest;
        std::vector<RootedTree>& out = by_size[static_cast<std::size_t>(k)];
        // multisets of subtrees totaling k-1 nodes, non-decreasing pool index
        auto rec = [&](auto&& self, int remaining, std::size_t start) -> void {
            if (remaining == 0) {
                out.emplace_back(forest);
                return;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                if (pool[i]->size() > remaining) break;  // pool is size-major
                forest.push_back(*pool[i]);
                self(self, remaining - pool[i]->size(), i);
                forest.pop_back();
            }
        };
        rec(rec, k - 1, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return by_size[static_cast<std::size_t>(n)];
}

const Poset& poset_n_shape() {
    static const Poset p = Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}});
    return p;
}

const Poset& poset_bowtie() {
    static const Poset p = Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    return p;
}

ForbiddenScan is_njoinfree_scan(const Poset& p) {
    static const std::string canon_n = canonical_form(poset_n_shape());
    static const std::string canon_bowtie = canonical_form(poset_bowtie());
    int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    Poset sub = full_subposet(p, std::vector<int>{a, b, c, d});
                    std::string canon = canonical_form(sub);
                    if (canon == canon_n || canon == canon_bowtie)
                        return {false, std::array<int, 4>{a, b, c, d}};
                }
    return {true, std::nullopt};
}

std::string render_trace(const BuildTrace& t) {
    auto rec = [&](auto&& self, const BuildTrace& node, bool parenthesize) -> std::string {
        switch (node.kind) {
            case BuildTrace::Kind::singleton:
                return "[1]";
            case BuildTrace::Kind::parallel: {
                std::string body;
                for (std::size_t i = 0; i < node.children.size(); ++i) {
                    if (i) body += "⊔";  // square cup
                    body += self(self, node.children[i], true);
                }
                return parenthesize ? "(" + body + ")" : body;
            }
            case BuildTrace::Kind::series: {
                std::string body = self(self, node.children[0], true) + "⊕" +
                                   self(self, node.children[1], true);  // circled plus
                return parenthesize ? "(" + body + ")" : body;
            }
        }
        return {};
    };
    return rec(rec, t, false);
}

Poset replay_trace(const BuildTrace& t) {
    switch (t.kind) {
        case BuildTrace::Kind::singleton:
            return Poset::chain(1);
        case BuildTrace::Kind::parallel: {
            Poset acc;
            for (const BuildTrace& c : t.children) acc = disjoint_union(acc, replay_trace(c));
            return acc;
        }
        case BuildTrace::Kind::series:
            return ordinal_sum(replay_trace(t.children[0]), replay_trace(t.children[1]));
    }
    throw std::logic_error("unreachable trace kind");
}

ClassCResult class_c_membership(const Poset& p) {
    if (p.size() == 0) return {false, std::nullopt};
    if (p.size() == 1) return {true, BuildTrace{}};

    std::vector<ElementMask> comps = p.component_masks();
    if (comps.size() > 1) {
        BuildTrace trace;
        trace.kind = BuildTrace::Kind::parallel;
        for (ElementMask m : comps) {
            ClassCResult sub = class_c_membership(full_subposet(p, m));
            if (!sub.member) return {false, std::nullopt};
            trace.children.push_back(std::move(*sub.trace));
        }
        return {true, std::move(trace)};
    }

    // connected: shed a unique minimal element first, else a unique maximal
    ElementMask mins = p.minimal_elements();
    ElementMask maxs = p.maximal_elements();
    bool strip_min = mask_size(mins) == 1;
    bool strip_max = mask_size(maxs) == 1;
    if (!strip_min && !strip_max) return {false, std::nullopt};
    ElementMask removed = strip_min ? mins : maxs;
    ClassCResult sub = class_c_membership(full_subposet(p, p.all() & ~removed));
    if (!sub.member) return {false, std::nullopt};
    BuildTrace trace;
    trace.kind = BuildTrace::Kind::series;
    BuildTrace one;
    if (strip_min) {
        trace.children.push_back(std::move(one));
        trace.children.push_back(std::move(*sub.trace));
    } else {
        trace.children.push_back(std::move(*sub.trace));
        trace.children.push_back(std::move(one));
    }
    return {true, std::move(trace)};
}

namespace {

// connected and all class members per size, deduplicated and ordered by
// canonical form
struct ClassCTable {
    std::vector<std::vector<Poset>> connected;
    std::vector<std::vector<Poset>> all;
};

ClassCTable build_class_c(int nmax) {
    ClassCTable table;
    table.connected.resize(static_cast<std::size_t>(nmax) + 1);
    table.all.resize(static_cast<std::size_t>(nmax) + 1);
    for (int k = 1; k <= nmax; ++k) {
        std::map<std::string, Poset> conn;
        if (k == 1) {
            conn.emplace(canonical_form(Poset::chain(1)), Poset::chain(1));
        } else {
            for (const Poset& prev : table.all[static_cast<std::size_t>(k) - 1]) {
                Poset below = ordinal_sum(Poset::chain(1), prev);
                Poset above = ordinal_sum(prev, Poset::chain(1));
                conn.emplace(canonical_form(below), below);
                conn.emplace(canonical_form(above), above);
            }
        }
        std::map<std::string, Poset> all(conn);
        // disconnected: multisets of at least two smaller connected members
        std::vector<const Poset*> pool;  // size-major, canonical order
        for (int s = 1; s < k; ++s)
            for (const Poset& q : table.connected[static_cast<std::size_t>(s)]) pool.push_back(&q);
        std::vector<const Poset*> chosen;
        auto rec = [&](auto&& self, int remaining, std::size_t start) -> void {
            if (remaining == 0) {
                if (chosen.size() >= 2) {
                    Poset acc = *chosen[0];
                    for (std::size_t i = 1; i < chosen.size(); ++i)
                        acc = disjoint_union(acc, *chosen[i]);
                    all.emplace(canonical_form(acc), acc);
                }
                return;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                if (pool[i]->size() > remaining) break;
                chosen.push_back(pool[i]);
                self(self, remaining - pool[i]->size(), i);
                chosen.pop_back();
            }
        };
        rec(rec, k, 0);
        for (auto& [canon, q] : conn) table.connected[static_cast<std::size_t>(k)].push_back(q);
        for (auto& [canon, q] : all) table.all[static_cast<std::size_t>(k)].push_back(q);
    }
    return table;
}

}  // namespace

std::vector<Poset> enumerate_njoinfree(int n, int bound) {
    if (n < 1) throw std::invalid_argument("poset size must be positive");
    if (n > bound)
        throw std::invalid_argument("enumerate_njoinfree: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound));
    return build_class_c(n).all[static_cast<std::size_t>(n)];
}

std::vector<Poset> enumerate_all_posets(int n) {
    constexpr int kHardBound = 6;
    if (n < 1) throw std::invalid_argument("poset size must be positive");
    if (n > kHardBound)
        throw std::invalid_argument("enumerate_all_posets: size " + std::to_string(n) +
                                    " exceeds the hard bound " + std::to_string(kHardBound));
    std::vector<Poset> current = {Poset::chain(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Poset> next;
        for (const Poset& p : current) {
            // adjoin element k-1 as a maximal element above an ideal
            ElementMask subsets = ElementMask{1} << p.size();
            for (ElementMask down = 0; down < subsets; ++down) {
                if (!p.is_ideal(down)) continue;
                std::vector<std::pair<int, int>> covers = p.covers();
                for (int u : mask_elements(down)) covers.emplace_back(u, p.size());
                Poset q = Poset::from_covers(k, covers);
                next.emplace(canonical_form(q), q);
            }
        }
        current.clear();
        for (auto& [canon, q] : next) current.push_back(q);
    }
    return current;
}

}  // namespace oqsym
