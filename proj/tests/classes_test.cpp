#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oqsym/classes.hpp"

using namespace oqsym;

TEST_CASE("rooted tree encodings") {
    RootedTree leaf;
    CHECK(leaf.encoding() == "()");
    CHECK(leaf.size() == 1);

    RootedTree twig = RootedTree::parse("(()())");
    CHECK(twig.size() == 3);
    CHECK(twig.children().size() == 2);

    // children are sorted, so construction order does not matter
    RootedTree path2 = RootedTree::parse("((()))");
    RootedTree a(std::vector<RootedTree>{leaf, path2});
    RootedTree b(std::vector<RootedTree>{path2, leaf});
    CHECK(a == b);
    CHECK(a.encoding() == b.encoding());

    CHECK_THROWS_AS(RootedTree::parse("(()"), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::parse("()()"), std::invalid_argument);
}

TEST_CASE("tree posets") {
    Poset star = rooted_tree_to_poset(RootedTree::parse("(()())"));
    CHECK(isomorphic(star, Poset::from_covers(3, {{0, 1}, {0, 2}})));
    CHECK(isomorphic(rooted_tree_to_poset(RootedTree::parse("((()))")), Poset::chain(3)));
    CHECK(rooted_tree_to_poset(RootedTree()).size() == 1);
    CHECK(mask_size(star.minimal_elements()) == 1);
}

TEST_CASE("rooted tree enumeration counts") {
    CHECK(enumerate_rooted_trees(1).size() == 1);
    CHECK(enumerate_rooted_trees(2).size() == 1);
    CHECK(enumerate_rooted_trees(3).size() == 2);
    CHECK(enumerate_rooted_trees(4).size() == 4);
    CHECK(enumerate_rooted_trees(5).size() == 9);
    CHECK(enumerate_rooted_trees(6).size() == 20);
    CHECK(enumerate_rooted_trees(7).size() == 48);

    // pairwise distinct encodings
    auto trees = enumerate_rooted_trees(6);
    std::set<std::string> codes;
    for (const RootedTree& t : trees) codes.insert(t.encoding());
    CHECK(codes.size() == trees.size());
}

TEST_CASE("forbidden subposet scan") {
    ForbiddenScan on_n = is_njoinfree_scan(poset_n_shape());
    CHECK_FALSE(on_n.free);
    REQUIRE(on_n.witness.has_value());
    CHECK(*on_n.witness == std::array<int, 4>{0, 1, 2, 3});

    CHECK_FALSE(is_njoinfree_scan(poset_bowtie()).free);
    CHECK(is_njoinfree_scan(Poset::chain(4)).free);
    CHECK(is_njoinfree_scan(Poset::antichain(4)).free);

    for (const RootedTree& t : enumerate_rooted_trees(6))
        CHECK(is_njoinfree_scan(rooted_tree_to_poset(t)).free);

    // embedding the forbidden shape inside a larger poset is still caught
    Poset padded = disjoint_union(poset_n_shape(), Poset::chain(2));
    CHECK_FALSE(is_njoinfree_scan(padded).free);
}

TEST_CASE("class membership and traces") {
    Poset wedge = ordinal_sum(Poset::antichain(2), Poset::chain(1));
    ClassCResult on_wedge = class_c_membership(wedge);
    CHECK(on_wedge.member);
    REQUIRE(on_wedge.trace.has_value());
    CHECK(render_trace(*on_wedge.trace) == "([1]⊔[1])⊕[1]");
    CHECK(isomorphic(replay_trace(*on_wedge.trace), wedge));

    CHECK_FALSE(class_c_membership(poset_n_shape()).member);
    CHECK_FALSE(class_c_membership(poset_bowtie()).member);

    Poset two_and_wedge = disjoint_union(Poset::chain(2), wedge);
    ClassCResult mixed = class_c_membership(two_and_wedge);
    CHECK(mixed.member);
    CHECK(isomorphic(replay_trace(*mixed.trace), two_and_wedge));

    CHECK(class_c_membership(Poset::chain(1)).member);
    CHECK(render_trace(*class_c_membership(Poset::chain(1)).trace) == "[1]");

    // a chain has both a unique minimal and a unique maximal element; the
    // minimal one is shed first
    CHECK(render_trace(*class_c_membership(Poset::chain(3)).trace) ==
          "[1]⊕([1]⊕[1])");
}

TEST_CASE("class enumeration counts") {
    CHECK(enumerate_njoinfree(1).size() == 1);
    CHECK(enumerate_njoinfree(2).size() == 2);
    CHECK(enumerate_njoinfree(3).size() == 5);
    CHECK(enumerate_njoinfree(4).size() == 14);
    CHECK(enumerate_njoinfree(5).size() == 40);
    CHECK(enumerate_njoinfree(6).size() == 121);
    CHECK_THROWS_AS(enumerate_njoinfree(9), std::invalid_argument);

    // every member passes the scan, and all are distinct
    std::set<std::string> forms;
    for (const Poset& p : enumerate_njoinfree(5)) {
        CHECK(is_njoinfree_scan(p).free);
        forms.insert(canonical_form(p));
    }
    CHECK(forms.size() == 40);
}

TEST_CASE("exhaustive poset enumeration") {
    CHECK(enumerate_all_posets(1).size() == 1);
    CHECK(enumerate_all_posets(2).size() == 2);
    CHECK(enumerate_all_posets(3).size() == 5);
    CHECK(enumerate_all_posets(4).size() == 16);
    CHECK(enumerate_all_posets(5).size() == 63);
    CHECK_THROWS_AS(enumerate_all_posets(7), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration matches a raw relation scan") {
    // every transitive irreflexive relation on n labeled points, counted by
    // isomorphism class; independent of the insertion-based generator
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pairs.emplace_back(u, v);
        std::set<std::string> classes;
        for (std::uint32_t rel = 0; rel < (1u << pairs.size()); ++rel) {
            bool holds[6][6] = {};
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if ((rel >> k) & 1u) holds[pairs[k].first][pairs[k].second] = true;
            bool transitive = true;
            for (int a = 0; a < n && transitive; ++a)
                for (int b = 0; b < n && transitive; ++b)
                    for (int c = 0; c < n && transitive; ++c)
                        if (holds[a][b] && holds[b][c] && !holds[a][c]) transitive = false;
            bool irreflexive_pairs = true;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (holds[a][b] && holds[b][a]) irreflexive_pairs = false;
            if (!transitive || !irreflexive_pairs) continue;
            std::vector<std::pair<int, int>> covers;
            for (auto [u, v] : pairs)
                if (holds[u][v]) covers.emplace_back(u, v);
            classes.insert(canonical_form(Poset::from_covers(n, covers)));
        }
        CHECK(classes.size() == enumerate_all_posets(n).size());
    }
}
