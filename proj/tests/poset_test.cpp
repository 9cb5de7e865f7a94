#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oqsym/poset.hpp"

using namespace oqsym;

namespace {

// a < b, a < c
Poset vee() { return Poset::from_covers(3, {{0, 1}, {0, 2}}); }

}  // namespace

TEST_CASE("construction and closure") {
    Poset p = vee();
    CHECK(p.size() == 3);
    CHECK(p.less(0, 1));
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(1, 2));
    CHECK_FALSE(p.less(1, 0));

    Poset one = Poset::from_covers(1, {});
    CHECK(one.size() == 1);
    CHECK(one.covers().empty());

    CHECK_THROWS_WITH_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), "not a partial order",
                         std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("redundant covers are dropped") {
    Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(p == Poset::chain(3));
}

TEST_CASE("minimal and maximal elements") {
    CHECK(vee().minimal_elements() == 0b001);
    CHECK(vee().maximal_elements() == 0b110);
    Poset anti = Poset::antichain(3);
    CHECK(anti.minimal_elements() == 0b111);
    CHECK(anti.maximal_elements() == 0b111);
    Poset chain = Poset::chain(3);
    CHECK(chain.minimal_elements() == 0b001);
    CHECK(chain.maximal_elements() == 0b100);
}

TEST_CASE("connected components") {
    Poset two_then_vee = disjoint_union(Poset::chain(2), vee());
    auto comps = two_then_vee.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == Poset::chain(2));
    CHECK(comps[1] == vee());

    CHECK(vee().connected());
    auto singles = Poset::antichain(2).connected_components();
    REQUIRE(singles.size() == 2);
    CHECK(singles[0].size() == 1);
    CHECK(singles[1].size() == 1);
}

TEST_CASE("disjoint union and ordinal sum") {
    CHECK(disjoint_union(Poset::chain(1), Poset::chain(1)) == Poset::antichain(2));
    Poset mix = disjoint_union(vee(), Poset::chain(1));
    CHECK(mix.size() == 4);
    CHECK(mix.connected_components().size() == 2);

    CHECK(ordinal_sum(Poset::chain(1), Poset::chain(1)) == Poset::chain(2));
    // the wedge: two incomparable elements below a common top
    Poset wedge = ordinal_sum(Poset::antichain(2), Poset::chain(1));
    CHECK(wedge.less(0, 2));
    CHECK(wedge.less(1, 2));
    CHECK_FALSE(wedge.comparable(0, 1));

    Poset rooted = ordinal_sum(Poset::chain(1), vee());
    CHECK(rooted.size() == 4);
    CHECK(mask_size(rooted.minimal_elements()) == 1);

    // the empty poset is a two-sided unit for both operations
    Poset empty;
    CHECK(disjoint_union(empty, vee()) == vee());
    CHECK(disjoint_union(vee(), empty) == vee());
    CHECK(ordinal_sum(empty, vee()) == vee());
    CHECK(ordinal_sum(vee(), empty) == vee());
}

TEST_CASE("full subposets") {
    CHECK(full_subposet(vee(), ElementMask{0b110}) == Poset::antichain(2));
    CHECK(full_subposet(Poset::chain(3), ElementMask{0b101}) == Poset::chain(2));
    CHECK(full_subposet(vee(), vee().all()) == vee());
    CHECK_THROWS_AS(full_subposet(vee(), ElementMask{0b1000}), std::invalid_argument);
}

TEST_CASE("canonical form") {
    Poset a = Poset::from_covers(3, {{0, 1}, {0, 2}});
    Poset b = Poset::from_covers(3, {{2, 0}, {2, 1}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(isomorphic(a, b));

    Poset n_shape = Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}});
    Poset bowtie = Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    CHECK(canonical_form(n_shape) != canonical_form(bowtie));

    CHECK(canonical_form(Poset::chain(2)) != canonical_form(Poset::antichain(2)));
    CHECK(canonical_form(Poset()) == canonical_form(Poset()));

    CHECK_THROWS_AS(canonical_form(Poset::antichain(13)), std::invalid_argument);
    CHECK(canonical_form(Poset::antichain(12)) == canonical_form(Poset::antichain(12)));
}

TEST_CASE("canonical equality matches a permutation search") {
    // both directions, exhaustively on 4-element class representatives
    std::vector<Poset> reps;
    reps.push_back(Poset::antichain(4));
    reps.push_back(Poset::chain(4));
    reps.push_back(Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}}));          // fence
    reps.push_back(Poset::from_covers(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}));  // plus a tie
    reps.push_back(Poset::from_covers(4, {{0, 1}, {0, 2}, {0, 3}}));
    reps.push_back(Poset::from_covers(4, {{0, 3}, {1, 3}, {2, 3}}));
    auto brute_iso = [](const Poset& a, const Poset& b) {
        int n = a.size();
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool match = true;
            for (int u = 0; u < n && match; ++u)
                for (int v = 0; v < n && match; ++v)
                    if (a.less(u, v) !=
                        b.less(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                        match = false;
            if (match) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            CHECK(isomorphic(reps[i], reps[j]) == brute_iso(reps[i], reps[j]));
}

TEST_CASE("labelings") {
    LabeledPoset strict = make_labeling(vee(), LabelingKind::strict);
    CHECK(strict.is_strict());
    CHECK(strict.label(0) == 3);
    CHECK_FALSE(strict.is_natural());

    LabeledPoset natural = make_labeling(vee(), LabelingKind::natural);
    CHECK(natural.is_natural());
    CHECK(natural.label(0) == 1);

    LabeledPoset one = make_labeling(Poset::chain(1), LabelingKind::natural);
    CHECK(one.label(0) == 1);

    LabeledPoset chain2 = make_labeling(Poset::chain(2), LabelingKind::natural);
    CHECK(chain2.label(0) == 1);
    CHECK(chain2.label(1) == 2);

    CHECK_THROWS_AS(LabeledPoset(vee(), {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledPoset(vee(), {1, 2}), std::invalid_argument);
}

TEST_CASE("complement labeling") {
    LabeledPoset lp(Poset::chain(3), {1, 2, 3});
    LabeledPoset bar = complement_labeling(lp);
    CHECK(bar.labels() == std::vector<int>{3, 2, 1});
    CHECK(complement_labeling(bar).labels() == lp.labels());
    CHECK(lp.is_natural());
    CHECK(bar.is_strict());

    LabeledPoset strict_vee = make_labeling(vee(), LabelingKind::strict);
    CHECK(complement_labeling(strict_vee).is_natural());
}

TEST_CASE("poset text format") {
    std::istringstream in(R"(# two stanzas
poset vee
elements 3
cover 0 1   # b covers a
cover 0 2

poset labeled_chain
elements 2
cover 0 1
label 0 2
label 1 1
)");
    auto stanzas = parse_poset_stream(in);
    REQUIRE(stanzas.size() == 2);
    CHECK(stanzas[0].name == "vee");
    CHECK(stanzas[0].poset == vee());
    CHECK_FALSE(stanzas[0].labels.has_value());
    CHECK(stanzas[1].labels == std::vector<int>{2, 1});

    // render and reparse round-trips
    std::istringstream again(render_poset(stanzas[1]));
    auto back = parse_poset_stream(again);
    REQUIRE(back.size() == 1);
    CHECK(back[0].poset == stanzas[1].poset);
    CHECK(back[0].labels == stanzas[1].labels);
}

TEST_CASE("parser rejects bad input with line numbers") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_poset_stream(in);
    };
    CHECK_THROWS_WITH_AS(parse("poset p\nelements 2\ncover 0 1\ncover 0 1\n"),
                         "line 4: duplicate cover 0 1", std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\nelements 2\nlabel 0 1\nlabel 1 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("elements 2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\ncover 0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\nelements 2\ncover 0 3\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\nelements 2\nflavor 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\nelements 2\ncover 0 1\nlabel 0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("poset p\nelements 2\ncover 0 1 9\n"), std::runtime_error);
}
