#include "oqsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace oqsym {

std::string hex_encode(const std::string& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 0xf];
    }
    return out;
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << "suite: " << suite << "\n";
    out << "instances: " << instances << "\n";
    for (const std::string& d : details) out << d << "\n";
    for (const Violation& v : violations) {
        out << "violation: " << v.description;
        if (!v.canonical_forms.empty()) {
            out << " |";
            for (const std::string& f : v.canonical_forms) out << " " << f;
        }
        out << "\n";
    }
    out << "violations: " << violations.size() << "\n";
    out << "result: " << (pass() ? "pass" : "FAIL") << "\n";
    return out.str();
}

std::string VerificationReport::json() const {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["instances"] = instances;
    doc["details"] = details;
    nlohmann::json vs = nlohmann::json::array();
    for (const Violation& v : violations)
        vs.push_back({{"description", v.description}, {"canonical_forms", v.canonical_forms}});
    doc["violations"] = vs;
    doc["pass"] = pass();
    return doc.dump();
}

namespace {

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

Int count_linear_extensions(const Poset& p) {
    std::unordered_map<ElementMask, Int> memo;
    auto rec = [&](auto&& self, ElementMask remaining) -> const Int& {
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        Int total = 0;
        if (remaining == 0) {
            total = 1;
        } else {
            for (int v : mask_elements(remaining))
                if ((p.strictly_below(v) & remaining) == 0)
                    total += self(self, remaining & ~(ElementMask{1} << v));
        }
        return memo.emplace(remaining, std::move(total)).first->second;
    };
    return rec(rec, p.all());
}

std::pair<Poset, Poset> equal_gamma_counterexample() {
    static const std::vector<std::pair<int, int>> left = {{1, 0}, {2, 1}, {2, 3}, {4, 3},
                                                          {5, 4}, {5, 6}, {5, 0}, {6, 3}};
    static const std::vector<std::pair<int, int>> right = {{1, 0}, {2, 1}, {2, 3}, {4, 3},
                                                           {5, 4}, {5, 6}, {5, 0}, {6, 0}};
    return {Poset::from_covers(7, left), Poset::from_covers(7, right)};
}

const QSymElement& counterexample_series() {
    static const QSymElement series = QSymElement::parse_compact(
        "M_232 + 2M_2311 + 3M_2221 + 3M_2212 + 9M_22111 + M_2131 + 3M_2122 + 8M_21211 "
        "+ 7M_21121 + 6M_21112 + 20M_211111 + M_1321 + M_1312 + 3M_13111 + M_1231 "
        "+ 3M_1222 + 8M_12211 + 8M_12121 + 7M_12112 + 23M_121111 + 2M_1132 + 4M_11311 "
        "+ 8M_11221 + 8M_11212 + 24M_112111 + 3M_11131 + 9M_11122 + 24M_111211 "
        "+ 23M_111121 + 20M_111112 + 66M_1111111");
    return series;
}

namespace {

// Independent recount of rooted tree classes: every shape admits a labeling
// where parents precede children, so parent vectors with parent(i) < i cover
// all classes.
std::uint64_t brute_force_tree_class_count(int n) {
    std::set<std::string> seen;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    auto encode = [&]() {
        std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
        for (int i = 1; i < n; ++i) children[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].push_back(i);
        auto enc = [&](auto&& self, int v) -> std::string {
            std::vector<std::string> subs;
            for (int c : children[static_cast<std::size_t>(v)]) subs.push_back(self(self, c));
            std::sort(subs.begin(), subs.end());
            std::string out = "(";
            for (const std::string& s : subs) out += s;
            out += ')';
            return out;
        };
        return enc(enc, 0);
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            seen.insert(encode());
            return;
        }
        for (int par = 0; par < i; ++par) {
            parent[static_cast<std::size_t>(i)] = par;
            self(self, i + 1);
        }
    };
    if (n == 1) return 1;
    rec(rec, 1);
    return seen.size();
}

}  // namespace

VerificationReport verify_injectivity(InjectivityClass cls, int nmax, int jobs, bool lift_bounds) {
    Timer timer;
    VerificationReport report;
    report.suite = cls == InjectivityClass::rooted_trees ? "injectivity-rooted-trees"
                                                         : "injectivity-njoinfree";
    int default_bound = cls == InjectivityClass::rooted_trees ? 9 : 7;
    int hard_bound = cls == InjectivityClass::rooted_trees ? 12 : 8;
    int bound = lift_bounds ? hard_bound : default_bound;
    if (nmax < 1 || nmax > bound)
        throw std::invalid_argument(report.suite + ": nmax " + std::to_string(nmax) +
                                    " exceeds bound " + std::to_string(bound));

    for (int n = 1; n <= nmax; ++n) {
        std::vector<Poset> reps;
        if (cls == InjectivityClass::rooted_trees) {
            for (const RootedTree& t : enumerate_rooted_trees(n))
                reps.push_back(rooted_tree_to_poset(t));
        } else {
            reps = enumerate_njoinfree(n, hard_bound);
        }
        std::vector<std::string> keys(reps.size());
        parallel_for(reps.size(), jobs,
                     [&](std::size_t i) { keys[i] = gamma_strict(reps[i]).to_json(); });

        std::map<std::string, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
        std::size_t collisions = 0;
        for (const auto& [key, members] : groups) {
            if (members.size() < 2) continue;
            ++collisions;
            Violation v;
            v.description = "n=" + std::to_string(n) + ": " + std::to_string(members.size()) +
                            " classes share " + QSymElement::from_json(key).compact();
            for (std::size_t i : members)
                v.canonical_forms.push_back(hex_encode(canonical_form(reps[i])));
            report.violations.push_back(std::move(v));
        }

        std::string detail = "n=" + std::to_string(n) + " classes=" + std::to_string(reps.size()) +
                             " collisions=" + std::to_string(collisions);
        if (cls == InjectivityClass::rooted_trees) {
            if (n <= 9) {
                std::uint64_t expected = brute_force_tree_class_count(n);
                detail += " oracle=" + std::to_string(expected);
                if (expected != reps.size())
                    report.violations.push_back(
                        {"n=" + std::to_string(n) + ": enumerator found " +
                             std::to_string(reps.size()) + " classes, brute force found " +
                             std::to_string(expected),
                         {}});
            } else {
                detail += " oracle=skipped";
            }
        }
        report.details.push_back(detail);
        report.instances += reps.size();
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_counterexample() {
    Timer timer;
    VerificationReport report;
    report.suite = "counterexample";
    auto [left, right] = equal_gamma_counterexample();
    report.instances = 2;

    std::string canon_left = canonical_form(left);
    std::string canon_right = canonical_form(right);
    if (canon_left == canon_right)
        report.violations.push_back(
            {"fixture posets are isomorphic", {hex_encode(canon_left), hex_encode(canon_right)}});

    QSymElement gl = gamma_strict(left);
    QSymElement gr = gamma_strict(right);
    if (gl != gr)
        report.violations.push_back({"fixture posets have different gamma-strict: " + gl.compact() +
                                         " vs " + gr.compact(),
                                     {hex_encode(canon_left), hex_encode(canon_right)}});
    const QSymElement& published = counterexample_series();
    if (gl != published)
        report.violations.push_back(
            {"computed series disagrees with the published expansion: " + gl.compact(), {}});

    report.details.push_back("support=" + std::to_string(gl.support_size()));
    for (const char* probe : {"1111111", "22111", "112111", "232", "121111"}) {
        Composition alpha = Composition::parse(probe);
        report.details.push_back("coefficient[" + std::string(probe) +
                                 "]=" + gl.coefficient(alpha).str());
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::vector<std::uint64_t> count_njoinfree_sequence(int nmax) {
    std::vector<std::uint64_t> counts;
    for (int n = 1; n <= nmax; ++n) counts.push_back(enumerate_njoinfree(n).size());
    return counts;
}

// ---------------------------------------------------------------------------
// property suite
// ---------------------------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Composition random_composition(Rng& rng, int max_len, std::uint32_t max_part,
                               bool allow_empty = true) {
    int len = uniform_int(rng, allow_empty ? 0 : 1, max_len);
    std::vector<std::uint32_t> parts;
    for (int i = 0; i < len; ++i)
        parts.push_back(static_cast<std::uint32_t>(uniform_int(rng, 1, static_cast<int>(max_part))));
    return Composition(std::move(parts));
}

QSymElement random_qsym(Rng& rng, int max_terms, int max_len, std::uint32_t max_part) {
    QSymElement out;
    int terms = uniform_int(rng, 1, max_terms);
    for (int i = 0; i < terms; ++i) {
        int c = uniform_int(rng, -9, 9);
        if (c == 0) c = 1;
        out.add_term(random_composition(rng, max_len, max_part), c);
    }
    return out;
}

QSymElement random_qsym_positive_leading(Rng& rng, int max_terms, int max_len,
                                         std::uint32_t max_part) {
    for (;;) {
        QSymElement p = random_qsym(rng, max_terms, max_len, max_part);
        if (p.is_zero()) continue;
        if (leading_term(p).second < 0) p *= -1;
        return p;
    }
}

Poset random_poset(Rng& rng, int min_n, int max_n) {
    int n = uniform_int(rng, min_n, max_n);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform_int(rng, 0, 99) < 30) covers.emplace_back(i, j);
    return Poset::from_covers(n, covers);
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                              perm[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    return perm;
}

Poset relabeled(const Poset& p, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> covers;
    for (auto [u, v] : p.covers())
        covers.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Poset::from_covers(p.size(), covers);
}

LabeledPoset random_labeled(Rng& rng, const Poset& p) {
    std::vector<int> omega = random_permutation(rng, p.size());
    for (int& k : omega) ++k;
    return LabeledPoset(p, omega);
}

struct Suite {
    VerificationReport report;
    Rng rng;
    int budget;

    Suite(const std::string& name, std::uint64_t seed, std::uint64_t index, int budget_)
        : rng(seed * 0x9e3779b97f4a7c15ull + index), budget(budget_) {
        report.suite = name;
    }

    void fail(const std::string& description, std::vector<std::string> forms = {}) {
        report.violations.push_back({description, std::move(forms)});
    }

    void check(bool ok, const std::string& description, std::vector<std::string> forms = {}) {
        if (!ok) fail(description, std::move(forms));
    }

    VerificationReport finish(const Timer& timer) {
        report.elapsed_seconds = timer.seconds();
        return std::move(report);
    }
};

VerificationReport suite_composition_order(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("composition-order", seed, 1, budget);
    for (int i = 0; i < s.budget; ++i) {
        Composition a = random_composition(s.rng, 4, 5);
        Composition b = random_composition(s.rng, 4, 5);
        Composition c = random_composition(s.rng, 4, 5);
        ++s.report.instances;

        auto ab = a <=> b;
        auto ba = b <=> a;
        s.check((ab == 0) == (a == b), "order vs equality disagree on " + a.str() + ", " + b.str());
        s.check((ab < 0) == (ba > 0), "order is not antisymmetric on " + a.str() + ", " + b.str());
        if (a <= b && b <= c)
            s.check(a <= c, "order is not transitive on " + a.str() + ", " + b.str() + ", " + c.str());

        s.check(concat(a, b).weight() == a.weight() + b.weight(),
                "concat weight broken on " + a.str() + ", " + b.str());
        s.check(dotplus(a, b).weight() == a.weight() + b.weight(),
                "dotplus weight broken on " + a.str() + ", " + b.str());
        s.check(dotplus(a, b) == dotplus(b, a), "dotplus not commutative");
        s.check(dotplus(dotplus(a, b), c) == dotplus(a, dotplus(b, c)), "dotplus not associative");
        s.check(concat(concat(a, b), c) == concat(a, concat(b, c)), "concat not associative");
        s.check(concat(a, Composition{}) == a && concat(Composition{}, a) == a,
                "empty composition is not a concat unit");
        s.check(reversed(concat(a, b)) == concat(reversed(b), reversed(a)),
                "reverse is not an anti-homomorphism");
        s.check(reversed(reversed(a)) == a, "reverse is not an involution");
        s.check(Composition{} <= a, "empty composition is not least");
    }
    return s.finish(timer);
}

VerificationReport suite_oshuffle_oracle(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("oshuffle-oracle", seed, 2, budget);
    for (int i = 0; i < s.budget; ++i) {
        Composition a = random_composition(s.rng, 4, 4);
        Composition b = random_composition(s.rng, std::min<int>(3, 7 - static_cast<int>(a.length())), 4);
        ++s.report.instances;

        QSymElement direct = oshuffle_compositions_direct(a, b);
        QSymElement rec = oshuffle_compositions_rec(a, b);
        s.check(direct == rec,
                "direct and recurrence products differ on " + a.str() + " and " + b.str());

        Int coeff_sum = 0;
        for (const auto& [gamma_, c] : direct.terms()) coeff_sum += c;
        s.check(coeff_sum == Int(overlap_patterns(a.length(), b.length()).size()),
                "coefficient total does not match the pattern count on " + a.str() + ", " + b.str());

        int vars = std::max<int>(1, static_cast<int>(a.length() + b.length()));
        int maxdeg = static_cast<int>(a.weight() + b.weight());
        TruncatedPoly lhs = expand_truncated(direct, vars, maxdeg);
        TruncatedPoly rhs = expand_truncated(QSymElement::monomial(a), vars, maxdeg) *
                            expand_truncated(QSymElement::monomial(b), vars, maxdeg);
        s.check(lhs == rhs,
                "truncated polynomial oracle disagrees on " + a.str() + " and " + b.str());
    }
    return s.finish(timer);
}

VerificationReport suite_leading_terms(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("leading-terms", seed, 3, budget);
    for (int i = 0; i < s.budget; ++i) {
        Composition a = random_composition(s.rng, 4, 5);
        Composition b = random_composition(s.rng, 4, 5);
        ++s.report.instances;
        auto [lead, coeff] = leading_term(oshuffle_compositions_direct(a, b));
        s.check(lead == dotplus(a, b) && coeff == 1,
                "leading composition of " + a.str() + " shuffled with " + b.str() + " is not " +
                    dotplus(a, b).str());

        QSymElement p = random_qsym_positive_leading(s.rng, 3, 3, 4);
        QSymElement q = random_qsym_positive_leading(s.rng, 3, 3, 4);
        auto [pa, pc] = leading_term(p);
        auto [qa, qc] = leading_term(q);
        auto [ra, rc] = leading_term(mul_oshuffle(p, q));
        s.check(ra == dotplus(pa, qa) && rc == pc * qc,
                "product leading term broken on " + p.compact() + " and " + q.compact());
    }
    return s.finish(timer);
}

VerificationReport suite_reverse_involution(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("reverse-involution", seed, 4, budget);
    for (int i = 0; i < s.budget; ++i) {
        QSymElement p = random_qsym(s.rng, 3, 3, 4);
        QSymElement q = random_qsym(s.rng, 3, 3, 4);
        ++s.report.instances;
        s.check(rho(rho(p)) == p, "rho is not an involution on " + p.compact());
        s.check(rho(mul_oshuffle(p, q)) == mul_oshuffle(rho(p), rho(q)),
                "rho does not respect the shuffle on " + p.compact() + " and " + q.compact());
    }
    return s.finish(timer);
}

VerificationReport suite_ring_axioms(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("ring-axioms", seed, 5, budget);
    QSymElement unit = QSymElement::one();
    QSymElement m1 = QSymElement::monomial(Composition{1});
    for (int i = 0; i < s.budget; ++i) {
        QSymElement p = random_qsym(s.rng, 2, 3, 3);
        QSymElement q = random_qsym(s.rng, 2, 3, 3);
        QSymElement r = random_qsym(s.rng, 2, 2, 3);
        ++s.report.instances;

        s.check(mul_oshuffle(p, q) == mul_oshuffle(q, p), "shuffle not commutative");
        s.check(mul_oshuffle(mul_oshuffle(p, q), r) == mul_oshuffle(p, mul_oshuffle(q, r)),
                "shuffle not associative");
        s.check(mul_oshuffle(p, q + r) == mul_oshuffle(p, q) + mul_oshuffle(p, r),
                "shuffle not distributive");
        s.check(mul_concat(mul_concat(p, q), r) == mul_concat(p, mul_concat(q, r)),
                "concat not associative");
        s.check(mul_oshuffle(p, unit) == p && mul_concat(p, unit) == p &&
                    mul_concat(unit, p) == p,
                "unit element broken");
        s.check(mul_oshuffle(QSymElement{}, p).is_zero(), "zero is not annihilating");
        if (p != q) {
            s.check(mul_concat(m1, p) != mul_concat(m1, q),
                    "left concat by M_(1) is not injective");
            s.check(mul_concat(p, m1) != mul_concat(q, m1),
                    "right concat by M_(1) is not injective");
        }
    }
    return s.finish(timer);
}

VerificationReport suite_poset_structure(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("poset-structure", seed, 6, budget);
    int rounds = std::max(1, s.budget / 10);
    for (int i = 0; i < rounds; ++i) {
        Poset p = random_poset(s.rng, 1, 7);
        ++s.report.instances;

        Poset rebuilt = Poset::from_covers(p.size(), p.covers());
        s.check(rebuilt == p, "closure/reduction rebuild changed the poset",
                {hex_encode(canonical_form(p))});
        for (auto [u, v] : p.covers())
            s.check(p.less(u, v) && (p.strictly_above(u) & p.strictly_below(v)) == 0,
                    "cover pair is not a cover");

        // relabeling invariance of the canonical form, 100 permutations per
        // tested poset
        for (int t = 0; t < 100; ++t) {
            Poset shuffled = relabeled(p, random_permutation(s.rng, p.size()));
            ++s.report.instances;
            s.check(canonical_form(shuffled) == canonical_form(p),
                    "canonical form changed under relabeling",
                    {hex_encode(canonical_form(p)), hex_encode(canonical_form(shuffled))});
        }

        Poset q = random_poset(s.rng, 0, 4);
        Poset r = random_poset(s.rng, 0, 4);
        if (p.size() + q.size() + r.size() <= 12) {
            s.check(isomorphic(disjoint_union(disjoint_union(p, q), r),
                               disjoint_union(p, disjoint_union(q, r))),
                    "disjoint union not associative");
            s.check(isomorphic(ordinal_sum(ordinal_sum(p, q), r),
                               ordinal_sum(p, ordinal_sum(q, r))),
                    "ordinal sum not associative");
        }

        // components partition the poset and carry no cross relations
        ElementMask univ = 0;
        for (ElementMask m : p.component_masks()) {
            s.check((univ & m) == 0, "components overlap");
            univ |= m;
        }
        s.check(univ == p.all(), "components do not cover");

        // nested full subposets compose
        ElementMask outer = 0;
        for (int v = 0; v < p.size(); ++v)
            if (uniform_int(s.rng, 0, 1)) outer |= ElementMask{1} << v;
        std::vector<int> outer_elems = mask_elements(outer);
        ElementMask inner_rel = 0;
        std::vector<int> inner_abs;
        for (std::size_t k = 0; k < outer_elems.size(); ++k)
            if (uniform_int(s.rng, 0, 1)) {
                inner_rel |= ElementMask{1} << k;
                inner_abs.push_back(outer_elems[k]);
            }
        Poset nested = full_subposet(full_subposet(p, outer), inner_rel);
        Poset direct = full_subposet(p, ElementMask{0});
        Poset direct2 = inner_abs.empty() ? Poset() : full_subposet(p, inner_abs);
        s.check(nested == (inner_abs.empty() ? direct : direct2),
                "nested full subposets do not compose");
    }
    return s.finish(timer);
}

VerificationReport suite_gamma_leading(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("gamma-leading", seed, 7, budget);
    for (int i = 0; i < s.budget; ++i) {
        Poset p = random_poset(s.rng, 1, 7);
        LabeledPoset lp = random_labeled(s.rng, p);
        ++s.report.instances;
        QSymElement g = gamma(lp);
        auto [lead, coeff] = leading_term(g);
        Composition jump = jump_sequence(lp);
        s.check(lead == jump && coeff == 1,
                "gamma leading term " + lead.str() + " is not M_" + jump.str() +
                    " with coefficient 1",
                {hex_encode(canonical_form(p))});
        s.check(is_primitive(g), "gamma is not primitive", {hex_encode(canonical_form(p))});
        s.check(g.degree() == static_cast<std::uint64_t>(p.size()),
                "gamma degree differs from the poset size");
        bool nonneg = true;
        for (const auto& [alpha, c] : g.terms())
            if (c < 0) nonneg = false;
        s.check(nonneg, "gamma has a negative coefficient");
    }
    return s.finish(timer);
}

VerificationReport suite_gamma_products(std::uint64_t seed, int budget, int jobs) {
    Timer timer;
    Suite s("gamma-products", seed, 8, budget);
    // all isomorphism classes up to 6 elements, gamma precomputed
    std::vector<std::vector<Poset>> pool(7);
    std::vector<std::vector<QSymElement>> pool_gamma(7);
    for (int n = 1; n <= 6; ++n) {
        pool[static_cast<std::size_t>(n)] = enumerate_all_posets(n);
        auto& gs = pool_gamma[static_cast<std::size_t>(n)];
        gs.resize(pool[static_cast<std::size_t>(n)].size());
        parallel_for(gs.size(), jobs, [&, n](std::size_t i) {
            gs[i] = gamma_strict(pool[static_cast<std::size_t>(n)][i]);
        });
    }
    for (int na = 1; na <= 6; ++na) {
        for (int nb = 1; na + nb <= 7; ++nb) {
            const auto& as = pool[static_cast<std::size_t>(na)];
            const auto& bs = pool[static_cast<std::size_t>(nb)];
            for (std::size_t i = 0; i < as.size(); ++i) {
                for (std::size_t j = 0; j < bs.size(); ++j) {
                    ++s.report.instances;
                    const QSymElement& ga = pool_gamma[static_cast<std::size_t>(na)][i];
                    const QSymElement& gb = pool_gamma[static_cast<std::size_t>(nb)][j];
                    QSymElement parallel = gamma_strict(disjoint_union(as[i], bs[j]));
                    if (parallel != mul_oshuffle(ga, gb))
                        s.fail("gamma of a disjoint union is not the shuffle product",
                               {hex_encode(canonical_form(as[i])), hex_encode(canonical_form(bs[j]))});
                    QSymElement series = gamma_strict(ordinal_sum(as[i], bs[j]));
                    if (series != mul_concat(ga, gb))
                        s.fail("gamma of an ordinal sum is not the concat product",
                               {hex_encode(canonical_form(as[i])), hex_encode(canonical_form(bs[j]))});
                }
            }
        }
    }
    // block-level bijection behind the ordinal-sum identity, small cases
    for (int i = 0; i < std::min(s.budget, 200); ++i) {
        Poset a = random_poset(s.rng, 1, 3);
        Poset b = random_poset(s.rng, 1, 3);
        ++s.report.instances;
        LabeledPoset la = make_labeling(a, LabelingKind::strict);
        LabeledPoset lb = make_labeling(b, LabelingKind::strict);
        LabeledPoset lsum = make_labeling(ordinal_sum(a, b), LabelingKind::strict);
        auto parts_a = enumerate_stable_partitions(la);
        auto parts_b = enumerate_stable_partitions(lb);
        auto parts_sum = enumerate_stable_partitions(lsum);
        std::set<StableOrderedPartition> glued;
        for (const auto& pa : parts_a)
            for (const auto& pb : parts_b) {
                StableOrderedPartition joined;
                joined.blocks = pa.blocks;
                for (ElementMask blockb : pb.blocks)
                    joined.blocks.push_back(blockb << a.size());
                glued.insert(joined);
            }
        std::set<StableOrderedPartition> found(parts_sum.begin(), parts_sum.end());
        s.check(glued == found, "pasting stable partitions across an ordinal sum is not bijective",
                {hex_encode(canonical_form(a)), hex_encode(canonical_form(b))});
    }
    return s.finish(timer);
}

VerificationReport suite_strict_weak(std::uint64_t seed, int budget, int jobs) {
    Timer timer;
    Suite s("strict-weak", seed, 9, budget);

    // random labeled pairs: isomorphic relabelings must collide, and the
    // complement must collide exactly when the original does
    for (int i = 0; i < s.budget; ++i) {
        Poset p = random_poset(s.rng, 1, 6);
        std::vector<int> perm = random_permutation(s.rng, p.size());
        LabeledPoset lp1 = random_labeled(s.rng, p);
        std::vector<int> transported(static_cast<std::size_t>(p.size()));
        for (int v = 0; v < p.size(); ++v)
            transported[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = lp1.label(v);
        LabeledPoset lp2(relabeled(p, perm), transported);
        ++s.report.instances;
        s.check(gamma(lp1) == gamma(lp2), "gamma not invariant under labeled isomorphism");
        s.check(gamma(complement_labeling(lp1)) == gamma(complement_labeling(lp2)),
                "complement gamma not invariant under labeled isomorphism");

        LabeledPoset other = random_labeled(s.rng, random_poset(s.rng, 1, 6));
        bool eq = gamma(lp1) == gamma(other);
        bool eq_bar = gamma(complement_labeling(lp1)) == gamma(complement_labeling(other));
        s.check(eq == eq_bar, "gamma equality and complement equality disagree");
    }

    // exhaustive scan: strict equality iff weak equality on same-size pairs
    auto scan_pool = [&](const std::vector<Poset>& posets, const std::string& what) {
        std::vector<std::string> strict_keys(posets.size());
        std::vector<std::string> weak_keys(posets.size());
        parallel_for(posets.size(), jobs, [&](std::size_t i) {
            strict_keys[i] = gamma_strict(posets[i]).to_json();
            weak_keys[i] = gamma_weak(posets[i]).to_json();
        });
        for (std::size_t i = 0; i < posets.size(); ++i) {
            for (std::size_t j = i + 1; j < posets.size(); ++j) {
                ++s.report.instances;
                bool eq_strict = strict_keys[i] == strict_keys[j];
                bool eq_weak = weak_keys[i] == weak_keys[j];
                if (eq_strict != eq_weak)
                    s.fail("strict/weak equality mismatch in " + what,
                           {hex_encode(canonical_form(posets[i])),
                            hex_encode(canonical_form(posets[j]))});
                if (eq_strict) {
                    bool same_mins = mask_size(posets[i].minimal_elements()) ==
                                     mask_size(posets[j].minimal_elements());
                    bool same_maxs = mask_size(posets[i].maximal_elements()) ==
                                     mask_size(posets[j].maximal_elements());
                    if (!same_mins || !same_maxs)
                        s.fail("gamma-equal posets with different extremal counts in " + what,
                               {hex_encode(canonical_form(posets[i])),
                                hex_encode(canonical_form(posets[j]))});
                }
            }
        }
    };
    for (int n = 1; n <= 6; ++n) scan_pool(enumerate_all_posets(n), "all posets n=" + std::to_string(n));
    scan_pool(enumerate_njoinfree(7), "njoinfree n=7");

    // the bundled counterexample pair is the nontrivial instance
    auto [left, right] = equal_gamma_counterexample();
    ++s.report.instances;
    s.check(gamma_strict(left) == gamma_strict(right) && gamma_weak(left) == gamma_weak(right),
            "counterexample pair breaks the strict/weak equivalence");
    return s.finish(timer);
}

VerificationReport suite_linear_extensions(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("linear-extensions", seed, 10, budget);
    auto check_poset = [&](const Poset& p) {
        ++s.report.instances;
        std::vector<std::uint32_t> ones(static_cast<std::size_t>(p.size()), 1);
        Int from_gamma = gamma_strict(p).coefficient(Composition(ones));
        Int direct = count_linear_extensions(p);
        s.check(from_gamma == direct,
                "all-singleton coefficient " + from_gamma.str() +
                    " differs from the linear extension count " + direct.str(),
                {hex_encode(canonical_form(p))});
    };
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_all_posets(n)) check_poset(p);
    for (int i = 0; i < s.budget; ++i) check_poset(random_poset(s.rng, 1, 7));
    return s.finish(timer);
}

VerificationReport suite_irreducibility(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("irreducibility", seed, 11, budget);
    Poset one = Poset::chain(1);
    for (int i = 0; i < s.budget; ++i) {
        Poset base = random_poset(s.rng, 1, 6);
        Poset p = uniform_int(s.rng, 0, 1) ? ordinal_sum(one, base) : ordinal_sum(base, one);
        ++s.report.instances;
        IrredCertificate cert = irreducible_by_lemma(gamma_strict(p));
        s.check(cert != IrredCertificate::inconclusive,
                "certificate missed a poset with a unique extremal element",
                {hex_encode(canonical_form(p))});
    }
    // every poset up to 5 with a unique minimal or maximal element
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_all_posets(n)) {
            if (mask_size(p.minimal_elements()) != 1 && mask_size(p.maximal_elements()) != 1)
                continue;
            ++s.report.instances;
            IrredCertificate cert = irreducible_by_lemma(gamma_strict(p));
            s.check(cert != IrredCertificate::inconclusive,
                    "certificate missed a poset with a unique extremal element",
                    {hex_encode(canonical_form(p))});
        }
    return s.finish(timer);
}

VerificationReport suite_stable_partitions(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("stable-partitions", seed, 12, budget);
    for (int i = 0; i < s.budget; ++i) {
        Poset p = random_poset(s.rng, 1, 5);
        LabeledPoset lp = random_labeled(s.rng, p);
        ++s.report.instances;

        // ground truth: filter every ordered set partition by the defining
        // conditions
        std::vector<StableOrderedPartition> brute;
        std::vector<ElementMask> blocks;
        auto rec = [&](auto&& self, ElementMask remaining) -> void {
            if (remaining == 0) {
                StableOrderedPartition candidate{blocks};
                if (is_stable(lp, candidate)) brute.push_back(candidate);
                return;
            }
            std::vector<int> bits = mask_elements(remaining);
            ElementMask count = ElementMask{1} << bits.size();
            for (ElementMask x = 1; x < count; ++x) {
                ElementMask sub = 0;
                for (std::size_t k = 0; k < bits.size(); ++k)
                    if ((x >> k) & 1u) sub |= ElementMask{1} << bits[k];
                blocks.push_back(sub);
                self(self, remaining & ~sub);
                blocks.pop_back();
            }
        };
        rec(rec, p.all());

        std::vector<StableOrderedPartition> fast = enumerate_stable_partitions(lp);
        std::vector<StableOrderedPartition> sorted_fast = fast;
        std::sort(brute.begin(), brute.end());
        std::sort(sorted_fast.begin(), sorted_fast.end());
        s.check(brute == sorted_fast,
                "ideal-block recursion disagrees with the brute-force filter",
                {hex_encode(canonical_form(p))});

        // counting mode agrees with enumeration mode
        QSymElement counted = gamma(lp);
        QSymElement tallied;
        for (const StableOrderedPartition& pi : fast) tallied.add_term(pi.type(), 1);
        if (p.size() == 0) tallied = QSymElement::one();
        s.check(counted == tallied, "memoized counts disagree with enumeration",
                {hex_encode(canonical_form(p))});
    }
    return s.finish(timer);
}

VerificationReport suite_ntie_equivalence(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("ntie-equivalence", seed, 13, budget);
    for (int n = 1; n <= 6; ++n) {
        for (const Poset& p : enumerate_all_posets(n)) {
            ++s.report.instances;
            bool by_class = class_c_membership(p).member;
            bool by_scan = is_njoinfree_scan(p).free;
            s.check(by_class == by_scan,
                    "recursive membership and forbidden-subposet scan disagree",
                    {hex_encode(canonical_form(p))});
        }
    }
    return s.finish(timer);
}

VerificationReport suite_conn_lemma(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("connected-extremal", seed, 14, budget);
    for (int n = 1; n <= 7; ++n) {
        for (const Poset& p : enumerate_njoinfree(n)) {
            if (!p.connected()) continue;
            ++s.report.instances;
            s.check(mask_size(p.minimal_elements()) == 1 || mask_size(p.maximal_elements()) == 1,
                    "connected member without a unique extremal element",
                    {hex_encode(canonical_form(p))});
        }
    }
    return s.finish(timer);
}

VerificationReport suite_tree_njoinfree(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("tree-njoinfree", seed, 15, budget);
    for (int n = 1; n <= 8; ++n) {
        for (const RootedTree& t : enumerate_rooted_trees(n)) {
            ++s.report.instances;
            ForbiddenScan scan = is_njoinfree_scan(rooted_tree_to_poset(t));
            s.check(scan.free, "rooted tree contains a forbidden subposet: " + t.encoding());
        }
    }
    return s.finish(timer);
}

VerificationReport suite_decomposition_replay(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("decomposition-replay", seed, 16, budget);
    for (int n = 1; n <= 7; ++n) {
        for (const Poset& p : enumerate_njoinfree(n)) {
            ++s.report.instances;
            ClassCResult result = class_c_membership(p);
            if (!result.member) {
                s.fail("class member not recognized", {hex_encode(canonical_form(p))});
                continue;
            }
            Poset rebuilt = replay_trace(*result.trace);
            s.check(isomorphic(rebuilt, p), "trace replay is not isomorphic to the input",
                    {hex_encode(canonical_form(p)), hex_encode(canonical_form(rebuilt))});
        }
    }
    return s.finish(timer);
}

VerificationReport suite_njoinfree_filter(std::uint64_t seed, int budget) {
    Timer timer;
    Suite s("njoinfree-filter", seed, 17, budget);
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> generated;
        for (const Poset& p : enumerate_njoinfree(n)) generated.insert(canonical_form(p));
        std::set<std::string> filtered;
        for (const Poset& p : enumerate_all_posets(n))
            if (is_njoinfree_scan(p).free) filtered.insert(canonical_form(p));
        s.report.instances += filtered.size();
        s.check(generated == filtered,
                "recursive generator and scan filter disagree at n=" + std::to_string(n));
    }
    return s.finish(timer);
}

}  // namespace

std::vector<VerificationReport> run_property_suite(std::uint64_t seed, int budget, int jobs) {
    std::vector<VerificationReport> reports;
    reports.push_back(suite_composition_order(seed, budget));
    reports.push_back(suite_oshuffle_oracle(seed, budget));
    reports.push_back(suite_leading_terms(seed, budget));
    reports.push_back(suite_reverse_involution(seed, budget));
    reports.push_back(suite_ring_axioms(seed, budget));
    reports.push_back(suite_poset_structure(seed, budget));
    reports.push_back(suite_gamma_leading(seed, budget));
    reports.push_back(suite_gamma_products(seed, budget, jobs));
    reports.push_back(suite_strict_weak(seed, budget, jobs));
    reports.push_back(suite_linear_extensions(seed, budget));
    reports.push_back(suite_irreducibility(seed, budget));
    reports.push_back(suite_stable_partitions(seed, budget));
    reports.push_back(suite_ntie_equivalence(seed, budget));
    reports.push_back(suite_conn_lemma(seed, budget));
    reports.push_back(suite_tree_njoinfree(seed, budget));
    reports.push_back(suite_decomposition_replay(seed, budget));
    reports.push_back(suite_njoinfree_filter(seed, budget));
    return reports;
}

}  // namespace oqsym
