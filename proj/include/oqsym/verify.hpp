#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oqsym/classes.hpp"
#include "oqsym/partitions.hpp"
#include "oqsym/poset.hpp"
#include "oqsym/qsym.hpp"

namespace oqsym {

struct Violation {
    std::string description;
    std::vector<std::string> canonical_forms;  // hex-encoded canonical bytes
};

// Outcome of one verification run. The rendered body is deterministic for a
// given seed and flags; wall-clock time is reported separately.
struct VerificationReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::vector<std::string> details;
    std::vector<Violation> violations;
    double elapsed_seconds = 0.0;

    bool pass() const { return violations.empty(); }
    std::string text() const;
    std::string json() const;
};

std::string hex_encode(const std::string& bytes);

// Number of linear extensions by peeling minimal elements, memoized on the
// remaining set. Kept independent of the stable-partition recursion so the
// two can check each other.
Int count_linear_extensions(const Poset& p);

// The bundled pair of non-isomorphic 7-element posets sharing a strict
// order quasisymmetric function, and the 31-term expansion both must
// reproduce.
std::pair<Poset, Poset> equal_gamma_counterexample();
const QSymElement& counterexample_series();

enum class InjectivityClass { rooted_trees, njoinfree };

// Computes gamma-strict for every isomorphism class representative with
// 1..nmax elements and reports any two classes sharing a value. Rooted-tree
// class counts are re-derived by a brute-force parent-vector enumerator.
// Default bounds: 9 for rooted trees, 7 for the square-free class; the
// caller may lift them explicitly.
VerificationReport verify_injectivity(InjectivityClass cls, int nmax, int jobs = 1,
                                      bool lift_bounds = false);

// Builds the bundled counterexample pair and asserts (i) non-isomorphic,
// (ii) equal gamma-strict, (iii) equal to the published expansion.
VerificationReport verify_counterexample();

// Class counts for n = 1..nmax (nmax <= 8).
std::vector<std::uint64_t> count_njoinfree_sequence(int nmax);

// Seeded randomized plus exhaustive property checks for every module;
// deterministic given (seed, budget). One report per suite.
std::vector<VerificationReport> run_property_suite(std::uint64_t seed, int budget, int jobs = 1);

}  // namespace oqsym
