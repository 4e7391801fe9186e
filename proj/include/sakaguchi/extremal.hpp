#pragma once

#include <cstdint>

#include "sakaguchi/bounds.hpp"
#include "sakaguchi/coeffs.hpp"

namespace sakaguchi {

struct SearchConfig {
    std::uint64_t budget = 20000; // total objective evaluations, all restarts
    int restarts = 4;
    std::uint64_t seed = 1;
    int atom_count_max = 6;
    int refine_iters = 40; // refinement sweeps per restart, step halves each
};

struct SearchWitness {
    bool is_identity = false; // p == 1, i.e. f(z) = z
    AtomicMeasure measure;    // meaningful when !is_identity
};

struct SearchResult {
    double objective = 0.0;
    SearchWitness witness;
    std::vector<double> history; // best objective per restart
};

enum class Direction { minimize, maximize };

// Search over finite atomic measures (the extreme points of the coefficient
// body) plus deterministic seeds: the identity and the kernels
// (1 + z^k)/(1 - z^k), k = 1..4. Every candidate is evaluated through
// solve_coeffs; closed forms are never consulted. Fixing (budget, restarts,
// seed) fixes the result bit for bit, and a larger budget only extends each
// restart's candidate stream, so the best value is monotone in the budget.

// max |a5|; when C1..C4 hold the result is audited against the sharp bound
// and a violation throws errc::bound_violation with a counterexample dump
SearchResult maximize_a5(ClassKind kind, const PhiSpec& spec,
                         const SearchConfig& cfg);

// extremize the third-order Hermitian Toeplitz value; audited against the
// applicable sharp bounds the same way
SearchResult extremize_t31(ClassKind kind, const PhiSpec& spec, Direction dir,
                           const SearchConfig& cfg);

// max |a3| under the hypothesis B1 <= |B2| (throws hypothesis_failed
// otherwise); audited against the sharp third-coefficient bound
SearchResult check_a3(ClassKind kind, const PhiSpec& spec,
                      const SearchConfig& cfg);

} // namespace sakaguchi
