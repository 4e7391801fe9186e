#include "doctest.h"

#include <cmath>
#include <vector>

#include "sakaguchi/extremal.hpp"
#include "support.hpp"

using namespace sakaguchi;
using testutil::code_of;

namespace {

SearchConfig budget_config(std::uint64_t budget, std::uint64_t seed = 7) {
    SearchConfig cfg;
    cfg.budget = budget;
    cfg.restarts = 4;
    cfg.seed = seed;
    return cfg;
}

double reevaluate(ClassKind kind, const PhiSpec& spec, const SearchWitness& w,
                  bool want_t31) {
    const Series phi = phi_series(spec, 5);
    const Series p = w.is_identity ? Series::one(5) : atom_series(w.measure, 5);
    const CoeffVector a = solve_coeffs(kind, phi, p, 5);
    return want_t31 ? t31(a[2], a[3]) : std::abs(a[5]);
}

} // namespace

TEST_CASE("search is deterministic for a fixed configuration") {
    const SearchConfig cfg = budget_config(4000);
    const SearchResult r1 = maximize_a5(ClassKind::starlike, PhiSpec::sqrt1p(), cfg);
    const SearchResult r2 = maximize_a5(ClassKind::starlike, PhiSpec::sqrt1p(), cfg);
    CHECK(r1.objective == r2.objective);
    REQUIRE(r1.history.size() == r2.history.size());
    for (std::size_t i = 0; i < r1.history.size(); ++i)
        CHECK(r1.history[i] == r2.history[i]);
    CHECK(r1.witness.is_identity == r2.witness.is_identity);
    REQUIRE(r1.witness.measure.atoms.size() == r2.witness.measure.atoms.size());
    for (std::size_t i = 0; i < r1.witness.measure.atoms.size(); ++i) {
        CHECK(r1.witness.measure.atoms[i].weight == r2.witness.measure.atoms[i].weight);
        CHECK(r1.witness.measure.atoms[i].angle == r2.witness.measure.atoms[i].angle);
    }
}

TEST_CASE("a larger budget never worsens the result") {
    double prev = -1.0;
    for (std::uint64_t budget : {6000ull, 12000ull, 24000ull}) {
        const SearchResult r =
            extremize_t31(ClassKind::starlike, PhiSpec::sqrt1p(),
                          Direction::minimize, budget_config(budget));
        if (prev >= 0.0) CHECK(r.objective <= prev + 1e-15);
        prev = r.objective;
    }

    prev = -1.0;
    for (std::uint64_t budget : {6000ull, 12000ull, 24000ull}) {
        const SearchResult r = maximize_a5(ClassKind::convex, PhiSpec::sqrt1p(),
                                           budget_config(budget));
        if (prev >= 0.0) CHECK(r.objective >= prev - 1e-15);
        prev = r.objective;
    }
}

TEST_CASE("reported witnesses reproduce reported objectives") {
    const SearchResult a = maximize_a5(ClassKind::starlike, PhiSpec::sg(),
                                       budget_config(4000));
    CHECK(std::abs(reevaluate(ClassKind::starlike, PhiSpec::sg(), a.witness, false) -
                   a.objective) < 1e-12);

    const SearchResult t =
        extremize_t31(ClassKind::convex, PhiSpec::sqrt1p(), Direction::minimize,
                      budget_config(4000));
    CHECK(std::abs(reevaluate(ClassKind::convex, PhiSpec::sqrt1p(), t.witness, true) -
                   t.objective) < 1e-12);
}

TEST_CASE("fifth-coefficient search reaches the sharp bound") {
    const SearchResult star = maximize_a5(ClassKind::starlike, PhiSpec::sqrt1p(),
                                          budget_config(20000));
    CHECK(star.objective > 0.1249);
    CHECK(star.objective <= 0.125 + 1e-9);

    const SearchResult cvx = maximize_a5(ClassKind::convex, PhiSpec::exponential(),
                                         budget_config(20000));
    CHECK(cvx.objective > 0.0499);
    CHECK(cvx.objective <= 0.05 + 1e-9);
}

TEST_CASE("extreme Janowski member pushes the coefficient to one") {
    const SearchResult r = maximize_a5(ClassKind::starlike,
                                       PhiSpec::janowski(1.0, -1.0),
                                       budget_config(20000));
    CHECK(r.objective >= 1.0 - 1e-9);
}

TEST_CASE("determinant search brackets the sharp lower bounds") {
    const SearchResult star =
        extremize_t31(ClassKind::starlike, PhiSpec::sqrt1p(), Direction::minimize,
                      budget_config(20000));
    CHECK(star.objective <= 221.0 / 256.0 + 1e-6);
    CHECK(star.objective >= 221.0 / 256.0 - 1e-9);

    const SearchResult sg =
        extremize_t31(ClassKind::starlike, PhiSpec::sg(), Direction::minimize,
                      budget_config(20000));
    CHECK(sg.objective <= 0.875 + 1e-6);
    CHECK(sg.objective >= 0.875 - 1e-9);
}

TEST_CASE("determinant maximum is attained by the identity") {
    const SearchResult r =
        extremize_t31(ClassKind::starlike, PhiSpec::alpha(0.25),
                      Direction::maximize, budget_config(8000));
    CHECK(r.objective == 1.0);
    CHECK(r.witness.is_identity);
}

TEST_CASE("third-coefficient search respects its hypothesis") {
    const SearchResult star = check_a3(ClassKind::starlike, PhiSpec::alpha(0.5),
                                       budget_config(12000));
    CHECK(star.objective > 0.499);
    CHECK(star.objective <= 0.5 + 1e-9);

    const SearchResult cvx = check_a3(ClassKind::convex, PhiSpec::alpha(0.5),
                                      budget_config(12000));
    CHECK(cvx.objective <= 1.0 / 6.0 + 1e-9);

    CHECK(code_of([] {
              check_a3(ClassKind::starlike, PhiSpec::sqrt1p(), budget_config(2000));
          }) == errc::hypothesis_failed);
}

TEST_CASE("every catalog entry survives a soundness sweep") {
    const PhiSpec specs[] = {
        PhiSpec::exponential(),       PhiSpec::sqrt1p(),
        PhiSpec::rl(),                PhiSpec::sg(),
        PhiSpec::janowski(0.0, -0.5), PhiSpec::alpha(0.25),
        PhiSpec::janowski(1.0, -1.0),
    };
    const SearchConfig cfg = budget_config(4000);
    for (const PhiSpec& spec : specs) {
        for (ClassKind kind : {ClassKind::starlike, ClassKind::convex}) {
            CHECK_NOTHROW(maximize_a5(kind, spec, cfg));
            CHECK_NOTHROW(extremize_t31(kind, spec, Direction::minimize, cfg));
            CHECK_NOTHROW(extremize_t31(kind, spec, Direction::maximize, cfg));
        }
    }
}

TEST_CASE("search configuration is validated") {
    SearchConfig cfg;
    cfg.budget = 2;
    cfg.restarts = 4;
    CHECK(code_of([&] { maximize_a5(ClassKind::starlike, PhiSpec::sqrt1p(), cfg); }) ==
          errc::bad_spec);
    cfg.budget = 100;
    cfg.restarts = 0;
    CHECK(code_of([&] { maximize_a5(ClassKind::starlike, PhiSpec::sqrt1p(), cfg); }) ==
          errc::bad_spec);
}
