#include "sakaguchi/extremal.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace sakaguchi {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double audit_slack = 1e-9;

struct SplitMix {
    std::uint64_t s;

    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), fully determined by the state; no library
    // distributions so streams are identical across platforms
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    return seed * 0x9E3779B97F4A7C15ULL +
           0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(restart + 1);
}

enum class Objective { a5_abs, t31_value, a3_abs };

struct EvalContext {
    ClassKind kind;
    Series phi;      // order 5
    Objective obj;
    double sign = 1.0; // +1 maximize, -1 minimize (applied to the score)
};

struct Candidate {
    bool is_identity = false;
    AtomicMeasure measure;
};

Series candidate_series(const Candidate& c) {
    if (c.is_identity) return Series::one(5);
    return atom_series(c.measure, 5);
}

// reported objective value (before direction sign)
double raw_objective(const EvalContext& ctx, const Candidate& c) {
    const CoeffVector a = solve_coeffs(ctx.kind, ctx.phi, candidate_series(c), 5);
    switch (ctx.obj) {
        case Objective::a5_abs: return std::abs(a[5]);
        case Objective::t31_value: return t31(a[2], a[3]);
        case Objective::a3_abs: return std::abs(a[3]);
    }
    return 0.0;
}

struct RestartState {
    Candidate best;
    double best_score = -1e300;
    double best_value = 0.0;
    std::uint64_t evals_left = 0;
    int sweeps_done = 0;
};

bool try_candidate(const EvalContext& ctx, RestartState& st, const Candidate& c) {
    if (st.evals_left == 0) return false;
    --st.evals_left;
    const double value = raw_objective(ctx, c);
    const double score = ctx.sign * value;
    if (score > st.best_score) {
        st.best_score = score;
        st.best_value = value;
        st.best = c;
    }
    return true;
}

double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

void normalize_weights(AtomicMeasure& m) {
    double sum = 0.0;
    for (Atom& a : m.atoms) {
        if (a.weight < 0.0) a.weight = 0.0;
        sum += a.weight;
    }
    if (sum <= 1e-12) {
        const double w = 1.0 / static_cast<double>(m.atoms.size());
        for (Atom& a : m.atoms) a.weight = w;
        return;
    }
    for (Atom& a : m.atoms) a.weight /= sum;
}

Candidate random_candidate(SplitMix& rng, int atom_count_max) {
    Candidate c;
    const int m = 1 + static_cast<int>(rng.next() %
                                       static_cast<std::uint64_t>(atom_count_max));
    c.measure.atoms.resize(m);
    for (Atom& a : c.measure.atoms) {
        a.angle = two_pi * rng.uniform();
        a.weight = rng.uniform();
    }
    normalize_weights(c.measure);
    return c;
}

Candidate kernel_candidate(int k) {
    Candidate c;
    c.measure.atoms.resize(k);
    for (int j = 0; j < k; ++j) {
        c.measure.atoms[j].weight = 1.0 / static_cast<double>(k);
        c.measure.atoms[j].angle = two_pi * static_cast<double>(j) / k;
    }
    return c;
}

// one cyclic coordinate pass over the incumbent; each probe costs budget
void refine_sweep(const EvalContext& ctx, RestartState& st) {
    if (st.best.is_identity) return;
    const double step_t = (std::numbers::pi / 2.0) * std::pow(0.5, st.sweeps_done);
    const double step_w = 0.5 * std::pow(0.5, st.sweeps_done);
    const std::size_t atoms = st.best.measure.atoms.size();
    for (std::size_t i = 0; i < atoms && st.evals_left > 0; ++i) {
        for (double dt : {step_t, -step_t}) {
            Candidate c = st.best;
            c.measure.atoms[i].angle = wrap_angle(c.measure.atoms[i].angle + dt);
            if (!try_candidate(ctx, st, c)) return;
        }
        if (atoms > 1) {
            for (double dw : {step_w, -step_w}) {
                Candidate c = st.best;
                c.measure.atoms[i].weight += dw;
                normalize_weights(c.measure);
                if (!try_candidate(ctx, st, c)) return;
            }
        }
    }
    ++st.sweeps_done;
}

SearchResult run_search(const EvalContext& ctx, const SearchConfig& cfg) {
    if (cfg.restarts < 1 || cfg.budget < static_cast<std::uint64_t>(cfg.restarts))
        throw error(errc::bad_spec, "need budget >= restarts >= 1");

    SearchResult result;
    double best_score = -1e300;
    for (int r = 0; r < cfg.restarts; ++r) {
        SplitMix rng{restart_seed(cfg.seed, r)};
        RestartState st;
        st.evals_left = cfg.budget / static_cast<std::uint64_t>(cfg.restarts);

        Candidate identity;
        identity.is_identity = true;
        try_candidate(ctx, st, identity);
        for (int k = 1; k <= 4; ++k) try_candidate(ctx, st, kernel_candidate(k));

        while (st.evals_left > 0) {
            for (int i = 0; i < 16 && st.evals_left > 0; ++i)
                try_candidate(ctx, st, random_candidate(rng, cfg.atom_count_max));
            if (st.sweeps_done < cfg.refine_iters) refine_sweep(ctx, st);
        }

        result.history.push_back(st.best_value);
        if (st.best_score > best_score) {
            best_score = st.best_score;
            result.objective = st.best_value;
            result.witness.is_identity = st.best.is_identity;
            result.witness.measure = st.best.measure;
        }
    }
    return result;
}

nlohmann::ordered_json witness_json(const SearchWitness& w) {
    nlohmann::ordered_json j;
    if (w.is_identity) {
        j["type"] = "identity";
        return j;
    }
    j["type"] = "atoms";
    auto& atoms = j["atoms"] = nlohmann::ordered_json::array();
    for (const Atom& a : w.measure.atoms)
        atoms.push_back({{"weight", a.weight}, {"angle", a.angle}});
    return j;
}

[[noreturn]] void report_violation(const char* quantity, const PhiSpec& spec,
                                   ClassKind kind, double objective, double bound,
                                   const SearchWitness& witness) {
    nlohmann::ordered_json dump;
    dump["quantity"] = quantity;
    dump["class_spec"] = to_string(spec);
    dump["kind"] = to_string(kind);
    dump["objective"] = objective;
    dump["bound"] = bound;
    dump["witness"] = witness_json(witness);
    throw error(errc::bound_violation, dump.dump());
}

EvalContext make_context(ClassKind kind, const PhiSpec& spec, Objective obj,
                         double sign) {
    return EvalContext{kind, phi_series(spec, 5), obj, sign};
}

} // namespace

SearchResult maximize_a5(ClassKind kind, const PhiSpec& spec,
                         const SearchConfig& cfg) {
    const PhiCoeffs b = phi_coeffs(spec);
    const SearchResult result =
        run_search(make_context(kind, spec, Objective::a5_abs, 1.0), cfg);
    if (check_conditions(b).a5_conditions_hold()) {
        const double bound = a5_sharp_bound(kind, b.b1);
        if (result.objective > bound + audit_slack)
            report_violation("a5", spec, kind, result.objective, bound,
                             result.witness);
    }
    return result;
}

SearchResult extremize_t31(ClassKind kind, const PhiSpec& spec, Direction dir,
                           const SearchConfig& cfg) {
    const PhiCoeffs b = phi_coeffs(spec);
    const double sign = dir == Direction::maximize ? 1.0 : -1.0;
    const SearchResult result =
        run_search(make_context(kind, spec, Objective::t31_value, sign), cfg);
    if (dir == Direction::maximize) {
        // the upper bound 1 is attained exactly by the identity seed, so the
        // audit tolerance can be much tighter than for the search extrema
        const BoundResult upper = t31_upper(b);
        if (upper.value && result.objective > *upper.value + 1e-12)
            report_violation("t31_upper", spec, kind, result.objective,
                             *upper.value, result.witness);
    } else {
        const BoundResult lower = kind == ClassKind::starlike
                                      ? t31_lower_star(b)
                                      : t31_lower_convex(b);
        if (lower.value && lower.sharp &&
            result.objective < *lower.value - audit_slack)
            report_violation("t31_lower", spec, kind, result.objective,
                             *lower.value, result.witness);
    }
    return result;
}

SearchResult check_a3(ClassKind kind, const PhiSpec& spec,
                      const SearchConfig& cfg) {
    const PhiCoeffs b = phi_coeffs(spec);
    const double bound = a3_bound(kind, b); // throws unless B1 <= |B2|
    const SearchResult result =
        run_search(make_context(kind, spec, Objective::a3_abs, 1.0), cfg);
    if (result.objective > bound + audit_slack)
        report_violation("a3", spec, kind, result.objective, bound,
                         result.witness);
    return result;
}

} // namespace sakaguchi
