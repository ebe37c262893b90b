// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "monomideal/classify.hpp"
#include "monomideal/decomposition.hpp"
#include "monomideal/resolutions.hpp"
#include "monomideal/simplicial.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

bool run(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > limit_seconds) {
        outcome.ok = false;
        outcome.notes.push_back("runtime limit exceeded");
    }
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << limit_seconds << " s)";
    for (const auto& n : outcome.notes) std::cout << "; " << n;
    std::cout << std::endl;
    return outcome.ok;
}

std::map<int, std::int64_t> kpoly(const BettiTable& t) {
    std::map<int, std::int64_t> out;
    for (const auto& [key, value] : t.entries)
        out[key.second] += (key.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(value);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void counterexample_pipeline(Outcome& out) {
    const auto& I = counterexample();
    out.require(is_generic(I), "is_generic(I) = true");
    const auto J = radical(I);
    out.require(J == ideal(4, "x1*x2, x2*x3, x1*x4, x3*x4"), "radical = (x1x2, x2x3, x1x4, x3x4)");
    const auto dual = alexander_dual_ideal(J);
    out.require(dual == ideal(4, "x1*x3, x2*x4"), "alexander_dual(radical) = (x1x3, x2x4)");
    out.require(!is_componentwise_linear(dual), "dual not componentwise linear");
    out.require(is_scm(I).is_false(), "is_scm(I) = false");
    out.require(is_pretty_clean(I).is_false(), "is_pretty_clean(I) = false");
    DecisionOptions opts;
    opts.want_certificate = true;
    const auto almost = is_almost_clean(I, opts);
    out.require(almost.is_true(), "is_almost_clean(I) = true");
    out.require(almost.certificate.has_value(), "almost clean certificate present");
    if (almost.certificate) {
        const auto& f = std::get<PrimeFiltration>(*almost.certificate);
        out.require(replay(f), "certificate replays");
        out.require(supp_of_filtration(f) == associated_primes(I), "certificate support = Ass(I)");
        out.note(std::to_string(f.steps.size()) + "-step filtration");
    }
}

void terai_example(Outcome& out) {
    const auto& I = terai();
    out.require(alexander_dual_ideal(I) == I, "I = I^dual");
    out.require(is_cm(I).is_true(), "is_cm = true at char 0");
    out.require(is_cm(with_characteristic(I, 2)).is_false(), "is_cm = false at char 2");
    const auto c = complex_of_ideal(I);
    out.require(c.facets().size() == 10, "complex has 10 facets");
    out.require(!is_shellable(c), "complex not shellable (exhaustive search)");
    const auto pretty = is_pretty_clean(I);
    out.require(pretty.is_false(), "is_pretty_clean = false");
    out.require(pretty.route.starts_with("squarefree"), "pretty clean decided by the squarefree route");
}

void eleven_cm(Outcome& out) {
    const auto& I = eleven();
    out.require(I.size() == 25 && I.min_degree() == 2 && I.max_degree() == 2, "25 quadratic generators");
    const bool reisner = reisner_is_cm(complex_of_ideal(I), 0);
    const bool eagon_reiner = has_linear_resolution(alexander_dual_ideal(I));
    out.require(reisner, "Reisner route: CM");
    out.require(eagon_reiner, "Eagon-Reiner route: dual has a linear resolution");
    out.require(is_cm(I).is_true(), "is_cm = true at char 0");
}

void eleven_pretty(Outcome& out, double budget) {
    DecisionOptions opts;
    opts.deadline = Deadline::after(std::chrono::duration<double>(budget));
    const auto v = is_pretty_clean(eleven(), opts);
    out.require(!v.is_true(), "is_pretty_clean is not true");
    out.note(std::string("pretty clean = ") + to_string(v.value) + " [" + v.route + "]");
}

void theorem_harness(Outcome& out) {
    Generator gen(20240601);
    std::vector<MonomialIdeal> squarefree, general;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 6));
        if (k % 5 == 4 && n >= 3)
            squarefree.push_back(gen.single_degree(n, static_cast<int>(n) - 1, 6));
        else
            squarefree.push_back(gen.squarefree(n, 7));
    }
    for (int k = 0; k < 100; ++k) general.push_back(gen.ideal(static_cast<std::size_t>(gen.uniform(2, 4)), 3, 5));
    std::size_t generic_extra = 0;
    while (generic_extra < 50) {
        auto I = gen.ideal(static_cast<std::size_t>(gen.uniform(2, 4)), 3, 4);
        if (is_generic(I) && !I.is_squarefree()) {
            general.push_back(std::move(I));
            ++generic_extra;
        }
    }

    DecisionOptions opts;
    opts.want_certificate = true;
    opts.filtration_search_seconds = 2.0;
    std::size_t generic = 0;
    for (const auto& I : general) generic += is_generic(I);

    const auto sq = harness_check(squarefree, opts);
    const auto gn = harness_check(general, opts);
    out.require(sq.checked >= 200, "at least 200 squarefree ideals checked");
    out.require(gn.checked >= 100, "at least 100 general ideals checked");
    for (const auto& v : sq.violations) out.require(false, v);
    for (const auto& v : gn.violations) out.require(false, v);
    out.note(std::to_string(sq.checked) + " squarefree + " + std::to_string(gn.checked) + " general (" +
             std::to_string(generic) + " generic), " + std::to_string(sq.violations.size() + gn.violations.size()) +
             " violations");
}

void oracle_equivalences(Outcome& out) {
    Generator gen(20240602);
    int decomposition = 0, taylor = 0, polar = 0;
    for (int k = 0; k < 100; ++k) {
        const auto I = gen.ideal(static_cast<std::size_t>(gen.uniform(1, 4)), 3, 5);
        const auto d = irreducible_decomposition(I);
        bool ok = true;
        for (const auto& u : oracle::box(oracle::lcm_bound(I.gens(), I.nvars(), 1)))
            ok = ok && d.contains(u) == oracle::member(I.gens(), u);
        decomposition += ok;
    }
    for (int k = 0; k < 100; ++k) {
        const auto I = gen.squarefree(static_cast<std::size_t>(gen.uniform(2, 7)), 6, k % 3 == 0 ? 2 : 0);
        taylor += kpoly(hochster_betti(I)) == oracle::taylor_kpoly(I);
    }
    for (int k = 0; k < 50; ++k) {
        const auto I = gen.ideal(static_cast<std::size_t>(gen.uniform(1, 3)), 3, 5);
        const auto t = hochster_betti(polarize(I).ideal);
        polar += kpoly(t) == oracle::taylor_kpoly(I) && t == betti_table(I);
    }
    out.require(decomposition == 100, "decomposition oracle " + std::to_string(decomposition) + "/100");
    out.require(taylor == 100, "K-polynomial oracle " + std::to_string(taylor) + "/100");
    out.require(polar == 50, "polarization oracle " + std::to_string(polar) + "/50");
    out.note(std::to_string(decomposition + taylor + polar) + "/250 oracle checks agree");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    double budget = 1800;
    app.add_option("--time-budget", budget, "Seconds for the extended 11-variable pretty-clean search");
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    ok &= run(1, "counterexample pipeline", 10, counterexample_pipeline);
    ok &= run(2, "Terai example", 300, terai_example);
    ok &= run(3, "11-variable example: CM with route agreement", 120, eleven_cm);
    ok &= run(3, "11-variable example: pretty clean under the time budget", budget + 5,
              [&](Outcome& o) { eleven_pretty(o, budget); });
    ok &= run(4, "theorem harness", 900, theorem_harness);
    ok &= run(5, "oracle equivalences", 600, oracle_equivalences);
    return ok ? 0 : 1;
}
