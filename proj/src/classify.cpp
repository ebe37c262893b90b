#include "monomideal/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "monomideal/decomposition.hpp"
#include "monomideal/resolutions.hpp"
#include "monomideal/simplicial.hpp"

namespace monomideal {

Verdict is_cm(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("is_cm");
    if (!ideal.is_squarefree()) {
        Verdict v = is_cm(polarize(ideal).ideal, options);
        v.route = "via polarization: " + v.route;
        return v;
    }
    const auto characteristic = ideal.ring()->characteristic();
    const bool reisner = reisner_is_cm(complex_of_ideal(ideal), characteristic);
    const bool dual_linear = has_linear_resolution(alexander_dual_ideal(ideal));
    if (reisner != dual_linear)
        throw InconsistencyError("Reisner criterion and Eagon-Reiner route disagree on " + to_string(ideal));
    return {truth(reisner), "squarefree: Reisner criterion = linear resolution of the Alexander dual", std::nullopt};
}

Verdict is_scm(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("is_scm");
    if (ideal.is_squarefree())
        return {truth(is_componentwise_linear(alexander_dual_ideal(ideal))),
                "squarefree: Alexander dual componentwise linear", std::nullopt};

    Verdict v = is_scm(polarize(ideal).ideal, options);
    v.route = "via polarization: " + v.route;
    if (v.is_true() && is_scm(radical(ideal), options).is_false())
        throw InconsistencyError("sequentially Cohen-Macaulay ideal with a non-sCM radical: " + to_string(ideal));
    return v;
}

const Verdict* ClassificationReport::find(const std::string& name) const {
    auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& kv) { return kv.first == name; });
    return it == verdicts.end() ? nullptr : &it->second;
}

const Verdict& ClassificationReport::at(const std::string& name) const {
    if (const auto* v = find(name)) return *v;
    throw std::out_of_range("no verdict named " + name);
}

ClassificationReport classify(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("classify");
    ClassificationReport report;
    report.ideal = ideal;
    report.characteristic = ideal.ring()->characteristic();
    report.associated = associated_primes(ideal);
    report.minimal = minimal_primes(ideal);
    report.dimension = dim_quotient(ideal);

    auto& out = report.verdicts;
    out.emplace_back("generic", Verdict{truth(is_generic(ideal)), "definition", std::nullopt});
    out.emplace_back("s1", Verdict{truth(report.associated.size() == report.minimal.size()),
                                   "Ass = Min", std::nullopt});
    out.emplace_back("cm", is_cm(ideal, options));
    out.emplace_back("scm", is_scm(ideal, options));

    if (ideal.is_squarefree()) {
        const auto complex = complex_of_ideal(ideal);
        report.complex_dimension = complex.dim();
        Verdict shellable;
        if (complex.is_irrelevant()) {
            shellable = {Truth::Undecided, "complex is {∅}", std::nullopt};
        } else {
            try {
                auto s = find_shelling(complex, options.deadline);
                shellable = {truth(s.shellable), "exhaustive shelling search", std::nullopt};
                if (s.shellable) shellable.certificate = ShellingOrder{s.order};
            } catch (const BudgetExceeded&) {
                shellable = {Truth::Undecided, "exhaustive shelling search (budget exhausted)", std::nullopt};
            }
        }
        // Squarefree: clean = pretty clean = shellable, decided once.
        auto from_shelling = [&](const std::string& route) {
            if (ideal.is_prime()) return is_clean(ideal, options);
            Verdict v{shellable.value, route, std::nullopt};
            if (shellable.is_true() && options.want_certificate)
                v.certificate = filtration_from_shelling(ideal, std::get<ShellingOrder>(*shellable.certificate).facets);
            return v;
        };
        out.emplace_back("clean", from_shelling("squarefree: shellable complex"));
        out.emplace_back("pretty_clean", from_shelling("squarefree: pretty clean = clean = shellable complex"));
        Verdict almost = out.back().second;
        almost.route = "squarefree: Ass = Min, almost clean = clean";
        out.emplace_back("almost_clean", std::move(almost));
        if (!options.want_certificate) shellable.certificate.reset();
        out.emplace_back("shellable", std::move(shellable));
    } else {
        out.emplace_back("clean", is_clean(ideal, options));
        out.emplace_back("pretty_clean", is_pretty_clean(ideal, options));
        out.emplace_back("almost_clean", is_almost_clean(ideal, options));
    }

    const auto violations = implication_violations(report);
    if (!violations.empty()) {
        std::string message = "inconsistent verdicts for " + to_string(ideal) + ":";
        for (const auto& v : violations) message += "\n  " + v;
        throw InconsistencyError(message);
    }
    return report;
}

std::vector<std::string> implication_violations(const ClassificationReport& report) {
    std::vector<std::string> out;
    auto value = [&](const char* name) {
        const auto* v = report.find(name);
        return v ? v->value : Truth::Undecided;
    };
    auto implies = [&](const char* a, const char* b) {
        if (value(a) == Truth::True && value(b) == Truth::False)
            out.push_back(std::string(a) + " does not imply " + b);
    };
    auto iff = [&](const char* a, const char* b, const char* why) {
        const Truth x = value(a), y = value(b);
        if (x != Truth::Undecided && y != Truth::Undecided && x != y)
            out.push_back(std::string(a) + " != " + b + " (" + why + ")");
    };

    implies("clean", "pretty_clean");
    implies("pretty_clean", "almost_clean");
    implies("pretty_clean", "scm");
    implies("cm", "scm");
    implies("clean", "s1");

    if (value("generic") == Truth::True) {
        iff("pretty_clean", "scm", "generic ideal");
        iff("cm", "s1", "generic ideal");
        iff("s1", "clean", "generic ideal");
        if (value("almost_clean") == Truth::False) out.push_back("generic ideal that is not almost clean");
    }
    if (report.find("shellable")) {
        iff("clean", "shellable", "squarefree ideal");
        if (report.complex_dimension && *report.complex_dimension <= 1)
            iff("shellable", "scm", "complex of dimension at most one");
    }
    return out;
}

namespace {

std::string describe(const MonomialIdeal& ideal) {
    return "[" + to_string(ideal) + "] over " + std::to_string(ideal.nvars()) + " variables";
}

} // namespace

HarnessDiagnostics harness_check(const std::vector<MonomialIdeal>& sample, const DecisionOptions& options) {
    HarnessDiagnostics diag;
    auto fail = [&](const MonomialIdeal& ideal, const std::string& what) {
        diag.violations.push_back(what + ": " + describe(ideal));
    };

    for (const auto& ideal : sample) {
        if (ideal.is_zero() || ideal.is_unit()) {
            ++diag.skipped;
            continue;
        }
        ++diag.checked;
        try {
            const auto report = classify(ideal, options);
            const std::size_t n = ideal.nvars();

            if (ideal.is_squarefree()) {
                const auto dual = alexander_dual_ideal(ideal);
                const auto complex = complex_of_ideal(ideal);
                if (!complex.is_irrelevant()) {
                    const auto lq = find_linear_quotients(dual, options.deadline);
                    if (lq.has_linear_quotients != report.at("shellable").is_true())
                        fail(ideal, "shellable complex != linear quotients of the Alexander dual");
                    if (lq.has_linear_quotients && !is_componentwise_linear(dual))
                        fail(ideal, "dual has linear quotients but is not componentwise linear");
                }
                const bool single_degree = ideal.min_degree() == ideal.max_degree();
                if (single_degree && ideal.min_degree() + 1 == n) {
                    if (!report.at("pretty_clean").is_true() || !report.at("scm").is_true())
                        fail(ideal, "degree n-1 ideal that is not pretty clean and sCM");
                    if (!is_pretty_clean(dual, options).is_true() || !is_scm(dual, options).is_true())
                        fail(ideal, "Alexander dual of a degree n-1 ideal that is not pretty clean and sCM");
                }
                const bool high_degree = ideal.min_degree() + 2 >= n;
                const bool five_single = n == 5 && single_degree;
                if (high_degree || five_single) {
                    const Verdict pretty = is_pretty_clean(dual, options);
                    const Verdict scm = is_scm(dual, options);
                    if (pretty.decided() && pretty.value != scm.value)
                        fail(ideal, high_degree ? "degree >= n-2: dual sCM != dual pretty clean"
                                                : "n = 5 single degree: dual sCM != dual pretty clean");
                }
            }

            // Any filtration contains Ass in its support; for generic ideals it equals Ass.
            const Deadline short_budget =
                Deadline::after(std::chrono::duration<double>(options.filtration_search_seconds));
            std::optional<PrimeFiltration> f;
            try {
                f = find_prime_filtration(ideal, FiltrationMode::Any, options.search_bound, short_budget);
            } catch (const BudgetExceeded&) {
            }
            if (f) {
                const auto supp = supp_of_filtration(*f);
                if (!replay(*f)) fail(ideal, "filtration does not replay");
                const bool covers = std::all_of(report.associated.begin(), report.associated.end(),
                                                [&](const MonomialPrime& p) {
                                                    return std::find(supp.begin(), supp.end(), p) != supp.end();
                                                });
                if (!covers) fail(ideal, "filtration support misses an associated prime");
                if (report.at("generic").is_true() && supp != report.associated)
                    fail(ideal, "generic ideal with a filtration whose support differs from Ass");
            }
            for (const auto& [name, verdict] : report.verdicts) {
                if (!verdict.certificate) continue;
                if (const auto* pf = std::get_if<PrimeFiltration>(&*verdict.certificate)) {
                    if (!replay(*pf)) fail(ideal, name + " certificate does not replay");
                    if (report.at("generic").is_true() && supp_of_filtration(*pf) != report.associated)
                        fail(ideal, name + " certificate of a generic ideal with Supp != Ass");
                }
            }
        } catch (const InconsistencyError& e) {
            fail(ideal, e.what());
        }
    }
    return diag;
}

} // namespace monomideal
