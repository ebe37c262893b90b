#include "monomideal/filtrations.hpp"

#include <algorithm>
#include <set>

#include "monomideal/classify.hpp"
#include "monomideal/decomposition.hpp"
#include "monomideal/resolutions.hpp"

namespace monomideal {

const char* to_string(FiltrationMode mode) {
    switch (mode) {
    case FiltrationMode::Any: return "any";
    case FiltrationMode::Clean: return "clean";
    case FiltrationMode::Pretty: return "pretty";
    case FiltrationMode::Almost: return "almost";
    }
    return "?";
}

const char* to_string(Truth t) {
    switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Undecided: return "undecided";
    }
    return "?";
}

namespace {

std::vector<Monomial> box_monomials(const Monomial& bound) {
    std::vector<Monomial> out{Monomial::unit(bound.size())};
    for (std::size_t i = 0; i < bound.size(); ++i) {
        const std::size_t existing = out.size();
        for (std::size_t k = 0; k < existing; ++k)
            for (Exponent a = 1; a <= bound[i]; ++a) {
                Monomial m = out[k];
                m[i] = a;
                out.push_back(std::move(m));
            }
    }
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

class FiltrationSearch {
public:
    FiltrationSearch(const MonomialIdeal& base, FiltrationMode mode, const Monomial& bound, const Deadline& deadline)
        : base_(base), mode_(mode), deadline_(deadline), box_(box_monomials(bound)) {
        if (mode_ == FiltrationMode::Clean) allowed_ = minimal_primes(base_);
        if (mode_ == FiltrationMode::Almost) allowed_ = associated_primes(base_);
    }

    std::optional<PrimeFiltration> run() {
        std::vector<PrimeFiltrationStep> steps;
        std::vector<MonomialPrime> floor;
        if (!dfs(base_, steps, floor)) return std::nullopt;
        return PrimeFiltration{base_, std::move(steps)};
    }

private:
    using Key = std::pair<std::vector<Monomial>, std::vector<VarSet>>;

    bool admissible(const MonomialPrime& p, const std::vector<MonomialPrime>& floor) const {
        switch (mode_) {
        case FiltrationMode::Any: return true;
        case FiltrationMode::Clean:
        case FiltrationMode::Almost: return std::find(allowed_.begin(), allowed_.end(), p) != allowed_.end();
        case FiltrationMode::Pretty:
            // A later prime may not strictly contain an earlier one.
            return std::none_of(floor.begin(), floor.end(),
                                [&](const MonomialPrime& q) { return p.strictly_contains(q); });
        }
        return false;
    }

    /// `floor` holds the inclusion-minimal primes used so far (pretty mode only).
    bool dfs(const MonomialIdeal& current, std::vector<PrimeFiltrationStep>& steps,
             std::vector<MonomialPrime>& floor) {
        if (current.is_unit()) return true;
        if (++nodes_ % 256 == 0) deadline_.check("prime filtration search");
        Key key{current.gens(), {}};
        for (const auto& q : floor) key.second.push_back(q.vars);
        if (failed_.contains(key)) return false;

        for (const auto& u : box_) {
            if (current.contains(u)) continue;
            const auto p = colon(current, u).as_prime();
            if (!p || !admissible(*p, floor)) continue;

            auto next_floor = floor;
            if (mode_ == FiltrationMode::Pretty) {
                next_floor.push_back(*p);
                next_floor = minimal_elements(std::move(next_floor));
            }
            steps.push_back({u, *p});
            if (dfs(adjoin(current, u), steps, next_floor)) return true;
            steps.pop_back();
        }
        failed_.insert(std::move(key));
        return false;
    }

    const MonomialIdeal& base_;
    FiltrationMode mode_;
    const Deadline& deadline_;
    std::vector<Monomial> box_;
    std::vector<MonomialPrime> allowed_;
    std::set<Key> failed_;
    std::size_t nodes_ = 0;
};

} // namespace

std::optional<PrimeFiltration> find_prime_filtration(const MonomialIdeal& ideal, FiltrationMode mode,
                                                     std::optional<Monomial> bound, const Deadline& deadline) {
    ideal.require_proper_nonzero("find_prime_filtration");
    const Monomial box = bound ? *bound : ideal.lcm_of_generators();
    if (box.size() != ideal.nvars()) throw AmbientMismatch("search bound has the wrong length");
    FiltrationSearch search(ideal, mode, box, deadline);
    return search.run();
}

bool replay(const PrimeFiltration& filtration) {
    MonomialIdeal current = filtration.base;
    for (const auto& step : filtration.steps) {
        if (current.is_unit() || current.contains(step.u)) return false;
        const auto p = colon(current, step.u).as_prime();
        if (!p || *p != step.p) return false;
        current = adjoin(current, step.u);
    }
    return current.is_unit();
}

std::vector<MonomialPrime> supp_of_filtration(const PrimeFiltration& filtration) {
    std::vector<MonomialPrime> out;
    for (const auto& step : filtration.steps) out.push_back(step.p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool satisfies_mode(const PrimeFiltration& filtration, FiltrationMode mode) {
    const auto supp = supp_of_filtration(filtration);
    switch (mode) {
    case FiltrationMode::Any: return true;
    case FiltrationMode::Clean: return supp == minimal_primes(filtration.base);
    case FiltrationMode::Almost: return supp == associated_primes(filtration.base);
    case FiltrationMode::Pretty: {
        const auto& s = filtration.steps;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[j].p.strictly_contains(s[i].p)) return false;
        return true;
    }
    }
    return false;
}

PrimeFiltration filtration_from_shelling(const MonomialIdeal& ideal, const std::vector<Face>& shelling) {
    const std::size_t n = ideal.nvars();
    const VarSet all = n == 64 ? ~VarSet{0} : (VarSet{1} << n) - 1;
    const auto restrictions = shelling_restrictions(shelling);
    PrimeFiltration f{ideal, {}};
    for (std::size_t k = shelling.size(); k-- > 0;)
        f.steps.push_back({Monomial::from_set(n, restrictions[k]), MonomialPrime{all & ~shelling[k]}});
    return f;
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

Verdict prime_verdict(const MonomialIdeal& ideal) {
    Verdict v{Truth::True, "prime ideal", std::nullopt};
    v.certificate = PrimeFiltration{ideal, {{Monomial::unit(ideal.nvars()), *ideal.as_prime()}}};
    return v;
}

/// Shellability of the Stanley–Reisner complex of a squarefree, non-prime ideal.
Verdict shellability_verdict(const MonomialIdeal& ideal, const DecisionOptions& options, const std::string& route) {
    try {
        const auto shelling = find_shelling(complex_of_ideal(ideal), options.deadline);
        Verdict v{truth(shelling.shellable), route, std::nullopt};
        if (shelling.shellable && options.want_certificate)
            v.certificate = filtration_from_shelling(ideal, shelling.order);
        return v;
    } catch (const BudgetExceeded&) {
        return {Truth::Undecided, route + " (budget exhausted)", std::nullopt};
    }
}

/// Bounded filtration search for a certificate; failure is not a refutation.
std::optional<PrimeFiltration> try_certificate(const MonomialIdeal& ideal, FiltrationMode mode,
                                               const DecisionOptions& options) {
    auto deadline = Deadline::after(std::chrono::duration<double>(options.filtration_search_seconds));
    try {
        return find_prime_filtration(ideal, mode, options.search_bound, deadline);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

void check_generic_support(const MonomialIdeal& ideal, const PrimeFiltration& f) {
    if (is_generic(ideal) && supp_of_filtration(f) != associated_primes(ideal))
        throw InconsistencyError("filtration of a generic ideal with Supp != Ass: " + to_string(ideal));
}

} // namespace

Verdict is_clean(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("is_clean");
    if (ideal.is_prime()) return prime_verdict(ideal);

    const bool generic = is_generic(ideal);
    if (ideal.is_squarefree()) {
        Verdict v = shellability_verdict(ideal, options, "squarefree: shellable complex");
        // Squarefree ideals have Ass = Min, so generic ones are clean.
        if (generic && v.is_false())
            throw InconsistencyError("generic squarefree ideal with a non-shellable complex: " + to_string(ideal));
        return v;
    }

    Verdict v;
    if (!satisfies_S1(ideal)) {
        v = {Truth::False, "embedded associated prime", std::nullopt};
    } else {
        const Verdict pretty = is_pretty_clean(ideal, {options.deadline, false, options.search_bound,
                                                       options.filtration_search_seconds});
        if (generic) {
            v = {Truth::True, "generic: Ass = Min", std::nullopt};
            if (pretty.is_false())
                throw InconsistencyError("generic ideal with Ass = Min that is not pretty clean: " + to_string(ideal));
        } else {
            v = {pretty.value, "Ass = Min and " + pretty.route, std::nullopt};
        }
    }
    if (v.is_true() && options.want_certificate) {
        if (auto f = try_certificate(ideal, FiltrationMode::Clean, options)) {
            check_generic_support(ideal, *f);
            v.certificate = std::move(*f);
        }
    }
    return v;
}

Verdict is_pretty_clean(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("is_pretty_clean");
    if (ideal.is_prime()) return prime_verdict(ideal);
    if (ideal.is_squarefree())
        return shellability_verdict(ideal, options, "squarefree: pretty clean = clean = shellable complex");

    const auto pol = polarize(ideal);
    DecisionOptions inner = options;
    inner.want_certificate = false;
    Verdict v = shellability_verdict(pol.ideal, inner, "polarization: clean polarization");
    if (is_generic(ideal)) {
        const Verdict scm = is_scm(ideal, options);
        if (v.decided() && scm.decided() && v.value != scm.value)
            throw InconsistencyError("generic ideal: pretty clean and sequentially Cohen-Macaulay disagree: " +
                                     to_string(ideal));
        if (!v.decided() && scm.decided()) v = {scm.value, "generic: pretty clean = sequentially CM", std::nullopt};
    }
    if (v.is_true() && options.want_certificate) {
        if (auto f = try_certificate(ideal, FiltrationMode::Pretty, options)) {
            check_generic_support(ideal, *f);
            v.certificate = std::move(*f);
        }
    }
    return v;
}

Verdict is_almost_clean(const MonomialIdeal& ideal, const DecisionOptions& options) {
    ideal.require_proper_nonzero("is_almost_clean");
    if (ideal.is_prime()) return prime_verdict(ideal);

    Verdict v;
    if (is_generic(ideal)) {
        v = {Truth::True, "generic: every prime filtration has Supp = Ass", std::nullopt};
    } else if (satisfies_S1(ideal)) {
        const Verdict clean = is_clean(ideal, {options.deadline, false, options.search_bound,
                                               options.filtration_search_seconds});
        v = {clean.value, "Ass = Min: almost clean = clean", std::nullopt};
    } else {
        const Verdict pretty = is_pretty_clean(ideal, {options.deadline, false, options.search_bound,
                                                       options.filtration_search_seconds});
        if (pretty.is_true()) v = {Truth::True, "pretty clean", std::nullopt};
    }

    const bool search = v.value == Truth::Undecided || (v.is_true() && options.want_certificate);
    if (search) {
        if (auto f = try_certificate(ideal, FiltrationMode::Almost, options)) {
            check_generic_support(ideal, *f);
            if (v.value == Truth::Undecided) v = {Truth::True, "filtration search", std::nullopt};
            v.certificate = std::move(*f);
        } else if (v.value == Truth::Undecided) {
            v.route = "filtration search inconclusive";
        }
    }
    return v;
}

} // namespace monomideal
