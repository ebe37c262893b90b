// Command-line front end: reads ideal documents and prints verdicts,
// single-operation results or the corpus check.
//
// Exit codes: 0 done, 1 usage or input error, 2 internal inconsistency,
// 3 undecided under the time budget.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "monomideal/classify.hpp"
#include "monomideal/corpus.hpp"
#include "monomideal/decomposition.hpp"
#include "monomideal/io.hpp"
#include "monomideal/resolutions.hpp"
#include "monomideal/simplicial.hpp"

using namespace monomideal;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUndecided = 3;

struct Settings {
    std::optional<std::uint32_t> characteristic;
    double time_budget = 0;
    bool certificate = false;
    bool json = false;
};

IdealDocument load(const std::string& path, const Settings& settings) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    IdealDocument doc = parse_document(text);
    if (settings.characteristic) doc.ideal = with_characteristic(doc.ideal, *settings.characteristic);
    return doc;
}

DecisionOptions decision_options(const Settings& settings) {
    DecisionOptions options;
    options.want_certificate = settings.certificate;
    if (settings.time_budget > 0) {
        options.deadline = Deadline::after(std::chrono::duration<double>(settings.time_budget));
        options.filtration_search_seconds = std::min(options.filtration_search_seconds, settings.time_budget);
    }
    return options;
}

/// Prints a verdict; returns the exit code it implies.
int emit_verdict(const std::string& command, const IdealDocument& doc, const Verdict& v, const Settings& settings) {
    const auto& ring = *doc.ring();
    if (settings.json) {
        ordered_json out;
        out["command"] = command;
        out["label"] = doc.label;
        out["char"] = ring.characteristic();
        auto body = to_json(v, ring);
        if (!settings.certificate) body.erase("certificate");
        out.update(body);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(v.value) << "\n";
        if (settings.certificate && v.certificate) std::cout << render_certificate(*v.certificate, ring);
    }
    return v.decided() ? kExitOk : kExitUndecided;
}

void emit_ideal(const std::string& command, const IdealDocument& doc, const MonomialIdeal& result, const Settings& settings) {
    if (settings.json) {
        ordered_json out;
        out["command"] = command;
        out["label"] = doc.label;
        out["ring"] = result.ring()->names();
        out["ideal"] = to_json(result);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(result) << "\n";
    }
}

int run_command(const std::string& command, const IdealDocument& doc, const Settings& settings) {
    const auto& ideal = doc.ideal;
    const auto& ring = *doc.ring();
    const auto options = decision_options(settings);

    if (command == "classify") {
        const auto report = classify(ideal, options);
        if (settings.json) {
            std::cout << to_json(report, doc.label).dump() << "\n";
        } else {
            std::cout << render_report(report, doc.label, settings.certificate);
        }
        const bool undecided = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                                           [](const auto& kv) { return !kv.second.decided(); });
        return undecided ? kExitUndecided : kExitOk;
    }
    if (command == "dual") {
        emit_ideal(command, doc, alexander_dual_ideal(ideal), settings);
        return kExitOk;
    }
    if (command == "radical") {
        emit_ideal(command, doc, radical(ideal), settings);
        return kExitOk;
    }
    if (command == "polarize") {
        const auto pol = polarize(ideal);
        if (settings.json) {
            ordered_json out;
            out["command"] = command;
            out["label"] = doc.label;
            out["ring"] = pol.ideal.ring()->names();
            out["ideal"] = to_json(pol.ideal);
            ordered_json origin = ordered_json::array();
            for (const auto& [var, k] : pol.origin) origin.push_back({{"variable", ring.name(var)}, {"copy", k}});
            out["origin"] = std::move(origin);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << to_string(pol.ideal) << "\n";
        }
        return kExitOk;
    }
    if (command == "decompose") {
        const auto d = irreducible_decomposition(ideal);
        if (settings.json) {
            ordered_json comps = ordered_json::array();
            for (const auto& q : d.components) comps.push_back(to_json(q.to_ideal(doc.ring())));
            std::cout << ordered_json{{"command", command}, {"label", doc.label}, {"components", comps}}.dump() << "\n";
        } else {
            for (const auto& q : d.components) std::cout << "(" << to_string(q.to_ideal(doc.ring())) << ")\n";
        }
        return kExitOk;
    }
    if (command == "ass") {
        const auto ass = associated_primes(ideal);
        const auto min = minimal_primes(ideal);
        if (settings.json) {
            ordered_json a = ordered_json::array(), m = ordered_json::array();
            for (const auto& p : ass) a.push_back(to_json(p, ring));
            for (const auto& p : min) m.push_back(to_json(p, ring));
            std::cout << ordered_json{{"command", command}, {"label", doc.label}, {"associated", a}, {"minimal", m}}.dump()
                      << "\n";
        } else {
            for (const auto& p : ass) {
                const bool minimal = std::find(min.begin(), min.end(), p) != min.end();
                std::cout << to_string(p, ring) << (minimal ? "" : "  embedded") << "\n";
            }
        }
        return kExitOk;
    }
    if (command == "betti") {
        const auto table = betti_table(ideal);
        if (settings.json) {
            ordered_json out{{"command", command}, {"label", doc.label}, {"char", ring.characteristic()},
                             {"squarefree", ideal.is_squarefree()}, {"betti", to_json(table)}};
            std::cout << out.dump() << "\n";
        } else {
            if (!ideal.is_squarefree()) std::cout << "# via polarization\n";
            std::cout << render_betti(table);
        }
        return kExitOk;
    }
    if (command == "is-generic")
        return emit_verdict(command, doc, {truth(is_generic(ideal)), "definition", std::nullopt}, settings);
    if (command == "is-cm") return emit_verdict(command, doc, is_cm(ideal, options), settings);
    if (command == "is-scm") return emit_verdict(command, doc, is_scm(ideal, options), settings);
    if (command == "is-clean") return emit_verdict(command, doc, is_clean(ideal, options), settings);
    if (command == "is-pretty-clean") return emit_verdict(command, doc, is_pretty_clean(ideal, options), settings);
    if (command == "is-almost-clean") return emit_verdict(command, doc, is_almost_clean(ideal, options), settings);
    if (command == "is-shellable") {
        ideal.require_squarefree("is-shellable");
        Verdict v{Truth::Undecided, "exhaustive shelling search", std::nullopt};
        try {
            const auto s = find_shelling(complex_of_ideal(ideal), options.deadline);
            v.value = truth(s.shellable);
            if (s.shellable) v.certificate = ShellingOrder{s.order};
        } catch (const BudgetExceeded&) {
            v.route += " (budget exhausted)";
        }
        return emit_verdict(command, doc, v, settings);
    }
    if (command == "linear-quotients") {
        Verdict v{Truth::Undecided, "backtracking over generator orders", std::nullopt};
        try {
            const auto lq = find_linear_quotients(ideal, options.deadline);
            v.value = truth(lq.has_linear_quotients);
            if (lq.has_linear_quotients) v.certificate = GeneratorOrder{lq.order};
        } catch (const BudgetExceeded&) {
            v.route += " (budget exhausted)";
        }
        return emit_verdict(command, doc, v, settings);
    }
    throw std::logic_error("unhandled command " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide structural properties of monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--char", settings.characteristic, "Field characteristic (0 or a prime)");
    app.add_option("--time-budget", settings.time_budget, "Seconds allowed for exhaustive searches")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--certificate", settings.certificate, "Print filtration, shelling or generator-order certificates");
    app.add_flag("--json", settings.json, "JSON output, one object per line");

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"classify", "Full classification report"},
        {"dual", "Alexander dual of a squarefree ideal"},
        {"radical", "Radical"},
        {"decompose", "Irredundant irreducible decomposition"},
        {"ass", "Associated primes (embedded ones marked)"},
        {"betti", "Graded Betti numbers of I"},
        {"polarize", "Polarization"},
        {"is-generic", "Generic monomial ideal test"},
        {"is-cm", "Cohen-Macaulay test"},
        {"is-scm", "Sequentially Cohen-Macaulay test"},
        {"is-clean", "Clean test"},
        {"is-pretty-clean", "Pretty clean test"},
        {"is-almost-clean", "Almost clean test"},
        {"is-shellable", "Shellability of the Stanley-Reisner complex"},
        {"linear-quotients", "Linear quotients test"},
    };
    std::vector<std::string> files;
    for (const auto& [name, description] : commands)
        app.add_subcommand(name, description)->add_option("files", files, "Input documents ('-' for stdin)")->required();
    auto* corpus = app.add_subcommand("corpus", "Check the bundled worked examples against their expected verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (settings.characteristic && *settings.characteristic != 0 && !is_prime_number(*settings.characteristic)) {
        std::cerr << "error: --char must be 0 or a prime\n";
        return kExitUsage;
    }

    try {
        if (corpus->parsed()) {
            const double budget = settings.time_budget > 0 ? settings.time_budget : 1800.0;
            const auto summary = run_corpus(std::cout, budget, settings.certificate);
            std::cout << summary.passed << " passed, " << summary.failed << " failed, " << summary.undecided
                      << " undecided\n";
            if (summary.failed) return kExitInconsistent;
            return summary.undecided ? kExitUndecided : kExitOk;
        }
        const std::string command = app.get_subcommands().front()->get_name();
        int status = kExitOk;
        for (const auto& file : files) status = std::max(status, run_command(command, load(file, settings), settings));
        return status;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
