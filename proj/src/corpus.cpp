#include "monomideal/corpus.hpp"

#include <chrono>
#include <sstream>

#include "monomideal/classify.hpp"
#include "monomideal/io.hpp"
#include "monomideal/simplicial.hpp"

namespace monomideal {

namespace {

constexpr const char* kCounterexample = R"(label: generic counterexample
ring: x1, x2, x3, x4
char: 0
ideal: x1^2*x2, x2^2*x3, x1*x4^2, x3^2*x4
)";

constexpr const char* kRadical = R"(label: J = radical of the counterexample
ring: x1, x2, x3, x4
char: 0
ideal: x1*x2, x2*x3, x1*x4, x3*x4
)";

constexpr const char* kRadicalDual = R"(label: Alexander dual of J
ring: x1, x2, x3, x4
char: 0
ideal: x1*x3, x2*x4
)";

constexpr const char* kTerai = R"(label: Terai ideal (6-vertex RP2)
ring: x1, x2, x3, x4, x5, x6
char: 0
ideal: x1*x2*x3, x1*x2*x6, x1*x3*x5, x1*x4*x5, x1*x4*x6,
       x2*x3*x4, x2*x4*x5, x2*x5*x6, x3*x4*x6, x3*x5*x6
)";

constexpr const char* kTeraiChar2 = R"(label: Terai ideal over GF(2)
ring: x1, x2, x3, x4, x5, x6
char: 2
ideal: x1*x2*x3, x1*x2*x6, x1*x3*x5, x1*x4*x5, x1*x4*x6,
       x2*x3*x4, x2*x4*x5, x2*x5*x6, x3*x4*x6, x3*x5*x6
)";

constexpr const char* kEleven = R"(label: 11-variable quadratic Cohen-Macaulay ideal
ring: 11
char: 0
ideal: x1*x4, x1*x5, x1*x8, x1*x9, x2*x5, x2*x6, x2*x8, x2*x10, x2*x11,
       x3*x6, x3*x7, x3*x9, x3*x10, x4*x7, x4*x8, x4*x11, x5*x9, x5*x10,
       x5*x11, x6*x8, x6*x9, x6*x11, x7*x10, x7*x11, x9*x11
)";

constexpr const char* kEmbedded = R"(label: (x1^2, x1*x2)
ring: x1, x2
char: 0
ideal: x1^2, x1*x2
)";

} // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"counterexample", kCounterexample,
         {{"generic", Truth::True}, {"almost_clean", Truth::True}, {"clean", Truth::False},
          {"pretty_clean", Truth::False}, {"scm", Truth::False}, {"cm", Truth::False}},
         "x1*x2, x2*x3, x1*x4, x3*x4", "", false},
        {"radical-J", kRadical,
         {{"cm", Truth::False}, {"scm", Truth::False}, {"shellable", Truth::False}, {"pretty_clean", Truth::False}},
         "", "x1*x3, x2*x4", false},
        {"radical-J-dual", kRadicalDual,
         {{"cm", Truth::True}, {"scm", Truth::True}, {"clean", Truth::True}, {"shellable", Truth::True}},
         "", "x1*x2, x2*x3, x1*x4, x3*x4", false},
        {"terai-char0", kTerai,
         {{"cm", Truth::True}, {"scm", Truth::True}, {"shellable", Truth::False}, {"clean", Truth::False},
          {"pretty_clean", Truth::False}},
         "", "x1*x2*x3, x1*x2*x6, x1*x3*x5, x1*x4*x5, x1*x4*x6, x2*x3*x4, x2*x4*x5, x2*x5*x6, x3*x4*x6, x3*x5*x6",
         false},
        {"terai-char2", kTeraiChar2,
         {{"cm", Truth::False}, {"scm", Truth::False}, {"shellable", Truth::False}},
         "", "", false},
        {"eleven-variables", kEleven,
         {{"cm", Truth::True}, {"scm", Truth::True}, {"pretty_clean", Truth::False}},
         "", "", true},
        {"embedded-prime", kEmbedded,
         {{"pretty_clean", Truth::True}, {"almost_clean", Truth::True}, {"clean", Truth::False}, {"s1", Truth::False}},
         "", "", false},
    };
    return corpus;
}


CorpusSummary run_corpus(std::ostream& out, double extended_budget_seconds, bool want_certificate) {
    CorpusSummary summary;
    for (const auto& entry : builtin_corpus()) {
        const auto start = std::chrono::steady_clock::now();
        const auto doc = parse_document(entry.document);
        DecisionOptions options;
        options.want_certificate = want_certificate;
        if (entry.extended)
            options.deadline = Deadline::after(std::chrono::duration<double>(extended_budget_seconds));

        std::vector<std::string> problems;
        bool undecided = false;
        const auto report = classify(doc.ideal, options);
        for (const auto& [name, expected] : entry.expected) {
            const auto* v = report.find(name);
            if (!v) {
                problems.push_back(name + " missing from report");
            } else if (v->value == Truth::Undecided && entry.extended) {
                undecided = true;
            } else if (v->value != expected) {
                problems.push_back(name + " expected " + to_string(expected) + ", got " + to_string(v->value));
            }
        }
        if (!entry.expected_radical.empty() && radical(doc.ideal) != parse_ideal(entry.expected_radical, doc.ring()))
            problems.push_back("radical is " + to_string(radical(doc.ideal)));
        if (!entry.expected_dual.empty() &&
            alexander_dual_ideal(doc.ideal) != parse_ideal(entry.expected_dual, doc.ring()))
            problems.push_back("Alexander dual is " + to_string(alexander_dual_ideal(doc.ideal)));

        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream timing;
        timing.precision(2);
        timing << std::fixed << " (" << seconds << " s)";
        if (!problems.empty()) {
            ++summary.failed;
            out << "FAIL " << entry.name << timing.str();
            for (const auto& p : problems) out << "; " << p;
            out << "\n";
        } else if (undecided) {
            ++summary.undecided;
            out << "UNDECIDED " << entry.name << timing.str() << ": time budget exhausted\n";
        } else {
            ++summary.passed;
            out << "PASS " << entry.name << timing.str() << "\n";
        }
    }
    return summary;
}

} // namespace monomideal
