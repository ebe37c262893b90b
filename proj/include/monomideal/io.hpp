#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monomideal/classify.hpp"
#include "monomideal/decomposition.hpp"
#include "monomideal/monomial.hpp"
#include "monomideal/resolutions.hpp"

namespace monomideal {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Parsed input file: a ring, an ideal over it and a free-form label.
struct IdealDocument {
    MonomialIdeal ideal;
    std::string label;

    const RingPtr& ring() const { return ideal.ring(); }
};

/// Text format, one `key: value` per line, `#` starts a comment:
///
///     label: counterexample
///     ring: x1, x2, x3, x4        (or a variable count: `ring: 4`)
///     char: 0
///     ideal: x1^2*x2, x2^2*x3,
///            x1*x4^2, x3^2*x4
///
/// `facets: {x1,x2,x3}, {x2,x4}` may replace `ideal:`; the document then
/// holds the Stanley–Reisner ideal of that complex. Input starting with `{`
/// is read as JSON with the same keys (`ring` as a list or count, `ideal`
/// as a list of monomial strings, `facets` as lists of names).
IdealDocument parse_document(std::string_view text);

/// Comma-separated monomials over `ring`, e.g. "x1^2*x2, x2*x3".
MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring);
Monomial parse_monomial(std::string_view text, const Ring& ring);

/// Canonical text form; parse_document(render_document(d)) reproduces d.
std::string render_document(const IdealDocument& doc);

nlohmann::ordered_json to_json(const Monomial& u, const Ring& ring);
nlohmann::ordered_json to_json(const MonomialIdeal& ideal);
nlohmann::ordered_json to_json(const MonomialPrime& p, const Ring& ring);
nlohmann::ordered_json to_json(const Certificate& certificate, const Ring& ring);
nlohmann::ordered_json to_json(const Verdict& verdict, const Ring& ring);
nlohmann::ordered_json to_json(const BettiTable& table);
nlohmann::ordered_json to_json(const ClassificationReport& report, const std::string& label);

/// Human-readable certificate, one step per line.
std::string render_certificate(const Certificate& certificate, const Ring& ring);
std::string render_betti(const BettiTable& table);
std::string render_report(const ClassificationReport& report, const std::string& label, bool certificates);

} // namespace monomideal
