#include "monomideal/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "monomideal/simplicial.hpp"

namespace monomideal {

using nlohmann::ordered_json;

namespace {

/// Text with a position, for error reporting.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char get() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line, column); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_identifier(Cursor& c) {
    std::string out;
    while (!c.done() && ident_char(c.peek())) out += c.get();
    return out;
}

std::uint64_t read_integer(Cursor& c) {
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.get();
    if (digits.empty()) c.fail("expected an integer");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) c.fail("integer out of range");
    return value;
}

Monomial read_monomial(Cursor& c, const Ring& ring) {
    Monomial m = Monomial::unit(ring.size());
    c.skip_space();
    while (true) {
        c.skip_space();
        const std::size_t line = c.line, column = c.column;
        if (c.peek() == '1' && (c.pos + 1 >= c.text.size() || !ident_char(c.text[c.pos + 1]))) {
            c.get();
        } else if (ident_start(c.peek())) {
            const std::string name = read_identifier(c);
            const auto index = ring.index_of(name);
            if (!index) throw ParseError("undeclared variable '" + name + "'", line, column);
            std::uint64_t power = 1;
            c.skip_space();
            if (c.peek() == '^') {
                c.get();
                c.skip_space();
                power = read_integer(c);
            }
            const std::uint64_t total = m[*index] + power;
            if (total > ring.exponent_cap())
                throw ParseError("exponent exceeds the cap " + std::to_string(ring.exponent_cap()), line, column);
            m[*index] = static_cast<Exponent>(total);
        } else {
            c.fail(c.done() ? "unexpected end of input, expected a monomial" : "expected a monomial");
        }
        c.skip_space();
        if (c.peek() != '*') break;
        c.get();
    }
    return m;
}

MonomialIdeal read_ideal(Cursor& c, const RingPtr& ring) {
    c.skip_space();
    if (c.done()) c.fail("empty ideal");
    std::vector<Monomial> gens;
    while (true) {
        gens.push_back(read_monomial(c, *ring));
        c.skip_space();
        if (c.done()) break;
        if (c.peek() != ',') c.fail(std::string("unexpected character '") + c.peek() + "'");
        c.get();
    }
    return MonomialIdeal(ring, std::move(gens));
}

std::vector<Face> read_facets(Cursor& c, const Ring& ring) {
    std::vector<Face> facets;
    c.skip_space();
    if (c.done()) c.fail("empty facet list");
    while (true) {
        c.skip_space();
        if (c.peek() != '{') c.fail("expected '{'");
        c.get();
        Face f = 0;
        c.skip_space();
        while (c.peek() != '}') {
            c.skip_space();
            const std::size_t line = c.line, column = c.column;
            const std::string name = read_identifier(c);
            if (name.empty()) c.fail("expected a vertex name");
            const auto index = ring.index_of(name);
            if (!index) throw ParseError("undeclared variable '" + name + "'", line, column);
            f |= Face{1} << *index;
            c.skip_space();
            if (c.peek() == ',') c.get();
            else if (c.peek() != '}') c.fail("expected ',' or '}'");
        }
        c.get();
        facets.push_back(f);
        c.skip_space();
        if (c.done()) break;
        if (c.peek() != ',') c.fail("expected ','");
        c.get();
    }
    return facets;
}

RingPtr make_ring(std::vector<std::string> names, std::uint32_t characteristic, std::size_t line) {
    try {
        return std::make_shared<const Ring>(std::move(names), characteristic);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, 1);
    }
}

std::vector<std::string> standard_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

/// A `key: value` field, value possibly spanning continuation lines.
struct Field {
    std::string key;
    std::string value;
    std::size_t line = 0;
    std::size_t column = 0;
};

IdealDocument parse_text(std::string_view text) {
    std::vector<Field> fields;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto colon = line.find(':');
        bool keyed = false;
        if (colon != std::string::npos) {
            std::string key = line.substr(first, colon - first);
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
            keyed = !key.empty() && std::all_of(key.begin(), key.end(), ident_char);
            if (keyed) {
                fields.push_back({key, line.substr(colon + 1), line_no, colon + 2});
                continue;
            }
        }
        if (fields.empty()) throw ParseError("expected 'key: value'", line_no, first + 1);
        fields.back().value += "\n" + line;
    }

    auto find = [&](const char* key) -> const Field* {
        const Field* found = nullptr;
        for (const auto& f : fields) {
            if (f.key != key) continue;
            if (found) throw ParseError(std::string("duplicate key '") + key + "'", f.line, 1);
            found = &f;
        }
        return found;
    };
    for (const auto& f : fields) {
        static const char* known[] = {"label", "ring", "char", "ideal", "facets"};
        if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return f.key == k; }))
            throw ParseError("unknown key '" + f.key + "'", f.line, 1);
    }
    auto cursor = [](const Field& f) {
        Cursor c{f.value};
        c.line = f.line;
        c.column = f.column;
        return c;
    };

    std::uint32_t characteristic = 0;
    if (const auto* f = find("char")) {
        Cursor c = cursor(*f);
        c.skip_space();
        const auto value = read_integer(c);
        c.skip_space();
        if (!c.done()) c.fail("trailing characters after the characteristic");
        if (value > 0xffffffffu || (value != 0 && !is_prime_number(value)))
            throw ParseError("characteristic must be 0 or a prime below 2^32", f->line, f->column);
        characteristic = static_cast<std::uint32_t>(value);
    }

    const auto* ring_field = find("ring");
    if (!ring_field) throw ParseError("missing 'ring:' declaration", 1, 1);
    std::vector<std::string> names;
    {
        Cursor c = cursor(*ring_field);
        c.skip_space();
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            names = standard_names(read_integer(c));
        } else {
            while (true) {
                c.skip_space();
                if (!ident_start(c.peek())) c.fail("expected a variable name");
                names.push_back(read_identifier(c));
                c.skip_space();
                if (c.done()) break;
                if (c.peek() != ',') c.fail("expected ','");
                c.get();
            }
        }
        c.skip_space();
        if (!c.done()) c.fail("trailing characters in ring declaration");
    }
    auto ring = make_ring(std::move(names), characteristic, ring_field->line);

    IdealDocument doc;
    if (const auto* f = find("label")) {
        doc.label = f->value;
        const auto a = doc.label.find_first_not_of(" \t\r\n");
        const auto b = doc.label.find_last_not_of(" \t\r\n");
        doc.label = a == std::string::npos ? "" : doc.label.substr(a, b - a + 1);
    }
    const auto* ideal_field = find("ideal");
    const auto* facets_field = find("facets");
    if (ideal_field && facets_field) throw ParseError("give either 'ideal:' or 'facets:', not both", facets_field->line, 1);
    if (ideal_field) {
        Cursor c = cursor(*ideal_field);
        doc.ideal = read_ideal(c, ring);
    } else if (facets_field) {
        Cursor c = cursor(*facets_field);
        auto facets = read_facets(c, *ring);
        doc.ideal = ideal_of_complex(SimplicialComplex(ring->size(), std::move(facets)), ring);
    } else {
        throw ParseError("empty ideal", line_no + 1, 1);
    }
    return doc;
}

IdealDocument parse_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 1, e.byte);
    }
    auto fail = [](const std::string& m) -> void { throw ParseError(m, 1, 1); };
    try {
        std::uint32_t characteristic = j.value("char", 0u);
        if (characteristic != 0 && !is_prime_number(characteristic)) fail("characteristic must be 0 or a prime");
        if (!j.contains("ring")) fail("missing 'ring'");
        std::vector<std::string> names;
        const auto& r = j["ring"];
        if (r.is_number_unsigned()) names = standard_names(r.get<std::size_t>());
        else names = r.get<std::vector<std::string>>();
        auto ring = make_ring(std::move(names), characteristic, 1);

        IdealDocument doc;
        doc.label = j.value("label", std::string());
        if (j.contains("ideal") == j.contains("facets")) fail("give exactly one of 'ideal' and 'facets'");
        if (j.contains("ideal")) {
            const auto gens = j["ideal"].get<std::vector<std::string>>();
            if (gens.empty()) fail("empty ideal");
            std::string joined;
            for (const auto& g : gens) joined += (joined.empty() ? "" : ", ") + g;
            doc.ideal = parse_ideal(joined, ring);
        } else {
            std::vector<Face> facets;
            for (const auto& facet : j["facets"]) {
                Face f = 0;
                for (const auto& name : facet.get<std::vector<std::string>>()) {
                    auto index = ring->index_of(name);
                    if (!index) fail("undeclared variable '" + name + "'");
                    f |= Face{1} << *index;
                }
                facets.push_back(f);
            }
            if (facets.empty()) fail("empty facet list");
            doc.ideal = ideal_of_complex(SimplicialComplex(ring->size(), std::move(facets)), ring);
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

} // namespace

IdealDocument parse_document(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring) {
    Cursor c{text};
    return read_ideal(c, ring);
}

Monomial parse_monomial(std::string_view text, const Ring& ring) {
    Cursor c{text};
    Monomial m = read_monomial(c, ring);
    c.skip_space();
    if (!c.done()) c.fail("trailing characters after monomial");
    return m;
}

std::string render_document(const IdealDocument& doc) {
    const auto& ring = *doc.ring();
    std::string out;
    if (!doc.label.empty()) out += "label: " + doc.label + "\n";
    out += "ring: ";
    for (std::size_t i = 0; i < ring.size(); ++i) out += (i ? ", " : "") + ring.name(i);
    out += "\nchar: " + std::to_string(ring.characteristic()) + "\n";
    out += "ideal: " + to_string(doc.ideal) + "\n";
    return out;
}

ordered_json to_json(const Monomial& u, const Ring& ring) { return to_string(u, ring); }

ordered_json to_json(const MonomialIdeal& ideal) {
    ordered_json out = ordered_json::array();
    for (const auto& g : ideal.gens()) out.push_back(to_string(g, *ideal.ring()));
    return out;
}

ordered_json to_json(const MonomialPrime& p, const Ring& ring) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (p.vars >> i & 1) out.push_back(ring.name(i));
    return out;
}

ordered_json to_json(const Certificate& certificate, const Ring& ring) {
    ordered_json out;
    if (const auto* f = std::get_if<PrimeFiltration>(&certificate)) {
        out["type"] = "prime_filtration";
        ordered_json steps = ordered_json::array();
        for (const auto& s : f->steps)
            steps.push_back({{"u", to_string(s.u, ring)}, {"prime", to_json(s.p, ring)}});
        out["steps"] = std::move(steps);
    } else if (const auto* s = std::get_if<ShellingOrder>(&certificate)) {
        out["type"] = "shelling";
        ordered_json facets = ordered_json::array();
        for (Face f : s->facets) facets.push_back(to_json(MonomialPrime{f}, ring));
        out["facets"] = std::move(facets);
    } else if (const auto* g = std::get_if<GeneratorOrder>(&certificate)) {
        out["type"] = "linear_quotients";
        ordered_json order = ordered_json::array();
        for (const auto& u : g->gens) order.push_back(to_string(u, ring));
        out["order"] = std::move(order);
    }
    return out;
}

ordered_json to_json(const Verdict& verdict, const Ring& ring) {
    ordered_json out;
    if (verdict.decided()) out["value"] = verdict.is_true();
    else out["value"] = "undecided";
    out["route"] = verdict.route;
    if (verdict.certificate) out["certificate"] = to_json(*verdict.certificate, ring);
    return out;
}

ordered_json to_json(const BettiTable& table) {
    ordered_json out = ordered_json::array();
    for (const auto& [key, value] : table.entries) out.push_back({{"i", key.first}, {"j", key.second}, {"rank", value}});
    return out;
}

ordered_json to_json(const ClassificationReport& report, const std::string& label) {
    const auto& ring = *report.ideal.ring();
    ordered_json out;
    out["label"] = label;
    out["char"] = report.characteristic;
    out["ring"] = ring.names();
    out["ideal"] = to_json(report.ideal);
    ordered_json ass = ordered_json::array(), min = ordered_json::array();
    for (const auto& p : report.associated) ass.push_back(to_json(p, ring));
    for (const auto& p : report.minimal) min.push_back(to_json(p, ring));
    out["associated_primes"] = std::move(ass);
    out["minimal_primes"] = std::move(min);
    out["dim"] = report.dimension;
    if (report.complex_dimension) out["complex_dim"] = *report.complex_dimension;
    ordered_json verdicts;
    for (const auto& [name, v] : report.verdicts) verdicts[name] = to_json(v, ring);
    out["verdicts"] = std::move(verdicts);
    return out;
}

std::string render_certificate(const Certificate& certificate, const Ring& ring) {
    std::string out;
    if (const auto* f = std::get_if<PrimeFiltration>(&certificate)) {
        for (const auto& s : f->steps) out += "  adjoin " + to_string(s.u, ring) + "  colon " + to_string(s.p, ring) + "\n";
    } else if (const auto* s = std::get_if<ShellingOrder>(&certificate)) {
        for (Face f : s->facets) out += "  " + to_string(f, ring) + "\n";
    } else if (const auto* g = std::get_if<GeneratorOrder>(&certificate)) {
        for (const auto& u : g->gens) out += "  " + to_string(u, ring) + "\n";
    }
    return out;
}

std::string render_betti(const BettiTable& table) {
    std::string out;
    for (const auto& [key, value] : table.entries)
        out += "beta_" + std::to_string(key.first) + "," + std::to_string(key.second) + " = " + std::to_string(value) + "\n";
    return out;
}

std::string render_report(const ClassificationReport& report, const std::string& label, bool certificates) {
    const auto& ring = *report.ideal.ring();
    std::string out;
    if (!label.empty()) out += "label: " + label + "\n";
    out += "ideal: " + to_string(report.ideal) + "\n";
    out += "char: " + std::to_string(report.characteristic) + "\n";
    out += "associated primes:";
    for (const auto& p : report.associated) out += " " + to_string(p, ring);
    out += "\nminimal primes:";
    for (const auto& p : report.minimal) out += " " + to_string(p, ring);
    out += "\ndim R/I: " + std::to_string(report.dimension) + "\n";
    for (const auto& [name, v] : report.verdicts) {
        out += name + ": " + to_string(v.value) + "  [" + v.route + "]\n";
        if (certificates && v.certificate) out += render_certificate(*v.certificate, ring);
    }
    return out;
}

} // namespace monomideal
