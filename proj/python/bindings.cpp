#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monomideal/classify.hpp"
#include "monomideal/decomposition.hpp"
#include "monomideal/io.hpp"
#include "monomideal/resolutions.hpp"
#include "monomideal/simplicial.hpp"

namespace py = pybind11;
using namespace monomideal;

namespace {

MonomialIdeal make_ideal(const std::string& gens, const py::object& ring, std::uint32_t characteristic) {
    RingPtr r;
    if (py::isinstance<py::int_>(ring))
        r = Ring::standard(ring.cast<std::size_t>(), characteristic);
    else
        r = std::make_shared<const Ring>(ring.cast<std::vector<std::string>>(), characteristic);
    return parse_ideal(gens, r);
}

std::vector<std::string> strings(const MonomialIdeal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.gens()) out.push_back(to_string(g, *I.ring()));
    return out;
}

std::vector<std::vector<std::string>> primes(const std::vector<MonomialPrime>& ps, const MonomialIdeal& I) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : ps) out.push_back(strings(MonomialIdeal::from_prime(I.ring(), p)));
    return out;
}

DecisionOptions options(std::optional<double> time_budget, bool certificate) {
    DecisionOptions o;
    o.want_certificate = certificate;
    if (time_budget && *time_budget > 0) {
        o.deadline = Deadline::after(std::chrono::duration<double>(*time_budget));
        o.filtration_search_seconds = std::min(o.filtration_search_seconds, *time_budget);
    }
    return o;
}

std::map<std::pair<int, int>, std::uint64_t> betti(const BettiTable& t) { return t.entries; }

// Verdicts and reports cross the boundary as JSON text; the Python layer decodes them.
template <Verdict (*F)(const MonomialIdeal&, const DecisionOptions&)>
void def_verdict(py::module_& m, const char* name, const char* doc) {
    m.def(
        name,
        [](const MonomialIdeal& I, std::optional<double> time_budget, bool certificate) {
            Verdict v;
            {
                py::gil_scoped_release release;
                v = F(I, options(time_budget, certificate));
            }
            return to_json(v, *I.ring()).dump();
        },
        py::arg("ideal"), py::arg("time_budget") = py::none(), py::arg("certificate") = false, doc);
}

} // namespace

PYBIND11_MODULE(_monomideal, m) {
    m.doc() = "Monomial ideals: decompositions, Betti numbers, cleanness and Cohen-Macaulay tests";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init(&make_ideal), py::arg("gens"), py::arg("ring"), py::arg("characteristic") = 0,
             "Ideal from generator text like \"x1^2*x2, x3\"; ring is a variable count or a list of names.")
        .def_property_readonly("gens", &strings)
        .def_property_readonly("nvars", &MonomialIdeal::nvars)
        .def_property_readonly("variables", [](const MonomialIdeal& I) { return I.ring()->names(); })
        .def_property_readonly("characteristic", [](const MonomialIdeal& I) { return I.ring()->characteristic(); })
        .def("is_squarefree", &MonomialIdeal::is_squarefree)
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_unit", &MonomialIdeal::is_unit)
        .def("contains", [](const MonomialIdeal& I, const std::string& u) { return contains(I, parse_monomial(u, *I.ring())); })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__str__", [](const MonomialIdeal& I) { return to_string(I); })
        .def("__repr__", [](const MonomialIdeal& I) { return "Ideal(" + to_string(I) + ")"; });

    m.def("parse_document", [](const std::string& text) {
        auto doc = parse_document(text);
        return py::make_tuple(doc.ideal, doc.label);
    }, py::arg("text"), "Parse the text or JSON input format; returns (ideal, label).");
    m.def("render_document", [](const MonomialIdeal& I, const std::string& label) {
        return render_document({I, label});
    }, py::arg("ideal"), py::arg("label") = "");
    m.def("with_characteristic", py::overload_cast<const MonomialIdeal&, std::uint32_t>(&with_characteristic));

    m.def("radical", &radical);
    m.def("intersect", &intersect);
    m.def("ideal_sum", &sum);
    m.def("product", &product);
    m.def("colon", [](const MonomialIdeal& I, const std::string& u) { return colon(I, parse_monomial(u, *I.ring())); });
    m.def("is_generic", &is_generic);
    m.def("alexander_dual", &alexander_dual_ideal);
    m.def("polarize", [](const MonomialIdeal& I) {
        auto p = polarize(I);
        return py::make_tuple(p.ideal, p.origin);
    }, "Returns (polarized ideal, [(original variable index, copy index), ...]).");

    m.def("irreducible_decomposition", [](const MonomialIdeal& I) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : irreducible_decomposition(I).components) out.push_back(strings(c.to_ideal(I.ring())));
        return out;
    });
    m.def("associated_primes", [](const MonomialIdeal& I) { return primes(associated_primes(I), I); });
    m.def("minimal_primes", [](const MonomialIdeal& I) { return primes(minimal_primes(I), I); });
    m.def("dim", &dim_quotient);
    m.def("height", &height);
    m.def("satisfies_s1", &satisfies_S1);

    m.def("betti_table", [](const MonomialIdeal& I) { return betti(betti_table(I)); },
          "Graded Betti numbers of the ideal as {(i, j): beta_ij}.");
    m.def("regularity", &regularity);
    m.def("proj_dim", &proj_dim);
    m.def("depth", &depth_quotient);
    m.def("has_linear_resolution", &has_linear_resolution);
    m.def("is_componentwise_linear", &is_componentwise_linear);
    m.def("linear_quotients", [](const MonomialIdeal& I, std::optional<double> time_budget) {
        const auto r = find_linear_quotients(I, options(time_budget, false).deadline);
        if (!r.has_linear_quotients) return std::optional<std::vector<std::string>>{};
        std::vector<std::string> order;
        for (const auto& g : r.order) order.push_back(to_string(g, *I.ring()));
        return std::optional(order);
    }, py::arg("ideal"), py::arg("time_budget") = py::none(), "A linear quotients order, or None.");
    m.def("is_shellable", [](const MonomialIdeal& I, std::optional<double> time_budget) {
        return is_shellable(complex_of_ideal(I), options(time_budget, false).deadline);
    }, py::arg("ideal"), py::arg("time_budget") = py::none(), "Shellability of the Stanley-Reisner complex.");

    def_verdict<&is_cm>(m, "is_cm", "Cohen-Macaulay verdict as JSON.");
    def_verdict<&is_scm>(m, "is_scm", "Sequentially Cohen-Macaulay verdict as JSON.");
    def_verdict<&is_clean>(m, "is_clean", "Clean verdict as JSON.");
    def_verdict<&is_pretty_clean>(m, "is_pretty_clean", "Pretty clean verdict as JSON.");
    def_verdict<&is_almost_clean>(m, "is_almost_clean", "Almost clean verdict as JSON.");

    m.def("classify", [](const MonomialIdeal& I, const std::string& label, std::optional<double> time_budget,
                         bool certificate) {
        ClassificationReport r;
        {
            py::gil_scoped_release release;
            r = classify(I, options(time_budget, certificate));
        }
        return to_json(r, label).dump();
    }, py::arg("ideal"), py::arg("label") = "", py::arg("time_budget") = py::none(), py::arg("certificate") = false);
}
