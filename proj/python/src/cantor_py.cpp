#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantor/bijection.hpp"
#include "cantor/decimal.hpp"
#include "cantor/diagonal.hpp"
#include "cantor/hotel.hpp"
#include "cantor/pairing.hpp"
#include "cantor/rational_enum.hpp"
#include "cantor/rule.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

// Big integers cross the boundary as decimal text.
py::int_ to_py(const std::string& digits) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::int_ to_py(const Integer& x) { return to_py(x.str()); }
py::int_ to_py(const Natural& x) { return to_py(x.str()); }

Integer integer_from(const py::int_& x) { return Integer::parse(std::string(py::str(x))); }
Natural natural_from(const py::int_& x) { return Natural::parse(std::string(py::str(x))); }

py::tuple rational_to_py(const Rational& r) {
    return py::make_tuple(to_py(r.numerator()), to_py(r.denominator()));
}

Rational rational_from(const py::int_& p, const py::int_& q) {
    return Rational(integer_from(p), integer_from(q));
}

py::object guest_to_py(const std::optional<hotel::Guest>& g) {
    if (!g) return py::none();
    return py::make_tuple(g->cohort, to_py(g->index));
}

py::dict audit_to_py(const hotel::AuditReport& r) {
    py::dict d;
    d["sample"] = r.sample;
    d["ok"] = r.ok();
    d["injective"] = r.injective;
    d["total"] = r.total;
    d["round_trip"] = r.round_trip;
    d["occupancy"] = r.occupancy;
    d["doubling_placement"] = r.doubling_placement ? py::object(py::bool_(*r.doubling_placement)) : py::none();
    return d;
}

py::dict check_to_py(const CheckReport& r) {
    py::list ooc, collisions, missed;
    for (const auto& c : r.out_of_codomain) {
        ooc.append(py::dict(py::arg("input") = to_py(c.input),
                            py::arg("output") = c.output ? py::object(to_py(*c.output)) : py::none(),
                            py::arg("reason") = c.reason));
    }
    for (const auto& c : r.collisions) collisions.append(py::make_tuple(to_py(c.first), to_py(c.second), to_py(c.value)));
    for (const auto& m : r.missed) missed.append(to_py(m));
    py::dict d;
    d["verdict"] = std::string(to_string(r.verdict));
    d["bound"] = r.bound;
    d["window"] = r.window;
    d["out_of_codomain"] = ooc;
    d["out_of_codomain_count"] = r.out_of_codomain_count;
    d["collisions"] = collisions;
    d["collision_count"] = r.collision_count;
    d["missed"] = missed;
    d["missed_count"] = r.missed_count;
    return d;
}

EnumerationOfReals enumeration_from(const std::vector<std::string>& entries) {
    std::vector<DecimalStream> list;
    for (const auto& e : entries) list.push_back(DecimalStream::parse(e));
    return EnumerationOfReals(std::move(list));
}

}  // namespace

PYBIND11_MODULE(_cantor, m) {
    m.doc() = "Countability toolkit: pairings, rational enumeration, diagonalization, Hilbert's hotel";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<CompositionError>(m, "CompositionError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<EvalError>(m, "EvalError", error.ptr());
    py::register_exception<UnknownGuestError>(m, "UnknownGuestError", error.ptr());

    m.def(
        "enumerate",
        [](const std::string& set, std::size_t count) {
            py::list out;
            for (const auto& v : enumerate(parse_set_tag(set), count)) out.append(to_py(v));
            return out;
        },
        py::arg("set"), py::arg("count"), "First `count` members of nat, nat0, even, odd or int.");

    m.def(
        "map",
        [](const std::string& name, const std::vector<py::int_>& values, bool inverse) {
            Bijection f = bijection_by_name(name);
            py::list out;
            for (const auto& v : values) {
                Integer x = integer_from(v);
                out.append(to_py(inverse ? f.inverse(x) : f.forward(x)));
            }
            return out;
        },
        py::arg("name"), py::arg("values"), py::arg("inverse") = false);

    m.def(
        "bijection_sets",
        [](const std::string& name) {
            Bijection f = bijection_by_name(name);
            return py::make_tuple(f.domain().name(), f.codomain().name());
        },
        py::arg("name"), "(domain, codomain) names of a built-in bijection.");

    m.def(
        "rational_at",
        [](const py::int_& n, bool is_signed) {
            Natural k = natural_from(n);
            return rational_to_py(is_signed ? nat_to_rational(k) : nat_to_positive_rational(k));
        },
        py::arg("n"), py::arg("signed") = false);

    m.def(
        "rational_index",
        [](const py::int_& p, const py::int_& q, bool is_signed) {
            Rational r = rational_from(p, q);
            return to_py(is_signed ? rational_to_nat(r) : positive_rational_to_nat(r));
        },
        py::arg("p"), py::arg("q"), py::arg("signed") = false);

    m.def(
        "list_rationals",
        [](std::size_t count) {
            py::list out;
            for (const auto& r : list_positive_rationals(count)) out.append(rational_to_py(r));
            return out;
        },
        py::arg("count"));

    m.def(
        "sqrt_digits", [](const py::int_& n, std::size_t k) { return sqrt_decimal(natural_from(n)).to_string(k); },
        py::arg("n"), py::arg("k"));

    m.def(
        "rational_digits",
        [](const py::int_& p, const py::int_& q, std::size_t k) {
            return rational_to_decimal(rational_from(p, q)).to_string(k);
        },
        py::arg("p"), py::arg("q"), py::arg("k"));

    m.def(
        "diagonal_witness",
        [](const std::vector<std::string>& entries, const std::string& rule, std::optional<std::size_t> digits) {
            auto list = enumeration_from(entries);
            return diagonal_witness(list, rule_by_name(rule)).to_string(digits.value_or(entries.size()));
        },
        py::arg("entries"), py::arg("rule") = "paper", py::arg("digits") = py::none());

    m.def(
        "verify_witness",
        [](const std::vector<std::string>& entries, const std::string& rule, std::optional<std::size_t> upto) {
            auto list = enumeration_from(entries);
            auto witness = diagonal_witness(list, rule_by_name(rule));
            auto report = verify_witness(list, witness, upto.value_or(entries.size()));
            py::list checks;
            for (const auto& c : report.checks) {
                checks.append(py::make_tuple(c.index, c.entry_digit, c.witness_digit, c.differs));
            }
            py::dict d;
            d["all_differ"] = report.all_differ;
            d["truncated"] = report.truncated;
            d["checks"] = checks;
            return d;
        },
        py::arg("entries"), py::arg("rule") = "paper", py::arg("upto") = py::none());

    py::class_<hotel::HotelState>(m, "Hotel")
        .def(py::init([] { return hotel::HotelState::new_full_hotel(); }))
        .def("check_in_one", &hotel::HotelState::check_in_one)
        .def("check_in_finite", [](const hotel::HotelState& s, const py::int_& k) { return s.check_in_finite(natural_from(k)); },
             py::arg("k"))
        .def("check_in_countably_many", &hotel::HotelState::check_in_countably_many)
        .def(
            "room_of",
            [](const hotel::HotelState& s, std::size_t cohort, const py::int_& index) {
                return to_py(s.room_of({cohort, natural_from(index)}));
            },
            py::arg("cohort"), py::arg("index"))
        .def(
            "guest_in", [](const hotel::HotelState& s, const py::int_& room) { return guest_to_py(s.guest_in(natural_from(room))); },
            py::arg("room"))
        .def_property_readonly("newest_cohort", &hotel::HotelState::newest_cohort)
        .def("audit", [](const hotel::HotelState& s, std::uint64_t sample) { return audit_to_py(hotel::audit(s, sample)); },
             py::arg("sample"));

    py::class_<RuleExpr>(m, "Rule")
        .def(py::init([](const std::string& text) { return parse_rule(text); }), py::arg("text"))
        .def("__call__", [](const RuleExpr& r, const py::int_& n) { return to_py(eval_rule(r, integer_from(n))); })
        .def("__str__", [](const RuleExpr& r) { return to_string(r); })
        .def("__repr__", [](const RuleExpr& r) { return "Rule(" + py::repr(py::str(to_string(r))).cast<std::string>() + ")"; })
        .def("sexpr", [](const RuleExpr& r) { return to_sexpr(r); })
        .def(py::self == py::self);

    m.def(
        "check_pairing",
        [](const std::string& rule, const std::string& codomain, std::uint64_t bound) {
            return check_to_py(check_pairing(parse_rule(rule), parse_set_tag(codomain), bound));
        },
        py::arg("rule"), py::arg("codomain"), py::arg("bound"));

    m.def(
        "compare_finite",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
            auto c = compare_finite(a, b);
            py::dict d;
            d["pairings"] = c.pairings;
            d["any_without_remainder"] = c.any_without_remainder;
            d["min_leftover"] = c.min_leftover;
            d["max_leftover"] = c.max_leftover;
            d["leftover_side"] =
                c.leftover_side ? py::object(py::str(*c.leftover_side == Side::a ? "a" : "b")) : py::none();
            d["verdict"] = std::string(to_string(c.verdict));
            d["example"] = c.example.pairs;
            return d;
        },
        py::arg("a"), py::arg("b"));
}
