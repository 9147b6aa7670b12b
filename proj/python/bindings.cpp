#include "chenruan/cli.hpp"
#include "chenruan/cr_ring.hpp"
#include "chenruan/expression.hpp"
#include "chenruan/sector_model.hpp"
#include "chenruan/table_io.hpp"
#include "chenruan/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace chenruan;

namespace {

py::object to_python(const BigInt& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_python(const BigRational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_python(q.get_num()), to_python(q.get_den()));
}

BigRational from_python(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list to_python(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coefficients()) out.append(to_python(c.get_num()));
    return out;
}

TwoTorsionLabel label(int g, const std::string& text) { return TwoTorsionLabel::parse(text, g); }

}  // namespace

PYBIND11_MODULE(_chenruan, m) {
    m.doc() = "Exact Chen–Ruan cohomology of the moduli of PSL(2,C)-bundles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("bernoulli", [](unsigned n) { return to_python(bernoulli(n)); }, py::arg("n"));

    m.def("weil_pairing", [](int g, const std::string& x, const std::string& y) {
        return weil_pairing(label(g, x), label(g, y));
    }, py::arg("g"), py::arg("lhs"), py::arg("rhs"));

    m.def("fixed_locus_relation", [](int g, const std::string& x, const std::string& y) {
        return to_string(fixed_locus_relation(label(g, x), label(g, y)));
    }, py::arg("g"), py::arg("lhs"), py::arg("rhs"));

    m.def("enumerate_labels", [](int g) {
        std::vector<std::string> out;
        for (const auto& l : enumerate_labels(g)) out.push_back(l.str());
        return out;
    }, py::arg("g"));

    m.def("degree_shift", [](const std::vector<std::pair<py::object, int>>& entries) {
        std::vector<Eigenvalue> data;
        for (const auto& [a, mult] : entries) data.push_back({from_python(a), mult});
        return to_python(degree_shift(EigenvalueData(std::move(data))));
    }, py::arg("entries"), "Age of a spectrum given as [(fraction, multiplicity), ...].");

    m.def("eigen_data_for", [](int g, const std::string& l) {
        const EigenvalueData data = eigen_data_for(label(g, l));
        py::list out;
        for (const auto& e : data.entries())
            out.append(py::make_tuple(to_python(e.fraction), e.multiplicity));
        return out;
    }, py::arg("g"), py::arg("label"));

    m.def("sector_betti", [](int g, int i) { return to_python(sector_betti(g, i)); }, py::arg("g"), py::arg("i"));

    m.def("obstruction_rank", [](int g, const std::string& a, const std::string& b, const std::string& c) {
        return obstruction_rank(label(g, a), label(g, b), label(g, c));
    }, py::arg("g"), py::arg("l1"), py::arg("l2"), py::arg("l3"));

    m.def("describe_sector", [](int g, const std::string& l) {
        const auto d = describe_sector(label(g, l));
        py::dict out;
        out["label"] = d.label.str();
        out["shift"] = to_python(d.shift);
        out["fixed_locus_complex_dim"] = d.fixed_locus_complex_dim;
        out["covering_genus"] = d.covering_genus;
        out["prym_dim"] = d.prym_dim;
        out["w0_dim"] = d.w0_dim;
        return out;
    }, py::arg("g"), py::arg("label"));

    m.def("constants", [](int g) {
        const auto c = constants(g);
        py::dict out;
        out["thaddeus_number"] = to_python(c.thaddeus_number);
        out["v"] = to_python(c.v);
        return out;
    }, py::arg("g"));

    m.def("untwisted_poincare", [](int g) { return to_python(untwisted_poincare(g)); }, py::arg("g"));
    m.def("cr_poincare", [](int g) { return to_python(cr_poincare(g).polynomial); }, py::arg("g"));

    m.def("normalize", [](const std::string& expr, int g) { return format_class(parse_class(expr, g)); },
          py::arg("expr"), py::arg("g"), "Parse a class expression and print it in normal form.");

    m.def("table_json", [](int g) {
        if (g > kMaxExhaustiveGenus) throw std::invalid_argument("table export is limited to genus <= 3");
        return to_json(build_table_document(ChenRuanRing(g)));
    }, py::arg("g"));

    m.def("replay_table", [](const std::string& json) {
        const auto doc = table_from_json(json);
        const auto result = replay_products(doc, ChenRuanRing(doc.genus));
        py::dict out;
        out["checked"] = result.checked;
        out["mismatches"] = result.mismatches;
        return out;
    }, py::arg("json"), "Recompute every stored product and report mismatches.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_command(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    }, py::arg("args"), "Run a CLI command in-process; returns (status, stdout, stderr).");

    py::class_<ChenRuanRing>(m, "Ring")
        .def(py::init<int>(), py::arg("g"))
        .def_property_readonly("genus", &ChenRuanRing::genus)
        .def("product", [](const ChenRuanRing& r, const std::string& a, const std::string& b) {
            return format_class(r.product(parse_class(a, r.genus()), parse_class(b, r.genus())));
        }, py::arg("lhs"), py::arg("rhs"))
        .def("pair", [](const ChenRuanRing& r, const std::string& a, const std::string& b) {
            return to_python(r.poincare_pair(parse_class(a, r.genus()), parse_class(b, r.genus())));
        }, py::arg("lhs"), py::arg("rhs"))
        .def("three_point", [](const ChenRuanRing& r, const std::string& a, const std::string& b, const std::string& c) {
            const int g = r.genus();
            return to_python(r.three_point(parse_class(a, g), parse_class(b, g), parse_class(c, g)));
        }, py::arg("a"), py::arg("b"), py::arg("c"))
        .def("verify", [](const ChenRuanRing& r, const std::string& suite, std::optional<std::size_t> samples,
                          std::uint64_t seed) {
            const Sampler sampler = samples ? Sampler::seeded(*samples, seed) : Sampler::exhaustive();
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = verify(r, parse_suite(suite), sampler);
            }
            py::dict out;
            out["summary"] = report.summary();
            out["checked"] = report.checked;
            out["violations"] = report.violations;
            return out;
        }, py::arg("suite"), py::arg("samples") = py::none(), py::arg("seed") = 0);
}
