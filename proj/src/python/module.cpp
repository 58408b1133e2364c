#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/isomorphism.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/onegen.hpp"
#include "leibniz/verify.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

using Basis = std::vector<Vec>;

// The lattice keeps the algebra alongside so dumps can use its labels.
struct PyLattice {
    LeibnizAlgebra algebra;
    SubalgebraLattice lattice;
};

Vec reduce(const PrimeField& F, const std::vector<std::int64_t>& xs) {
    Vec v;
    v.reserve(xs.size());
    for (auto x : xs) v.push_back(F.reduce(x));
    return v;
}

Vec checked(const LeibnizAlgebra& L, const std::vector<std::int64_t>& xs) {
    if (xs.size() != L.dim()) throw DimensionMismatch("vector has " + std::to_string(xs.size()) +
                                                      " coordinates, algebra has dimension " + std::to_string(L.dim()));
    return reduce(L.field(), xs);
}

OneGeneratorData onegen(std::uint32_t p, const std::string& poly) {
    const PrimeField F(p);
    return one_generator_algebra(F, parse_polynomial(F, poly));
}

py::tuple signature_tuple(const Signature& s) { return py::make_tuple(s.r, s.chain_lengths, s.degrees); }

py::dict kernel_report(const KernelCheckReport& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["isomorphic"] = r.isomorphic;
    d["isomorphisms_seen"] = r.isomorphisms_seen;
    d["cap_hit"] = r.cap_hit;
    d["targeted_searches"] = r.targeted_searches;
    if (r.witness) {
        d["witness"] = r.witness->image;
        d["expected_node"] = r.expected_node;
        d["mapped_node"] = r.mapped_node;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

std::optional<py::tuple> pentagon_tuple(const Lattice& lat) {
    auto p = find_pentagon(lat);
    if (!p) return std::nullopt;
    return py::make_tuple(p->bottom, p->low, p->high, p->side, p->top);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Leibniz algebras over prime fields and their subalgebra lattices";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IdentityFailure>(m, "IdentityFailure", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

    py::class_<LeibnizAlgebra>(m, "Algebra")
        .def(py::init([](std::uint32_t p, std::size_t dim) { return LeibnizAlgebra(PrimeField(p), dim); }),
             py::arg("p"), py::arg("dim"))
        .def_static("from_json", &parse_algebra, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_algebra(path); }, py::arg("path"))
        .def("to_json", &serialize_algebra)
        .def_property_readonly("p", [](const LeibnizAlgebra& L) { return L.field().p(); })
        .def_property_readonly("dim", &LeibnizAlgebra::dim)
        .def_property_readonly("labels", [](const LeibnizAlgebra& L) {
            std::vector<std::string> out;
            for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(L.label(i));
            return out;
        })
        .def("product", [](const LeibnizAlgebra& L, std::size_t i, std::size_t j) {
            if (i >= L.dim() || j >= L.dim()) throw py::index_error("basis index out of range");
            auto s = L.product(i, j);
            return Vec(s.begin(), s.end());
        })
        .def("set_product",
             [](LeibnizAlgebra& L, std::size_t i, std::size_t j, const std::vector<std::int64_t>& v) {
                 if (i >= L.dim() || j >= L.dim()) throw py::index_error("basis index out of range");
                 L.set_product(i, j, checked(L, v));
             })
        .def("multiply", [](const LeibnizAlgebra& L, const std::vector<std::int64_t>& x,
                            const std::vector<std::int64_t>& y) { return L.multiply(checked(L, x), checked(L, y)); })
        .def("is_leibniz", [](const LeibnizAlgebra& L) { return check_left_leibniz(L).holds; })
        .def("failing_triple", [](const LeibnizAlgebra& L) { return check_left_leibniz(L).failing_triple; })
        .def("kernel", [](const LeibnizAlgebra& L) { return leibniz_kernel(L).basis(); })
        .def("is_lie", &is_lie)
        .def("format", [](const LeibnizAlgebra& L, const std::vector<std::int64_t>& v) {
            return format_vector(L, checked(L, v));
        })
        .def("__eq__", [](const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a == b; })
        .def("__repr__", [](const LeibnizAlgebra& L) {
            return "<Algebra p=" + std::to_string(L.field().p()) + " dim=" + std::to_string(L.dim()) + ">";
        });

    py::class_<PyLattice>(m, "Lattice")
        .def_property_readonly("size", [](const PyLattice& l) { return l.lattice.size(); })
        .def("__len__", [](const PyLattice& l) { return l.lattice.size(); })
        .def_property_readonly("nodes", [](const PyLattice& l) {
            std::vector<Basis> out;
            for (const auto& s : l.lattice.nodes()) out.push_back(s.basis());
            return out;
        })
        .def_property_readonly("labels", [](const PyLattice& l) {
            std::vector<std::string> out;
            for (const auto& s : l.lattice.nodes()) out.push_back(format_subspace(l.algebra, s));
            return out;
        })
        .def_property_readonly("kernel_node", [](const PyLattice& l) { return l.lattice.kernel_node(); })
        .def_property_readonly("covers", [](const PyLattice& l) { return l.lattice.covers(); })
        .def_property_readonly("top", [](const PyLattice& l) { return l.lattice.top(); })
        .def_property_readonly("bottom", [](const PyLattice& l) { return l.lattice.bottom(); })
        .def("leq", [](const PyLattice& l, std::size_t x, std::size_t y) {
            if (x >= l.lattice.size() || y >= l.lattice.size()) throw py::index_error("node index out of range");
            return l.lattice.order().leq(x, y);
        })
        .def("maximal", [](const PyLattice& l) { return maximal_subalgebras(l.lattice.order()); })
        .def("pentagon", [](const PyLattice& l) { return pentagon_tuple(l.lattice.order()); })
        .def("is_modular", [](const PyLattice& l) { return !find_pentagon(l.lattice.order()); })
        .def("to_json", [](const PyLattice& l) { return lattice_json(l.algebra, l.lattice); })
        .def("to_dot", [](const PyLattice& l) { return lattice_dot(l.algebra, l.lattice); });

    m.def("lattice", [](const LeibnizAlgebra& L) { return PyLattice{L, build_lattice(L)}; }, py::arg("algebra"));
    m.def("isomorphic", [](const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        return are_isomorphic(build_lattice(a).order(), build_lattice(b).order());
    });
    m.def("kernel_fixed",
          [](const LeibnizAlgebra& L, std::size_t cap) { return kernel_report(verify_kernel_fixed(build_lattice(L), cap)); },
          py::arg("algebra"), py::arg("cap") = 10'000);
    m.def("kernel_pair",
          [](const LeibnizAlgebra& a, const LeibnizAlgebra& b, std::size_t cap) {
              return kernel_report(verify_kernel_pair(build_lattice(a), build_lattice(b), cap));
          },
          py::arg("a"), py::arg("b"), py::arg("cap") = 10'000);

    m.def("diamond", [](std::uint32_t p) { return diamond_algebra(PrimeField(p)); }, py::arg("p") = 2);
    m.def("single_chain", [](std::uint32_t p) { return single_chain_example(PrimeField(p)); }, py::arg("p") = 2);

    m.def("one_generator", [](std::uint32_t p, const std::string& poly) { return onegen(p, poly).algebra; },
          py::arg("p"), py::arg("poly"));
    m.def("signature", [](std::uint32_t p, const std::string& poly) { return signature_tuple(signature(onegen(p, poly))); },
          py::arg("p"), py::arg("poly"));
    m.def("signature_string", [](std::uint32_t p, const std::string& poly) { return signature(onegen(p, poly)).to_string(); },
          py::arg("p"), py::arg("poly"));
    m.def("nilpotent_generator", [](std::uint32_t p, const std::string& poly) { return nilpotent_generator(onegen(p, poly)); },
          py::arg("p"), py::arg("poly"));
    m.def("classify", [](std::uint32_t p, const std::string& poly) {
        std::vector<Basis> out;
        for (const auto& s : classify_subalgebras_onegen(onegen(p, poly))) out.push_back(s.basis());
        return out;
    }, py::arg("p"), py::arg("poly"));
    m.def("find_generator", &find_generator, py::arg("algebra"));
    m.def("diamond_witness", [](const LeibnizAlgebra& L) -> std::optional<py::tuple> {
        auto w = diamond_witness(L);
        if (!w) return std::nullopt;
        return py::make_tuple(w->b, w->v);
    });

    m.def("verify_json", [](const std::string& spec_text, bool timing) {
        const auto spec = parse_spec_file(spec_text);
        VerificationReport rep;
        {
            py::gil_scoped_release release;
            rep = run_verification(spec.catalogs, spec.options);
        }
        return report_json(rep, timing);
    }, py::arg("spec"), py::arg("timing") = false);
}
