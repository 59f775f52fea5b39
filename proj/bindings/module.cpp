#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "e2lab/verify.hpp"

namespace py = pybind11;
using namespace e2lab;

namespace pybind11 {
namespace detail {

// cpp_int <-> python int, through the decimal string form.
template <>
struct type_caster<Int> {
public:
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object str = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!str) return false;
        value = Int(str.cast<std::string>());
        return true;
    }

    static handle cast(const Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic, unimodular pairs, and bounded E2-orbit search over "
              "imaginary quadratic orders";

    py::enum_<Form>(m, "Form").value("SQRT", Form::Sqrt).value("HALF", Form::Half);

    py::class_<Ring>(m, "Ring")
        .def(py::init(&make_ring), py::arg("form"), py::arg("D"))
        .def_readonly("form", &Ring::form)
        .def_readonly("D", &Ring::D)
        .def(py::self == py::self)
        .def("__str__", [](const Ring& r) { return to_string(r); })
        .def("__repr__", [](const Ring& r) { return "Ring('" + to_string(r) + "')"; });

    m.def("make_ring", &make_ring, py::arg("form"), py::arg("D"));
    m.def("parse_ring", [](const std::string& s) { return parse_ring(s); });
    m.def("gaussian_order", &gaussian_order, py::arg("d"));
    m.def("half_to_sqrt_partner", &half_to_sqrt_partner, py::arg("D"));

    py::class_<QuadInt>(m, "QuadInt")
        .def(py::init(&qi), py::arg("ring"), py::arg("a"), py::arg("b"))
        .def_readonly("ring", &QuadInt::ring)
        .def_readonly("a", &QuadInt::a)
        .def_readonly("b", &QuadInt::b)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", [](const QuadInt& x) { return to_string(x); })
        .def("__repr__", [](const QuadInt& x) {
            return "QuadInt(" + to_string(x.ring) + ", '" + to_string(x) + "')";
        });

    m.def("qi", &qi, py::arg("ring"), py::arg("a"), py::arg("b"));
    m.def("conj", &conj);
    m.def("norm_sq", &norm_sq);
    m.def("is_unit", &is_unit);
    m.def("parse_quadint", [](const Ring& r, const std::string& s) { return parse_quadint(r, s); });

    py::class_<PellSolution>(m, "PellSolution")
        .def_readonly("x", &PellSolution::x)
        .def_readonly("y", &PellSolution::y)
        .def("__repr__", [](const PellSolution& s) {
            return "PellSolution(x=" + s.x.str() + ", y=" + s.y.str() + ")";
        });
    m.def("pell_fundamental", &pell_fundamental, py::arg("D"));

    py::class_<Mat2>(m, "Mat2")
        .def(py::init(&mat2), py::arg("m11"), py::arg("m12"), py::arg("m21"), py::arg("m22"))
        .def_readonly("m11", &Mat2::m11)
        .def_readonly("m12", &Mat2::m12)
        .def_readonly("m21", &Mat2::m21)
        .def_readonly("m22", &Mat2::m22)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", [](const Mat2& x) { return to_string(x); })
        .def("__repr__", [](const Mat2& x) { return "Mat2('" + to_string(x) + "')"; });

    m.def("identity", &identity);
    m.def("det", &det);
    m.def("inv_sl2", &inv_sl2);
    m.def("is_L2", &is_L2);
    m.def("parse_mat2", [](const Ring& r, const std::string& s) { return parse_mat2(r, s); });

    py::enum_<Side>(m, "Side").value("UPPER", Side::Upper).value("LOWER", Side::Lower);

    py::class_<ElemMove>(m, "ElemMove")
        .def(py::init<Side, QuadInt>(), py::arg("side"), py::arg("t"))
        .def_readonly("side", &ElemMove::side)
        .def_readonly("t", &ElemMove::t);

    py::class_<ElemWord>(m, "ElemWord")
        .def(py::init<>())
        .def_readonly("moves", &ElemWord::moves)
        .def("__len__", [](const ElemWord& w) { return w.size(); })
        .def(py::self == py::self)
        .def("__str__", [](const ElemWord& w) { return to_string(w); })
        .def("__repr__", [](const ElemWord& w) { return "ElemWord('" + to_string(w) + "')"; });

    m.def("normalize_word", &normalize_word);
    m.def("concat", &concat);
    m.def("inverse_word", &inverse_word);
    m.def("elem_matrix", &elem_matrix);
    m.def("to_matrix", &to_matrix, py::arg("word"), py::arg("ring"));
    m.def("s_word", &s_word);
    m.def("s_matrix", &s_matrix);
    m.def("parse_word", [](const Ring& r, const std::string& s) { return parse_word(r, s); });

    py::class_<UniPair>(m, "UniPair")
        .def(py::init(&make_pair), py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &UniPair::alpha)
        .def_readonly("beta", &UniPair::beta)
        .def(py::self == py::self)
        .def("__str__", [](const UniPair& p) { return to_string(p); })
        .def("__repr__", [](const UniPair& p) { return "UniPair('" + to_string(p) + "')"; });

    m.def("act_row", &act_row, py::arg("pair"), py::arg("matrix"));
    m.def("parse_pair", [](const Ring& r, const std::string& s) { return parse_pair(r, s); });

    py::class_<Completion>(m, "Completion").def_readonly("m", &Completion::m);
    m.def("complete_pair", &complete_pair);
    m.def("is_unimodular", &is_unimodular);
    m.def("has_special_norms", &has_special_norms);
    m.def("is_special", &is_special);

    py::class_<SpecialFamilyEntry>(m, "SpecialFamilyEntry")
        .def_readonly("pair", &SpecialFamilyEntry::pair)
        .def_readonly("completion", &SpecialFamilyEntry::completion);
    m.def("special_family", &special_family, py::arg("d"), py::arg("n"));

    m.def("trivial_variants", &trivial_variants);
    m.def("is_trivial_variant", &is_trivial_variant);
    m.def("enumerate_special", &enumerate_special, py::arg("ring"), py::arg("norm_cap"));
    m.def("elements_with_norm_up_to", &elements_with_norm_up_to, py::arg("ring"), py::arg("cap"));

    py::class_<SearchParams>(m, "SearchParams")
        .def(py::init([](Int state_cap, Int gen_cap, std::uint64_t max_states,
                         std::uint64_t max_depth) {
                 SearchParams p{std::move(state_cap), std::move(gen_cap), max_states, max_depth};
                 validate(p);
                 return p;
             }),
             py::arg("state_norm_cap") = Int(400), py::arg("gen_norm_cap") = Int(16),
             py::arg("max_states") = 50000, py::arg("max_depth") = 30)
        .def_readonly("state_norm_cap", &SearchParams::state_norm_cap)
        .def_readonly("gen_norm_cap", &SearchParams::gen_norm_cap)
        .def_readonly("max_states", &SearchParams::max_states)
        .def_readonly("max_depth", &SearchParams::max_depth);

    py::class_<OrbitReport>(m, "OrbitReport")
        .def_readonly("visited", &OrbitReport::visited)
        .def_readonly("frontier_exhausted", &OrbitReport::frontier_exhausted)
        .def("witness", &OrbitReport::witness, py::arg("idx"))
        .def("find", &OrbitReport::find, py::arg("pair"))
        .def("__len__", [](const OrbitReport& r) { return r.visited.size(); });
    m.def("orbit_bfs", &orbit_bfs, py::arg("start"), py::arg("params") = SearchParams{});

    m.def("pairs_equivalent", &pairs_equivalent, py::arg("p"), py::arg("q"),
          py::arg("params") = SearchParams{});

    py::enum_<ReduceOutcome>(m, "ReduceOutcome")
        .value("REDUCED", ReduceOutcome::Reduced)
        .value("STALLED", ReduceOutcome::Stalled);

    py::class_<ReductionResult>(m, "ReductionResult")
        .def_readonly("outcome", &ReductionResult::outcome)
        .def_readonly("final", &ReductionResult::final)
        .def_readonly("word", &ReductionResult::word);
    m.def("reduce_pair", &reduce_pair, py::arg("start"));

    m.def("matrix_in_E2", &matrix_in_E2, py::arg("matrix"), py::arg("params") = SearchParams{});

    py::enum_<CheckStatus>(m, "CheckStatus")
        .value("PASS", CheckStatus::Pass)
        .value("FAIL", CheckStatus::Fail)
        .value("INCONCLUSIVE", CheckStatus::Inconclusive);

    py::class_<Check>(m, "Check")
        .def_readonly("name", &Check::name)
        .def_readonly("claim", &Check::claim)
        .def_readonly("status", &Check::status)
        .def_readonly("witness", &Check::witness);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("ring", &Certificate::ring)
        .def_readonly("suite", &Certificate::suite)
        .def_readonly("checks", &Certificate::checks)
        .def("overall", &Certificate::overall)
        .def("all_pass", &Certificate::all_pass)
        .def("json", [](const Certificate& c) { return certificate_json(c); });

    m.def("family_certificate", &family_certificate, py::arg("d"), py::arg("n_values"));
    m.def("bijection_certificate", &bijection_certificate, py::arg("ring"), py::arg("samples"),
          py::arg("seed"));
    m.def("rigidity_certificate", &rigidity_certificate, py::arg("ring"), py::arg("norm_cap"),
          py::arg("params") = SearchParams{});
    m.def("certificate_from_json", [](const std::string& s) { return certificate_from_json(s); });
    m.def("rerun", &rerun);
}
