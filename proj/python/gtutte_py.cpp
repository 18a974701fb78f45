#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gtutte/ginv.hpp"
#include "gtutte/io.hpp"
#include "gtutte/linbases.hpp"
#include "gtutte/tutte.hpp"
#include "gtutte/verify.hpp"

namespace py = pybind11;
using namespace gtutte;

namespace {

constexpr int kPermutationLimit = 9;

py::object fraction(const Rat& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

// Accepts int, Fraction or a "p/q" string.
Rat to_rat(const py::handle& v) { return parse_rat(py::str(v).cast<std::string>()); }

py::dict ginv_dict(const GInv& v) {
  py::dict out;
  for (const auto& [s, c] : v.coeffs) out[py::str(s.str())] = fraction(c);
  return out;
}

BasisListMatroid bases_matroid(int n, int r, const std::vector<std::vector<int>>& bases) {
  return matroid_from_json(Json{{"n", n}, {"r", r}, {"bases", bases}});
}

BasisKind parse_kind(const std::string& kind) {
  if (kind == "meet") return BasisKind::Meet;
  if (kind == "join") return BasisKind::Join;
  throw py::value_error("kind must be 'meet' or 'join'");
}

GInv checked_ginv(const RankOracle& m, bool unsafe) {
  if (m.size() > kPermutationLimit && !unsafe) {
    throw py::value_error("the permutation sweep is limited to n <= 9; pass unsafe=True to override");
  }
  return g_invariant(m);
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tutte polynomials and G-invariants of freedom matroids";

  py::class_<BiPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_bipoly(text); }), py::arg("text"))
      .def("coeff", [](const BiPoly& p, int i, int j) { return fraction(p.coeff(i, j)); })
      .def("terms",
           [](const BiPoly& p) {
             py::dict out;
             for (const auto& [mono, c] : p.terms()) out[py::make_tuple(mono.x_exp, mono.y_exp)] = fraction(c);
             return out;
           },
           "Mapping (i, j) -> coefficient of x^i y^j.")
      .def("__call__", [](const BiPoly& p, const py::handle& x, const py::handle& y) {
        return fraction(p.eval(to_rat(x), to_rat(y)));
      })
      .def_property_readonly("degree_x", &BiPoly::degree_x)
      .def_property_readonly("degree_y", &BiPoly::degree_y)
      .def("is_zero", &BiPoly::is_zero)
      .def("is_integral", &BiPoly::is_integral)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__hash__", [](const BiPoly& p) { return py::hash(py::str(to_text(p))); })
      .def("__str__", [](const BiPoly& p) { return to_text(p); })
      .def("__repr__", [](const BiPoly& p) { return "Poly('" + to_text(p) + "')"; });

  m.def("tutte", [](const std::string& bits) { return tutte_freedom(BitSeq::parse(bits)).poly; }, py::arg("bits"),
        "Tutte polynomial of the freedom matroid of a 0/1 sequence.");
  m.def("tutte_uniform", [](int r, int n) {
    if (r < 0 || r > n) throw py::value_error("need 0 <= r <= n");
    return tutte_uniform(r, n - r).poly;
  }, py::arg("r"), py::arg("n"));
  m.def("tutte_bases", [](int n, int r, const std::vector<std::vector<int>>& bases) {
    return tutte_oracle(bases_matroid(n, r, bases)).poly;
  }, py::arg("n"), py::arg("r"), py::arg("bases"), "Tutte polynomial of a matroid given by 1-indexed bases.");

  m.def("g_invariant", [](const std::string& bits, bool unsafe) {
    return ginv_dict(checked_ginv(FreedomMatroid(BitSeq::parse(bits)), unsafe));
  }, py::arg("bits"), py::arg("unsafe") = false);
  m.def("g_invariant_bases", [](int n, int r, const std::vector<std::vector<int>>& bases, bool unsafe) {
    return ginv_dict(checked_ginv(bases_matroid(n, r, bases), unsafe));
  }, py::arg("n"), py::arg("r"), py::arg("bases"), py::arg("unsafe") = false);
  m.def("sp", [](const py::object& arg) {
    if (py::isinstance<py::str>(arg)) return sp_symbol(BitSeq::parse(arg.cast<std::string>()));
    GInv v;
    bool first = true;
    for (const auto& [k, c] : arg.cast<py::dict>()) {
      const BitSeq s = BitSeq::parse(py::str(k).cast<std::string>());
      if (first) v = GInv(s.size(), s.weight());
      first = false;
      v.add(s, to_rat(c));
    }
    return sp(v);
  }, py::arg("symbol_or_combination"), "Specialization of a symbol '0101' or a {sequence: coefficient} mapping.");

  m.def("sequences", [](int n, int r) {
    std::vector<std::string> out;
    for (const auto& s : enumerate(n, r)) out.push_back(s.str());
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("dominates", [](const std::string& s, const std::string& t) {
    return dominates(BitSeq::parse(s), BitSeq::parse(t));
  });
  m.def("is_meet_irreducible", [](const std::string& s) { return is_meet_irreducible(BitSeq::parse(s)); });
  m.def("is_join_irreducible", [](const std::string& s) { return is_join_irreducible(BitSeq::parse(s)); });
  m.def("girth", [](const std::string& bits) -> py::object {
    const int g = girth(FreedomMatroid(BitSeq::parse(bits)));
    if (g == kInfiniteGirth) return py::none();
    return py::int_(g);
  }, "Girth of a freedom matroid, None when it has no circuits.");

  m.def("basis", [](int n, int r, const std::string& kind) {
    std::vector<std::string> out;
    for (const auto& s : basis_sequences(n, r, parse_kind(kind))) out.push_back(s.str());
    return out;
  }, py::arg("n"), py::arg("r"), py::arg("kind") = "meet");
  m.def("express", [](const BiPoly& p, int n, int r, const std::string& kind) -> py::object {
    const Expression e = express_in_basis(p, parse_kind(kind), n, r);
    if (!e.coords) return py::none();
    py::dict out;
    for (const auto& [s, c] : *e.coords) out[py::str(s.str())] = fraction(c);
    return out;
  }, py::arg("poly"), py::arg("n"), py::arg("r"), py::arg("kind") = "meet",
        "Coordinates in the chosen basis, or None when the polynomial is outside the span.");
  m.def("span_dimension", &tutte_space_dim, py::arg("n"), py::arg("r"));
  m.def("gamma_matrix", [](int n, int r) { return json_to_py(to_json(gamma_matrix(n, r))); }, py::arg("n"),
        py::arg("r"));
  m.def("relations", [](int n, int r) {
    py::list out;
    for (const auto& rel : relation_generators(n, r)) {
      py::dict d;
      d["tau"] = py::int_(py::str(to_string(rel.tau)));
      d["upper"] = py::make_tuple(rel.upper_top.str(), rel.upper_bottom.str());
      d["diamond"] = py::make_tuple(rel.diamond.top().str(), rel.diamond.left().str(), rel.diamond.right().str(),
                                    rel.diamond.bottom().str());
      d["lhs"] = rel.lhs();
      d["rhs"] = rel.rhs();
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("r"));

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, const std::string& data_dir, int max_n, std::uint64_t seed,
                     int samples) {
    SuiteOptions opts;
    opts.data_dir = data_dir;
    opts.max_n = max_n;
    opts.seed = seed;
    opts.samples = samples;
    return json_to_py(to_json(run_suite(suite, opts)));
  }, py::arg("suite"), py::arg("data_dir") = "", py::arg("max_n") = -1, py::arg("seed") = 20240601,
        py::arg("samples") = -1);
}
