// Python face of the core: free functions over plain data.  Ground sets
// travel as label lists, families as lists of label lists, rationals as
// strings, so no C++ object state leaks across the boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "dm/bicycle.hpp"
#include "dm/error.hpp"
#include "dm/matroid.hpp"
#include "dm/poly.hpp"
#include "dm/setsys.hpp"
#include "dm/transition.hpp"

namespace py = pybind11;

namespace {

using namespace dm;

using Labels = std::vector<std::string>;
using Family = std::vector<Labels>;

SetSystem make_system(const Labels& elements, const Family& sets) {
  GroundSet g(elements);
  std::vector<Mask> fam;
  fam.reserve(sets.size());
  for (const Labels& s : sets) fam.push_back(g.subset(s));
  return SetSystem(g, std::move(fam));
}

Family family_out(const SetSystem& M) {
  Family out;
  for (Mask m : M.family()) out.push_back(M.ground().labels_of(m));
  return out;
}

py::dict poly_dict(const Poly& p) {
  py::list coeffs;
  for (const Rational& c : p.coeffs()) coeffs.append(c.str());
  return py::dict(py::arg("pretty") = p.pretty(), py::arg("coeffs") = coeffs);
}

Rational rational_from(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ValidationError("bad rational '" + s + "'");
  }
}

OpKind op_kind(const std::string& name) {
  if (name == "twist") return OpKind::Twist;
  if (name == "loop_complement") return OpKind::LoopC;
  if (name == "dual_pivot") return OpKind::DualPivot;
  if (name == "delete") return OpKind::Delete;
  if (name == "restrict") return OpKind::Restrict;
  throw ValidationError("bad operation '" + name +
                        "' (expected twist, loop_complement, dual_pivot, "
                        "delete or restrict)");
}

py::dict penrose_py(const Labels& elements, const Family& sets,
                    const std::string& method, const Labels& basis) {
  SetSystem S = make_system(elements, sets);
  Poly P;
  if (method == "fundamental") {
    Matroid M = Matroid::from_bases(S);
    Mask Z = basis.empty() ? M.bases().family().front()
                           : M.ground().subset(basis);
    P = penrose_fundamental(M, Z);
  } else if (method == "recursive") {
    P = penrose_recursive(S);
  } else if (method == "direct") {
    P = penrose_direct(S);
  } else {
    throw ValidationError("bad method '" + method +
                          "' (expected direct, recursive or fundamental)");
  }
  return poly_dict(P);
}

py::dict transition_py(const Labels& elements, const Family& sets,
                       const std::string& a, const std::string& b,
                       const std::string& c) {
  TransitionWeights w{rational_from(a), rational_from(b), rational_from(c)};
  return poly_dict(transition_direct(make_system(elements, sets), w));
}

py::dict tutte_py(const Labels& elements, const Family& bases) {
  TuttePoly t = tutte(Matroid::from_bases(make_system(elements, bases)));
  py::list grid;
  for (const auto& row : t.grid()) {
    py::list r;
    for (const Rational& c : row) r.append(c.str());
    grid.append(r);
  }
  return py::dict(py::arg("pretty") = t.pretty(), py::arg("grid") = grid);
}

py::dict tripartition_py(const Labels& elements, const Family& sets) {
  SetSystem S = make_system(elements, sets);
  Tripartition t = tripartition(S);
  const GroundSet& g = S.ground();
  return py::dict(py::arg("P") = g.labels_of(t.P), py::arg("Q") = g.labels_of(t.Q),
                  py::arg("R") = g.labels_of(t.R));
}

py::dict bicycle_py(const Labels& elements, const Family& sets,
                    const Labels& relative) {
  SetSystem S = make_system(elements, sets);
  Mask Y = relative.empty() ? S.ground().full() : S.ground().subset(relative);
  Matroid B = bicycle_matroid(S, Y);
  return py::dict(py::arg("dimension") = bicycle_dimension(S, Y),
                  py::arg("bases") = family_out(B.bases()));
}

Family apply_word_py(const Labels& elements, const Family& sets,
                     const std::vector<std::pair<std::string, Labels>>& word) {
  std::vector<Op> ops;
  ops.reserve(word.size());
  for (const auto& [name, labels] : word) ops.push_back(Op{op_kind(name), labels});
  return family_out(apply_sequence(make_system(elements, sets), ops));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact delta-matroid calculus";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("is_delta_matroid",
        [](const Labels& e, const Family& s) {
          return make_system(e, s).is_delta_matroid();
        },
        py::arg("elements"), py::arg("sets"),
        "symmetric exchange holds for every pair of members");
  m.def("is_vf_safe",
        [](const Labels& e, const Family& s) {
          return make_system(e, s).is_vf_safe();
        },
        py::arg("elements"), py::arg("sets"),
        "every twist of every loop complementation is a delta-matroid");
  m.def("apply_word", &apply_word_py, py::arg("elements"), py::arg("sets"),
        py::arg("word"),
        "apply (op, labels) pairs left to right; ops are twist, "
        "loop_complement, dual_pivot, delete, restrict");
  m.def("p1",
        [](const Labels& e, const Family& s) {
          return poly_dict(p1(make_system(e, s)));
        },
        py::arg("elements"), py::arg("sets"),
        "sum of (-1)^|X| y^{d_{M*X}} over subsets X");
  m.def("penrose", &penrose_py, py::arg("elements"), py::arg("sets"),
        py::arg("method") = "direct", py::arg("basis") = Labels{},
        "Penrose polynomial; method is direct, recursive or fundamental");
  m.def("transition", &transition_py, py::arg("elements"), py::arg("sets"),
        py::arg("a"), py::arg("b"), py::arg("c"),
        "weighted transition polynomial; weights are rational strings");
  m.def("tutte", &tutte_py, py::arg("elements"), py::arg("bases"),
        "Tutte polynomial of the matroid with the given bases");
  m.def("tripartition", &tripartition_py, py::arg("elements"), py::arg("sets"),
        "principal tripartition classes P, Q, R");
  m.def("bicycle", &bicycle_py, py::arg("elements"), py::arg("sets"),
        py::arg("relative") = Labels{},
        "bicycle matroid and bicycle dimension relative to a subset");
}
