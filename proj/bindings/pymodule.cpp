// Python surface: thin wrappers over the exact core.  Exact scalars cross
// the boundary as strings ("p/q"), vectors as lists of strings, algebras as
// the text file format, so no precision is lost.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "axtk/algfile.hpp"
#include "axtk/catalog.hpp"
#include "axtk/cli.hpp"
#include "axtk/decompose.hpp"
#include "axtk/fixtures.hpp"
#include "axtk/forms.hpp"
#include "axtk/idempotents.hpp"
#include "axtk/shapes.hpp"

namespace py = pybind11;
using namespace axtk;

namespace {

Algebra algebra_of(const std::string& text) { return parse_algebra_text(text).algebra; }

Vec vec_of(const Algebra& alg, const std::vector<std::string>& coords) {
  if (coords.size() != alg.dim()) throw Error("coordinate count does not match dimension");
  Vec v;
  for (const auto& s : coords) v.push_back(Scalar::parse(s, alg.field()));
  return v;
}

std::vector<std::string> vec_to_strings(const Vec& v) {
  std::vector<std::string> out;
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

FusionLaw law_of(const std::string& spec) { return parse_law_spec(spec); }

PermGroup group_of(const std::string& name_or_text) {
  if (name_or_text.rfind("fixture:", 0) == 0) return fixture_group(name_or_text.substr(8));
  return parse_group_text(name_or_text);
}

}  // namespace

PYBIND11_MODULE(axtk, m) {
  m.doc() = "exact toolkit for axial algebras: dihedral catalog, fusion checks, "
            "Miyamoto groups, shape diagrams, idempotent searches";

  py::register_exception<Error>(m, "AxtkError");

  m.def("norton_sakuma", [](const std::string& type) {
    auto ns = norton_sakuma(ns_type_from_name(type));
    return serialize_algebra(ns.algebra, ns.axis_names, ns.axes);
  }, py::arg("type"), "Serialized dihedral algebra of the given type (2A..6A).");

  m.def("matsuo", [](const std::string& group, const std::string& eta, size_t cls) {
    PermGroup g = group_of(group);
    auto classes = involution_classes(g);
    if (cls >= classes.size()) throw Error("class index out of range");
    auto ma = matsuo_algebra(g, classes[cls][0], Scalar::parse(eta));
    return serialize_algebra(ma.algebra, ma.algebra.basis_names(), ma.axes);
  }, py::arg("group"), py::arg("eta"), py::arg("cls") = 0,
     "Serialized Matsuo algebra of an involution class of the group.");

  m.def("identity_length", [](const std::string& type) {
    return identity_length(ns_type_from_name(type)).str();
  }, py::arg("type"));

  m.def("check_axis", [](const std::string& algebra_text, const std::vector<std::string>& axis,
                         const std::string& law) {
    Algebra alg = algebra_of(algebra_text);
    FusionLaw l = law_of(law);
    AxisReport r = check_axis(alg, vec_of(alg, axis), l);
    py::dict d;
    d["is_idempotent"] = r.is_idempotent;
    d["is_axis"] = r.is_axis;
    d["is_primitive"] = r.is_primitive;
    py::dict dims;
    for (size_t i = 0; i < l.size(); ++i)
      dims[py::str(l.eigenvalues()[i].str())] = r.eigen_dims[i];
    d["eigen_dims"] = dims;
    d["missing_dim"] = r.missing_dim;
    d["violations"] = r.violations.size();
    return d;
  }, py::arg("algebra"), py::arg("axis"), py::arg("law") = "monster:1/4,1/32");

  m.def("axet", [](const std::string& algebra_text, const std::string& law,
                   const std::vector<size_t>& seeds) {
    AlgebraFile f = parse_algebra_text(algebra_text);
    if (f.axes.empty()) throw Error("algebra file has no axes block");
    std::vector<Vec> start;
    if (seeds.empty()) {
      start = f.axes;
    } else {
      for (size_t i : seeds) {
        if (i >= f.axes.size()) throw Error("seed index out of range");
        start.push_back(f.axes[i]);
      }
    }
    AxetClosure cl = axet_closure(f.algebra, start, law_of(law));
    py::dict d;
    d["size"] = cl.axes.size();
    d["miyamoto_order"] = cl.miyamoto.order().get_str();
    auto twins = find_twins(f.algebra, cl.axes, law_of(law));
    d["twins"] = twins;
    return d;
  }, py::arg("algebra"), py::arg("law") = "monster:1/4,1/32",
     py::arg("seeds") = std::vector<size_t>{},
     "Axet closure of the file's axes (or the seed-indexed subset): size, "
     "Miyamoto group order, twins.");

  m.def("frobenius_dimension", [](const std::string& algebra_text) {
    return frobenius_space(algebra_of(algebra_text)).size();
  }, py::arg("algebra"));

  m.def("decompose", [](const std::string& algebra_text,
                        const std::vector<std::vector<std::string>>& axes,
                        const std::string& law) {
    Algebra alg = algebra_of(algebra_text);
    FusionLaw l = law_of(law);
    std::vector<Vec> ax;
    for (const auto& a : axes) ax.push_back(vec_of(alg, a));
    JointDecomposition jd = joint_decomposition(alg, ax, l);
    py::list out;
    for (const auto& [key, space] : jd.summands) {
      py::list evs;
      for (size_t k : key) evs.append(l.eigenvalues()[k].str());
      out.append(py::make_tuple(evs, space.dim()));
    }
    py::dict d;
    d["summands"] = out;
    d["residual"] = jd.residual ? py::cast(jd.residual->dim()) : py::cast(0);
    return d;
  }, py::arg("algebra"), py::arg("axes"), py::arg("law") = "monster:1/4,1/32");

  m.def("find_idempotents", [](const std::string& algebra_text, const std::string& length,
                               const std::string& backend, uint64_t seed, size_t budget) {
    Algebra alg = algebra_of(algebra_text);
    IdempotentQuery q;
    if (!length.empty()) q.target_length = Scalar::parse(length);
    if (backend == "exact_small")
      q.backend = IdemBackend::exact_small;
    else if (backend == "newton_reconstruct")
      q.backend = IdemBackend::newton_reconstruct;
    else
      throw Error("unknown backend: " + backend);
    q.seed = seed;
    q.budget = budget;
    IdempotentResult r = find_idempotents(alg, q);
    py::dict d;
    py::list found;
    for (const Vec& v : r.found) found.append(vec_to_strings(v));
    d["found"] = found;
    d["complete"] = r.complete;
    d["numeric_only"] = r.numeric_only.size();
    return d;
  }, py::arg("algebra"), py::arg("length") = "", py::arg("backend") = "exact_small",
     py::arg("seed") = 0, py::arg("budget") = 0);

  m.def("fixtures", [] { return fixture_names(); });

  m.def("group_order", [](const std::string& group) {
    return group_of(group).order().get_str();
  }, py::arg("group"));

  m.def("involution_class_sizes", [](const std::string& group) {
    std::vector<size_t> sizes;
    for (auto& c : involution_classes(group_of(group))) sizes.push_back(c.size());
    return sizes;
  }, py::arg("group"));

  m.def("shape", [](const std::string& group, const std::vector<size_t>& classes,
                    bool enumerate) {
    PermGroup g = group_of(group);
    auto cls = involution_classes(g);
    if (cls.empty()) throw Error("group has no involutions");
    std::vector<Perm> axet;
    if (classes.empty()) {
      if (cls.size() != 1) throw Error("several involution classes; pass classes=[...]");
      axet = cls[0];
    } else {
      for (size_t i : classes) {
        if (i >= cls.size()) throw Error("class index out of range");
        axet.insert(axet.end(), cls[i].begin(), cls[i].end());
      }
      std::sort(axet.begin(), axet.end());
    }
    ShapeDiagram d = shape_diagram(g, axet);
    py::dict out;
    out["axet_size"] = axet.size();
    py::list nodes;
    for (const auto& n : d.orbits.nodes())
      nodes.append(py::make_tuple(n.order, n.size, py::make_tuple(n.rep_i, n.rep_j)));
    out["nodes"] = nodes;
    out["edges"] = d.edges;
    auto [ok, maxo] = six_transposition_check(axet);
    out["six_transposition"] = ok;
    out["max_order"] = maxo;
    if (enumerate) {
      py::list shapes;
      for (const auto& s : enumerate_shapes(d)) {
        py::list row;
        for (NSType t : s) row.append(ns_type_name(t));
        shapes.append(row);
      }
      out["shapes"] = shapes;
    }
    return out;
  }, py::arg("group"), py::arg("classes") = std::vector<size_t>{},
     py::arg("enumerate") = false);

  m.def("gram_rank", [](const std::string& group, const std::vector<std::string>& shape,
                        const std::vector<size_t>& classes) {
    PermGroup g = group_of(group);
    auto cls = involution_classes(g);
    std::vector<Perm> axet;
    if (classes.empty()) {
      if (cls.size() != 1) throw Error("several involution classes; pass classes=[...]");
      axet = cls[0];
    } else {
      for (size_t i : classes) axet.insert(axet.end(), cls.at(i).begin(), cls.at(i).end());
      std::sort(axet.begin(), axet.end());
    }
    PairOrbits po = pair_orbits(g, axet);
    std::vector<NSType> types;
    for (const auto& s : shape) types.push_back(ns_type_from_name(s));
    return rank(gram_from_shape(po, types));
  }, py::arg("group"), py::arg("shape"), py::arg("classes") = std::vector<size_t>{});

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line driver in-process: (code, stdout, stderr).");
}
