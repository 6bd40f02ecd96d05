#include "axtk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "axtk/algfile.hpp"
#include "axtk/decompose.hpp"
#include "axtk/fixtures.hpp"
#include "axtk/forms.hpp"
#include "axtk/idempotents.hpp"
#include "axtk/shapes.hpp"

namespace axtk {

namespace {

PermGroup resolve_group(const std::string& spec) {
  if (spec.rfind("fixture:", 0) == 0) return fixture_group(spec.substr(8));
  return load_group(spec);
}

// Axis spec: a name from the file's axes block, or "coords:c0,c1,...".
Vec resolve_axis(const AlgebraFile& file, const std::string& spec) {
  if (spec.rfind("coords:", 0) == 0) {
    std::vector<std::string> toks;
    std::string rest = spec.substr(7);
    size_t start = 0;
    while (start <= rest.size()) {
      const size_t comma = rest.find(',', start);
      toks.push_back(rest.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (toks.size() != file.algebra.dim())
      throw ParseError("coords: needs " + std::to_string(file.algebra.dim()) +
                       " entries");
    Vec v(toks.size());
    for (size_t i = 0; i < toks.size(); ++i)
      v[i] = Scalar::parse(toks[i], file.algebra.field());
    return v;
  }
  for (size_t i = 0; i < file.axis_names.size(); ++i) {
    if (file.axis_names[i] == spec) return file.axes[i];
  }
  throw ParseError("unknown axis '" + spec + "' (file has " +
                   std::to_string(file.axes.size()) + " named axes)");
}

// Each occurrence is either one "coords:..." spec or a comma-separated list
// of axis names.
std::vector<Vec> resolve_axis_list(const AlgebraFile& file,
                                   const std::vector<std::string>& specs) {
  std::vector<Vec> out;
  for (const std::string& spec : specs) {
    if (spec.rfind("coords:", 0) == 0) {
      out.push_back(resolve_axis(file, spec));
      continue;
    }
    size_t start = 0;
    while (start <= spec.size()) {
      const size_t comma = spec.find(',', start);
      const std::string name = spec.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!name.empty()) out.push_back(resolve_axis(file, name));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

std::vector<size_t> parse_index_list(const std::string& spec, size_t bound,
                                     const std::string& what) {
  std::vector<size_t> out;
  size_t start = 0;
  while (start <= spec.size()) {
    const size_t comma = spec.find(',', start);
    const std::string tok = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      size_t used = 0;
      const size_t v = std::stoul(tok, &used);
      if (used != tok.size() || v >= bound) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad " + what + " '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Involution classes of g, in the library's canonical order, restricted to
// the --classes selection (default: all when there is exactly one class).
std::vector<Perm> select_axet(const PermGroup& g, const std::string& classes_spec,
                              std::ostream& out) {
  const std::vector<std::vector<Perm>> classes = involution_classes(g);
  if (classes.empty()) throw ParseError("the group has no involutions");
  std::vector<size_t> picks;
  if (classes_spec.empty()) {
    if (classes.size() > 1) {
      std::string sizes;
      for (size_t i = 0; i < classes.size(); ++i) {
        if (i) sizes += ", ";
        sizes += std::to_string(i) + ":" + std::to_string(classes[i].size());
      }
      throw ParseError("several involution classes (" + sizes +
                       "); pick with --classes");
    }
    picks.push_back(0);
  } else {
    picks = parse_index_list(classes_spec, classes.size(), "class index");
  }
  std::vector<Perm> axet;
  std::string sizes;
  for (size_t k : picks) {
    axet.insert(axet.end(), classes[k].begin(), classes[k].end());
    if (!sizes.empty()) sizes += "+";
    sizes += std::to_string(classes[k].size());
  }
  std::sort(axet.begin(), axet.end());
  axet.erase(std::unique(axet.begin(), axet.end()), axet.end());
  out << "classes: " << sizes << "\n";
  return axet;
}

std::vector<Vec> load_vector_file(const std::string& path, const Algebra& alg) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::vector<Vec> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string tok;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != alg.dim())
      throw ParseError(path + ": line " + std::to_string(lineno) + ": expected " +
                       std::to_string(alg.dim()) + " entries");
    Vec v(toks.size());
    for (size_t i = 0; i < toks.size(); ++i)
      v[i] = Scalar::parse(toks[i], alg.field());
    rows.push_back(std::move(v));
  }
  return rows;
}

Matrix load_matrix_file(const std::string& path, size_t n, const FieldPtr& field) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::vector<Vec> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string tok;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != n)
      throw ParseError(path + ": line " + std::to_string(lineno) + ": expected " +
                       std::to_string(n) + " entries");
    Vec v(toks.size());
    for (size_t i = 0; i < toks.size(); ++i) v[i] = Scalar::parse(toks[i], field);
    rows.push_back(std::move(v));
  }
  if (rows.size() != n)
    throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  return Matrix::from_rows(rows);
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << m.at(r, c).str();
    }
    out << "\n";
  }
}

void emit(const std::string& output, const std::string& text, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw ParseError("cannot open '" + output + "' for writing");
  f << text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for axial algebras of Monster type"};
  app.require_subcommand(1);

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand("build", "construct a catalog algebra file");
  std::string build_spec, build_output;
  bool build_sparse = false;
  std::string build_class;
  build->add_option("spec", build_spec,
                    "ns:<type> or matsuo:<group>:<eta> (group: file or fixture:NAME)")
      ->required();
  build->add_option("-o,--output", build_output, "write to a file instead of stdout");
  build->add_flag("--sparse", build_sparse, "omit zero products");
  build->add_option("--class", build_class, "involution class index for matsuo");
  build->callback([&] {
    std::string text;
    if (build_spec.rfind("ns:", 0) == 0) {
      const NortonSakuma ns = norton_sakuma(ns_type_from_name(build_spec.substr(3)));
      text = serialize_algebra(ns.algebra, ns.axis_names, ns.axes, build_sparse);
    } else if (build_spec.rfind("matsuo:", 0) == 0) {
      const std::string rest = build_spec.substr(7);
      const size_t last = rest.rfind(':');
      if (last == std::string::npos || last == 0)
        throw ParseError("matsuo spec must be matsuo:<group>:<eta>");
      const PermGroup g = resolve_group(rest.substr(0, last));
      const Scalar eta = Scalar::parse(rest.substr(last + 1));
      std::ostringstream sink;
      const std::vector<Perm> axet = select_axet(g, build_class, sink);
      const MatsuoAlgebra ma = matsuo_algebra(g, axet.at(0), eta);
      std::vector<std::string> names;
      for (size_t i = 0; i < ma.axes.size(); ++i)
        names.push_back(ma.algebra.basis_names()[i]);
      text = serialize_algebra(ma.algebra, names, ma.axes, build_sparse);
    } else {
      throw ParseError("build spec must start with ns: or matsuo:");
    }
    emit(build_output, text, out);
  });

  // ---- axis-check ------------------------------------------------------
  auto* axis_check = app.add_subcommand("axis-check", "fusion-law axis analysis");
  std::string ac_file, ac_axis, ac_law = "monster:1/4,1/32";
  int exit_code = 0;
  axis_check->add_option("algebra", ac_file, "algebra file")->required();
  axis_check->add_option("axis", ac_axis, "axis name or coords:c0,c1,...")->required();
  axis_check->add_option("--law", ac_law, "fusion law spec (default monster:1/4,1/32)");
  axis_check->callback([&] {
    const AlgebraFile file = load_algebra(ac_file);
    const FusionLaw law = parse_law_spec(ac_law);
    const Vec a = resolve_axis(file, ac_axis);
    const AxisReport rep = check_axis(file.algebra, a, law);
    out << "idempotent: " << (rep.is_idempotent ? "yes" : "no") << "\n";
    for (size_t i = 0; i < law.size(); ++i) {
      out << "eigenvalue " << law.eigenvalues()[i].str() << ": dim "
          << rep.eigen_dims[i] << "\n";
    }
    out << "unaccounted dimension: " << rep.missing_dim << "\n";
    out << "fusion violations: " << rep.violations.size() << "\n";
    for (const FusionViolation& v : rep.violations) {
      out << "  " << law.eigenvalues()[v.lam].str() << " * "
          << law.eigenvalues()[v.mu].str() << " leaks into "
          << law.eigenvalues()[v.nu].str() << "\n";
    }
    out << "primitive: " << (rep.is_primitive ? "yes" : "no") << "\n";
    out << "axis: " << (rep.is_axis ? "yes" : "no") << "\n";
    if (!rep.is_axis) exit_code = 1;
  });

  // ---- miyamoto --------------------------------------------------------
  auto* miy = app.add_subcommand("miyamoto", "axet closure and Miyamoto group");
  std::string miy_file, miy_law = "monster:1/4,1/32";
  std::vector<std::string> miy_seeds;
  miy->add_option("algebra", miy_file, "algebra file")->required();
  miy->add_option("--seeds", miy_seeds,
                  "seed axes (names or coords:...; default: the file's axes)");
  miy->add_option("--law", miy_law, "fusion law spec");
  miy->callback([&] {
    const AlgebraFile file = load_algebra(miy_file);
    const FusionLaw law = parse_law_spec(miy_law);
    std::vector<Vec> seeds = miy_seeds.empty()
                                 ? file.axes
                                 : resolve_axis_list(file, miy_seeds);
    if (seeds.empty()) throw ParseError("no seed axes (file has none; use --seeds)");
    const AxetClosure cl = axet_closure(file.algebra, seeds, law);
    out << "axet size: " << cl.axes.size() << "\n";
    out << "miyamoto group order: " << cl.miyamoto.order().get_str() << "\n";
    const auto twins = find_twins(file.algebra, cl.axes, law);
    out << "twins:";
    if (twins.empty()) {
      out << " none";
    } else {
      for (const auto& [i, j] : twins) out << " (" << i << ", " << j << ")";
    }
    out << "\n";
  });

  // ---- frobenius -------------------------------------------------------
  auto* frob = app.add_subcommand("frobenius", "space of Frobenius forms");
  std::string fr_file;
  frob->add_option("algebra", fr_file, "algebra file")->required();
  frob->callback([&] {
    const AlgebraFile file = load_algebra(fr_file);
    const std::vector<Matrix> basis = frobenius_space(file.algebra);
    out << "dimension: " << basis.size() << "\n";
    for (size_t k = 0; k < basis.size(); ++k) {
      out << "basis " << k << ":\n";
      print_matrix(out, basis[k]);
    }
  });

  // ---- decompose -------------------------------------------------------
  auto* dec = app.add_subcommand("decompose", "joint eigenspace decomposition");
  std::string dec_file, dec_law = "monster:1/4,1/32";
  std::vector<std::string> dec_axes;
  dec->add_option("algebra", dec_file, "algebra file")->required();
  dec->add_option("--axes", dec_axes, "axes (names or coords:...)")->required();
  dec->add_option("--law", dec_law, "fusion law spec");
  dec->callback([&] {
    const AlgebraFile file = load_algebra(dec_file);
    const FusionLaw law = parse_law_spec(dec_law);
    const std::vector<Vec> axes = resolve_axis_list(file, dec_axes);
    const JointDecomposition jd = joint_decomposition(file.algebra, axes, law);
    out << "axes: " << jd.axes.size() << "\n";
    size_t total = 0;
    for (const auto& [tuple, space] : jd.summands) {
      out << "summand (";
      for (size_t k = 0; k < tuple.size(); ++k) {
        if (k) out << ", ";
        out << law.eigenvalues()[tuple[k]].str();
      }
      out << "): dim " << space.dim() << "\n";
      total += space.dim();
    }
    if (jd.residual) {
      out << "residual: dim " << jd.residual->dim() << "\n";
      total += jd.residual->dim();
    } else {
      out << "residual: none\n";
    }
    out << "total: " << total << "\n";
  });

  // ---- extend ----------------------------------------------------------
  auto* ext = app.add_subcommand("extend", "extension space of a subalgebra map");
  std::string ext_file, ext_sub, ext_map, ext_module;
  ext->add_option("algebra", ext_file, "algebra file")->required();
  ext->add_option("--sub", ext_sub, "subalgebra basis file (one vector per line)")
      ->required();
  ext->add_option("--map", ext_map, "automorphism of the subalgebra (matrix file)")
      ->required();
  ext->add_option("--module", ext_module, "module basis file")->required();
  ext->callback([&] {
    const AlgebraFile file = load_algebra(ext_file);
    const Algebra& alg = file.algebra;
    const SubspaceBasis u = span_of(load_vector_file(ext_sub, alg), alg.dim());
    const SubspaceBasis w = span_of(load_vector_file(ext_module, alg), alg.dim());
    const Matrix psi = load_matrix_file(ext_map, u.dim(), alg.field());
    const ExtensionSpace es = extension_space(alg, u, psi, w);
    out << "dimension: " << es.basis.size() << "\n";
    for (size_t k = 0; k < es.basis.size(); ++k) {
      out << "basis " << k << ":\n";
      print_matrix(out, es.basis[k]);
    }
  });

  // ---- idempotents -----------------------------------------------------
  auto* idem = app.add_subcommand("idempotents", "search for idempotents");
  std::string id_file, id_length, id_backend = "exact_small";
  uint64_t id_seed = 0;
  size_t id_budget = 0;
  idem->add_option("algebra", id_file, "algebra file")->required();
  idem->add_option("--length", id_length, "target length (exact rational)");
  idem->add_option("--backend", id_backend, "exact_small or newton_reconstruct");
  idem->add_option("--seed", id_seed, "seed for the random starts");
  idem->add_option("--budget", id_budget, "number of starting points (newton)");
  idem->callback([&] {
    const AlgebraFile file = load_algebra(id_file);
    IdempotentQuery q;
    if (!id_length.empty()) q.target_length = Scalar::parse(id_length);
    if (id_backend == "exact_small") {
      q.backend = IdemBackend::exact_small;
    } else if (id_backend == "newton_reconstruct") {
      q.backend = IdemBackend::newton_reconstruct;
    } else {
      throw ParseError("unknown backend '" + id_backend + "'");
    }
    q.seed = id_seed;
    q.budget = id_budget;
    if (const char* env = std::getenv("AXTK_IDEM_BUDGET")) {
      q.budget = std::stoull(env);
    }
    const IdempotentResult res = find_idempotents(file.algebra, q);
    out << "found: " << res.found.size() << "\n";
    for (const Vec& v : res.found) {
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << " ";
        out << v[i].str();
      }
      out << "\n";
    }
    out << "complete: " << (res.complete ? "yes" : "no") << "\n";
    out << "numeric-only: " << res.numeric_only.size() << "\n";
  });

  // ---- shape -----------------------------------------------------------
  auto* shape = app.add_subcommand("shape", "pair orbits and shape diagram");
  std::string sh_group, sh_classes, sh_up_to;
  bool sh_enumerate = false;
  shape->add_option("group", sh_group, "group file or fixture:NAME")->required();
  shape->add_option("--classes", sh_classes, "involution class indices (e.g. 0,1)");
  shape->add_flag("--enumerate", sh_enumerate, "list consistent shape assignments");
  shape->add_option("--up-to", sh_up_to, "node action group file for folding");
  shape->callback([&] {
    const PermGroup g = resolve_group(sh_group);
    out << "group order: " << g.order().get_str() << "\n";
    const std::vector<Perm> axet = select_axet(g, sh_classes, out);
    out << "axet size: " << axet.size() << "\n";
    const ShapeDiagram d = shape_diagram(g, axet);
    const auto& nodes = d.orbits.nodes();
    out << "nodes: " << nodes.size() << "\n";
    for (size_t k = 0; k < nodes.size(); ++k) {
      out << "node " << k << ": order " << nodes[k].order << " size "
          << nodes[k].size << " rep (" << nodes[k].rep_i << ", " << nodes[k].rep_j
          << ")\n";
    }
    out << "edges: " << d.edges.size() << "\n";
    for (const auto& [u, v] : d.edges) out << u << " -> " << v << "\n";
    const auto [ok, max_order] = six_transposition_check(axet);
    out << "max pair order: " << max_order << "\n";
    out << "six-transposition: " << (ok ? "yes" : "no") << "\n";
    if (sh_enumerate) {
      std::optional<PermGroup> up_to;
      if (!sh_up_to.empty()) up_to = resolve_group(sh_up_to);
      const auto shapes = enumerate_shapes(d, up_to ? &*up_to : nullptr);
      out << "shapes: " << shapes.size() << "\n";
      for (size_t k = 0; k < shapes.size(); ++k) {
        out << "shape " << k << ":";
        for (NSType t : shapes[k]) out << " " << ns_type_name(t);
        out << "\n";
      }
    }
    if (!ok) exit_code = 1;
  });

  // ---- gram-rank -------------------------------------------------------
  auto* gr = app.add_subcommand("gram-rank", "rank of the shape's Gram matrix");
  std::string gr_group, gr_classes, gr_shape;
  gr->add_option("group", gr_group, "group file or fixture:NAME")->required();
  gr->add_option("--classes", gr_classes, "involution class indices");
  gr->add_option("--shape", gr_shape, "type per node, e.g. 2A,3A,3A,4B,5A,6A")
      ->required();
  gr->callback([&] {
    const PermGroup g = resolve_group(gr_group);
    const std::vector<Perm> axet = select_axet(g, gr_classes, out);
    const PairOrbits po = pair_orbits(g, axet);
    std::vector<NSType> shape;
    size_t start = 0;
    while (start <= gr_shape.size()) {
      const size_t comma = gr_shape.find(',', start);
      shape.push_back(ns_type_from_name(gr_shape.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    const Matrix m = gram_from_shape(po, shape);
    out << "axet size: " << po.class_size() << "\n";
    out << "rank: " << rank(m) << "\n";
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("axtk");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's own stream handling.
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace axtk
