#include "axtk/algfile.hpp"

#include <fstream>
#include <sstream>

namespace axtk {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(size_t lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

// Line cursor that skips blank lines and tracks line numbers for messages.
struct Lines {
  std::vector<std::string> raw;
  size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) raw.push_back(line);
  }
  // 1-based number of the line most recently returned.
  size_t lineno = 0;

  std::optional<std::vector<std::string>> next() {
    while (pos < raw.size()) {
      lineno = pos + 1;
      std::vector<std::string> toks = split_ws(raw[pos]);
      ++pos;
      if (!toks.empty()) return toks;
    }
    lineno = raw.size() + 1;
    return std::nullopt;
  }
  std::vector<std::string> expect(const std::string& what) {
    auto toks = next();
    if (!toks) fail(lineno, "unexpected end of file; expected " + what);
    return *toks;
  }
};

size_t parse_index(const std::string& tok, size_t dim, size_t lineno) {
  size_t val = 0;
  try {
    size_t used = 0;
    val = std::stoul(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    fail(lineno, "expected a basis index, got '" + tok + "'");
  }
  if (val >= dim) fail(lineno, "basis index " + tok + " out of range");
  return val;
}

Scalar parse_scalar(const std::string& tok, const FieldPtr& field, size_t lineno) {
  try {
    return Scalar::parse(tok, field);
  } catch (const ParseError& e) {
    fail(lineno, std::string(e.what()));
  } catch (const ArithmeticError& e) {
    fail(lineno, std::string(e.what()));
  }
}

mpq_class parse_rat(const std::string& tok, size_t lineno) {
  const Scalar s = parse_scalar(tok, nullptr, lineno);
  return s.as_rational();
}

}  // namespace

std::string serialize_algebra(const Algebra& alg,
                              const std::vector<std::string>& axis_names,
                              const std::vector<Vec>& axes, bool sparse) {
  if (axis_names.size() != axes.size())
    throw AlgebraError("axis names and vectors must match");
  const size_t n = alg.dim();
  if (!sparse) alg.check_complete();
  std::ostringstream os;
  os << "axtk-algebra 1\n";
  os << "dim " << n << "\n";
  if (alg.field()) {
    os << "field ext " << Scalar(alg.field()->c1()).str() << " "
       << Scalar(alg.field()->c0()).str() << "\n";
  } else {
    os << "field Q\n";
  }
  os << "basis";
  for (const std::string& name : alg.basis_names()) {
    if (name.find_first_of(" \t:") != std::string::npos)
      throw AlgebraError("basis name '" + name + "' cannot be serialized");
    os << " " << name;
  }
  os << "\n";
  if (sparse) os << "sparse 1\n";
  os << "structure\n";
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      if (!alg.product_set(i, j)) continue;
      const Vec& p = alg.basis_product(i, j);
      if (sparse && vec_is_zero(p)) continue;
      os << i << " " << j << " :";
      for (const Scalar& c : p) os << " " << c.str();
      os << "\n";
    }
  }
  os << "end\n";
  if (alg.has_form()) {
    if (!alg.form_complete())
      throw AlgebraError("the form is only partially defined; cannot serialize");
    os << "form\n";
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        const Scalar& v = alg.form_entry(i, j);
        if (sparse && v.is_zero()) continue;
        os << i << " " << j << " : " << v.str() << "\n";
      }
    }
    os << "end\n";
  }
  if (!axes.empty()) {
    os << "axes\n";
    for (size_t k = 0; k < axes.size(); ++k) {
      if (axis_names[k].find_first_of(" \t:") != std::string::npos)
        throw AlgebraError("axis name '" + axis_names[k] + "' cannot be serialized");
      if (axes[k].size() != n) throw AlgebraError("axis vector dimension mismatch");
      os << axis_names[k] << " :";
      for (const Scalar& c : axes[k]) os << " " << c.str();
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

AlgebraFile parse_algebra_text(const std::string& text) {
  Lines in(text);

  auto toks = in.expect("the header");
  if (toks.size() != 2 || toks[0] != "axtk-algebra" || toks[1] != "1")
    fail(in.lineno, "expected header 'axtk-algebra 1'");

  toks = in.expect("'dim <n>'");
  if (toks.size() != 2 || toks[0] != "dim") fail(in.lineno, "expected 'dim <n>'");
  size_t dim = 0;
  try {
    dim = std::stoul(toks[1]);
  } catch (const std::exception&) {
    fail(in.lineno, "bad dimension '" + toks[1] + "'");
  }

  toks = in.expect("the field line");
  FieldPtr field;
  if (toks.size() == 2 && toks[0] == "field" && toks[1] == "Q") {
    // rationals
  } else if (toks.size() == 4 && toks[0] == "field" && toks[1] == "ext") {
    const mpq_class c1 = parse_rat(toks[2], in.lineno);
    const mpq_class c0 = parse_rat(toks[3], in.lineno);
    try {
      field = make_quad_field(c1, c0);
    } catch (const ArithmeticError& e) {
      fail(in.lineno, std::string(e.what()));
    }
  } else {
    fail(in.lineno, "expected 'field Q' or 'field ext <c1> <c0>'");
  }

  toks = in.expect("the basis line");
  if (toks.empty() || toks[0] != "basis" || toks.size() != dim + 1)
    fail(in.lineno, "expected 'basis' with " + std::to_string(dim) + " names");
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  Algebra alg;
  try {
    alg = Algebra(names, field);
  } catch (const AlgebraError& e) {
    fail(in.lineno, std::string(e.what()));
  }

  toks = in.expect("'structure'");
  bool sparse = false;
  if (toks.size() == 2 && toks[0] == "sparse") {
    if (toks[1] != "0" && toks[1] != "1") fail(in.lineno, "sparse must be 0 or 1");
    sparse = toks[1] == "1";
    toks = in.expect("'structure'");
  }
  if (toks.size() != 1 || toks[0] != "structure")
    fail(in.lineno, "expected 'structure'");

  std::vector<bool> seen(dim * dim, false);
  for (;;) {
    toks = in.expect("a structure line or 'end'");
    if (toks.size() == 1 && toks[0] == "end") break;
    if (toks.size() != dim + 3 || toks[2] != ":")
      fail(in.lineno, "expected 'i j : " + std::to_string(dim) + " scalars'");
    const size_t i = parse_index(toks[0], dim, in.lineno);
    const size_t j = parse_index(toks[1], dim, in.lineno);
    const size_t a = std::min(i, j), b = std::max(i, j);
    if (seen[a * dim + b]) fail(in.lineno, "duplicate product pair");
    seen[a * dim + b] = true;
    Vec p(dim);
    for (size_t k = 0; k < dim; ++k) p[k] = parse_scalar(toks[3 + k], field, in.lineno);
    alg.set_product(i, j, std::move(p));
  }
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = i; j < dim; ++j) {
      if (seen[i * dim + j]) continue;
      if (!sparse)
        throw ParseError("structure block is missing pair (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      alg.set_product(i, j, zero_vec(dim));
    }
  }

  AlgebraFile out;
  auto after = in.next();
  if (after && after->size() == 1 && (*after)[0] == "form") {
    std::vector<bool> fseen(dim * dim, false);
    for (;;) {
      toks = in.expect("a form line or 'end'");
      if (toks.size() == 1 && toks[0] == "end") break;
      if (toks.size() != 4 || toks[2] != ":")
        fail(in.lineno, "expected 'i j : value'");
      const size_t i = parse_index(toks[0], dim, in.lineno);
      const size_t j = parse_index(toks[1], dim, in.lineno);
      const size_t a = std::min(i, j), b = std::max(i, j);
      if (fseen[a * dim + b]) fail(in.lineno, "duplicate form pair");
      fseen[a * dim + b] = true;
      alg.set_form_entry(i, j, parse_scalar(toks[3], field, in.lineno));
    }
    for (size_t i = 0; i < dim; ++i) {
      for (size_t j = i; j < dim; ++j) {
        if (fseen[i * dim + j]) continue;
        if (!sparse)
          throw ParseError("form block is missing pair (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
        alg.set_form_entry(i, j, Scalar(0));
      }
    }
    after = in.next();
  }
  if (after && after->size() == 1 && (*after)[0] == "axes") {
    for (;;) {
      toks = in.expect("an axis line or 'end'");
      if (toks.size() == 1 && toks[0] == "end") break;
      if (toks.size() != dim + 2 || toks[1] != ":")
        fail(in.lineno, "expected 'name : " + std::to_string(dim) + " scalars'");
      Vec v(dim);
      for (size_t k = 0; k < dim; ++k) v[k] = parse_scalar(toks[2 + k], field, in.lineno);
      out.axis_names.push_back(toks[0]);
      out.axes.push_back(std::move(v));
    }
    after = in.next();
  }
  if (after) fail(in.lineno, "unexpected trailing content");

  out.algebra = std::move(alg);
  return out;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_algebra_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_algebra(const std::string& path, const Algebra& alg,
                  const std::vector<std::string>& axis_names,
                  const std::vector<Vec>& axes, bool sparse) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  f << serialize_algebra(alg, axis_names, axes, sparse);
  if (!f) throw ParseError("failed writing '" + path + "'");
}

std::string serialize_group(const PermGroup& g) {
  std::ostringstream os;
  os << g.degree() << "\n";
  for (const Perm& p : g.generators()) os << perm_str(p) << "\n";
  return os.str();
}

PermGroup parse_group_text(const std::string& text) {
  Lines in(text);
  auto toks = in.expect("the degree");
  if (toks.size() != 1) fail(in.lineno, "expected the degree alone on the first line");
  size_t degree = 0;
  try {
    degree = std::stoul(toks[0]);
  } catch (const std::exception&) {
    fail(in.lineno, "bad degree '" + toks[0] + "'");
  }
  std::vector<Perm> gens;
  while (auto line = in.next()) {
    if (line->size() != degree)
      fail(in.lineno, "generator needs exactly " + std::to_string(degree) + " images");
    Perm p(degree);
    for (size_t i = 0; i < degree; ++i) {
      p[i] = int(parse_index((*line)[i], degree, in.lineno));
    }
    if (!perm_valid(p)) fail(in.lineno, "not a permutation");
    gens.push_back(std::move(p));
  }
  try {
    return PermGroup(std::move(gens), degree);
  } catch (const GroupError& e) {
    throw ParseError(std::string(e.what()));
  }
}

PermGroup load_group(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_group_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FusionLaw parse_law_spec(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("law spec must look like 'monster:1/4,1/32' or 'jordan:1/4'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  std::vector<Scalar> params;
  size_t start = 0;
  while (start <= rest.size()) {
    const size_t comma = rest.find(',', start);
    const std::string tok =
        rest.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (tok.empty()) throw ParseError("empty law parameter in '" + spec + "'");
    params.push_back(Scalar::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (kind == "monster") return make_law(LawKind::monster, params);
  if (kind == "almost_monster") return make_law(LawKind::almost_monster, params);
  if (kind == "jordan") return make_law(LawKind::jordan, params);
  throw ParseError("unknown law kind '" + kind + "'");
}

}  // namespace axtk
