#include "flatlie/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef _WIN32
#include <unistd.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "flatlie/analysis.hpp"

namespace flatlie {

namespace {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw Error("cannot write file '" + path + "'");
  file << text;
}

bool color_enabled(const std::ostream& err) {
  if (std::getenv("NO_COLOR") != nullptr)
    return false;
#ifndef _WIN32
  return &err == static_cast<const std::ostream*>(&std::cerr) && ::isatty(2);
#else
  return false;
#endif
}

void print_summary(std::ostream& err, const Report& report) {
  const bool color = color_enabled(err);
  const char* reset = color ? "\033[0m" : "";
  size_t passed = 0, failed = 0, warned = 0;
  for (const Check& c : report.checks) {
    const char* tint = "";
    switch (c.verdict) {
    case Verdict::pass:
      ++passed;
      tint = color ? "\033[32m" : "";
      break;
    case Verdict::fail:
      ++failed;
      tint = color ? "\033[31m" : "";
      break;
    case Verdict::warn:
      ++warned;
      tint = color ? "\033[33m" : "";
      break;
    }
    err << c.name << ": " << tint << to_string(c.verdict) << reset;
    if (!c.note.empty())
      err << " (" << c.note << ")";
    err << "\n";
  }
  err << "summary: " << passed << " passed, " << failed << " failed, " << warned
      << " warnings\n";
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i)
    a.push_back(v(i).str());
  return a;
}

json check_json(const Check& c) {
  json j;
  j["check"] = c.name;
  j["verdict"] = to_string(c.verdict);
  if (c.witness) {
    json w;
    w["indices"] = c.witness->indices;
    w["left"] = vector_json(c.witness->left);
    w["right"] = vector_json(c.witness->right);
    j["witness"] = std::move(w);
  }
  if (!c.note.empty())
    j["note"] = c.note;
  return j;
}

json make_doc(const std::string& command, const std::string& input_bytes,
              const Report& report) {
  json doc;
  doc["tool"] = "flatlie";
  doc["version"] = tool_version;
  doc["command"] = command;
  doc["input_digest"] = digest_string(input_bytes);
  json checks = json::array();
  for (const Check& c : report.checks)
    checks.push_back(check_json(c));
  doc["checks"] = std::move(checks);
  return doc;
}

json manifest_json(const Manifest& m) { return json::parse(emit_manifest(m)); }

int finish_report(Io& io, const std::string& out_path, json doc,
                  const Report& report) {
  write_output(doc.dump(2) + "\n", out_path, io.out);
  print_summary(io.err, report);
  return report.passed() ? 0 : 1;
}

/// "flat_affine" + "alpha0" scopes sub-checks as flat_affine(alpha0).torsion;
/// a check whose name equals the operation collapses to flat_affine(alpha0).
Report scope_report(const std::string& op, const std::string& arg, Report r) {
  const std::string scope = op + "(" + arg + ")";
  for (Check& c : r.checks)
    c.name = (c.name == op) ? scope : scope + "." + c.name;
  return r;
}

const Matrix& find_form(const Manifest& m, const std::string& name) {
  const auto it = m.forms.find(name);
  if (it == m.forms.end())
    throw ValidationError("no form named '" + name + "'");
  return it->second;
}

Matrix matrix_from_json(const json& node, const std::string& field, Index rows,
                        Index cols) {
  if (!node.is_array() || static_cast<Index>(node.size()) != rows)
    throw ValidationError(field + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = node[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ValidationError(field + ": row " + std::to_string(r) +
                            " has wrong length");
    for (Index c = 0; c < cols; ++c) {
      const json& cell = row[static_cast<size_t>(c)];
      if (!cell.is_string())
        throw ValidationError(field + ": entries must be rational strings");
      try {
        m(r, c) = Rational::parse(cell.get<std::string>());
      } catch (const ParseError& e) {
        throw ValidationError(field + ": " + e.what());
      }
    }
  }
  return m;
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
  std::vector<Rational> out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string tok = comma == std::string::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    out.push_back(Rational::parse(tok));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

struct CheckFlags {
  bool all = false;
  bool jacobi = false;
  bool unimodular = false;
  bool semisimple = false;
  bool two_nilpotent = false;
  std::vector<std::string> invariant_forms;
  std::vector<std::string> flat_metric_forms;
  std::vector<std::string> flat_affine_products;
  std::vector<std::string> complete_products;
  bool any() const {
    return all || jacobi || unimodular || semisimple || two_nilpotent ||
           !invariant_forms.empty() || !flat_metric_forms.empty() ||
           !flat_affine_products.empty() || !complete_products.empty();
  }
};

int run_check(Io& io, const std::string& file, CheckFlags flags,
              const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  const Manifest manifest = parse_manifest(text);
  const LieAlgebra alg = manifest.algebra();
  if (!flags.any())
    flags.all = true;
  if (flags.all) {
    for (const auto& [fname, g] : manifest.forms) {
      flags.invariant_forms.push_back(fname);
      flags.flat_metric_forms.push_back(fname);
    }
    for (const auto& [pname, table] : manifest.products) {
      flags.flat_affine_products.push_back(pname);
      flags.complete_products.push_back(pname);
    }
  }
  Report report;
  if (flags.all || flags.jacobi)
    report.merge(alg.check_jacobi());
  if (flags.all || flags.unimodular)
    report.merge(is_unimodular(alg));
  if (flags.all || flags.semisimple)
    report.merge(is_semisimple(alg));
  if (flags.all || flags.two_nilpotent)
    report.merge(is_two_nilpotent(alg));
  for (const std::string& fname : flags.invariant_forms)
    report.merge(scope_report("invariant", fname,
                              is_invariant(alg, manifest.form(fname))));
  for (const std::string& fname : flags.flat_metric_forms)
    report.merge(scope_report("flat_metric", fname,
                              is_flat_metric(levi_civita(alg, manifest.form(fname)))));
  for (const std::string& pname : flags.flat_affine_products)
    report.merge(scope_report("flat_affine", pname,
                              is_flat_affine(manifest.product(pname))));
  for (const std::string& pname : flags.complete_products)
    report.merge(scope_report("complete", pname,
                              is_complete(manifest.product(pname))));
  return finish_report(io, out_path, make_doc("check", text, report), report);
}

int run_levi_civita(Io& io, const std::string& file, const std::string& form_name,
                    const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  Manifest manifest = parse_manifest(text);
  const LieAlgebra alg = manifest.algebra();
  MetricPair pair = levi_civita(alg, manifest.form(form_name));
  Report report;
  report.add_pass("torsion");
  report.add_pass("compatible");
  manifest.products["levi_civita"] = pair.product().table();
  json doc = make_doc("levi-civita", text, report);
  doc["derived"]["form"] = form_name;
  doc["derived"]["manifest"] = manifest_json(manifest);
  return finish_report(io, out_path, std::move(doc), report);
}

int run_signature(Io& io, const std::string& file, const std::string& form_name,
                  const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  const Manifest manifest = parse_manifest(text);
  const Signature sig = signature(find_form(manifest, form_name));
  Report report;
  json doc = make_doc("signature", text, report);
  doc["derived"]["form"] = form_name;
  doc["derived"]["signature"] = {
      {"index", sig.index}, {"plus", sig.plus}, {"zero", sig.zero}};
  write_output(doc.dump(2) + "\n", out_path, io.out);
  io.err << "signature(" << form_name << "): index " << sig.index << ", plus "
         << sig.plus << ", zero " << sig.zero << "\n";
  return 0;
}

int emit_built(Io& io, Manifest manifest, const std::string& out_path) {
  write_output(emit_manifest(manifest), out_path, io.out);
  return 0;
}

ScalarProduct base_form(const Manifest& base) {
  if (base.forms.count("mu0"))
    return base.form("mu0");
  if (base.forms.size() == 1)
    return base.form(base.forms.begin()->first);
  throw ValidationError(
      "base manifest needs a form named 'mu0' or exactly one form");
}

int run_build_cotangent(Io& io, const std::string& file,
                        const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  const Manifest manifest = parse_manifest(text);
  OrthogonalAlgebra ext = cotangent_coadjoint(manifest.algebra());
  Manifest out = Manifest::from_algebra(ext.algebra());
  out.forms["mu0"] = ext.form().gram();
  return emit_built(io, std::move(out), out_path);
}

int run_build_classical(Io& io, const std::string& file,
                        const std::string& product_name,
                        const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  const Manifest manifest = parse_manifest(text);
  MetricPair pair =
      classical_cotangent(manifest.algebra(), manifest.product(product_name));
  Manifest out = Manifest::from_algebra(pair.product().algebra());
  out.forms["hyperbolic"] = pair.form().gram();
  out.products["levi_civita"] = pair.product().table();
  return emit_built(io, std::move(out), out_path);
}

int run_build_oscillator(Io& io, const std::string& lambda_text,
                         const std::string& out_path) {
  std::vector<Rational> lambda = parse_lambda_list(lambda_text);
  return emit_built(io, catalog("oscillator", {.lambda = std::move(lambda)}),
                    out_path);
}

int run_build_double(Io& io, const std::string& base_file,
                     const std::string& h_file, const std::string& psi_file,
                     const std::string& out_path) {
  const Manifest base_manifest = parse_manifest(read_input(base_file, io.in));
  const Manifest h_manifest = parse_manifest(read_input(h_file, io.in));
  const LieAlgebra h = h_manifest.algebra();
  OrthogonalAlgebra base(base_manifest.algebra(), base_form(base_manifest));
  json psi_doc;
  try {
    psi_doc = json::parse(read_input(psi_file, io.in));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!psi_doc.is_object() || !psi_doc.contains("maps") ||
      !psi_doc["maps"].is_array())
    throw ValidationError("psi file needs a 'maps' array");
  if (static_cast<Index>(psi_doc["maps"].size()) != h.dim())
    throw ValidationError("psi file needs one map per auxiliary basis vector");
  std::vector<Matrix> maps;
  for (size_t i = 0; i < psi_doc["maps"].size(); ++i)
    maps.push_back(matrix_from_json(psi_doc["maps"][i],
                                    "maps[" + std::to_string(i) + "]",
                                    base.algebra().dim(), base.algebra().dim()));
  SkewDerivationMap psi(h, base, std::move(maps));
  OrthogonalAlgebra ext = double_extension(base, h, psi);
  Manifest out = Manifest::from_algebra(ext.algebra());
  out.forms["mu0"] = ext.form().gram();
  return emit_built(io, std::move(out), out_path);
}

std::vector<Vector> unit_vectors(Index dim, Index from, Index count) {
  std::vector<Vector> out;
  for (Index i = 0; i < count; ++i)
    out.push_back(Vector::Unit(dim, from + i));
  return out;
}

json basis_json(const std::vector<Vector>& basis) {
  json out = json::array();
  for (const Vector& v : basis)
    out.push_back(vector_json(v));
  return out;
}

int run_milnor(Io& io, const std::string& file, const std::string& form_name,
               const std::string& assemble_file, const std::string& out_path) {
  const std::string text = read_input(file, io.in);
  const Manifest manifest = parse_manifest(text);
  if (assemble_file.empty()) {
    MilnorResult result =
        milnor_decompose(manifest.algebra(), manifest.form(form_name));
    Report report;
    json derived;
    if (const auto* ok = std::get_if<MilnorDecomposition>(&result)) {
      report = ok->certified;
      derived["b_basis"] = basis_json(ok->b_basis);
      derived["u_basis"] = basis_json(ok->u_basis);
    } else {
      const auto& failure = std::get<MilnorFailure>(result);
      report.add_fail("milnor", std::nullopt, failure.reason);
      report.merge(failure.report);
    }
    json doc = make_doc("milnor", text, report);
    doc["derived"] = std::move(derived);
    doc["derived"]["form"] = form_name;
    return finish_report(io, out_path, std::move(doc), report);
  }

  json spec;
  try {
    spec = json::parse(read_input(assemble_file, io.in));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!spec.is_object() || !spec.contains("b_dim") || !spec.contains("u_dim") ||
      !spec.contains("action"))
    throw ValidationError("assemble spec needs b_dim, u_dim and action fields");
  if (!spec["b_dim"].is_number_integer() || !spec["u_dim"].is_number_integer())
    throw ValidationError("assemble spec dimensions must be integers");
  const Index b_dim = spec["b_dim"].get<Index>();
  const Index u_dim = spec["u_dim"].get<Index>();
  if (!spec["action"].is_array() ||
      static_cast<Index>(spec["action"].size()) != b_dim)
    throw ValidationError("assemble spec needs one action map per b basis vector");
  std::vector<Matrix> action;
  for (size_t i = 0; i < spec["action"].size(); ++i)
    action.push_back(matrix_from_json(
        spec["action"][i], "action[" + std::to_string(i) + "]", u_dim, u_dim));
  Matrix gram = spec.contains("gram")
                    ? matrix_from_json(spec["gram"], "gram", b_dim + u_dim,
                                       b_dim + u_dim)
                    : find_form(manifest, form_name);
  auto [alg, pair] = milnor_assemble(b_dim, u_dim, action, ScalarProduct(gram));

  Report report;
  MilnorResult roundtrip = milnor_decompose(alg, pair.form());
  if (const auto* ok = std::get_if<MilnorDecomposition>(&roundtrip)) {
    report.merge(ok->certified);
    const Index n = alg.dim();
    if (spans_equal(ok->b_basis, unit_vectors(n, 0, b_dim)))
      report.add_pass("roundtrip_b");
    else
      report.add_fail("roundtrip_b", std::nullopt,
                      "recovered b differs from the assembled b block");
    if (spans_equal(ok->u_basis, unit_vectors(n, b_dim, u_dim)))
      report.add_pass("roundtrip_u");
    else
      report.add_fail("roundtrip_u", std::nullopt,
                      "recovered u differs from the assembled u block");
  } else {
    report.add_fail("milnor", std::nullopt,
                    std::get<MilnorFailure>(roundtrip).reason);
  }
  Manifest assembled = Manifest::from_algebra(alg);
  assembled.forms["g"] = pair.form().gram();
  assembled.products["levi_civita"] = pair.product().table();
  json doc = make_doc("milnor", text, report);
  doc["derived"]["manifest"] = manifest_json(assembled);
  return finish_report(io, out_path, std::move(doc), report);
}

int run_catalog(Io& io, const std::string& name, Index n,
                const std::string& lambda_text, const std::string& out_path) {
  CatalogOptions opts;
  opts.n = n;
  if (!lambda_text.empty())
    opts.lambda = parse_lambda_list(lambda_text);
  return emit_built(io, catalog(name, opts), out_path);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"exact arithmetic for flat affine and flat pseudo-Riemannian "
               "Lie algebra structures"};
  app.name("flatlie");
  app.require_subcommand(1);

  std::string out_path;
  std::string file, form_name, product_name, assemble_file, lambda_text;
  std::string base_file, h_file, psi_file, catalog_name;
  Index catalog_n = 1;
  CheckFlags flags;

  auto add_output = [&out_path](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path,
                    "write the JSON result to this file instead of stdout");
  };

  CLI::App* check = app.add_subcommand("check", "run verification checks on a manifest");
  check->add_option("file", file, "manifest path or -")->required();
  check->add_flag("--all", flags.all, "every applicable check (default)");
  check->add_flag("--jacobi", flags.jacobi, "Jacobi identity");
  check->add_flag("--unimodular", flags.unimodular, "tr(ad) = 0 criterion");
  check->add_flag("--semisimple", flags.semisimple, "Killing form nondegeneracy");
  check->add_flag("--two-nilpotent", flags.two_nilpotent, "[[x,y],z] = 0");
  check->add_option("--invariant", flags.invariant_forms,
                    "invariance of the named form");
  check->add_option("--flat-metric", flags.flat_metric_forms,
                    "flatness of the named form's Levi-Civita product");
  check->add_option("--flat-affine", flags.flat_affine_products,
                    "torsion and curvature of the named product");
  check->add_option("--complete", flags.complete_products,
                    "trace criterion for the named product");
  add_output(check);

  CLI::App* lc = app.add_subcommand("levi-civita",
                                    "derive the Levi-Civita product of a form");
  lc->add_option("file", file, "manifest path or -")->required();
  lc->add_option("--form", form_name, "form name in the manifest")->required();
  add_output(lc);

  CLI::App* sig = app.add_subcommand("signature", "signature of a named form");
  sig->add_option("file", file, "manifest path or -")->required();
  sig->add_option("--form", form_name, "form name in the manifest")->required();
  add_output(sig);

  CLI::App* build = app.add_subcommand("build", "construct derived algebras");
  build->require_subcommand(1);
  CLI::App* b_osc = build->add_subcommand("oscillator", "oscillator algebra for given frequencies");
  b_osc->add_option("--lambda", lambda_text,
                    "comma-separated positive nondecreasing rationals")
      ->required();
  add_output(b_osc);
  CLI::App* b_cot = build->add_subcommand("cotangent",
                                          "coadjoint cotangent algebra with hyperbolic form");
  b_cot->add_option("file", file, "manifest path or -")->required();
  add_output(b_cot);
  CLI::App* b_cl = build->add_subcommand("classical-cotangent",
                                         "cotangent of a flat affine product");
  b_cl->add_option("file", file, "manifest path or -")->required();
  b_cl->add_option("--product", product_name, "flat affine product name")->required();
  add_output(b_cl);
  CLI::App* b_dbl = build->add_subcommand("double", "double orthogonal extension");
  b_dbl->add_option("base", base_file, "orthogonal base manifest")->required();
  b_dbl->add_option("hfile", h_file, "auxiliary algebra manifest")->required();
  b_dbl->add_option("--psi", psi_file,
                    "JSON file {\"maps\": [matrix per h basis vector]}")
      ->required();
  add_output(b_dbl);

  CLI::App* milnor = app.add_subcommand("milnor",
                                        "Milnor decomposition of a flat Riemannian algebra");
  milnor->add_option("file", file, "manifest path or -")->required();
  milnor->add_option("--form", form_name, "positive-definite form name")->required();
  milnor->add_option("--assemble", assemble_file,
                     "JSON spec {b_dim, u_dim, action[, gram]}: assemble and "
                     "round-trip instead of decomposing");
  add_output(milnor);

  CLI::App* cat = app.add_subcommand("catalog", "emit a named example manifest");
  cat->add_option("name", catalog_name,
                  "aff1 | heisenberg | r_rho_r3 | abelian | sl2 | oscillator")
      ->required();
  cat->add_option("--n", catalog_n, "size parameter for heisenberg/abelian");
  cat->add_option("--lambda", lambda_text, "frequencies for oscillator");
  add_output(cat);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(io, file, flags, out_path);
    if (lc->parsed())
      return run_levi_civita(io, file, form_name, out_path);
    if (sig->parsed())
      return run_signature(io, file, form_name, out_path);
    if (b_osc->parsed())
      return run_build_oscillator(io, lambda_text, out_path);
    if (b_cot->parsed())
      return run_build_cotangent(io, file, out_path);
    if (b_cl->parsed())
      return run_build_classical(io, file, product_name, out_path);
    if (b_dbl->parsed())
      return run_build_double(io, base_file, h_file, psi_file, out_path);
    if (milnor->parsed())
      return run_milnor(io, file, form_name, assemble_file, out_path);
    if (cat->parsed())
      return run_catalog(io, catalog_name, catalog_n, lambda_text, out_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

} // namespace flatlie
