#include "gpw/constructions.hpp"
#include "gpw/identity.hpp"
#include "gpw/io.hpp"
#include "gpw/structure.hpp"
#include "gpw/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace gpw;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, claim_failed = 1, usage = 2, resource = 3, input = 4 };

struct Globals {
  std::string report = "text";
  bool timings = false;
  bool json() const { return report == "json"; }
};

void emit(const Globals &g, const json &j, const std::string &text) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json witness_json(const GradedAlgebra &A, const Witness &w) {
  json j;
  j["component"] = w.component;
  j["polynomial"] = to_string(w.polynomial);
  json asg = json::array();
  for (const auto &[v, x] : w.assignment)
    asg.push_back({{"variable", to_string(v)}, {"value", element_to_string(A, x)}});
  j["assignment"] = asg;
  j["value"] = element_to_string(A, w.value);
  return j;
}

std::string subspace_text(const GradedAlgebra &A, const Subspace &S) {
  if (S.is_zero())
    return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < S.rows().size(); ++i)
    s += (i ? ", " : "") + element_to_string(A, S.rows()[i]);
  return s + "}";
}

json subspace_json(const GradedAlgebra &A, const Subspace &S) {
  json rows = json::array();
  for (const auto &r : S.rows())
    rows.push_back(element_to_string(A, r));
  return {{"dim", S.dim()}, {"basis", rows}};
}

/// Splits at commas outside parentheses.
std::vector<std::string> split_degrees(const std::string &s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

GradedPolynomial read_polynomial(const GradedAlgebra &A, const std::string &text,
                                 bool ungraded) {
  return parse_polynomial(text, ungraded ? FiniteAbelianGroup() : A.group());
}

void write_or_print(const GradedAlgebra &A, const std::string &out) {
  if (out.empty())
    write_algebra(std::cout, A);
  else
    save_algebra(A, out);
}

int cmd_build(const Globals &g, const std::string &name, const std::string &out) {
  auto A = resolve_algebra(name);
  require_valid(A);
  write_or_print(A, out);
  if (!out.empty()) {
    json j{{"algebra", A.name()}, {"dim", A.dim()}, {"written", out}};
    emit(g, j, "wrote " + A.name() + " (dim " + std::to_string(A.dim()) +
                   ") to " + out + "\n");
  }
  return ok;
}

int cmd_validate(const Globals &g, const std::string &name) {
  auto A = resolve_algebra(name);
  auto r = validate(A);
  json j{{"algebra", A.name()},
         {"dim", A.dim()},
         {"group", to_string(A.group())},
         {"valid", r.valid()},
         {"violations", r.violations}};
  std::string text = A.name() + ": dim " + std::to_string(A.dim()) + ", " +
                     to_string(A.group()) + "-graded, " +
                     (r.valid() ? "valid" : "INVALID") + "\n";
  for (const auto &v : r.violations)
    text += "  " + v + "\n";
  emit(g, j, text);
  return r.valid() ? ok : claim_failed;
}

int cmd_check(const Globals &g, const std::string &name, const std::string &poly,
              bool ungraded, const std::string &method) {
  auto A = resolve_algebra(name);
  auto p = read_polynomial(A, poly, ungraded);
  auto opts = EngineOptions::from_env();
  Verdict v = method == "tuples"    ? is_graded_identity(A, p, opts)
              : method == "generic" ? is_identity_generic(A, p, opts)
                                    : check_identity(A, p, opts);
  json j{{"algebra", A.name()},
         {"polynomial", to_string(p)},
         {"verdict", v.holds ? "HOLDS" : "FAILS"},
         {"method", v.method},
         {"evaluations", v.evaluations}};
  j["witness"] = v.witness ? witness_json(A, *v.witness) : json(nullptr);
  std::string text = v.holds ? "HOLDS\n" : "FAILS\n";
  if (v.witness) {
    text += "  component: " + v.witness->component + "\n";
    for (const auto &[var, x] : v.witness->assignment)
      text += "  " + to_string(var) + " = " + element_to_string(A, x) + "\n";
    text += "  value: " + element_to_string(A, v.witness->value) + "\n";
  }
  text += "  method: " + v.method + ", " + std::to_string(v.evaluations) +
          " evaluations\n";
  emit(g, j, text);
  return v.holds ? ok : claim_failed;
}

int cmd_canon2(const Globals &g, const std::string &name, const std::string &poly) {
  auto A = resolve_algebra(name);
  auto p = read_polynomial(A, poly, false);
  Degree2Canonical c;
  try {
    c = degree2_canonicalize(A, p);
  } catch (const NotAnIdentityError &e) {
    const auto &v = e.verdict();
    json j{{"algebra", A.name()}, {"polynomial", to_string(p)}, {"verdict", "FAILS"}};
    j["witness"] = v.witness ? witness_json(A, *v.witness) : json(nullptr);
    emit(g, j, "FAILS: not a graded identity\n  witness: " +
                   (v.witness ? describe(A, *v.witness) : std::string("none")) +
                   "\n");
    return claim_failed;
  }
  json gamma = json::array(), delta = json::array(), fg = json::array(),
       pairs = json::array();
  std::string text = "source: " + to_string(c.source) + "\n";
  text += "f table (nonzero entries):\n";
  for (const auto &[k, v] : c.fg.values)
    if (!v.is_zero()) {
      fg.push_back({{"xi", to_string(k.first)},
                    {"zeta", to_string(k.second)},
                    {"value", to_string(v)}});
      text += "  f(" + to_string(k.first) + ", " + to_string(k.second) +
              ") = " + to_string(v) + "\n";
    }
  text += "gamma:\n";
  for (const auto &[rs, v] : c.gamma)
    if (!v.is_zero()) {
      gamma.push_back({{"r", rs.first}, {"s", rs.second}, {"value", to_string(v)}});
      text += "  gamma(" + std::to_string(rs.first) + "," +
              std::to_string(rs.second) + ") = " + to_string(v) + "\n";
    }
  text += "delta:\n";
  for (const auto &[k, v] : c.delta) {
    delta.push_back({{"k", k}, {"value", to_string(v)}});
    if (!v.is_zero())
      text += "  delta(" + std::to_string(k) + ") = " + to_string(v) + "\n";
  }
  text += "pairs:\n";
  for (const auto &pc : c.pairs) {
    pairs.push_back({{"r", pc.r},
                     {"s", pc.s},
                     {"lambda_rs", to_string(pc.lambda_rs)},
                     {"lambda_sr", to_string(pc.lambda_sr)},
                     {"case", pc.kind}});
    text += "  (x" + std::to_string(pc.r) + ", x" + std::to_string(pc.s) +
            "): " + pc.kind + "\n";
  }
  text += "linear coefficients:\n";
  for (const auto &l : c.linear_certificates)
    text += "  " + l + "\n";
  text += std::string("commutative neutral: ") +
          (c.commutative_neutral ? "yes" : "no") + "\n";
  for (const auto &n : c.notes)
    text += "note: " + n + "\n";
  text += "canonical form: " + to_string(c.reconstructed) + " (" +
          (c.reconstructed_holds ? "verified" : "NOT verified") + ")\n";
  json j{{"algebra", A.name()},
         {"source", to_string(c.source)},
         {"fg", fg},
         {"gamma", gamma},
         {"delta", delta},
         {"pairs", pairs},
         {"representatives", c.representatives},
         {"linear_certificates", c.linear_certificates},
         {"commutative_neutral", c.commutative_neutral},
         {"notes", c.notes},
         {"canonical_form", to_string(c.reconstructed)},
         {"canonical_form_holds", c.reconstructed_holds}};
  emit(g, j, text);
  return c.reconstructed_holds ? ok : claim_failed;
}

int cmd_analyze(const Globals &g, const std::string &name) {
  auto A = resolve_algebra(name);
  auto supp = support(A);
  bool central = neutral_component_central(A);
  auto nd = nilpotency_index(A);
  auto Z = center(A);
  auto J = jacobson_radical(A);
  auto C = commutator_ideal(A);
  auto cnd = commutator_ideal_nilpotency(A);
  auto lie = lie_series(A);
  std::vector<std::string> supp_text;
  for (const auto &s : supp)
    supp_text.push_back(to_string(s));
  std::vector<std::size_t> lcs, der;
  for (const auto &s : lie.lower_central)
    lcs.push_back(s.dim());
  for (const auto &s : lie.derived)
    der.push_back(s.dim());
  json j{{"algebra", A.name()},
         {"group", to_string(A.group())},
         {"dim", A.dim()},
         {"support", supp_text},
         {"neutral_central", central},
         {"nilpotency_index", nd ? json(*nd) : json(nullptr)},
         {"center", subspace_json(A, Z)},
         {"radical", subspace_json(A, J)},
         {"radical_graded", is_graded_subspace(A, J)},
         {"commutator_ideal", subspace_json(A, C)},
         {"commutator_ideal_nilpotency", cnd ? json(*cnd) : json(nullptr)},
         {"lower_central_dims", lcs},
         {"derived_dims", der},
         {"lie_nilpotent", lie.nilpotent},
         {"lie_solvable", lie.solvable}};
  auto dims = [](const std::vector<std::size_t> &d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i)
      s += (i ? ", " : "") + std::to_string(d[i]);
    return s;
  };
  std::string text;
  text += A.name() + ": dim " + std::to_string(A.dim()) + ", " +
          to_string(A.group()) + "-graded\n";
  text += "support (" + std::to_string(supp.size()) + "): ";
  for (std::size_t i = 0; i < supp_text.size(); ++i)
    text += (i ? ", " : "") + supp_text[i];
  text += "\n";
  text += "center: " + subspace_text(A, Z) + "\n";
  text += "nilpotency index: " + (nd ? std::to_string(*nd) : "not nilpotent") + "\n";
  text += "radical: " + subspace_text(A, J) + "\n";
  text += "commutator ideal: dim " + std::to_string(C.dim()) + "\n";
  text += "lower central series dims: " + dims(lcs) + "\n";
  text += "derived series dims: " + dims(der) + "\n";
  text += std::string("neutral central: ") + (central ? "yes" : "no") +
          "; commutator ideal: " +
          (cnd ? "nilpotent (index " + std::to_string(*cnd) + ")"
               : std::string("not nilpotent")) +
          "; Lie solvable: " + (lie.solvable ? "yes" : "no") + "\n";
  emit(g, j, text);
  return ok;
}

int cmd_search(const Globals &g, const std::string &name,
               const std::string &degrees, std::size_t max_n) {
  auto A = resolve_algebra(name);
  std::vector<GroupElement> ds;
  for (const auto &d : split_degrees(degrees))
    ds.push_back(parse_element(A.group(), d));
  auto space = find_multilinear_identities(A, ds, max_n);
  json basis = json::array();
  std::string text = "identity space for degrees " + degrees + ": dim " +
                     std::to_string(space.basis.size()) + "\n";
  for (const auto &p : space.basis) {
    basis.push_back(to_string(p));
    text += "  " + to_string(p) + "\n";
  }
  json j{{"algebra", A.name()}, {"degrees", degrees}, {"dim", space.basis.size()},
         {"basis", basis}};
  emit(g, j, text);
  return ok;
}

int cmd_envelope(const Globals &g, const std::string &name, std::size_t n,
                 const std::string &out) {
  auto A = resolve_algebra(name);
  auto E = grassmann_envelope(A, n);
  E.set_name("envelope(" + A.name() + "," + std::to_string(n) + ")");
  if (out.empty() && !g.json()) {
    write_algebra(std::cout, E);
    return ok;
  }
  if (!out.empty())
    save_algebra(E, out);
  json j{{"algebra", E.name()},
         {"group", to_string(E.group())},
         {"dim", E.dim()},
         {"neutral_central", neutral_component_central(E)}};
  if (!out.empty())
    j["written"] = out;
  emit(g, j, E.name() + ": dim " + std::to_string(E.dim()) + ", written to " +
                 out + "\n");
  return ok;
}

int cmd_verify(const Globals &g, std::vector<std::string> suites) {
  if (suites.empty())
    suites = suite_names();
  bool failed = false;
  json all = json::array();
  std::string text;
  for (const auto &s : suites) {
    auto reports = run_suite(s);
    failed = failed || has_failures(reports);
    all.push_back(report_json(s, reports, g.timings));
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto &r : reports)
      (r.status == ClaimStatus::pass   ? pass
       : r.status == ClaimStatus::fail ? fail
                                       : skip)++;
    text += "== " + s + " ==\n" + report_text(reports, g.timings);
    text += "-- " + s + ": " + std::to_string(pass) + " pass, " +
            std::to_string(fail) + " fail, " + std::to_string(skip) +
            " out-of-scope\n";
  }
  emit(g, suites.size() == 1 ? all[0] : json{{"suites", all}}, text);
  return failed ? claim_failed : ok;
}

int exit_code_for(const Error &e) {
  const auto &k = e.kind();
  if (k == "parse" || k == "usage" || k == "contract" ||
      k == "evaluation-contract" || k == "group-mismatch")
    return usage;
  if (k == "resource")
    return resource;
  return input;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"gpw: exact workbench for group-graded algebras and graded "
               "polynomial identities"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--report", g.report, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", g.timings, "Include runtimes in suite reports");

  std::string algebra, poly, out, degrees, method = "auto";
  bool ungraded = false;
  std::size_t n = 6, max_n = 4;
  std::vector<std::string> suites;

  auto *build = app.add_subcommand("build", "Write a fixture or file in the algebra format");
  build->add_option("algebra", algebra, "Fixture name or algebra file")->required();
  build->add_option("-o,--output", out, "Output file (default: stdout)");

  auto *val = app.add_subcommand("validate", "Check grading law, associativity and unit");
  val->add_option("algebra", algebra, "Fixture name or algebra file")->required();

  auto *chk = app.add_subcommand("check", "Decide a graded polynomial identity");
  chk->add_option("algebra", algebra, "Fixture name or algebra file")->required();
  chk->add_option("-g,--polynomial", poly, "Polynomial, e.g. \"[x1@e,x2@(1,0)]\"")->required();
  chk->add_flag("--ungraded", ungraded, "Variables range over the whole algebra");
  chk->add_option("--method", method, "Decision route")
      ->check(CLI::IsMember({"auto", "tuples", "generic"}));

  auto *canon = app.add_subcommand("canon2", "Canonical form of a degree-2 identity");
  canon->add_option("algebra", algebra, "Fixture name or algebra file")->required();
  canon->add_option("-g,--polynomial", poly, "Degree-2 polynomial")->required();

  auto *ana = app.add_subcommand("analyze", "Support, center, radical, Lie series");
  ana->add_option("algebra", algebra, "Fixture name or algebra file")->required();

  auto *srch = app.add_subcommand("search", "Multilinear identities of given degrees");
  srch->add_option("algebra", algebra, "Fixture name or algebra file")->required();
  srch->add_option("--degrees", degrees, "Variable degrees, e.g. e,(1,0)")->required();
  srch->add_option("--max-vars", max_n, "Largest number of variables");

  auto *env = app.add_subcommand("envelope", "Grassmann envelope over the first factors");
  env->add_option("algebra", algebra, "Fixture name or algebra file")->required();
  env->add_option("-n", n, "Number of Grassmann generators");
  env->add_option("-o,--output", out, "Output file (default: stdout)");

  auto *ver = app.add_subcommand("verify", "Run claim suites");
  ver->add_option("suite", suites, "Suite names (default: all)")
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*build)
      return cmd_build(g, algebra, out);
    if (*val)
      return cmd_validate(g, algebra);
    if (*chk)
      return cmd_check(g, algebra, poly, ungraded, method);
    if (*canon)
      return cmd_canon2(g, algebra, poly);
    if (*ana)
      return cmd_analyze(g, algebra);
    if (*srch)
      return cmd_search(g, algebra, degrees, max_n);
    if (*env)
      return cmd_envelope(g, algebra, n, out);
    if (*ver)
      return cmd_verify(g, suites);
  } catch (const Error &e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  }
  return usage;
}
