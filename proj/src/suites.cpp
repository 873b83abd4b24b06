#include "gpw/suites.hpp"

#include "gpw/constructions.hpp"
#include "gpw/io.hpp"
#include "gpw/structure.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace gpw {

std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::pass:
    return "pass";
  case ClaimStatus::fail:
    return "fail";
  case ClaimStatus::out_of_scope:
    return "out-of-scope";
  }
  return "fail";
}

std::vector<std::string> suite_names() {
  return {"examples",    "lemma-3-23",   "theorem-3-06",
          "prop-3-28",   "lemma-3-04",   "theorem-3-12",
          "theorem-3-30", "radical",     "engine-crosscheck"};
}

bool has_failures(const std::vector<ClaimReport> &reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto &r) {
    return r.status == ClaimStatus::fail;
  });
}

Reproducer make_reproducer(const GradedAlgebra &A, const GradedPolynomial &g,
                           const Verdict &v) {
  Reproducer r;
  r.algebra = A.name();
  bool builtin = false;
  try {
    builtin = !A.name().empty() &&
              format_algebra(resolve_algebra(A.name())) == format_algebra(A);
  } catch (const Error &) {
  }
  if (!builtin) {
    try {
      r.algebra_text = format_algebra(A);
    } catch (const Error &e) {
      r.algebra_text = std::string("# not serializable: ") + e.what();
    }
  }
  r.polynomial = to_string(g);
  r.ungraded = g.is_ungraded() && A.group().order() > 1;
  r.witness = v.witness ? describe(A, *v.witness) : "none";
  return r;
}

GradedPolynomial example_3_16_polynomial() {
  const FiniteAbelianGroup G({3, 5});
  const std::vector<GroupElement> xi = {
      {0, 0}, {0, 0}, {1, 0}, {0, 2}, {2, 0}, {1, 1}, {2, 1}, {0, 1},
      {0, 3}, {0, 4}, {1, 4}, {2, 4}, {1, 0}, {1, 1}, {0, 1}};
  const auto theta = example_3_16_theta();
  const FGTable f = example_3_16_fg();
  GradedPolynomial g(G);
  for (unsigned r = 1; r <= xi.size(); ++r)
    for (unsigned s = r + 1; s <= xi.size(); ++s)
      g += fg_bracket(G, f, {r, xi[r - 1]}, {s, xi[s - 1]});
  for (unsigned l = 1; l <= xi.size(); ++l) {
    const auto &d = xi[l - 1];
    if (d == theta[0] || d == theta[2] || d == theta[3])
      continue;
    GradedVariable x{l, d};
    g.add_term({x, x}, Rational(1));
  }
  return g;
}

FGTable example_3_16_fg() {
  FGTable f;
  for (auto [a, b] : std::vector<std::pair<GroupElement, GroupElement>>{
           {{0, 0}, {0, 0}},
           {{1, 0}, {0, 2}},
           {{0, 2}, {1, 0}},
           {{2, 0}, {1, 1}},
           {{2, 1}, {1, 1}}})
    f.set(a, b, Rational(1));
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string details;
  std::optional<Reproducer> reproducer;
  bool exploratory = false;
};

class Runner {
public:
  explicit Runner(const EngineOptions &opts) : opts(opts) {}

  void claim(const std::string &id, const std::function<Outcome()> &body) {
    ClaimReport r;
    r.id = id;
    auto t0 = Clock::now();
    try {
      Outcome o = body();
      r.details = o.details;
      if (o.exploratory)
        r.status = ClaimStatus::out_of_scope;
      else if (o.ok)
        r.status = ClaimStatus::pass;
      else {
        r.status = ClaimStatus::fail;
        r.reproducer = o.reproducer;
      }
    } catch (const std::exception &e) {
      r.status = ClaimStatus::fail;
      r.details = std::string("error: ") + e.what();
    }
    if (r.status == ClaimStatus::fail && !r.reproducer)
      r.reproducer = Reproducer{context_, "", "", false, r.details};
    r.runtime_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    reports.push_back(std::move(r));
  }

  /// Algebra name used for failures that carry no polynomial.
  void context(std::string name) { context_ = std::move(name); }

  Outcome holds(const GradedAlgebra &A, const GradedPolynomial &g) const {
    Verdict v = check_identity(A, g, opts);
    Outcome o;
    o.ok = v.holds;
    o.details = verdict_text(A, g, v);
    if (!v.holds)
      o.reproducer = make_reproducer(A, g, v);
    return o;
  }

  Outcome fails(const GradedAlgebra &A, const GradedPolynomial &g) const {
    Verdict v = check_identity(A, g, opts);
    Outcome o;
    o.ok = !v.holds;
    o.details = verdict_text(A, g, v);
    if (v.holds)
      o.reproducer = make_reproducer(A, g, v);
    return o;
  }

  static std::string verdict_text(const GradedAlgebra &A,
                                  const GradedPolynomial &g, const Verdict &v) {
    std::string s = to_string(g) + ": ";
    if (v.holds)
      return s + "HOLDS (" + v.method + ", " + std::to_string(v.evaluations) +
             " evaluations)";
    return s + "FAILS; witness " + describe(A, *v.witness);
  }

  const EngineOptions &opts;
  std::vector<ClaimReport> reports;

private:
  std::string context_;
};

Outcome check(bool ok, std::string details) {
  return Outcome{ok, std::move(details), std::nullopt, false};
}

GradedPolynomial var(const FiniteAbelianGroup &G, unsigned i,
                     const GroupElement &d) {
  return GradedPolynomial::variable(G, i, d);
}

std::string join(const std::vector<std::string> &xs, const std::string &sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? sep : "") + xs[i];
  return s;
}

std::string degrees_text(const std::vector<GroupElement> &xs) {
  std::vector<std::string> out;
  for (const auto &x : xs)
    out.push_back(to_string(x));
  return "{" + join(out, ", ") + "}";
}

std::string labels_of(const GradedAlgebra &A,
                      const std::vector<std::size_t> &idx) {
  std::vector<std::string> out;
  for (auto i : idx)
    out.push_back(A.label(i));
  std::sort(out.begin(), out.end());
  return "{" + join(out, ", ") + "}";
}

// ---------------------------------------------------------------- corpus

GradedAlgebra named(GradedAlgebra A, const std::string &name) {
  A.set_name(name);
  return A;
}

GradedAlgebra group_algebra(int n) {
  FiniteAbelianGroup G({n});
  return named(twisted_group_algebra(
                   trivial_cocycle(subgroup_generated(G, {G.element({1})}))),
               "Q[Z" + std::to_string(n) + "]");
}

/// Cyclic twisted group algebra with coboundary t(a) = a + 1.
GradedAlgebra coboundary_algebra(int n) {
  FiniteAbelianGroup G({n});
  auto H = subgroup_generated(G, {G.element({1})});
  std::map<GroupElement, Rational> t;
  for (const auto &h : H.elements())
    t[h] = Rational(h.coords[0] + 1);
  return named(twisted_group_algebra(cocycle_from_coboundary(H, t)),
               "Q^t[Z" + std::to_string(n) + "]");
}

GradedAlgebra coarsen_to_trivial(const GradedAlgebra &A) {
  const auto &G = A.group();
  auto all = subgroup_generated(G, G.elements());
  return named(coarsen(A, quotient(G, all)), A.name() + "/G");
}

GradedAlgebra w3_squared_coarsened() {
  FiniteAbelianGroup G({3, 3});
  auto W = witness_w3();
  auto left = regraded(W, G, {{1, 0}, {2, 0}, {0, 0}});
  auto right = regraded(W, G, {{0, 1}, {0, 2}, {0, 0}});
  auto P = direct_product(left, right);
  auto H = subgroup_generated(G, {{1, 2}});
  return named(coarsen(P, quotient(G, H)), "w3xw3/<(1,2)>");
}

GradedAlgebra w3_product() {
  return named(direct_product(group_algebra(3), witness_w3()), "Q[Z3]xw3");
}

GradedAlgebra w3_unitization() { return named(unitization(witness_w3()), "w3+1"); }

GradedAlgebra w4() {
  return named(regraded(witness_w3(), FiniteAbelianGroup({4}), {{1}, {3}, {0}}),
               "w3@Z4");
}

/// Envelope inputs over Z_3 x Z_2.
GradedAlgebra w3_envelope(std::size_t n) {
  FiniteAbelianGroup G({3, 2});
  auto W = regraded(witness_w3(), G, {{1, 1}, {2, 1}, {0, 0}});
  return named(grassmann_envelope(W, n), "E(w3)_" + std::to_string(n));
}

GradedAlgebra group_algebra_envelope(std::size_t n) {
  FiniteAbelianGroup G({3, 2});
  auto Q = group_algebra(3);
  auto R = regraded(Q, G, {{0, 0}, {1, 0}, {2, 0}});
  return named(grassmann_envelope(R, n), "E(Q[Z3])_" + std::to_string(n));
}

// ---------------------------------------------------------------- examples

void suite_examples(Runner &run) {
  // Z_3 x Z_5, theta = ((0,0),(1,0),(0,1),(0,4))
  {
    auto B = example_3_16();
    run.context(B.name());
    const std::map<GroupElement, std::vector<std::string>> table = {
        {{0, 0}, {"E11", "E22", "E33", "E44"}},
        {{0, 4}, {"E14", "E31"}},
        {{2, 0}, {"E21"}},
        {{0, 1}, {"E13", "E41"}},
        {{1, 0}, {"E12"}},
        {{2, 1}, {"E23"}},
        {{0, 2}, {"E43"}},
        {{1, 1}, {"E42"}},
        {{2, 4}, {"E24"}},
        {{0, 3}, {"E34"}},
        {{1, 4}, {"E32"}}};
    run.claim("ex-3-16/component-table", [&] {
      std::vector<std::string> bad;
      for (const auto &xi : B.group().elements()) {
        std::vector<std::string> got;
        for (auto i : component_basis(B, xi))
          got.push_back(B.label(i));
        std::sort(got.begin(), got.end());
        auto it = table.find(xi);
        std::vector<std::string> want;
        if (it != table.end()) {
          want = it->second;
          std::sort(want.begin(), want.end());
        }
        if (got != want)
          bad.push_back(to_string(xi) + " has {" + join(got, ",") + "}");
      }
      auto supp = support(B);
      std::vector<GroupElement> missing;
      for (const auto &xi : B.group().elements())
        if (!std::binary_search(supp.begin(), supp.end(), xi))
          missing.push_back(xi);
      bool ok = bad.empty() && supp.size() == 11 &&
                missing == std::vector<GroupElement>{
                               {1, 2}, {1, 3}, {2, 2}, {2, 3}};
      return check(ok, "support size " + std::to_string(supp.size()) +
                           ", missing " + degrees_text(missing) +
                           (bad.empty() ? ", all 11 components match"
                                        : ", mismatches: " + join(bad, "; ")));
    });
    const auto g = example_3_16_polynomial();
    run.claim("ex-3-16/g-holds", [&] { return run.holds(B, g); });
    run.claim("ex-3-16/fg-table", [&] {
      auto c = degree2_canonicalize(B, g, run.opts);
      const auto want = example_3_16_fg();
      std::vector<std::string> nonzero;
      bool ok = true;
      for (const auto &[k, v] : c.fg.values)
        if (!v.is_zero()) {
          nonzero.push_back("f(" + to_string(k.first) + "," +
                            to_string(k.second) + ")=" + to_string(v));
          ok = ok && want.at(k.first, k.second) == v;
        }
      for (const auto &[k, v] : want.values)
        ok = ok && c.fg.at(k.first, k.second) == v;
      ok = ok && nonzero.size() == 5 && c.reconstructed_holds &&
           c.reconstructed == g;
      return check(ok, join(nonzero, ", ") +
                           (c.reconstructed == g
                                ? "; canonical form reproduces g"
                                : "; canonical form differs from g") +
                           (c.reconstructed_holds ? ", verified" : ""));
    });
  }

  // Klein-graded M_2
  {
    auto B = pauli_m2();
    run.context(B.name());
    const auto &K = B.group();
    auto elems = K.elements();
    for (const auto &a : elems)
      for (const auto &b : elems) {
        if (a.is_identity() || b.is_identity() || a == b)
          continue;
        auto g = var(K, 1, a) * var(K, 2, b) + var(K, 2, b) * var(K, 1, a);
        run.claim("ex-3-17/anticommute/" + to_string(a) + "," + to_string(b),
                  [&] { return run.holds(B, g); });
      }
    for (const auto &t : elems) {
      auto g = var(K, 1, t) * var(K, 1, t);
      run.claim("ex-3-17/square-fails/" + to_string(t),
                [&] { return run.fails(B, g); });
    }
    for (const auto &xi : elems) {
      run.claim("ex-3-17/neutral-commutes/" + to_string(xi), [&] {
        return run.holds(B, commutator(var(K, 1, K.identity()), var(K, 2, xi)));
      });
      run.claim("ex-3-17/same-degree-commutes/" + to_string(xi), [&] {
        return run.holds(B, commutator(var(K, 1, xi), var(K, 2, xi)));
      });
    }
    run.claim("ex-3-17/fK-commutative", [&] {
      FGTable f;
      for (const auto &a : elems)
        for (const auto &b : elems) {
          Rational v(1);
          if (!a.is_identity() && !b.is_identity() && a != b)
            v = a < b ? Rational(1) : Rational(-1);
          f.set(a, b, v);
        }
      std::vector<std::string> bad;
      for (const auto &a : elems)
        for (const auto &b : elems)
          if (!check_identity(B, fg_expand(K, f, a, b), run.opts).holds)
            bad.push_back(to_string(a) + "," + to_string(b));
      return check(bad.empty(),
                   bad.empty() ? "[x@xi, y@zeta]_f holds for all 16 pairs"
                               : "fails at " + join(bad, "; "));
    });
  }

  // Z_3 x Z_5, theta = ((0,0),(1,0),(0,1),(0,1))
  {
    auto B = example_3_18();
    run.context(B.name());
    const auto &G = B.group();
    const GroupElement a{1, 0}, b{1, 4};
    run.claim("ex-3-18/components", [&] {
      auto ca = labels_of(B, component_basis(B, a));
      auto cb = labels_of(B, component_basis(B, b));
      return check(ca == "{E12}" && cb == "{E32, E42}",
                   "B_(1,0) = " + ca + ", B_(1,4) = " + cb);
    });
    run.claim("ex-3-18/xy", [&] { return run.holds(B, var(G, 1, a) * var(G, 2, b)); });
    run.claim("ex-3-18/yx", [&] { return run.holds(B, var(G, 2, b) * var(G, 1, a)); });
    run.claim("ex-3-18/x-square", [&] { return run.holds(B, var(G, 1, b) * var(G, 1, b)); });
    run.claim("ex-3-18/y-square", [&] { return run.holds(B, var(G, 2, a) * var(G, 2, a)); });
    run.claim("ex-3-18/neutral-commutator-fails", [&] {
      auto e = G.identity();
      auto g = commutator(var(G, 1, e), var(G, 2, e));
      Outcome o = run.fails(B, g);
      if (!o.ok)
        return o;
      Verdict v = check_identity(B, g, run.opts);
      auto i34 = *B.find_label("E34"), i43 = *B.find_label("E43");
      Subspace block = Subspace::span(static_cast<Eigen::Index>(B.dim()),
                                      {basis_vector(B, i34), basis_vector(B, i43)});
      bool in_block = block.contains(v.witness->value);
      VecQ direct = evaluate(g, B,
                             {{GradedVariable{1, e}, basis_vector(B, i34)},
                              {GradedVariable{2, e}, basis_vector(B, i43)}});
      o.ok = in_block && !is_zero(direct);
      o.details += "; witness value in span{E34, E43}: " +
                   std::string(in_block ? "yes" : "no") +
                   "; [E34, E43] = " + element_to_string(B, direct);
      if (!o.ok)
        o.reproducer = make_reproducer(B, g, v);
      return o;
    });
  }
}

// ---------------------------------------------------------------- lemma-3-23 suite

struct CanonicalInstance {
  std::string name;
  FiniteAbelianGroup G;
  std::vector<GroupElement> H_gens;
  ThetaTuple theta;
  bool pauli = false;
};

GradedAlgebra build_instance(const CanonicalInstance &c) {
  auto H = subgroup_generated(c.G, c.H_gens);
  Cocycle sigma = c.pauli ? pauli_cocycle() : trivial_cocycle(H);
  if (!c.pauli && H.order() > 2) {
    std::map<GroupElement, Rational> t;
    long k = 1;
    for (const auto &h : H.elements())
      t[h] = Rational(k++);
    sigma = cocycle_from_coboundary(H, t);
  }
  return named(elementary_canonical(c.G, sigma, c.theta), c.name);
}

std::vector<CanonicalInstance> lemma_3_23_instances() {
  FiniteAbelianGroup klein({2, 2});
  return {
      {"klein/H=<(1,0)>", klein, {{1, 0}}, {{0, 0}, {0, 1}}, false},
      {"z3/H=e", FiniteAbelianGroup({3}), {}, {{0}, {1}, {2}}, false},
      {"klein/pauli", klein, {{1, 0}, {0, 1}}, {{0, 0}}, true},
      {"z6/H=<2>", FiniteAbelianGroup({6}), {{2}}, {{0}, {1}}, false},
      {"z4/H=<2>", FiniteAbelianGroup({4}), {{2}}, {{0}, {1}}, false},
  };
}

void suite_lemma_3_23(Runner &run) {
  for (const auto &inst : lemma_3_23_instances()) {
    const std::string id = "lemma-3-23/" + inst.name;
    auto B = build_instance(inst);
    run.context(B.name());
    const auto &G = B.group();
    const auto &meta = *B.canonical();
    auto H = subgroup_generated(G, inst.H_gens);
    const std::size_t k = meta.k, h = H.order();
    auto supp = support(B);
    auto in_H = [&](const GroupElement &x) { return H.contains(x); };

    run.claim(id + "/support-bound", [&] {
      bool ok = k == index(H) && k * h <= supp.size() &&
                supp.size() <= (k * k - k + 1) * h;
      return check(ok, "k = " + std::to_string(k) + ", |H| = " +
                           std::to_string(h) + ", |Supp| = " +
                           std::to_string(supp.size()) + " in [" +
                           std::to_string(k * h) + ", " +
                           std::to_string((k * k - k + 1) * h) + "]");
    });
    run.claim(id + "/no-square-identity", [&] {
      std::vector<std::string> holds;
      for (const auto &xi : supp)
        if (check_identity(B, var(G, 1, xi) * var(G, 1, xi), run.opts).holds)
          holds.push_back(to_string(xi));
      return check(holds.empty(),
                   holds.empty()
                       ? "(x@xi)^2 fails for all " +
                             std::to_string(supp.size()) + " support degrees"
                       : "(x@xi)^2 holds for " + join(holds, ", "));
    });
    run.claim(id + "/no-monomial-identity", [&] {
      std::vector<std::string> bad;
      for (const auto &a : supp)
        for (const auto &b : supp) {
          if (check_identity(B, var(G, 1, a) * var(G, 2, b), run.opts).holds)
            bad.push_back("x@" + to_string(a) + " y@" + to_string(b));
          auto space = find_multilinear_identities(B, {a, b}, 4, run.opts);
          Subspace coeffs(2);
          for (const auto &p : space.basis) {
            VecQ v = zero_vector(2);
            for (Eigen::Index c = 0; c < 2; ++c) {
              auto it = p.terms().find(space.monomials[c]);
              if (it != p.terms().end())
                v[c] = it->second;
            }
            coeffs.insert(v);
          }
          if (coeffs.contains(unit_vector(2, 0)) ||
              coeffs.contains(unit_vector(2, 1)))
            bad.push_back("monomial in identity space at (" + to_string(a) +
                          ", " + to_string(b) + ")");
        }
      return check(bad.empty(),
                   bad.empty() ? "no single monomial is an identity on " +
                                     std::to_string(supp.size() * supp.size()) +
                                     " degree pairs"
                               : join(bad, "; "));
    });

    std::map<std::pair<GroupElement, GroupElement>, bool> sigma_holds;
    for (const auto &a : supp)
      for (const auto &b : supp)
        sigma_holds[{a, b}] = sigma_identity_check(B, a, b).holds;

    run.claim(id + "/sigma-i", [&] {
      std::size_t pairs = 0;
      std::vector<std::string> bad;
      for (const auto &[ab, ok] : sigma_holds) {
        if (!ok)
          continue;
        ++pairs;
        for (auto x : component_basis(B, ab.first))
          for (auto y : component_basis(B, ab.second)) {
            auto [i, j, ha] = meta.decode(x);
            auto [r, s, hb] = meta.decode(y);
            if (!((i != s && j != r) || (i == j && j == r && r == s)))
              bad.push_back(B.label(x) + "," + B.label(y));
          }
      }
      return check(bad.empty(), std::to_string(pairs) +
                                    " sigma-identities, index pattern " +
                                    (bad.empty() ? "respected"
                                                 : "violated at " + join(bad, "; ")));
    });
    run.claim(id + "/sigma-iv", [&] {
      std::vector<std::string> bad;
      for (const auto &a : H.elements())
        for (const auto &b : H.elements())
          if (!sigma_identity_check(B, a, b).holds)
            bad.push_back(to_string(a) + "," + to_string(b));
      return check(bad.empty(),
                   bad.empty() ? "[x@xi, y@zeta]_sigma holds for all xi, zeta in H"
                               : "fails at " + join(bad, "; "));
    });
    run.claim(id + "/sigma-v", [&] {
      if (supp.size() != k * h)
        return check(true, "|Supp| != k|H|, item v does not apply");
      std::vector<std::string> bad;
      for (const auto &[ab, ok] : sigma_holds)
        if (ok && !(in_H(ab.first) && in_H(ab.second)))
          bad.push_back(to_string(ab.first) + "," + to_string(ab.second));
      return check(bad.empty(),
                   bad.empty() ? "every sigma-identity pair lies in H x H"
                               : "outside H x H: " + join(bad, "; "));
    });
  }
}

// ---------------------------------------------------------------- theorem-3-06 suite

void suite_theorem_3_06(Runner &run) {
  struct Item {
    std::size_t d;
    GradedAlgebra A;
  };
  std::vector<Item> corpus;
  corpus.push_back({1, coarsen_to_trivial(group_algebra(3))});
  corpus.push_back({1, coarsen_to_trivial(coboundary_algebra(4))});
  corpus.push_back({1, nil_one_dim()});
  corpus.push_back({1, named(grassmann(1), "grassmann1")});
  for (std::size_t n = 2; n <= 6; ++n)
    corpus.push_back({2, named(grassmann(n), "grassmann" + std::to_string(n))});
  corpus.push_back({3, witness_w3()});
  corpus.push_back({3, w3_product()});
  corpus.push_back({3, w3_unitization()});
  corpus.push_back({3, w3_squared_coarsened()});

  for (const auto &[d, A] : corpus) {
    const std::string id =
        "thm-3-06/d" + std::to_string(d) + "/" + A.name();
    run.context(A.name());
    run.claim(id + "/hypotheses", [&] {
      auto supp = support(A);
      bool central = neutral_component_central(A);
      return check(central && supp.size() == d,
                   "support " + degrees_text(supp) + ", neutral component " +
                       (central ? "central" : "NOT central"));
    });
    run.claim(id + "/left-normed-" + std::to_string(d + 1),
              [&] { return run.holds(A, left_normed(d + 1)); });
    if (d == 3)
      run.claim(id + "/triple-commutators-central", [&] {
        auto series = lie_series(A);
        Subspace L2(static_cast<Eigen::Index>(A.dim()));
        if (series.lower_central.size() >= 2)
          L2 = series.lower_central[1];
        bool ok = center(A).contains(L2);
        return check(ok, "dim [A,A,A] = " + std::to_string(L2.dim()) +
                             (ok ? ", contained in the center"
                                 : ", NOT contained in the center"));
      });
  }
}

// ---------------------------------------------------------------- prop-3-28 suite

void suite_prop_3_28(Runner &run) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto A = named(prop_3_28_family(n), "prop328:" + std::to_string(n));
    run.context(A.name());
    const std::string id = "prop-3-28/n" + std::to_string(n);
    run.claim(id + "/neutral-central", [&] {
      return check(neutral_component_central(A) && is_neutral_central(A),
                   "A_e = span" + labels_of(A, component_basis(A, A.group().identity())));
    });
    run.claim(id + "/support", [&] {
      auto s = support(A).size();
      return check(s == n + 4, "|Supp| = " + std::to_string(s));
    });
    const auto i = *A.find_label("i"), j = *A.find_label("j"),
               kq = *A.find_label("k");
    for (std::size_t m = 2; m <= 6; ++m)
      run.claim(id + "/left-normed-" + std::to_string(m) + "-fails", [&] {
        auto g = left_normed(m);
        Outcome o = run.fails(A, g);
        FiniteAbelianGroup T;
        std::map<GradedVariable, VecQ> asg;
        asg[{1, T.identity()}] = basis_vector(A, i);
        for (unsigned p = 2; p <= m; ++p)
          asg[{p, T.identity()}] = basis_vector(A, j);
        VecQ value = evaluate(g, A, asg);
        const std::size_t target = m % 2 == 0 ? kq : i;
        Rational mag(1);
        for (std::size_t p = 1; p < m; ++p)
          mag *= 2;
        bool shape = true;
        for (Eigen::Index c = 0; c < value.size(); ++c)
          if (static_cast<std::size_t>(c) != target && !value[c].is_zero())
            shape = false;
        shape = shape && abs(value[target]) == mag;
        std::string w = "[i";
        for (std::size_t p = 1; p < m; ++p)
          w += ",j";
        o.details += "; " + w + "] = " + element_to_string(A, value);
        o.ok = o.ok && shape;
        if (!o.ok && !o.reproducer)
          o.reproducer = Reproducer{A.name(), "", to_string(g), true, w + "]"};
        return o;
      });
  }
}

// ---------------------------------------------------------------- lemma-3-04 suite

void suite_lemma_3_04(Runner &run) {
  std::vector<GradedAlgebra> corpus;
  for (int n : {3, 4, 6}) {
    corpus.push_back(group_algebra(n));
    corpus.push_back(coboundary_algebra(n));
  }
  for (const auto &B : corpus) {
    const std::string id = "lemma-3-04/" + B.name();
    run.context(B.name());
    const auto &G = B.group();
    run.claim(id + "/neutral-central", [&] {
      return check(neutral_component_central(B), "B_e = span" +
                                                      labels_of(B, component_basis(B, G.identity())));
    });
    for (const auto &xi : support(B))
      run.claim(id + "/neutral-commutes/" + to_string(xi), [&] {
        return run.holds(B, commutator(var(G, 1, G.identity()), var(G, 2, xi)));
      });
    run.claim(id + "/commutative", [&] {
      bool ok = commutator_span(B).is_zero();
      return check(ok, ok ? "symmetric cocycle, commutative algebra"
                          : "commutators do not vanish");
    });
    run.claim(id + "/degree-2-shape", [&] {
      GradedPolynomial g(G);
      unsigned idx = 1;
      for (const auto &xi : support(B)) {
        g += commutator(var(G, idx, G.identity()), var(G, idx + 1, xi));
        idx += 2;
      }
      auto c = degree2_canonicalize(B, g, run.opts);
      bool delta_free = std::all_of(c.delta.begin(), c.delta.end(),
                                    [](const auto &kv) { return kv.second.is_zero(); });
      return check(delta_free && c.reconstructed_holds,
                   "canonical form " + to_string(c.reconstructed) +
                       (c.reconstructed_holds ? " verified" : " NOT verified"));
    });
  }
}

// ---------------------------------------------------------------- theorem-3-12 suite

void suite_theorem_3_12(Runner &run) {
  std::vector<GradedAlgebra> corpus = {witness_w3(), w3_product(),
                                       w3_unitization(), w3_squared_coarsened(),
                                       w4()};
  for (const auto &A : corpus) {
    const std::string id = "thm-3-12/" + A.name();
    run.context(A.name());
    run.claim(id + "/hypotheses", [&] {
      bool cyclic = A.group().rank() == 1;
      bool central = neutral_component_central(A);
      return check(cyclic && central,
                   "G = " + to_string(A.group()) + ", neutral component " +
                       (central ? "central" : "NOT central"));
    });
    run.claim(id + "/commutator-ideal-nilpotent", [&] {
      auto nd = commutator_ideal_nilpotency(A);
      return check(nd.has_value(),
                   nd ? "commutator ideal of dimension " +
                            std::to_string(commutator_ideal(A).dim()) +
                            ", nilpotency index " + std::to_string(*nd)
                      : "commutator ideal is not nilpotent");
    });
    run.claim(id + "/derived-series-terminates", [&] {
      auto s = lie_series(A);
      return check(s.solvable, "derived length " +
                                   std::to_string(s.derived.size()) +
                                   (s.solvable ? ", reaches zero" : ", stalls"));
    });
    run.claim(id + "/radical-decomposition", [&] {
      Subspace J = jacobson_radical(A);
      bool graded = is_graded_subspace(A, J);
      bool holds = J.contains(commutator_ideal(A));
      return check(graded && holds,
                   "dim A = " + std::to_string(A.dim()) + ", dim J = " +
                       std::to_string(J.dim()) + ", J graded: " +
                       (graded ? "yes" : "no") + ", commutator ideal inside J: " +
                       (holds ? "yes" : "no"));
    });
  }
}

// ---------------------------------------------------------------- theorem-3-30 suite

void suite_theorem_3_30(Runner &run) {
  std::vector<GradedAlgebra> corpus = {witness_w3(), group_algebra(3),
                                       coboundary_algebra(3), w3_product(),
                                       w3_unitization(), w3_squared_coarsened(),
                                       w3_envelope(6), group_algebra_envelope(6)};
  std::vector<std::string> exploration;
  for (const auto &A : corpus) {
    const std::string id = "thm-3-30/" + A.name();
    run.context(A.name());
    run.claim(id + "/hypotheses", [&] {
      bool central = neutral_component_central(A);
      return check(A.group() == FiniteAbelianGroup({3}) && central,
                   "G = " + to_string(A.group()) + ", dim " +
                       std::to_string(A.dim()) + ", neutral component " +
                       (central ? "central" : "NOT central"));
    });
    run.claim(id + "/commutator-product", [&] {
      for (std::size_t d = 1; d <= 4; ++d) {
        Verdict v = commutator_product_identity(A, d);
        if (v.holds)
          return check(true, "product_of_commutators(" + std::to_string(d) +
                                 ") holds; least such d = " +
                                 std::to_string(d));
      }
      auto g = product_of_commutators(4);
      Verdict v = commutator_product_identity(A, 4);
      Outcome o = check(false, "no d <= 4 found; " +
                                   describe(A, *v.witness));
      o.reproducer = make_reproducer(A, g, v);
      return o;
    });
    run.claim(id + "/commutator-ideal-nilpotent", [&] {
      auto nd = commutator_ideal_nilpotency(A);
      return check(nd.has_value(),
                   nd ? "nilpotency index " + std::to_string(*nd)
                      : "commutator ideal is not nilpotent");
    });
    for (std::size_t m = 2; m <= 6; ++m)
      if (left_normed_identity(A, m).holds) {
        exploration.push_back(A.name() + ": [x1..x" + std::to_string(m) + "]");
        break;
      } else if (m == 6) {
        exploration.push_back(A.name() + ": none up to 6");
      }
  }
  run.context("z3-corpus");
  run.claim("thm-3-30/problem-star/exploratory", [&] {
    Outcome o;
    o.exploratory = true;
    o.details = "least left-normed commutator identity per algebra (search "
                "only, not a certificate): " +
                join(exploration, "; ");
    return o;
  });
}

// ---------------------------------------------------------------- radical

void suite_radical(Runner &run) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto M = named(matrix_algebra(k), "matrix:" + std::to_string(k));
    run.context(M.name());
    run.claim("radical/" + M.name() + "/zero", [&] {
      auto J = jacobson_radical(M);
      return check(J.is_zero(), "dim J = " + std::to_string(J.dim()));
    });
  }
  std::vector<GradedAlgebra> twisted = {group_algebra(3), coboundary_algebra(4),
                                        coboundary_algebra(6)};
  {
    FiniteAbelianGroup K({2, 2});
    twisted.push_back(named(twisted_group_algebra(trivial_cocycle(
                                subgroup_generated(K, K.elements()))),
                            "Q[Z2xZ2]"));
  }
  for (const auto &T : twisted) {
    run.context(T.name());
    run.claim("radical/" + T.name() + "/zero", [&] {
      bool symmetric = commutator_span(T).is_zero();
      auto J = jacobson_radical(T);
      return check(symmetric && J.is_zero(),
                   std::string("cocycle ") + (symmetric ? "symmetric" : "NOT symmetric") +
                       ", dim J = " + std::to_string(J.dim()));
    });
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    auto U = named(triangular(k), "triangular:" + std::to_string(k));
    run.context(U.name());
    run.claim("radical/" + U.name() + "/strictly-upper", [&] {
      std::vector<VecQ> upper;
      for (std::size_t b = 0; b < U.dim(); ++b)
        if (!U.degree(b).is_identity())
          upper.push_back(basis_vector(U, b));
      Subspace want = Subspace::span(static_cast<Eigen::Index>(U.dim()), upper);
      auto J = jacobson_radical(U);
      return check(J == want, "dim J = " + std::to_string(J.dim()) +
                                  ", strictly upper part has dimension " +
                                  std::to_string(want.dim()));
    });
  }
  std::vector<GradedAlgebra> corpus = {
      pauli_m2(),          quaternions(),      witness_w3(),
      w3_unitization(),    w3_product(),       nil_one_dim(),
      named(grassmann(3), "grassmann:3"), example_3_18(),
      named(prop_3_28_family(1), "prop328:1"), named(triangular(3), "triangular:3")};
  for (const auto &A : corpus) {
    run.context(A.name());
    run.claim("radical/" + A.name() + "/nilpotent-graded-ideal", [&] {
      auto J = jacobson_radical(A);
      bool ideal = is_ideal(A, J);
      auto nd = nilpotency_index(A, J);
      bool graded = is_graded_subspace(A, J);
      return check(ideal && nd && graded,
                   "dim J = " + std::to_string(J.dim()) + ", ideal: " +
                       (ideal ? "yes" : "no") + ", nilpotency index: " +
                       (nd ? std::to_string(*nd) : "none") +
                       ", graded: " + (graded ? "yes" : "no"));
    });
  }
}

// ---------------------------------------------------------------- cross-check

struct CrossCase {
  GradedPolynomial g;
  bool identity_biased = false;
};

GradedPolynomial random_polynomial(std::mt19937 &rng, const GradedAlgebra &A,
                                   bool ungraded) {
  FiniteAbelianGroup T;
  const FiniteAbelianGroup &G = ungraded ? T : A.group();
  auto supp = ungraded ? std::vector<GroupElement>{T.identity()} : support(A);
  auto all = G.elements();
  std::uniform_int_distribution<int> nv(1, 3), len(1, 3), nterms(1, 4),
      coeff(-2, 2);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<GradedVariable> vars;
  int n = nv(rng);
  for (int i = 1; i <= n; ++i) {
    const auto &pool = u(rng) < 0.9 ? supp : all;
    vars.push_back({static_cast<unsigned>(i),
                    pool[std::uniform_int_distribution<std::size_t>(
                        0, pool.size() - 1)(rng)]});
  }
  GradedPolynomial g(G);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    GradedMonomial m;
    int l = len(rng);
    for (int p = 0; p < l; ++p)
      m.push_back(vars[std::uniform_int_distribution<std::size_t>(
          0, vars.size() - 1)(rng)]);
    int c = 0;
    while (c == 0)
      c = coeff(rng);
    g.add_term(m, Rational(c));
  }
  return g;
}

/// Random combination of multilinear identities, optionally with the last
/// variable identified with the first.
std::optional<GradedPolynomial> random_identity(std::mt19937 &rng,
                                                const GradedAlgebra &A,
                                                const EngineOptions &opts) {
  auto supp = support(A);
  std::uniform_int_distribution<int> nd(2, 3), coeff(-2, 2);
  int n = nd(rng);
  std::vector<GroupElement> degrees;
  for (int i = 0; i < n; ++i)
    degrees.push_back(supp[std::uniform_int_distribution<std::size_t>(
        0, supp.size() - 1)(rng)]);
  if (n == 3 && std::uniform_int_distribution<int>(0, 1)(rng))
    degrees[2] = degrees[0];
  auto space = find_multilinear_identities(A, degrees, 4, opts);
  if (space.basis.empty())
    return std::nullopt;
  GradedPolynomial g(A.group());
  for (const auto &b : space.basis)
    g += Rational(coeff(rng)) * b;
  if (g.is_zero())
    g = space.basis.front();
  if (degrees.back() == degrees.front()) {
    GradedPolynomial h(A.group());
    for (const auto &[m, c] : g.terms()) {
      GradedMonomial m2 = m;
      for (auto &v : m2)
        if (v.index == static_cast<unsigned>(n))
          v.index = 1;
      h.add_term(m2, c);
    }
    if (!h.is_zero())
      g = h;
  }
  return g;
}

bool components_hold(const GradedAlgebra &A, const GradedPolynomial &g,
                     const EngineOptions &opts) {
  for (const auto &[deg, part] : g_homogeneous_components(g))
    for (const auto &piece : multihomogeneous_components(part))
      if (!is_identity_generic(A, piece, opts).holds)
        return false;
  return true;
}

void suite_engine_crosscheck(Runner &run) {
  std::vector<GradedAlgebra> corpus = {
      pauli_m2(),
      quaternions(),
      witness_w3(),
      nil_one_dim(),
      named(grassmann(3), "grassmann:3"),
      named(triangular(3), "triangular:3"),
      group_algebra(3),
      named(prop_3_28_family(1), "prop328:1"),
      example_3_18(),
      w3_unitization(),
      named(matrix_algebra(2), "matrix:2"),
      coboundary_algebra(4)};
  std::mt19937 rng(20240601u);
  constexpr std::size_t per_algebra = 20;
  std::size_t total = 0, holding = 0;
  for (const auto &A : corpus) {
    run.context(A.name());
    std::vector<CrossCase> cases;
    std::uniform_real_distribution<double> u(0, 1);
    while (cases.size() < per_algebra) {
      double r = u(rng);
      if (r < 0.4) {
        if (auto g = random_identity(rng, A, run.opts))
          cases.push_back({*g, true});
      } else {
        bool ungraded = r > 0.85 && A.dim() <= 8;
        cases.push_back({random_polynomial(rng, A, ungraded), false});
      }
    }
    std::size_t agree = 0, round_trip = 0, holds = 0;
    std::optional<Reproducer> first_bad;
    std::string bad_detail;
    for (const auto &c : cases) {
      Verdict tuples = is_graded_identity(A, c.g, run.opts);
      Verdict generic = is_identity_generic(A, c.g, run.opts);
      bool comps = components_hold(A, c.g, run.opts);
      holds += tuples.holds;
      if (tuples.holds == generic.holds)
        ++agree;
      else if (!first_bad) {
        first_bad = make_reproducer(A, c.g, tuples.holds ? generic : tuples);
        bad_detail = "disagreement on " + to_string(c.g);
      }
      if (comps == tuples.holds)
        ++round_trip;
      else if (!first_bad) {
        first_bad = make_reproducer(A, c.g, tuples);
        bad_detail = "component round-trip broken on " + to_string(c.g);
      }
    }
    total += cases.size();
    holding += holds;
    run.claim("engine-crosscheck/" + A.name(), [&] {
      Outcome o = check(agree == cases.size() && round_trip == cases.size(),
                        std::to_string(agree) + "/" +
                            std::to_string(cases.size()) +
                            " verdicts agree with the generic oracle, " +
                            std::to_string(round_trip) +
                            " component round-trips, " + std::to_string(holds) +
                            " identities" +
                            (bad_detail.empty() ? "" : "; " + bad_detail));
      o.reproducer = first_bad;
      return o;
    });
  }
  run.context("corpus");
  run.claim("engine-crosscheck/total", [&] {
    return check(total >= 200 && holding > 0 && holding < total,
                 std::to_string(total) + " pairs, " + std::to_string(holding) +
                     " identities, " + std::to_string(total - holding) +
                     " non-identities");
  });
}

} // namespace

std::vector<ClaimReport> run_suite(const std::string &name,
                                   const EngineOptions &opts) {
  Runner run(opts);
  if (name == "examples")
    suite_examples(run);
  else if (name == "lemma-3-23")
    suite_lemma_3_23(run);
  else if (name == "theorem-3-06")
    suite_theorem_3_06(run);
  else if (name == "prop-3-28")
    suite_prop_3_28(run);
  else if (name == "lemma-3-04")
    suite_lemma_3_04(run);
  else if (name == "theorem-3-12")
    suite_theorem_3_12(run);
  else if (name == "theorem-3-30")
    suite_theorem_3_30(run);
  else if (name == "radical")
    suite_radical(run);
  else if (name == "engine-crosscheck")
    suite_engine_crosscheck(run);
  else
    throw UsageError("unknown suite '" + name + "' (known: " +
                     join(suite_names(), ", ") + ")");
  auto reports = std::move(run.reports);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto &a, const auto &b) { return a.id < b.id; });
  return reports;
}

nlohmann::ordered_json report_json(const std::string &suite,
                           const std::vector<ClaimReport> &reports,
                           bool timings) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto &r : reports) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["status"] = to_string(r.status);
    c["details"] = r.details;
    if (timings)
      c["runtime_ms"] = r.runtime_ms;
    if (r.reproducer) {
      nlohmann::ordered_json rep;
      rep["algebra"] = r.reproducer->algebra;
      if (!r.reproducer->algebra_text.empty())
        rep["algebra_text"] = r.reproducer->algebra_text;
      rep["polynomial"] = r.reproducer->polynomial;
      rep["ungraded"] = r.reproducer->ungraded;
      rep["witness"] = r.reproducer->witness;
      c["reproducer"] = rep;
    } else {
      c["reproducer"] = nullptr;
    }
    claims.push_back(c);
    ++counts[static_cast<int>(r.status)];
  }
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["claims"] = claims;
  out["summary"] = {{"pass", counts[0]},
                    {"fail", counts[1]},
                    {"out-of-scope", counts[2]}};
  return out;
}

std::string report_text(const std::vector<ClaimReport> &reports, bool timings) {
  std::ostringstream out;
  for (const auto &r : reports) {
    const char *tag = r.status == ClaimStatus::pass   ? "PASS"
                      : r.status == ClaimStatus::fail ? "FAIL"
                                                      : "SKIP";
    out << tag << "  " << r.id;
    if (timings) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << r.runtime_ms;
      out << "  [" << ms.str() << " ms]";
    }
    out << "\n      " << r.details << "\n";
    if (r.reproducer) {
      out << "      reproduce: gpw check " << r.reproducer->algebra << " -g \""
          << r.reproducer->polynomial << "\""
          << (r.reproducer->ungraded ? " --ungraded" : "") << "\n";
      out << "      witness: " << r.reproducer->witness << "\n";
    }
  }
  return out.str();
}

} // namespace gpw
