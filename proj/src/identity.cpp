#include "gpw/identity.hpp"

#include "gpw/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace gpw {

EngineOptions EngineOptions::from_env() {
  EngineOptions o;
  if (const char *s = std::getenv("GPW_MAX_EVALS")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0)
      o.max_evals = static_cast<std::size_t>(v);
  }
  return o;
}

namespace {

using SparseQ = std::map<std::size_t, Rational>;

VecQ to_dense(const GradedAlgebra &A, const SparseQ &s) {
  VecQ v = zero_element<Rational>(A);
  for (const auto &[i, c] : s)
    v[i] = c;
  return v;
}

/// Product of basis elements b[0] b[1] ... as a sparse vector.
SparseQ basis_word(const GradedAlgebra &A, const std::vector<std::size_t> &b) {
  SparseQ cur{{b[0], Rational(1)}};
  for (std::size_t p = 1; p < b.size() && !cur.empty(); ++p) {
    SparseQ next;
    for (const auto &[i, c] : cur)
      for (const auto &t : A.product(i, b[p]))
        next[t.index] += c * t.coeff;
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }
  return cur;
}

/// Multilinear polynomial with its monomials rewritten as positions into a
/// sorted variable list.
struct Compiled {
  std::vector<GradedVariable> vars;
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;
};

Compiled compile(const GradedPolynomial &p) {
  Compiled c;
  auto vs = p.variables();
  c.vars.assign(vs.begin(), vs.end());
  for (const auto &[m, coeff] : p.terms()) {
    std::vector<std::size_t> pos;
    for (const auto &v : m)
      pos.push_back(static_cast<std::size_t>(
          std::lower_bound(c.vars.begin(), c.vars.end(), v) - c.vars.begin()));
    c.terms.emplace_back(std::move(pos), coeff);
  }
  return c;
}

SparseQ evaluate_tuple(const GradedAlgebra &A, const Compiled &c,
                       const std::vector<std::size_t> &tuple) {
  SparseQ total;
  std::vector<std::size_t> word;
  for (const auto &[pos, coeff] : c.terms) {
    word.clear();
    for (auto p : pos)
      word.push_back(tuple[p]);
    for (const auto &[i, v] : basis_word(A, word))
      total[i] += coeff * v;
  }
  for (auto it = total.begin(); it != total.end();)
    it = it->second.is_zero() ? total.erase(it) : std::next(it);
  return total;
}

std::vector<std::size_t> candidates(const GradedAlgebra &A,
                                    const GradedVariable &v, bool ordinary) {
  if (ordinary) {
    std::vector<std::size_t> all(A.dim());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  return component_basis(A, v.degree);
}

std::string describe_component(const Polarization &p) {
  std::string s;
  auto comps = g_homogeneous_components(p.source);
  if (!comps.empty())
    s = "degree " + to_string(comps.begin()->first) + ", ";
  s += "component " + to_string(p.source);
  if (p.constant != Rational(1))
    s += ", polarized with constant " + to_string(p.constant);
  return s;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

} // namespace

Verdict is_graded_identity(const GradedAlgebra &A, const GradedPolynomial &g,
                           const EngineOptions &opts) {
  const bool ordinary = ordinary_mode(g, A);
  Verdict verdict;
  verdict.method = "basis-tuples";
  auto pieces = multilinearize_tracked(g);

  struct Job {
    const Polarization *piece;
    Compiled compiled;
    std::vector<std::vector<std::size_t>> cand;
  };
  std::vector<Job> jobs;
  std::size_t budget = 0;
  for (const auto &p : pieces) {
    Job job{&p, compile(p.poly), {}};
    std::size_t count = 1;
    for (const auto &v : job.compiled.vars) {
      job.cand.push_back(candidates(A, v, ordinary));
      count = saturating_mul(count, job.cand.back().size());
    }
    if (count == 0)
      continue; // some variable has an empty component
    budget += count;
    if (budget > opts.max_evals)
      throw ResourceError("identity check needs more than " +
                          std::to_string(opts.max_evals) +
                          " basis-tuple evaluations (raise GPW_MAX_EVALS)");
    jobs.push_back(std::move(job));
  }

  for (const auto &job : jobs) {
    const std::size_t n = job.compiled.vars.size();
    std::vector<std::size_t> odo(n, 0), tuple(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i)
        tuple[i] = job.cand[i][odo[i]];
      ++verdict.evaluations;
      SparseQ value = evaluate_tuple(A, job.compiled, tuple);
      if (!value.empty()) {
        Witness w;
        w.component = describe_component(*job.piece);
        w.polynomial = job.piece->poly;
        for (std::size_t i = 0; i < n; ++i)
          w.assignment.emplace_back(job.compiled.vars[i],
                                    basis_vector(A, tuple[i]));
        w.value = to_dense(A, value);
        verdict.holds = false;
        verdict.witness = std::move(w);
        return verdict;
      }
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++odo[i] < job.cand[i].size())
          break;
        odo[i] = 0;
        if (i == 0) {
          i = n + 1;
          break;
        }
      }
      if (i == n + 1 || n == 0)
        break;
    }
  }
  return verdict;
}

namespace {

MultiPoly substitute(const MultiPoly &p, std::size_t var, const Rational &x) {
  MultiPoly out;
  for (const auto &[e, c] : p.terms()) {
    unsigned k = var < e.size() ? e[var] : 0;
    Rational f = c;
    for (unsigned i = 0; i < k; ++i)
      f *= x;
    auto e2 = e;
    if (var < e2.size())
      e2[var] = 0;
    out.add_term(e2, f);
  }
  return out;
}

unsigned degree_in(const MultiPoly &p, std::size_t var) {
  unsigned d = 0;
  for (const auto &[e, c] : p.terms())
    if (var < e.size())
      d = std::max(d, e[var]);
  return d;
}

} // namespace

Verdict is_identity_generic(const GradedAlgebra &A, const GradedPolynomial &g,
                            const EngineOptions &opts) {
  const bool ordinary = ordinary_mode(g, A);
  Verdict verdict;
  verdict.method = "generic";
  auto vars = g.variables();

  std::map<GradedVariable, std::vector<std::size_t>> cand;
  std::size_t expanded = 0;
  for (const auto &v : vars)
    cand[v] = candidates(A, v, ordinary);
  for (const auto &[m, c] : g.terms()) {
    std::size_t count = 1;
    for (const auto &v : m)
      count = saturating_mul(count, cand[v].size());
    expanded += count;
  }
  const std::size_t limit = std::max<std::size_t>(1, opts.max_evals / 10);
  if (expanded > limit)
    throw ResourceError("generic evaluation would expand to " +
                        std::to_string(expanded) + " monomials (limit " +
                        std::to_string(limit) + ")");
  verdict.evaluations = expanded;

  std::map<GradedVariable, Vec<MultiPoly>> generic;
  std::vector<std::pair<GradedVariable, std::size_t>> tvars;
  for (const auto &v : vars) {
    Vec<MultiPoly> x = zero_element<MultiPoly>(A);
    for (auto b : cand[v]) {
      x[b] = MultiPoly::variable(tvars.size());
      tvars.emplace_back(v, b);
    }
    generic.emplace(v, std::move(x));
  }
  Vec<MultiPoly> value = evaluate_unchecked<MultiPoly>(g, A, generic);
  for (Eigen::Index c = 0; c < value.size(); ++c) {
    if (value[c].is_zero())
      continue;
    // Pick small integer values keeping this coordinate nonzero.
    MultiPoly p = value[c];
    std::vector<Rational> point(tvars.size(), Rational(0));
    for (std::size_t t = 0; t < tvars.size(); ++t) {
      unsigned d = degree_in(p, t);
      for (unsigned x = 0; x <= d; ++x) {
        MultiPoly q = substitute(p, t, Rational(static_cast<long>(x)));
        if (!q.is_zero()) {
          point[t] = Rational(static_cast<long>(x));
          p = std::move(q);
          break;
        }
      }
    }
    std::map<GradedVariable, VecQ> assignment;
    for (const auto &v : vars)
      assignment[v] = zero_element<Rational>(A);
    for (std::size_t t = 0; t < tvars.size(); ++t)
      assignment[tvars[t].first][tvars[t].second] = point[t];
    Witness w;
    w.component = "generic coordinate " + A.label(c);
    w.polynomial = g;
    for (const auto &[v, x] : assignment)
      w.assignment.emplace_back(v, x);
    w.value = evaluate_unchecked<Rational>(g, A, assignment);
    verdict.holds = false;
    verdict.witness = std::move(w);
    return verdict;
  }
  return verdict;
}

namespace {

struct Generator {
  VecQ value;
  std::vector<std::size_t> tuple;
};

Witness structural_witness(const GradedAlgebra &A, const GradedPolynomial &g,
                           const Generator &gen, const std::string &what) {
  Witness w;
  w.component = what;
  w.polynomial = g;
  FiniteAbelianGroup T;
  for (std::size_t i = 0; i < gen.tuple.size(); ++i)
    w.assignment.emplace_back(
        GradedVariable{static_cast<unsigned>(i + 1), T.identity()},
        basis_vector(A, gen.tuple[i]));
  w.value = gen.value;
  return w;
}

std::vector<Generator> commutator_generators(const GradedAlgebra &A) {
  std::vector<Generator> gens;
  Subspace span(static_cast<Eigen::Index>(A.dim()));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (i == j)
        continue;
      VecQ v = product_vector(A, i, j) - product_vector(A, j, i);
      if (span.insert(v))
        gens.push_back({std::move(v), {i, j}});
    }
  return gens;
}

} // namespace

Verdict left_normed_identity(const GradedAlgebra &A, std::size_t n) {
  if (n < 2)
    throw ContractError("left-normed commutators need n >= 2");
  Verdict verdict;
  verdict.method = "structural:lower-central";
  std::vector<Generator> level = commutator_generators(A);
  const Eigen::Index dim = static_cast<Eigen::Index>(A.dim());
  for (std::size_t k = 2; k < n && !level.empty(); ++k) {
    std::vector<Generator> next;
    Subspace span(dim);
    for (const auto &g : level)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        VecQ v = multiply_right_basis(A, g.value, j) -
                 multiply_left_basis(A, j, g.value);
        ++verdict.evaluations;
        if (span.insert(v)) {
          auto t = g.tuple;
          t.push_back(j);
          next.push_back({std::move(v), std::move(t)});
        }
      }
    level = std::move(next);
  }
  if (!level.empty()) {
    verdict.holds = false;
    verdict.witness = structural_witness(
        A, left_normed(n), level.front(),
        "lower central term L_" + std::to_string(n - 1) + " is nonzero");
  }
  return verdict;
}

Verdict commutator_product_identity(const GradedAlgebra &A, std::size_t d) {
  if (d < 1)
    throw ContractError("product of commutators needs d >= 1");
  Verdict verdict;
  verdict.method = "structural:commutator-powers";
  const std::vector<Generator> base = commutator_generators(A);
  std::vector<Generator> level = base;
  const Eigen::Index dim = static_cast<Eigen::Index>(A.dim());
  for (std::size_t k = 2; k <= d && !level.empty(); ++k) {
    std::vector<Generator> next;
    Subspace span(dim);
    for (const auto &g : level)
      for (const auto &c : base) {
        VecQ v = multiply(A, g.value, c.value);
        ++verdict.evaluations;
        if (span.insert(v)) {
          auto t = g.tuple;
          t.insert(t.end(), c.tuple.begin(), c.tuple.end());
          next.push_back({std::move(v), std::move(t)});
        }
      }
    level = std::move(next);
  }
  if (!level.empty()) {
    verdict.holds = false;
    verdict.witness = structural_witness(
        A, product_of_commutators(d), level.front(),
        "product of " + std::to_string(d) + " commutator spaces is nonzero");
  }
  return verdict;
}

Verdict check_identity(const GradedAlgebra &A, const GradedPolynomial &g,
                       const EngineOptions &opts) {
  if (g.is_ungraded() && !g.is_zero()) {
    const std::size_t deg = g.degree();
    if (deg >= 2 && g == left_normed(deg))
      return left_normed_identity(A, deg);
    if (deg >= 2 && deg % 2 == 0 && g == product_of_commutators(deg / 2))
      return commutator_product_identity(A, deg / 2);
  }
  return is_graded_identity(A, g, opts);
}

bool is_neutral_central(const GradedAlgebra &A) {
  const auto &G = A.group();
  for (const auto &xi : support(A)) {
    GradedPolynomial g = commutator(GradedPolynomial::variable(G, 1, G.identity()),
                                    GradedPolynomial::variable(G, 2, xi));
    if (!is_graded_identity(A, g).holds)
      return false;
  }
  return true;
}

IdentitySpace find_multilinear_identities(
    const GradedAlgebra &A, const std::vector<GroupElement> &degrees,
    std::size_t max_n, const EngineOptions &opts) {
  const std::size_t n = degrees.size();
  if (n == 0)
    throw ContractError("identity search needs at least one degree");
  if (n > max_n)
    throw ResourceError("identity search is limited to " +
                        std::to_string(max_n) + " variables, got " +
                        std::to_string(n));
  for (const auto &d : degrees)
    if (!A.group().contains(d))
      throw InvalidInputError("degree " + to_string(d) + " is not in " +
                              to_string(A.group()));
  IdentitySpace out;
  out.degrees = degrees;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<std::vector<std::size_t>> words; // positions
  do {
    GradedMonomial m;
    std::vector<std::size_t> w;
    for (auto p : perm) {
      m.push_back(GradedVariable{p, degrees[p - 1]});
      w.push_back(p - 1);
    }
    out.monomials.push_back(std::move(m));
    words.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Eigen::Index cols = static_cast<Eigen::Index>(words.size());

  std::vector<std::vector<std::size_t>> cand;
  std::size_t tuples = 1;
  for (const auto &d : degrees) {
    cand.push_back(component_basis(A, d));
    tuples = saturating_mul(tuples, cand.back().size());
  }
  if (saturating_mul(tuples, words.size()) > opts.max_evals)
    throw ResourceError("identity search needs more than " +
                        std::to_string(opts.max_evals) + " evaluations");

  Subspace rows(cols);
  if (tuples > 0) {
    std::vector<std::size_t> odo(n, 0), tuple(n), word(n);
    bool done = false;
    while (!done && rows.dim() < static_cast<std::size_t>(cols)) {
      for (std::size_t i = 0; i < n; ++i)
        tuple[i] = cand[i][odo[i]];
      std::map<std::size_t, VecQ> coord_rows;
      for (Eigen::Index c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < n; ++i)
          word[i] = tuple[words[c][i]];
        for (const auto &[k, v] : basis_word(A, word)) {
          auto it = coord_rows.try_emplace(k, zero_vector(cols)).first;
          it->second[c] += v;
        }
      }
      for (const auto &[k, r] : coord_rows)
        rows.insert(r);
      std::size_t i = n;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++odo[i] < cand[i].size())
          break;
        odo[i] = 0;
      }
    }
  }
  Subspace ns = nullspace(cols, rows.rows());
  for (const auto &v : ns.rows()) {
    GradedPolynomial p(A.group());
    for (Eigen::Index c = 0; c < cols; ++c)
      p.add_term(out.monomials[c], v[c]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

namespace {

GradedPolynomial square(const FiniteAbelianGroup &G, const GroupElement &xi) {
  GradedVariable x{1, xi};
  return GradedPolynomial::monomial(G, {x, x});
}

std::string pair_kind(const Rational &rs, const Rational &sr) {
  if (!rs.is_zero() && sr.is_zero())
    return "f(xi,zeta) != 0 and f(zeta,xi) = 0";
  if (rs.is_zero() && !sr.is_zero())
    return "f(xi,zeta) = 0 and f(zeta,xi) != 0";
  if (!rs.is_zero() && !sr.is_zero())
    return "f(xi,zeta) != 0 and f(zeta,xi) != 0";
  return "zero";
}

} // namespace

GradedPolynomial reconstruct(const Degree2Canonical &c) {
  const auto &G = c.source.group();
  std::map<unsigned, GroupElement> deg;
  for (const auto &v : c.source.variables())
    deg[v.index] = v.degree;
  GradedPolynomial out(G);
  for (const auto &[rs, gamma] : c.gamma) {
    if (gamma.is_zero())
      continue;
    GradedVariable x{rs.first, deg.at(rs.first)};
    GradedVariable y{rs.second, deg.at(rs.second)};
    out += gamma * fg_bracket(G, c.fg, x, y);
  }
  for (const auto &[k, delta] : c.delta) {
    GradedVariable x{k, deg.at(k)};
    out.add_term({x, x}, delta);
  }
  return out;
}

Degree2Canonical degree2_canonicalize(const GradedAlgebra &A,
                                      const GradedPolynomial &g,
                                      const EngineOptions &opts) {
  if (g.degree() != 2)
    throw ContractError("degree-2 canonicalization needs a polynomial of "
                        "degree exactly 2, got degree " +
                        std::to_string(g.degree()));
  if (!(g.group() == A.group()))
    throw InvalidInputError("polynomial and algebra are graded by different "
                            "groups");
  const auto &G = A.group();
  std::map<unsigned, GroupElement> deg;
  for (const auto &v : g.variables()) {
    auto [it, fresh] = deg.emplace(v.index, v.degree);
    if (!fresh && !(it->second == v.degree))
      throw ContractError("variable index " + std::to_string(v.index) +
                          " occurs with two degrees");
  }
  auto supp = support(A);
  for (const auto &[k, d] : deg)
    if (!std::binary_search(supp.begin(), supp.end(), d))
      throw ContractError("degree " + to_string(d) + " of x" +
                          std::to_string(k) + " is outside the support");

  Verdict v = is_graded_identity(A, g, opts);
  if (!v.holds)
    throw NotAnIdentityError(std::move(v));

  Degree2Canonical out;
  out.source = g;
  out.notes.push_back("|F| > 2 holds automatically over the rationals");

  std::map<std::pair<unsigned, unsigned>, Rational> lambda;
  std::map<unsigned, Rational> linear;
  for (const auto &[m, c] : g.terms()) {
    if (m.size() == 1)
      linear[m[0].index] = c;
    else
      lambda[{m[0].index, m[1].index}] = c;
  }
  auto lam = [&](unsigned r, unsigned s) {
    auto it = lambda.find({r, s});
    return it == lambda.end() ? Rational(0) : it->second;
  };

  for (const auto &[k, d] : deg) {
    std::string why =
        d.is_identity()
            ? "neutral-scaling: a and lambda a lie in A_e for every lambda in "
              "Q*, so gamma_k a = -lambda lambda_kk a^2 for all lambda forces "
              "gamma_k = 0"
            : "non-neutral: a^2 has degree " + to_string(G.add(d, d)) +
                  " != " + to_string(d) + ", so gamma_k a = 0 on A_xi";
    auto it = linear.find(k);
    if (it != linear.end() && !it->second.is_zero())
      throw InconsistencyError("linear coefficient of x" + std::to_string(k) +
                               " survived a verified identity");
    out.linear_certificates.push_back("x" + std::to_string(k) + ": " + why);
    out.delta[k] = lam(k, k);
  }

  // representatives: smallest index per degree
  std::map<GroupElement, unsigned> rep;
  for (const auto &[k, d] : deg)
    rep.try_emplace(d, k);
  for (const auto &[d, k] : rep)
    out.representatives.push_back(k);
  std::sort(out.representatives.begin(), out.representatives.end());

  for (std::size_t a = 0; a < out.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < out.representatives.size(); ++b) {
      unsigned p = out.representatives[a], q = out.representatives[b];
      out.fg.set(deg[p], deg[q], lam(p, q));
      out.fg.set(deg[q], deg[p], -lam(q, p));
    }

  std::map<GroupElement, bool> square_nonzero;
  for (const auto &[d, k] : rep) {
    bool sq_id = is_graded_identity(A, square(G, d), opts).holds;
    square_nonzero[d] = !sq_id;
    if (sq_id) {
      out.fg.set(d, d, Rational(0));
      continue;
    }
    std::optional<std::pair<unsigned, unsigned>> first;
    for (const auto &[r, dr] : deg)
      for (const auto &[s, ds] : deg)
        if (r < s && dr == d && ds == d && !first)
          first = {r, s};
    if (first) {
      out.fg.set(d, d, lam(first->first, first->second));
      out.notes.push_back("f(" + to_string(d) + "," + to_string(d) +
                          ") taken from the smallest pair (x" +
                          std::to_string(first->first) + ", x" +
                          std::to_string(first->second) + ")");
    } else {
      out.fg.set(d, d, Rational(0));
    }
  }

  for (const auto &[r, dr] : deg)
    for (const auto &[s, ds] : deg) {
      if (r >= s)
        continue;
      Rational rs = lam(r, s), sr = lam(s, r);
      PairCase pc{r, s, rs, sr, pair_kind(rs, sr)};
      if (pc.kind != "zero")
        out.pairs.push_back(pc);
      Rational a = out.fg.at(dr, ds), b = -out.fg.at(ds, dr);
      // pair part rs x_r x_s + sr x_s x_r against gamma (a x_r x_s + b x_s x_r)
      Rational gamma(0);
      if (!rs.is_zero() || !sr.is_zero()) {
        std::optional<Rational> ratio;
        bool ok = true;
        auto match = [&](const Rational &want, const Rational &have) {
          if (have.is_zero()) {
            ok = ok && want.is_zero();
            return;
          }
          Rational t = want / have;
          if (ratio && *ratio != t)
            ok = false;
          ratio = t;
        };
        match(rs, a);
        match(sr, b);
        if (ok && ratio)
          gamma = *ratio;
        else
          out.notes.push_back(
              "pair (x" + std::to_string(r) + ", x" + std::to_string(s) +
              ") is not a multiple of its f-commutator; gamma set to 0 (the "
              "pair part is itself an identity)");
      }
      out.gamma[{r, s}] = gamma;
    }

  const auto e = G.identity();
  if (square_nonzero.count(e) && square_nonzero[e]) {
    for (const auto &[r, dr] : deg)
      for (const auto &[s, ds] : deg)
        if (r != s && dr == e && ds == e && !lam(r, s).is_zero() &&
            lam(r, s) == lam(s, r))
          out.commutative_neutral = true;
  }
  if (out.commutative_neutral) {
    GradedPolynomial c = commutator(GradedPolynomial::variable(G, 1, e),
                                    GradedPolynomial::variable(G, 2, e));
    bool holds = is_graded_identity(A, c, opts).holds;
    out.notes.push_back(std::string("[x1@e, x2@e] ") +
                        (holds ? "verified as an identity"
                               : "FAILED to verify as an identity"));
    if (!holds)
      throw InconsistencyError("commutative-neutral conclusion failed");
  }

  out.reconstructed = reconstruct(out);
  out.reconstructed_holds =
      is_graded_identity(A, out.reconstructed, opts).holds;
  return out;
}

VecQ sigma_bracket(const GradedAlgebra &B, const VecQ &a, const VecQ &b) {
  if (!B.canonical())
    throw UnsupportedOperationError(
        "sigma bracket needs an algebra built by elementary_canonical");
  check_owner(B, a.size());
  check_owner(B, b.size());
  const auto &meta = *B.canonical();
  VecQ out = zero_element<Rational>(B);
  for (std::size_t x = 0; x < B.dim(); ++x) {
    if (a[x].is_zero())
      continue;
    auto [i, j, ha] = meta.decode(x);
    for (std::size_t y = 0; y < B.dim(); ++y) {
      if (b[y].is_zero())
        continue;
      auto [r, s, hb] = meta.decode(y);
      Rational c = a[x] * b[y];
      Rational s_ab = meta.sigma_at(meta.H[ha], meta.H[hb]);
      Rational s_ba = meta.sigma_at(meta.H[hb], meta.H[ha]);
      for (const auto &t : B.product(x, y))
        out[t.index] += c * t.coeff / s_ab;
      for (const auto &t : B.product(y, x))
        out[t.index] -= c * t.coeff / s_ba;
    }
  }
  return out;
}

Verdict sigma_identity_check(const GradedAlgebra &B, const GroupElement &xi,
                             const GroupElement &zeta) {
  if (!B.canonical())
    throw UnsupportedOperationError(
        "sigma identity check needs an algebra built by elementary_canonical");
  Verdict v;
  v.method = "sigma-bracket";
  const auto &G = B.group();
  for (auto x : component_basis(B, xi))
    for (auto y : component_basis(B, zeta)) {
      ++v.evaluations;
      VecQ X = basis_vector(B, x), Y = basis_vector(B, y);
      VecQ r = sigma_bracket(B, X, Y);
      if (!is_zero(r)) {
        Witness w;
        w.component = "sigma-bracket at (" + to_string(xi) + ", " +
                      to_string(zeta) + ")";
        w.polynomial =
            commutator(GradedPolynomial::variable(G, 1, xi),
                       GradedPolynomial::variable(G, 2, zeta));
        w.assignment = {{GradedVariable{1, xi}, X}, {GradedVariable{2, zeta}, Y}};
        w.value = r;
        v.holds = false;
        v.witness = std::move(w);
        return v;
      }
    }
  return v;
}

std::string describe(const GradedAlgebra &A, const Witness &w) {
  std::string s = w.component + "; ";
  bool first = true;
  for (const auto &[v, x] : w.assignment) {
    if (!first)
      s += ", ";
    first = false;
    s += to_string(v) + " = " + element_to_string(A, x);
  }
  s += "; value = " + element_to_string(A, w.value);
  return s;
}

} // namespace gpw
