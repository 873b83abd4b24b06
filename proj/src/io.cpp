#include "gpw/io.hpp"

#include "gpw/constructions.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gpw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

class LineError {
public:
  LineError(std::size_t line, std::string field)
      : line_(line), field_(std::move(field)) {}
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("line " + std::to_string(line_) + ", field '" + field_ +
                         "': " + what,
                     line_);
  }
  template <class F> auto guard(F &&f) const {
    try {
      return f();
    } catch (const ParseError &e) {
      fail(e.what());
    } catch (const Error &e) {
      fail(e.what());
    }
  }

private:
  std::size_t line_;
  std::string field_;
};

/// Splits "[a, (b,c), d]" at top-level commas.
std::vector<std::string> split_list(std::string_view s, const LineError &err) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    err.fail("expected a bracketed list");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<std::string> out;
  if (s.empty())
    return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : ',';
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    if (depth < 0)
      err.fail("unbalanced brackets");
    if (c == ',' && depth == 0) {
      auto item = trim(s.substr(start, i - start));
      if (item.empty())
        err.fail("empty list entry");
      out.emplace_back(item);
      start = i + 1;
    }
  }
  if (depth != 0)
    err.fail("unbalanced brackets");
  return out;
}

long parse_int(std::string_view s, const LineError &err) {
  s = trim(s);
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    err.fail("expected an integer, got '" + std::string(s) + "'");
  return v;
}

FiniteAbelianGroup parse_group_field(std::string_view s, const LineError &err) {
  s = trim(s);
  if (!s.empty() && s.front() == '[') {
    std::vector<int> factors;
    for (const auto &f : split_list(s, err))
      factors.push_back(static_cast<int>(parse_int(f, err)));
    return err.guard([&] { return make_group(factors); });
  }
  return err.guard([&] { return parse_group(s); });
}

struct PendingCocycle {
  std::optional<std::size_t> k;
  std::vector<GroupElement> theta, H;
  std::map<std::pair<GroupElement, GroupElement>, Rational> sigma;
  std::size_t line = 0;
};

} // namespace

GradedAlgebra read_algebra(std::istream &in) {
  std::optional<FiniteAbelianGroup> group;
  std::optional<std::vector<std::string>> basis;
  std::optional<std::vector<std::string>> degree_text;
  std::size_t degree_line = 0;
  std::optional<std::pair<std::string, std::size_t>> unit;
  std::string name;
  struct Entry {
    std::size_t i, j, k;
    Rational c;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::optional<PendingCocycle> cocycle;

  enum class Block { none, products, cocycle } block = Block::none;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    const bool indented = !s.empty() && std::isspace(static_cast<unsigned char>(s[0]));
    s = trim(s);
    if (s.empty())
      continue;

    if (indented && block == Block::products) {
      LineError err(lineno, "products");
      auto arrow = s.find("->");
      if (arrow == std::string_view::npos)
        err.fail("expected 'i j -> [(k, c), ...]'");
      std::istringstream lhs{std::string(s.substr(0, arrow))};
      std::string a, b, extra;
      if (!(lhs >> a >> b) || (lhs >> extra))
        err.fail("expected two basis indices before '->'");
      long i = parse_int(a, err), j = parse_int(b, err);
      for (const auto &t : split_list(s.substr(arrow + 2), err)) {
        if (t.size() < 2 || t.front() != '(' || t.back() != ')')
          err.fail("expected a pair '(k, c)', got '" + t + "'");
        auto inner = split_list("[" + t.substr(1, t.size() - 2) + "]", err);
        if (inner.size() != 2)
          err.fail("expected a pair '(k, c)', got '" + t + "'");
        long k = parse_int(inner[0], err);
        Rational c = err.guard([&] { return parse_rational(inner[1]); });
        if (i < 0 || j < 0 || k < 0)
          err.fail("negative basis index");
        entries.push_back({static_cast<std::size_t>(i),
                           static_cast<std::size_t>(j),
                           static_cast<std::size_t>(k), c, lineno});
      }
      continue;
    }
    if (indented && block == Block::cocycle) {
      LineError err(lineno, "cocycle");
      if (!group)
        err.fail("cocycle block before 'group'");
      const auto &G = *group;
      if (s.starts_with("sigma")) {
        auto arrow = s.find("->");
        if (arrow == std::string_view::npos)
          err.fail("expected 'sigma (h1, h2) -> c'");
        auto args = split_list(
            "[" + std::string(trim(s.substr(5, arrow - 5))) + "]", err);
        if (args.size() != 1)
          err.fail("expected one argument pair");
        auto pair = args[0];
        if (pair.size() < 2 || pair.front() != '(' || pair.back() != ')')
          err.fail("expected '(h1, h2)'");
        auto hs = split_list("[" + pair.substr(1, pair.size() - 2) + "]", err);
        if (hs.size() != 2)
          err.fail("expected two group elements");
        auto h1 = err.guard([&] { return parse_element(G, hs[0]); });
        auto h2 = err.guard([&] { return parse_element(G, hs[1]); });
        Rational c =
            err.guard([&] { return parse_rational(s.substr(arrow + 2)); });
        cocycle->sigma[{h1, h2}] = c;
        continue;
      }
      auto colon = s.find(':');
      if (colon == std::string_view::npos)
        err.fail("expected 'key: value'");
      auto key = trim(s.substr(0, colon));
      auto value = trim(s.substr(colon + 1));
      if (key == "k") {
        long k = parse_int(value, err);
        if (k < 1)
          err.fail("k must be positive");
        cocycle->k = static_cast<std::size_t>(k);
      } else if (key == "theta" || key == "H") {
        auto &dst = key == "theta" ? cocycle->theta : cocycle->H;
        for (const auto &t : split_list(value, err))
          dst.push_back(err.guard([&] { return parse_element(G, t); }));
      } else {
        err.fail("unknown cocycle key '" + std::string(key) + "'");
      }
      continue;
    }

    auto colon = s.find(':');
    LineError err(lineno, std::string(trim(s.substr(0, colon))));
    if (indented)
      err.fail("unexpected indented line");
    if (colon == std::string_view::npos)
      err.fail("expected 'key: value'");
    auto key = trim(s.substr(0, colon));
    auto value = trim(s.substr(colon + 1));
    block = Block::none;
    if (key == "name") {
      name = std::string(value);
    } else if (key == "group") {
      group = parse_group_field(value, err);
    } else if (key == "basis") {
      basis = split_list(value, err);
    } else if (key == "degrees") {
      degree_text = split_list(value, err);
      degree_line = lineno;
    } else if (key == "unit") {
      unit = {std::string(value), lineno};
    } else if (key == "products") {
      if (!value.empty())
        err.fail("entries go on the following indented lines");
      block = Block::products;
    } else if (key == "cocycle") {
      if (!value.empty())
        err.fail("entries go on the following indented lines");
      block = Block::cocycle;
      cocycle = PendingCocycle{};
      cocycle->line = lineno;
    } else {
      err.fail("unknown key");
    }
  }

  if (!group)
    throw ParseError("missing field 'group'", lineno);
  if (!basis)
    throw ParseError("missing field 'basis'", lineno);
  if (!degree_text)
    throw ParseError("missing field 'degrees'", lineno);
  LineError derr(degree_line, "degrees");
  if (degree_text->size() != basis->size())
    derr.fail("has " + std::to_string(degree_text->size()) +
              " entries but basis has " + std::to_string(basis->size()));
  std::vector<GroupElement> degrees;
  for (const auto &t : *degree_text)
    degrees.push_back(derr.guard([&] { return parse_element(*group, t); }));

  GradedAlgebra A(*group, *basis, degrees);
  A.set_name(name);
  for (const auto &e : entries) {
    if (e.i >= A.dim() || e.j >= A.dim() || e.k >= A.dim())
      LineError(e.line, "products")
          .fail("basis index out of range (dimension " +
                std::to_string(A.dim()) + ")");
    A.add_product_term(e.i, e.j, e.k, e.c);
  }
  if (unit) {
    auto u = A.find_label(unit->first);
    if (!u)
      LineError(unit->second, "unit").fail("unknown label '" + unit->first + "'");
    A.set_unit(u);
  }
  if (cocycle) {
    LineError err(cocycle->line, "cocycle");
    if (!cocycle->k || cocycle->theta.size() != *cocycle->k)
      err.fail("needs k and a theta list of length k");
    CanonicalData c;
    c.k = *cocycle->k;
    c.theta = cocycle->theta;
    c.H = cocycle->H;
    c.sigma = cocycle->sigma;
    if (c.k * c.k * c.H.size() != A.dim())
      err.fail("k^2 |H| does not match the dimension");
    for (const auto &a : c.H)
      for (const auto &b : c.H)
        if (!c.sigma.count({a, b}))
          err.fail("sigma(" + to_string(a) + ", " + to_string(b) +
                   ") is missing");
    A.set_canonical(std::move(c));
  }
  return A;
}

GradedAlgebra parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_algebra(in);
}

namespace {

std::string join_list(const std::vector<std::string> &items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i)
      s += ", ";
    s += items[i];
  }
  return s + "]";
}

std::string list_of(const std::vector<GroupElement> &xs) {
  std::vector<std::string> items;
  for (const auto &x : xs)
    items.push_back(to_string(x));
  return join_list(items);
}

void check_label(const std::string &l) {
  if (l.empty() || l.find_first_of(",[]()#: \t\n") != std::string::npos)
    throw InvalidInputError("basis label '" + l +
                            "' cannot be written to an algebra file");
}

} // namespace

void write_algebra(std::ostream &out, const GradedAlgebra &A) {
  for (const auto &l : A.labels())
    check_label(l);
  if (!A.name().empty())
    out << "name: " << A.name() << "\n";
  std::vector<std::string> factors;
  for (int f : A.group().factors())
    factors.push_back(std::to_string(f));
  out << "group: " << join_list(factors) << "\n";
  out << "basis: " << join_list(A.labels()) << "\n";
  out << "degrees: " << list_of(A.degrees()) << "\n";
  if (A.unit())
    out << "unit: " << A.label(*A.unit()) << "\n";
  out << "products:\n";
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const auto &p = A.product(i, j);
      if (p.empty())
        continue;
      out << "  " << i << " " << j << " -> [";
      for (std::size_t t = 0; t < p.size(); ++t)
        out << (t ? ", " : "") << "(" << p[t].index << ", "
            << to_string(p[t].coeff) << ")";
      out << "]\n";
    }
  if (const auto &c = A.canonical()) {
    out << "cocycle:\n";
    out << "  k: " << c->k << "\n";
    out << "  theta: " << list_of(c->theta) << "\n";
    out << "  H: " << list_of(c->H) << "\n";
    for (const auto &a : c->H)
      for (const auto &b : c->H)
        out << "  sigma (" << to_string(a) << ", " << to_string(b) << ") -> "
            << to_string(c->sigma_at(a, b)) << "\n";
  }
}

std::string format_algebra(const GradedAlgebra &A) {
  std::ostringstream out;
  write_algebra(out, A);
  return out.str();
}

GradedAlgebra load_algebra(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInputError("cannot open algebra file '" + path + "'");
  GradedAlgebra A = read_algebra(in);
  if (A.name().empty())
    A.set_name(path);
  return A;
}

void save_algebra(const GradedAlgebra &A, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw InvalidInputError("cannot write algebra file '" + path + "'");
  write_algebra(out, A);
  if (!out)
    throw InvalidInputError("error while writing '" + path + "'");
}

namespace {

std::optional<std::size_t> suffix_number(const std::string &name,
                                         const std::string &prefix) {
  if (!name.starts_with(prefix))
    return std::nullopt;
  std::string_view rest(name);
  rest.remove_prefix(prefix.size());
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || p != rest.data() + rest.size() || rest.empty())
    throw InvalidInputError("fixture '" + name + "' needs a number after '" +
                            prefix + "'");
  return v;
}

} // namespace

std::vector<std::string> fixture_names() {
  return {"pauli-m2",    "quaternion", "example-3-16", "example-3-18",
          "grassmann:<n>", "w3",       "nilspan",      "prop328:<n>",
          "matrix:<k>",  "triangular:<k>"};
}

GradedAlgebra resolve_algebra(const std::string &name) {
  GradedAlgebra A;
  bool found = true;
  if (name == "pauli-m2")
    A = pauli_m2();
  else if (name == "quaternion")
    A = quaternions();
  else if (name == "example-3-16")
    A = example_3_16();
  else if (name == "example-3-18")
    A = example_3_18();
  else if (name == "w3")
    A = witness_w3();
  else if (name == "nilspan")
    A = nil_one_dim();
  else if (auto n = suffix_number(name, "grassmann:"))
    A = grassmann(*n);
  else if (auto n = suffix_number(name, "prop328:"))
    A = prop_3_28_family(*n);
  else if (auto n = suffix_number(name, "matrix:"))
    A = matrix_algebra(*n);
  else if (auto n = suffix_number(name, "triangular:"))
    A = triangular(*n);
  else
    found = false;
  if (found) {
    A.set_name(name);
    return A;
  }
  if (std::filesystem::exists(name))
    return load_algebra(name);
  std::string known;
  for (const auto &f : fixture_names())
    known += (known.empty() ? "" : ", ") + f;
  throw InvalidInputError("'" + name +
                          "' is neither a fixture nor a readable file (fixtures: " +
                          known + ")");
}

} // namespace gpw
