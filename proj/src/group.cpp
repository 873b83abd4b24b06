#include "gpw/group.hpp"

#include "gpw/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace gpw {

bool GroupElement::is_identity() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](int c) { return c == 0; });
}

std::string to_string(const GroupElement &g) {
  if (g.is_identity())
    return "e";
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 1)
      throw InvalidGroupError("cyclic factor must be >= 1, got " +
                              std::to_string(n));
    order_ *= static_cast<std::size_t>(n);
  }
}

void FiniteAbelianGroup::check(const GroupElement &a) const {
  if (a.coords.size() != factors_.size())
    throw GroupMismatchError("element " + to_string(a) + " has " +
                             std::to_string(a.coords.size()) +
                             " coordinates, group " + gpw::to_string(*this) +
                             " has rank " + std::to_string(factors_.size()));
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement(std::vector<int>(factors_.size(), 0));
}

GroupElement FiniteAbelianGroup::element(std::vector<int> coords) const {
  GroupElement a(std::move(coords));
  check(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int n = factors_[i];
    a.coords[i] = ((a.coords[i] % n) + n) % n;
  }
  return a;
}

bool FiniteAbelianGroup::contains(const GroupElement &a) const {
  if (a.coords.size() != factors_.size())
    return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (a.coords[i] < 0 || a.coords[i] >= factors_[i])
      return false;
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement &a,
                                     const GroupElement &b) const {
  check(a);
  check(b);
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement &a) const {
  check(a);
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = (factors_[i] - a.coords[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement &a,
                                     const GroupElement &b) const {
  return add(a, inverse(b));
}

GroupElement FiniteAbelianGroup::scale(const GroupElement &a, long m) const {
  check(a);
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long n = factors_[i];
    r.coords[i] = static_cast<int>((((a.coords[i] * m) % n) + n) % n);
  }
  return r;
}

std::size_t FiniteAbelianGroup::order_of(const GroupElement &a) const {
  check(a);
  std::size_t m = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::size_t n = factors_[i];
    std::size_t c = a.coords[i];
    std::size_t ord = n / std::gcd(n, c);
    m = std::lcm(m, ord);
  }
  return m;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement &a) const {
  check(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * factors_[i] + a.coords[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  GroupElement r = identity();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r.coords[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return r;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i)
    out.push_back(element_at(i));
  return out;
}

FiniteAbelianGroup make_group(const std::vector<int> &factors) {
  return FiniteAbelianGroup(factors);
}

FiniteAbelianGroup product_with_z2(const FiniteAbelianGroup &g) {
  auto f = g.factors();
  f.push_back(2);
  return FiniteAbelianGroup(f);
}

std::string to_string(const FiniteAbelianGroup &g) {
  if (g.factors().empty())
    return "Z1";
  std::string out;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    if (i)
      out += 'x';
    out += "Z" + std::to_string(g.factors()[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::size_t pos) {
  s = trim(s);
  if (s.empty())
    throw ParseError("expected integer", pos);
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size())
    throw ParseError("expected integer", pos);
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer '" + std::string(s) + "'", pos);
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000'000)
      throw ParseError("integer out of range", pos);
  }
  return static_cast<int>(neg ? -v : v);
}

} // namespace

FiniteAbelianGroup parse_group(std::string_view text) {
  text = trim(text);
  std::vector<int> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto part = trim(text.substr(start, end - start));
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
      throw ParseError("group factor must look like Z<n>, got '" +
                           std::string(part) + "'",
                       start);
    factors.push_back(parse_int(part.substr(1), start + 1));
    start = end + 1;
  }
  if (factors.size() == 1 && factors[0] == 1)
    factors.clear();
  try {
    return FiniteAbelianGroup(factors);
  } catch (const InvalidGroupError &e) {
    throw ParseError(e.what(), 0);
  }
}

GroupElement parse_element(const FiniteAbelianGroup &g, std::string_view text) {
  text = trim(text);
  if (text == "e")
    return g.identity();
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("element literal must be 'e' or '(a,b,...)', got '" +
                         std::string(text) + "'",
                     0);
  auto body = text.substr(1, text.size() - 2);
  std::vector<int> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos)
      end = body.size();
    coords.push_back(parse_int(body.substr(start, end - start), start + 1));
    if (end == body.size())
      break;
    start = end + 1;
  }
  if (coords.size() != g.rank())
    throw ParseError("degree literal " + std::string(text) + " has " +
                         std::to_string(coords.size()) +
                         " coordinates but the group " + to_string(g) +
                         " has rank " + std::to_string(g.rank()),
                     0);
  return g.element(coords);
}

Subgroup::Subgroup(FiniteAbelianGroup parent,
                   std::vector<GroupElement> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  std::set<GroupElement> seen{parent_.identity()};
  std::vector<GroupElement> frontier{parent_.identity()};
  for (const auto &g : generators_)
    if (!parent_.contains(g))
      throw GroupMismatchError("generator " + to_string(g) +
                               " is not an element of " + to_string(parent_));
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto &a : frontier)
      for (const auto &g : generators_) {
        auto b = parent_.add(a, g);
        if (seen.insert(b).second)
          next.push_back(b);
      }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
}

bool Subgroup::contains(const GroupElement &a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

Subgroup subgroup_generated(const FiniteAbelianGroup &g,
                            const std::vector<GroupElement> &gens) {
  return Subgroup(g, gens);
}

std::size_t index(const Subgroup &h) {
  return h.parent().order() / h.order();
}

std::vector<std::vector<GroupElement>> cosets(const Subgroup &h) {
  std::set<GroupElement> assigned;
  std::vector<std::vector<GroupElement>> out;
  for (const auto &a : h.parent().elements()) {
    if (assigned.count(a))
      continue;
    std::vector<GroupElement> cell;
    for (const auto &x : h.elements())
      cell.push_back(h.parent().add(a, x));
    std::sort(cell.begin(), cell.end());
    assigned.insert(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  return out;
}

GroupElement QuotientMap::operator()(const GroupElement &a) const {
  auto it = table.find(a);
  if (it == table.end())
    throw GroupMismatchError("element " + to_string(a) +
                             " is not in the projection domain " +
                             to_string(source));
  return it->second;
}

QuotientMap quotient(const FiniteAbelianGroup &g, const Subgroup &h) {
  if (!(h.parent() == g))
    throw GroupMismatchError("subgroup does not belong to " + to_string(g));
  QuotientMap q{g, g, {}};
  if (h.order() == 1) {
    for (const auto &a : g.elements())
      q.table.emplace(a, a);
    return q;
  }

  // Work with coset ids. Greedily split off cyclic summands: an element of
  // maximal order in Q/S whose order in Q equals its order in Q/S spans a
  // summand meeting S trivially.
  auto cells = cosets(h);
  std::map<GroupElement, std::size_t> coset_of;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (const auto &a : cells[c])
      coset_of.emplace(a, c);
  const std::size_t n = cells.size();
  auto rep = [&](std::size_t c) { return cells[c].front(); };
  auto add = [&](std::size_t a, std::size_t b) {
    return coset_of.at(g.add(rep(a), rep(b)));
  };
  const std::size_t zero = coset_of.at(g.identity());

  std::vector<bool> in_span(n, false);
  in_span[zero] = true;
  std::vector<std::size_t> span{zero};
  std::vector<std::size_t> gens;
  std::vector<int> orders;

  auto order_mod = [&](std::size_t c, const std::vector<bool> &mask) {
    std::size_t m = 1, x = c;
    while (!mask[x]) {
      x = add(x, c);
      ++m;
    }
    return m;
  };

  while (span.size() < n) {
    std::size_t best_order = 0;
    for (std::size_t c = 0; c < n; ++c)
      best_order = std::max(best_order, order_mod(c, in_span));
    std::vector<bool> only_zero(n, false);
    only_zero[zero] = true;
    std::size_t chosen = n;
    for (std::size_t c = 0; c < n && chosen == n; ++c)
      if (order_mod(c, in_span) == best_order &&
          order_mod(c, only_zero) == best_order)
        chosen = c;
    if (chosen == n)
      throw InconsistencyError("quotient decomposition failed");
    gens.push_back(chosen);
    orders.push_back(static_cast<int>(best_order));
    std::vector<std::size_t> grown;
    std::size_t mult = zero;
    for (std::size_t m = 0; m < best_order; ++m) {
      for (auto s : span)
        grown.push_back(add(s, mult));
      mult = add(mult, chosen);
    }
    span = grown;
    std::fill(in_span.begin(), in_span.end(), false);
    for (auto s : span)
      in_span[s] = true;
  }

  q.target = FiniteAbelianGroup(orders);
  std::vector<GroupElement> coords_of(n);
  for (const auto &t : q.target.elements()) {
    std::size_t c = zero;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (int m = 0; m < t.coords[i]; ++m)
        c = add(c, gens[i]);
    coords_of[c] = t;
  }
  for (const auto &a : g.elements())
    q.table.emplace(a, coords_of[coset_of.at(a)]);
  return q;
}

} // namespace gpw
