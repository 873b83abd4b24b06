#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gpw {

/// Element of a finite abelian group, stored as reduced residues.
/// Equality and ordering are structural so elements can key ordered tables.
struct GroupElement {
  std::vector<int> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<int> c) : coords(std::move(c)) {}
  GroupElement(std::initializer_list<int> c) : coords(c) {}

  bool is_identity() const;
  std::size_t size() const { return coords.size(); }

  friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
  friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

/// Prints `e` for the identity and `(a,b,...)` otherwise.
std::string to_string(const GroupElement &g);

/// Z_{n_1} x ... x Z_{n_r} with componentwise addition. An empty factor list
/// is the trivial group.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> factors);

  const std::vector<int> &factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  GroupElement identity() const;
  /// Reduces arbitrary integers into canonical residues.
  GroupElement element(std::vector<int> coords) const;
  bool contains(const GroupElement &a) const;

  GroupElement add(const GroupElement &a, const GroupElement &b) const;
  GroupElement sub(const GroupElement &a, const GroupElement &b) const;
  GroupElement inverse(const GroupElement &a) const;
  GroupElement scale(const GroupElement &a, long m) const;
  /// Least m >= 1 with m*a = e.
  std::size_t order_of(const GroupElement &a) const;

  /// Mixed-radix rank, first coordinate most significant.
  std::size_t index_of(const GroupElement &a) const;
  GroupElement element_at(std::size_t index) const;
  /// All elements in index order.
  std::vector<GroupElement> elements() const;

  friend bool operator==(const FiniteAbelianGroup &a,
                         const FiniteAbelianGroup &b) {
    return a.factors_ == b.factors_;
  }

private:
  void check(const GroupElement &a) const;

  std::vector<int> factors_;
  std::size_t order_ = 1;
};

FiniteAbelianGroup make_group(const std::vector<int> &factors);

/// Appends a Z_2 factor (input gradings of Grassmann envelopes).
FiniteAbelianGroup product_with_z2(const FiniteAbelianGroup &g);

/// `Z2xZ2`, `Z3xZ5`, `Z1`. The trivial group prints as `Z1`.
std::string to_string(const FiniteAbelianGroup &g);
FiniteAbelianGroup parse_group(std::string_view text);

/// `e` or `(a,b,...)`; coordinates are reduced into `g`. Coordinate count
/// must match the rank of `g`.
GroupElement parse_element(const FiniteAbelianGroup &g, std::string_view text);

class Subgroup {
public:
  Subgroup(FiniteAbelianGroup parent, std::vector<GroupElement> generators);

  const FiniteAbelianGroup &parent() const { return parent_; }
  const std::vector<GroupElement> &generators() const { return generators_; }
  /// Sorted element list.
  const std::vector<GroupElement> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement &a) const;

private:
  FiniteAbelianGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

Subgroup subgroup_generated(const FiniteAbelianGroup &g,
                            const std::vector<GroupElement> &gens);
std::size_t index(const Subgroup &h);
/// Each cell is one coset, sorted; cells are ordered by their least element.
std::vector<std::vector<GroupElement>> cosets(const Subgroup &h);

/// G/H presented again as a product of cyclic groups, together with the
/// projection G -> G/H as a lookup table.
struct QuotientMap {
  FiniteAbelianGroup source;
  FiniteAbelianGroup target;
  std::map<GroupElement, GroupElement> table;

  GroupElement operator()(const GroupElement &a) const;
};

QuotientMap quotient(const FiniteAbelianGroup &g, const Subgroup &h);

} // namespace gpw
