#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hhb::grp {

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;  // 1-based images

constexpr std::size_t kDefaultMaxOrder = 512;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// x g x^-1.
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }
  Elem pow(Elem g, std::uint64_t k) const;
  std::size_t elem_order(Elem g) const { return orders_[g]; }
  std::size_t exponent() const;
  bool is_abelian() const;

  /// Builds a group from a table after validating the axioms. The table is
  /// row-major, n*n entries. Throws hhb::Error naming the failing axiom.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> table, std::string name = {});

 private:
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::string name_;
};

/// A subgroup as a sorted list of element indices of its parent.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem g) const;
  bool operator==(const Subgroup& o) const = default;
  /// Order by size, then lexicographically by element list.
  bool operator<(const Subgroup& o) const;
};

/// Closure under products of the given permutations, discovered breadth
/// first; x*y applies x first, then y. Throws CapExceeded when the closure
/// grows beyond max_order.
FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Perm>& generators,
                                    std::size_t max_order = kDefaultMaxOrder);

/// Validated group from a square 0-based table with identity at index 0.
FiniteGroup group_from_table(const std::vector<std::vector<std::uint32_t>>& table);

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
/// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
/// Least-first greedy generating set of a subgroup.
std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& s);
/// x S x^-1.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Elem x);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
/// True when a conjugate of a lies inside b.
bool is_subconjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Conjugacy classes sorted by least element; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);

/// The group structure of S, with index i standing for S.elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

/// Exponent of p in n.
unsigned p_valuation(std::uint64_t n, std::uint32_t p);

/// A Sylow p-subgroup, grown greedily by least normalizing elements.
Subgroup sylow(const FiniteGroup& g, std::uint32_t p);

struct SubgroupClass {
  Subgroup rep;                    // least member of the class
  std::vector<Subgroup> members;  // all conjugates, sorted
};

/// Conjugacy classes of p-subgroups, ordered by representative.
std::vector<SubgroupClass> p_subgroups(const FiniteGroup& g, std::uint32_t p);

/// Every subgroup, ordered by size then element list. Throws CapExceeded
/// when |G| exceeds max_order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  // element of G -> coset index
  std::vector<Elem> reps;        // coset index -> least element of the coset
};

/// G/N on least coset representatives, cosets ordered by representative.
/// Throws hhb::Error when N is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

}  // namespace hhb::grp
