#include "hhb/grp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hhb/error.hpp"

namespace hhb::grp {

namespace {

// Full associativity check up to this order; sampled above it.
constexpr std::size_t kFullAssociativityCheck = 256;
constexpr std::size_t kAssociativitySamples = 200000;

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

Elem FiniteGroup::pow(Elem g, std::uint64_t k) const {
  Elem result = 0;
  Elem base = g;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> table, std::string name) {
  if (n == 0) throw Error("group table: empty table");
  if (table.size() != n * n) throw Error("group table: expected " + idx(n * n) + " entries");
  for (auto v : table) {
    if (v >= n) throw Error("group table: entry " + idx(v) + " out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) throw Error("group table: element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]++) throw Error("group table: row " + idx(a) + " is not a permutation");
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[at(a, b)]++) throw Error("group table: column " + idx(b) + " is not a permutation");
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw Error("group table: associativity fails at (" + idx(a) + ", " + idx(b) + ", " + idx(c) + ")");
    }
  };
  if (n <= kFullAssociativityCheck) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) assoc(d(rng), d(rng), d(rng));
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.inv_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }
    }
  }
  g.orders_.assign(n, 1);
  for (Elem a = 1; a < n; ++a) {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.orders_[a] = k;
  }
  return g;
}

bool Subgroup::contains(Elem g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return elements < o.elements;
}

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Perm>& generators,
                                    std::size_t max_order) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error("permutation generator has length " + idx(g.size()) + ", expected " + idx(degree));
    std::vector<std::uint32_t> z(degree);
    std::vector<char> hit(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      if (g[i] < 1 || g[i] > degree || hit[g[i] - 1]++) throw Error("generator is not a permutation of 1.." + idx(degree));
      z[i] = g[i] - 1;
    }
    gens.push_back(std::move(z));
  }
  // (x*y)(i) = y(x(i)): apply x first.
  auto compose = [degree](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    std::vector<std::uint32_t> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<std::vector<std::uint32_t>> elems{id};
  std::map<std::vector<std::uint32_t>, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      auto next = compose(elems[head], s);
      if (index.contains(next)) continue;
      if (elems.size() >= max_order) throw CapExceeded("group closure exceeds order cap " + idx(max_order));
      index.emplace(next, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup group_from_table(const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group table: not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroup::from_table(n, std::move(flat));
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), Elem{0});
  return s;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Elem s : gens) {
      const Elem x = g.mul(elems[head], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  if (g.order() % elems.size() != 0) throw Error("subgroup order does not divide group order");
  return Subgroup{std::move(elems)};
}

std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  for (Elem x : s.elements) {
    if (in[x]) continue;
    gens.push_back(x);
    for (Elem y : generated_subgroup(g, gens).elements) in[y] = 1;
  }
  return gens;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Elem x) {
  Subgroup r;
  r.elements.reserve(s.size());
  for (Elem e : s.elements) r.elements.push_back(g.conj(x, e));
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  const auto gens = subgroup_generators(g, s);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem e : gens) {
      if (!s.contains(g.conj(x, e))) return false;
    }
  }
  return true;
}

bool is_subconjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (b.size() % a.size() != 0) return false;
  const auto gens = subgroup_generators(g, a);
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](Elem e) { return b.contains(g.conj(x, e)); })) return true;
  }
  return false;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Elem> cls;
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem c = g.conj(x, a);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  const auto gens = subgroup_generators(g, s);
  Subgroup r;
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](Elem e) { return g.mul(x, e) == g.mul(e, x); })) {
      r.elements.push_back(x);
    }
  }
  return r;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  const auto gens = subgroup_generators(g, s);
  Subgroup r;
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](Elem e) { return s.contains(g.conj(x, e)); })) {
      r.elements.push_back(x);
    }
  }
  return r;
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  const std::size_t n = s.size();
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[s.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem x = g.mul(s.elements[i], s.elements[j]);
      if (!s.contains(x)) throw Error("subgroup_as_group: element list is not closed");
      table[i * n + j] = pos[x];
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

unsigned p_valuation(std::uint64_t n, std::uint32_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

namespace {

// Least g in N(S) \ S with g^p in S, skipping whole cosets of S; calls
// visit(<S, g>) for each such coset until visit returns false.
template <class Visit>
void for_each_p_extension(const FiniteGroup& g, const Subgroup& s, std::uint32_t p, Visit visit) {
  const Subgroup norm = normalizer(g, s);
  std::vector<char> covered(g.order(), 0);
  for (Elem e : s.elements) covered[e] = 1;
  auto gens = subgroup_generators(g, s);
  for (Elem x : norm.elements) {
    if (covered[x]) continue;
    for (Elem e : s.elements) covered[g.mul(e, x)] = 1;
    if (!s.contains(g.pow(x, p))) continue;
    gens.push_back(x);
    Subgroup t = generated_subgroup(g, gens);
    gens.pop_back();
    if (!visit(std::move(t))) return;
  }
}

}  // namespace

Subgroup sylow(const FiniteGroup& g, std::uint32_t p) {
  std::size_t target = 1;
  for (unsigned i = 0; i < p_valuation(g.order(), p); ++i) target *= p;
  Subgroup s = trivial_subgroup();
  while (s.size() < target) {
    Subgroup next;
    for_each_p_extension(g, s, p, [&](Subgroup t) {
      next = std::move(t);
      return false;
    });
    if (next.size() != s.size() * p) throw Error("sylow: failed to extend a p-subgroup");
    s = std::move(next);
  }
  return s;
}

std::vector<SubgroupClass> p_subgroups(const FiniteGroup& g, std::uint32_t p) {
  std::set<std::vector<Elem>> seen{{0}};
  std::vector<SubgroupClass> all{SubgroupClass{trivial_subgroup(), {trivial_subgroup()}}};
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t ci : level) {
      const Subgroup s = all[ci].rep;
      for_each_p_extension(g, s, p, [&](Subgroup t) {
        if (seen.contains(t.elements)) return true;
        std::set<std::vector<Elem>> conj;
        for (Elem x = 0; x < g.order(); ++x) conj.insert(conjugate(g, t, x).elements);
        SubgroupClass cls;
        for (const auto& c : conj) {
          seen.insert(c);
          cls.members.push_back(Subgroup{c});
        }
        cls.rep = cls.members.front();
        all.push_back(std::move(cls));
        next.push_back(all.size() - 1);
        return true;
      });
    }
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const SubgroupClass& a, const SubgroupClass& b) { return a.rep < b.rep; });
  return all;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order) throw CapExceeded("all_subgroups: order " + idx(g.order()) + " exceeds cap " + idx(max_order));
  std::set<std::vector<Elem>> seen{{0}};
  std::vector<Subgroup> list{trivial_subgroup()};
  std::vector<char> covered(g.order());
  for (std::size_t head = 0; head < list.size(); ++head) {
    const Subgroup s = list[head];
    auto gens = subgroup_generators(g, s);
    std::fill(covered.begin(), covered.end(), 0);
    for (Elem e : s.elements) covered[e] = 1;
    for (Elem x = 0; x < g.order(); ++x) {
      if (covered[x]) continue;
      // <S, x> = <S, sx> for every s in S.
      for (Elem e : s.elements) covered[g.mul(e, x)] = 1;
      gens.push_back(x);
      Subgroup t = generated_subgroup(g, gens);
      gens.pop_back();
      if (seen.insert(t.elements).second) list.push_back(std::move(t));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error("quotient: subgroup is not normal");
  Quotient q;
  constexpr Elem kUnset = ~Elem{0};
  q.projection.assign(g.order(), kUnset);
  for (Elem a = 0; a < g.order(); ++a) {
    if (q.projection[a] != kUnset) continue;
    const auto k = static_cast<Elem>(q.reps.size());
    for (Elem e : n.elements) q.projection[g.mul(a, e)] = k;
    q.reps.push_back(a);
  }
  const std::size_t m = q.reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = q.projection[g.mul(q.reps[i], q.reps[j])];
  }
  q.group = FiniteGroup::from_table(m, std::move(table));
  return q;
}

}  // namespace hhb::grp
