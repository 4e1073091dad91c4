#include "hhb/cohom/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hhb/error.hpp"
#include "hhb/galg/blocks.hpp"

namespace hhb::cohom {

namespace {

// g * v on (kG)^r: the entry at (j, h) moves to (j, gh).
Vec translate(const grp::FiniteGroup& g, grp::Elem x, std::span<const la::Elt> v) {
  const std::size_t n = g.order();
  Vec out(v.size(), 0);
  for (std::size_t base = 0; base < v.size(); base += n) {
    for (grp::Elem h = 0; h < n; ++h) out[base + g.mul(x, h)] = v[base + h];
  }
  return out;
}

bool is_zero(std::span<const la::Elt> v) {
  return std::all_of(v.begin(), v.end(), [](la::Elt x) { return x == 0; });
}

// Adds every G-translate of v; returns the growth in dimension.
std::size_t add_orbit(la::EchelonBuilder& eb, const grp::FiniteGroup& g, std::span<const la::Elt> v) {
  const std::size_t before = eb.dim();
  for (grp::Elem x = 0; x < g.order(); ++x) eb.add(translate(g, x, v));
  return eb.dim() - before;
}

// Data about kG needed to find generators of its modules.
struct AlgebraData {
  std::vector<Vec> radical_gens;  // generate J(kG) as a right ideal
  std::vector<Vec> isotypic;      // lifts of the central primitive idempotents of kG/J
  std::vector<std::size_t> simple_dim;
};

AlgebraData algebra_data(const GroupAlgebra& a) {
  AlgebraData d;
  const galg::StructAlgebra kg = galg::algebra_from_group(a);
  const la::Subspace j = galg::radical(kg);
  la::EchelonBuilder ideal(a.field_ptr(), a.dim());
  for (std::size_t k = 0; k < j.dim(); ++k) {
    const Vec v = j.vector(k);
    if (is_zero(ideal.reduce(v))) continue;
    d.radical_gens.push_back(v);
    for (grp::Elem g = 0; g < a.dim(); ++g) ideal.add(a.mul(v, a.basis(g)));
  }
  const galg::QuotientMap qm(j);
  const galg::StructAlgebra abar = galg::quotient_algebra(kg, qm);
  const la::Subspace zspan = galg::algebra_center(abar);
  const galg::StructAlgebra z = galg::subalgebra(abar, zspan);
  for (const Vec& e : galg::primitive_idempotents(z)) {
    const Vec ebar = zspan.combine(e);
    const std::size_t block = la::mat_rank(abar.left_mult(ebar));
    const auto s = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(block))));
    if (s * s != block) throw FieldTooSmall("field " + a.field().name() + " does not split the group algebra");
    d.isotypic.push_back(qm.lift(ebar));
    d.simple_dim.push_back(s);
  }
  return d;
}

// A smallest generating set of the submodule omega of (kG)^r.
std::vector<Vec> minimal_generators(const GroupAlgebra& a, const AlgebraData& data, const la::Subspace& omega) {
  const auto& g = a.group();
  const la::Field& f = a.field();
  const std::size_t amb = omega.ambient();
  la::EchelonBuilder jomega(a.field_ptr(), amb);
  for (const Vec& x : data.radical_gens) {
    for (std::size_t k = 0; k < omega.dim(); ++k) jomega.add(act_free(g, f, x, omega.vector(k)));
  }
  const std::size_t jdim = jomega.dim();

  // Lifts of a basis of each isotypic part of the top Omega / J Omega.
  la::EchelonBuilder top = jomega;
  std::vector<Vec> top_reps;
  for (std::size_t k = 0; k < omega.dim(); ++k) {
    if (top.add(omega.vector(k))) top_reps.push_back(omega.vector(k));
  }
  const std::size_t parts = data.isotypic.size();
  std::vector<std::vector<Vec>> part_basis(parts);
  std::size_t rank = 0;
  for (std::size_t s = 0; s < parts; ++s) {
    la::EchelonBuilder eb = jomega;
    for (const Vec& t : top_reps) {
      Vec v = act_free(g, f, data.isotypic[s], t);
      if (eb.add(v)) part_basis[s].push_back(std::move(v));
    }
    const std::size_t d = data.simple_dim[s];
    const std::size_t mult = part_basis[s].size() / d;
    rank = std::max(rank, (mult + d - 1) / d);
  }

  std::vector<Vec> gens(rank, Vec(amb, 0));
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> coef(0, f.order() - 1);
  for (std::size_t s = 0; s < parts; ++s) {
    const std::size_t d = data.simple_dim[s];
    const std::size_t total = part_basis[s].size();
    la::EchelonBuilder span = jomega;
    for (std::size_t k = 0; k < rank && span.dim() - jdim < total; ++k) {
      const std::size_t remaining = (total - (span.dim() - jdim)) / d;
      const std::size_t target = d * std::min(d, remaining);
      Vec best;
      std::size_t best_gain = 0;
      if (d == 1) {
        for (const Vec& v : part_basis[s]) {
          if (!is_zero(span.reduce(v))) {
            best = v;
            break;
          }
        }
        best_gain = 1;
      } else {
        // A random element of S (x) k^m generates S (x) (its row space); a
        // few draws reach the maximal rank.
        for (int attempt = 0; attempt < 256 && best_gain < target; ++attempt) {
          Vec v(amb, 0);
          for (const Vec& b : part_basis[s]) f.axpy(std::span<la::Elt>(v), static_cast<la::Elt>(coef(rng)), std::span<const la::Elt>(b));
          la::EchelonBuilder trial = span;
          const std::size_t gain = add_orbit(trial, g, v);
          if (gain > best_gain) {
            best_gain = gain;
            best = std::move(v);
          }
        }
      }
      if (best_gain == 0) break;
      add_orbit(span, g, best);
      f.axpy(std::span<la::Elt>(gens[k]), 1, std::span<const la::Elt>(best));
    }
  }

  // Generation check; a shortfall (never expected) is repaired with extra
  // generators so the resolution stays exact.
  la::EchelonBuilder check(a.field_ptr(), amb);
  for (const Vec& w : gens) add_orbit(check, g, w);
  for (std::size_t k = 0; k < omega.dim() && check.dim() < omega.dim(); ++k) {
    if (!is_zero(check.reduce(omega.vector(k)))) {
      gens.push_back(omega.vector(k));
      add_orbit(check, g, omega.vector(k));
    }
  }
  return gens;
}

}  // namespace

Vec act_free(const grp::FiniteGroup& g, const la::Field& f, std::span<const la::Elt> x, std::span<const la::Elt> v) {
  const std::size_t n = g.order();
  Vec out(v.size(), 0);
  for (grp::Elem s = 0; s < n; ++s) {
    if (x[s] == 0) continue;
    for (std::size_t base = 0; base < v.size(); base += n) {
      for (grp::Elem h = 0; h < n; ++h) {
        if (v[base + h] == 0) continue;
        const std::size_t idx = base + g.mul(s, h);
        out[idx] = f.add(out[idx], f.mul(x[s], v[base + h]));
      }
    }
  }
  return out;
}

Mat Resolution::boundary(std::size_t i) const {
  const auto& g = *group;
  const std::size_t n = g.order();
  const std::size_t cols = i == 0 ? 1 : ranks[i - 1] * n;
  Mat m(field, ranks[i] * n, cols);
  for (std::size_t j = 0; j < ranks[i]; ++j) {
    const Vec& w = generators[i][j];
    for (grp::Elem x = 0; x < n; ++x) {
      if (i == 0) {
        m(j * n + x, 0) = w[0];
      } else {
        const Vec t = translate(g, x, w);
        std::copy(t.begin(), t.end(), m.row(j * n + x).begin());
      }
    }
  }
  return m;
}

Resolution build_resolution(GroupPtr group, la::FieldPtr field, unsigned n, std::size_t cap) {
  const GroupAlgebra a(group, field);
  const AlgebraData data = algebra_data(a);
  Resolution res{group, field, {1}, {{Vec{1}}}};
  Mat d = res.boundary(0);
  for (unsigned i = 1; i <= n + 1; ++i) {
    const la::Subspace omega = la::mat_left_nullspace(d);
    std::vector<Vec> gens = omega.dim() == 0 ? std::vector<Vec>{} : minimal_generators(a, data, omega);
    if (gens.size() * group->order() > cap) {
      throw CapExceeded("resolution rank " + std::to_string(gens.size()) + " in degree " + std::to_string(i) +
                        " exceeds cap");
    }
    res.ranks.push_back(gens.size());
    res.generators.push_back(std::move(gens));
    d = res.boundary(i);
  }
  return res;
}

}  // namespace hhb::cohom
