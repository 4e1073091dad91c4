#include "hhb/galg/blocks.hpp"

#include <algorithm>

#include "hhb/error.hpp"

namespace hhb::galg {

unsigned splitting_degree(const grp::FiniteGroup& g, std::uint32_t p) {
  std::uint64_t e = g.exponent();
  while (e % p == 0) e /= p;
  unsigned m = 1;
  std::uint64_t pm = p % e;
  while (pm != 1 % e) {
    pm = pm * p % e;
    ++m;
  }
  return m;
}

std::vector<Vec> class_sums(const GroupAlgebra& a) {
  std::vector<Vec> sums;
  for (const auto& cls : grp::conjugacy_classes(a.group())) {
    Vec v = a.zero();
    for (grp::Elem g : cls) v[g] = 1;
    sums.push_back(std::move(v));
  }
  return sums;
}

StructAlgebra center_algebra(const GroupAlgebra& a) {
  const auto& g = a.group();
  const auto classes = grp::conjugacy_classes(g);
  const std::size_t c = classes.size();
  std::vector<std::uint32_t> class_of(g.order());
  for (std::size_t k = 0; k < c; ++k) {
    for (grp::Elem x : classes[k]) class_of[x] = static_cast<std::uint32_t>(k);
  }
  const la::Field& f = a.field();
  std::vector<SparseVec> products(c * c);
  std::vector<std::uint64_t> count(g.order());
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      std::fill(count.begin(), count.end(), 0);
      for (grp::Elem x : classes[i])
        for (grp::Elem y : classes[j]) ++count[g.mul(x, y)];
      // The coefficient of C_k is the multiplicity of its least element.
      SparseVec s;
      for (std::size_t k = 0; k < c; ++k) {
        const Elt v = f.from_int(static_cast<std::int64_t>(count[classes[k].front()]));
        if (v != 0) s.emplace_back(static_cast<std::uint32_t>(k), v);
      }
      products[i * c + j] = std::move(s);
    }
  }
  Vec one(c, 0);
  one[0] = 1;
  return StructAlgebra(a.field_ptr(), c, std::move(products), std::move(one));
}

std::vector<Vec> primitive_idempotents(const StructAlgebra& z) {
  const la::Field& f = z.field();
  const std::uint32_t p = f.characteristic();
  const unsigned m = f.degree();
  const QuotientMap qm(radical(z));
  const StructAlgebra zb = quotient_algebra(z, qm);
  const std::size_t nb = zb.dim();
  if (nb == 0) return {};

  // Fixed points of x -> x^p over GF(p), with x = sum_{k,t} d_{k,t} w^t e_k.
  auto fp = la::ff_make(p, 1);
  la::Mat fix(fp, nb * m, nb * m);
  Elt wt = 1;
  for (unsigned t = 0; t < m; ++t) {
    for (std::size_t k = 0; k < nb; ++k) {
      Vec x(nb, 0);
      x[k] = wt;
      const Vec y = zb.pow(x, p);
      for (std::size_t kk = 0; kk < nb; ++kk) {
        for (unsigned tt = 0; tt < m; ++tt) fix(k * m + t, kk * m + tt) = f.digit(y[kk], tt);
      }
      fix(k * m + t, k * m + t) = fp->sub(fix(k * m + t, k * m + t), 1);
    }
    wt = f.mul(wt, m > 1 ? p : 1);
  }
  const la::Subspace fixed = la::mat_left_nullspace(fix);
  std::vector<Vec> fixed_elems;
  for (std::size_t r = 0; r < fixed.dim(); ++r) {
    const Vec d = fixed.vector(r);
    Vec x(nb, 0);
    for (std::size_t k = 0; k < nb; ++k) {
      Elt e = 0, place = 1;
      for (unsigned t = 0; t < m; ++t) {
        e += d[k * m + t] * place;
        place *= p;
      }
      x[k] = e;
    }
    fixed_elems.push_back(std::move(x));
  }

  // The fixed algebra is a product of copies of GF(p); split 1 along the
  // eigenvalues of each basis element by Lagrange interpolation.
  std::vector<Vec> idems{zb.one()};
  for (const Vec& x : fixed_elems) {
    if (idems.size() == fixed_elems.size()) break;
    std::vector<Vec> next;
    for (const Vec& e : idems) {
      const Vec y = zb.mul(x, e);
      for (Elt lambda = 0; lambda < p; ++lambda) {
        Vec el = e;
        for (Elt mu = 0; mu < p; ++mu) {
          if (mu == lambda) continue;
          Vec factor = y;
          f.axpy(std::span<Elt>(factor), f.neg(mu), std::span<const Elt>(e));
          f.scale(std::span<Elt>(factor), f.inv(f.sub(lambda, mu)));
          el = zb.mul(el, factor);
        }
        if (std::any_of(el.begin(), el.end(), [](Elt v) { return v != 0; })) next.push_back(std::move(el));
      }
    }
    idems = std::move(next);
  }
  if (idems.size() != fixed_elems.size()) throw Error("primitive_idempotents: splitting did not converge");

  std::vector<Vec> out;
  for (const Vec& eb : idems) {
    if (la::mat_rank(zb.left_mult(eb)) != 1) {
      throw FieldTooSmall("field " + f.name() + " does not split the algebra");
    }
    // (e + j)^p = e + j^p in a commutative algebra of characteristic p.
    Vec a = qm.lift(eb);
    for (unsigned it = 0;; ++it) {
      Vec next = z.pow(a, p);
      if (next == a) break;
      if (it > 64) throw Error("primitive_idempotents: idempotent lift did not stabilize");
      a = std::move(next);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<BlockIdempotent> block_idempotents(const GroupAlgebra& a) {
  const StructAlgebra z = center_algebra(a);
  const auto sums = class_sums(a);
  std::vector<BlockIdempotent> blocks;
  for (const Vec& c : primitive_idempotents(z)) {
    BlockIdempotent b;
    b.center_coords = c;
    b.idem = a.zero();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) a.field().axpy(std::span<Elt>(b.idem), c[k], std::span<const Elt>(sums[k]));
    }
    b.dim = la::mat_rank(a.right_mult(b.idem));
    b.center_dim = la::mat_rank(z.left_mult(c));
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const BlockIdempotent& x, const BlockIdempotent& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.idem < y.idem;
  });
  return blocks;
}

}  // namespace hhb::galg
