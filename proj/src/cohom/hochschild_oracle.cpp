#include "hhb/cohom/hochschild_oracle.hpp"

#include "hhb/error.hpp"

namespace hhb::cohom {

galg::StructAlgebra block_algebra(const GroupAlgebra& a, std::span<const la::Elt> b) {
  la::EchelonBuilder eb(a.field_ptr(), a.dim());
  for (grp::Elem g = 0; g < a.dim(); ++g) eb.add(a.mul(b, a.basis(g)));
  const la::Subspace span = eb.subspace();
  const std::size_t d = span.dim();
  // Basis b, then the echelon rows except one that b can replace.
  const Vec bc = span.coordinates(b);
  std::size_t drop = 0;
  while (drop < d && bc[drop] == 0) ++drop;
  if (drop == d) throw Error("block_algebra: zero idempotent");
  std::vector<Vec> basis{Vec(b.begin(), b.end())};
  for (std::size_t k = 0; k < d; ++k) {
    if (k != drop) basis.push_back(span.vector(k));
  }
  // Change of basis: echelon coordinates -> new coordinates.
  Mat to_new(a.field_ptr(), d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vec c = span.coordinates(basis[k]);
    std::copy(c.begin(), c.end(), to_new.row(k).begin());
  }
  const Mat inv = la::mat_inverse(to_new);
  auto coords = [&](const Vec& v) { return inv.apply_left(span.coordinates(v)); };
  std::vector<galg::SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec c = coords(a.mul(basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k) {
        if (c[k] != 0) products[i * d + j].emplace_back(static_cast<std::uint32_t>(k), c[k]);
      }
    }
  }
  Vec one(d, 0);
  one[0] = 1;
  return galg::StructAlgebra(a.field_ptr(), d, std::move(products), std::move(one));
}

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// delta^n : C^n -> C^{n+1}. A cochain in C^n is indexed by (tuple, k) at
// tuple * d + k, tuples over {1..d-1}^n encoded in base d-1 with the first
// argument most significant.
Mat bar_coboundary(const galg::StructAlgebra& b, unsigned n) {
  const la::Field& f = b.field();
  const std::size_t d = b.dim();
  const std::size_t e = d - 1;
  const std::size_t in_tuples = ipow(e, n);
  const std::size_t out_tuples = ipow(e, n + 1);
  Mat delta(b.field_ptr(), out_tuples * d, in_tuples * d);
  std::vector<std::size_t> args(n + 1);
  const la::Elt minus = f.neg(1);
  for (std::size_t s = 0; s < out_tuples; ++s) {
    std::size_t rest = s;
    for (std::size_t pos = n + 1; pos-- > 0;) {
      args[pos] = 1 + rest % e;
      rest /= e;
    }
    auto encode = [&](std::size_t skip_from, std::size_t skip_to) {
      // Tuple of args with positions [skip_from, skip_to) removed.
      std::size_t code = 0;
      for (std::size_t pos = 0; pos <= n; ++pos) {
        if (pos >= skip_from && pos < skip_to) continue;
        code = code * e + (args[pos] - 1);
      }
      return code;
    };
    // a_1 f(a_2, ..., a_{n+1}).
    {
      const std::size_t col = encode(0, 1);
      for (std::size_t k = 0; k < d; ++k) {
        for (auto [out, c] : b.product(args[0], k)) {
          la::Elt& cell = delta(s * d + out, col * d + k);
          cell = f.add(cell, c);
        }
      }
    }
    // sum_i (-1)^i f(..., a_i a_{i+1}, ...), dropping the unit component.
    la::Elt sign = minus;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [m, c] : b.product(args[i], args[i + 1])) {
        if (m == 0) continue;
        std::size_t code = 0;
        for (std::size_t pos = 0; pos <= n; ++pos) {
          if (pos == i + 1) continue;
          code = code * e + ((pos == i ? m : args[pos]) - 1);
        }
        const la::Elt v = f.mul(sign, c);
        for (std::size_t k = 0; k < d; ++k) {
          la::Elt& cell = delta(s * d + k, code * d + k);
          cell = f.add(cell, v);
        }
      }
      sign = f.neg(sign);
    }
    // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}.
    {
      const std::size_t col = encode(n, n + 1);
      for (std::size_t k = 0; k < d; ++k) {
        for (auto [out, c] : b.product(k, args[n])) {
          la::Elt& cell = delta(s * d + out, col * d + k);
          cell = f.add(cell, f.mul(sign, c));
        }
      }
    }
  }
  return delta;
}

}  // namespace

CohDims hochschild_dims_bar(const galg::StructAlgebra& b, unsigned n, std::size_t max_cochain_dim) {
  const std::size_t d = b.dim();
  if (d == 0) throw Error("hochschild_dims_bar: zero algebra");
  if (ipow(d - 1, n + 1) * d > max_cochain_dim) {
    throw CapExceeded("bimodule oracle: cochain dimension " + std::to_string(ipow(d - 1, n + 1) * d) + " exceeds cap");
  }
  CohDims dims;
  std::size_t rank_prev = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const std::size_t rank_next = la::mat_rank(bar_coboundary(b, i));
    dims.push_back(ipow(d - 1, i) * d - rank_next - rank_prev);
    rank_prev = rank_next;
  }
  return dims;
}

CohDims hochschild_dims_bimodule_oracle(const GroupAlgebra& a, std::span<const la::Elt> b, unsigned n,
                                        const OracleCaps& caps) {
  if (a.dim() > caps.max_group_order) {
    throw CapExceeded("bimodule oracle: group order " + std::to_string(a.dim()) + " exceeds cap");
  }
  return hochschild_dims_bar(block_algebra(a, b), n, caps.max_cochain_dim);
}

}  // namespace hhb::cohom
