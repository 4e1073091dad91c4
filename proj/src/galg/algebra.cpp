#include "hhb/galg/algebra.hpp"

#include <algorithm>

#include "hhb/error.hpp"
#include "hhb/exactla/elimination.hpp"

namespace hhb::galg {

namespace {

void add_sparse(const la::Field& f, Vec& out, Elt c, const SparseVec& v) {
  for (auto [k, x] : v) out[k] = f.add(out[k], f.mul(c, x));
}

SparseVec to_sparse(std::span<const Elt> v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) s.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  }
  return s;
}

}  // namespace

StructAlgebra::StructAlgebra(la::FieldPtr field, std::size_t dim, std::vector<SparseVec> products, Vec one)
    : field_(std::move(field)), dim_(dim), products_(std::move(products)), one_(std::move(one)) {
  if (products_.size() != dim_ * dim_) throw Error("StructAlgebra: expected dim^2 products");
  if (one_.size() != dim_) throw Error("StructAlgebra: unit has wrong length");
}

Vec StructAlgebra::basis(std::size_t i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Vec StructAlgebra::mul(std::span<const Elt> a, std::span<const Elt> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error("StructAlgebra::mul: length mismatch");
  const la::Field& f = *field_;
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      add_sparse(f, out, f.mul(a[i], b[j]), product(i, j));
    }
  }
  return out;
}

Vec StructAlgebra::pow(std::span<const Elt> a, std::uint64_t e) const {
  Vec result = one_;
  Vec base(a.begin(), a.end());
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

la::Mat StructAlgebra::left_mult(std::span<const Elt> a) const {
  la::Mat m(field_, dim_, dim_);
  const la::Field& f = *field_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (a[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (auto [k, x] : product(j, i)) m(i, k) = f.add(m(i, k), f.mul(a[j], x));
    }
  }
  return m;
}

la::Mat StructAlgebra::right_mult(std::span<const Elt> a) const {
  la::Mat m(field_, dim_, dim_);
  const la::Field& f = *field_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (a[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (auto [k, x] : product(i, j)) m(i, k) = f.add(m(i, k), f.mul(a[j], x));
    }
  }
  return m;
}

bool StructAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vec a(dim_, 0), b(dim_, 0);
      add_sparse(*field_, a, 1, product(i, j));
      add_sparse(*field_, b, 1, product(j, i));
      if (a != b) return false;
    }
  }
  return true;
}

bool StructAlgebra::constants_in_prime_field() const {
  const Elt p = field_->characteristic();
  for (const auto& s : products_) {
    for (auto [k, x] : s) {
      if (x >= p) return false;
    }
  }
  return std::all_of(one_.begin(), one_.end(), [p](Elt x) { return x < p; });
}

StructAlgebra algebra_from_group(const GroupAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVec> products(n * n);
  for (grp::Elem g = 0; g < n; ++g) {
    for (grp::Elem h = 0; h < n; ++h) products[g * n + h] = {{a.group().mul(g, h), 1}};
  }
  return StructAlgebra(a.field_ptr(), n, std::move(products), a.one());
}

StructAlgebra subalgebra(const StructAlgebra& a, const la::Subspace& s) {
  const std::size_t d = s.dim();
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec u = s.vector(i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec w = a.mul(u, s.vector(j));
      if (!s.contains(w)) throw Error("subalgebra: span is not closed under multiplication");
      products[i * d + j] = to_sparse(s.coordinates(w));
    }
  }
  if (!s.contains(a.one())) throw Error("subalgebra: span does not contain the unit");
  return StructAlgebra(a.field_ptr(), d, std::move(products), s.coordinates(a.one()));
}

QuotientMap::QuotientMap(la::Subspace ideal) : ideal_(std::move(ideal)) {
  std::vector<char> pivot(ideal_.ambient(), 0);
  for (auto c : ideal_.pivots()) pivot[c] = 1;
  for (std::size_t k = 0; k < ideal_.ambient(); ++k) {
    if (!pivot[k]) free_.push_back(k);
  }
}

Vec QuotientMap::project(std::span<const Elt> v) const {
  const Vec r = ideal_.reduce(v);
  Vec out(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) out[i] = r[free_[i]];
  return out;
}

Vec QuotientMap::lift(std::span<const Elt> v) const {
  Vec out(ideal_.ambient(), 0);
  for (std::size_t i = 0; i < free_.size(); ++i) out[free_[i]] = v[i];
  return out;
}

StructAlgebra quotient_algebra(const StructAlgebra& a, const QuotientMap& q) {
  const std::size_t d = q.dim();
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    const Vec u = q.lift(ei);
    for (std::size_t j = 0; j < d; ++j) {
      Vec ej(d, 0);
      ej[j] = 1;
      products[i * d + j] = to_sparse(q.project(a.mul(u, q.lift(ej))));
    }
  }
  return StructAlgebra(a.field_ptr(), d, std::move(products), q.project(a.one()));
}

la::Subspace algebra_center(const StructAlgebra& a) {
  // x central iff x e_j - e_j x = 0 for every j: stack the columns of the
  // commutator maps side by side and take the left nullspace.
  const std::size_t n = a.dim();
  la::Mat big(a.field_ptr(), n, n * n);
  const la::Field& f = a.field();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [k, x] : a.product(i, j)) big(i, j * n + k) = f.add(big(i, j * n + k), x);
      for (auto [k, x] : a.product(j, i)) big(i, j * n + k) = f.sub(big(i, j * n + k), x);
    }
  }
  return la::mat_left_nullspace(big);
}

StructAlgebra restrict_scalars(const StructAlgebra& a) {
  const la::Field& f = a.field();
  const unsigned m = f.degree();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim();
  const std::size_t nm = n * m;
  auto fp = la::ff_make(p, 1);
  // w^t as a field element is p^t in the digit encoding.
  std::vector<Elt> wpow(2 * m);
  wpow[0] = 1;
  for (unsigned t = 1; t < 2 * m; ++t) wpow[t] = f.mul(wpow[t - 1], m > 1 ? p : 1);
  auto expand = [&](std::span<const Elt> v) {
    Vec out(v.size() * m, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      for (unsigned t = 0; t < m; ++t) out[k * m + t] = f.digit(v[k], t);
    }
    return out;
  };
  std::vector<SparseVec> products(nm * nm);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod(n, 0);
      add_sparse(f, prod, 1, a.product(i, j));
      for (unsigned s = 0; s < m; ++s) {
        for (unsigned t = 0; t < m; ++t) {
          Vec scaled = prod;
          f.scale(std::span<Elt>(scaled), wpow[s + t]);
          products[(i * m + s) * nm + (j * m + t)] = to_sparse(expand(scaled));
        }
      }
    }
  }
  return StructAlgebra(fp, nm, std::move(products), expand(a.one()));
}

namespace {

// Packs GF(p) coordinates on the basis w^t e_i back into GF(q) vectors.
la::Subspace extend_scalars(const la::Subspace& s, const la::FieldPtr& f, std::size_t n) {
  const unsigned m = f->degree();
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec v = s.vector(r);
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Elt e = 0, place = 1;
      for (unsigned t = 0; t < m; ++t) {
        e += v[i * m + t] * place;
        place *= f->characteristic();
      }
      out[i] = e;
    }
    vecs.push_back(std::move(out));
  }
  return la::Subspace::span(f, n, vecs);
}

// A GF(p) algebra over a prime field with the same shape; used when the
// structure constants already lie in GF(p).
StructAlgebra over_prime_field(const StructAlgebra& a) {
  auto fp = la::ff_make(a.field().characteristic(), 1);
  std::vector<SparseVec> products(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) products[i * a.dim() + j] = a.product(i, j);
  return StructAlgebra(fp, a.dim(), std::move(products), a.one());
}

std::vector<Vec> rows_of(const la::Subspace& s) {
  std::vector<Vec> v;
  for (std::size_t k = 0; k < s.dim(); ++k) v.push_back(s.vector(k));
  return v;
}

using IntMat = std::vector<std::uint64_t>;

IntMat int_mul(const IntMat& x, const IntMat& y, std::size_t n, std::uint64_t mod) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t a = x[i * n + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + a * y[k * n + j]) % mod;
    }
  }
  return r;
}

IntMat int_pow(IntMat x, std::uint64_t e, std::size_t n, std::uint64_t mod) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  while (e > 0) {
    if (e & 1U) r = int_mul(r, x, n, mod);
    e >>= 1U;
    if (e > 0) x = int_mul(x, x, n, mod);
  }
  return r;
}

// (Tr(L^(p^i)) mod p^(i+1)) / p^i for the integer lift L of left
// multiplication by a.
Elt trace_form(const StructAlgebra& a, std::span<const Elt> x, unsigned i) {
  const std::size_t n = a.dim();
  const std::uint64_t p = a.field().characteristic();
  std::uint64_t pi = 1;
  for (unsigned t = 0; t < i; ++t) pi *= p;
  const std::uint64_t mod = pi * p;
  const la::Mat l = a.left_mult(x);
  IntMat lift(l.data().begin(), l.data().end());
  const IntMat pw = int_pow(std::move(lift), pi, n, mod);
  std::uint64_t tr = 0;
  for (std::size_t k = 0; k < n; ++k) tr = (tr + pw[k * n + k]) % mod;
  if (tr % pi != 0) throw Error("radical: trace form not divisible; input is not an associative algebra");
  return static_cast<Elt>(tr / pi);
}

la::Subspace radical_prime(const StructAlgebra& a) {
  const std::size_t n = a.dim();
  const std::uint64_t p = a.field().characteristic();
  unsigned l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;
  la::Subspace ideal = la::Subspace::full(a.field_ptr(), n);
  for (unsigned i = 0; i <= l && ideal.dim() > 0; ++i) {
    const std::size_t r = ideal.dim();
    Vec g(r);
    for (std::size_t k = 0; k < r; ++k) g[k] = trace_form(a, ideal.vector(k), i);
    // g is linear on the ideal, so g(w_k e_j) = sum_t coord_t(w_k e_j) g(w_t).
    la::Mat m(a.field_ptr(), r, n);
    const la::Field& f = a.field();
    for (std::size_t k = 0; k < r; ++k) {
      const Vec w = ideal.vector(k);
      for (std::size_t j = 0; j < n; ++j) {
        const Vec prod = a.mul(w, a.basis(j));
        const Vec c = ideal.coordinates(prod);
        Elt acc = 0;
        for (std::size_t t = 0; t < r; ++t) acc = f.add(acc, f.mul(c[t], g[t]));
        m(k, j) = acc;
      }
    }
    const la::Subspace ker = la::mat_left_nullspace(m);
    std::vector<Vec> next;
    for (std::size_t k = 0; k < ker.dim(); ++k) next.push_back(ideal.combine(ker.vector(k)));
    ideal = la::Subspace::span(a.field_ptr(), n, next);
  }
  return ideal;
}

}  // namespace

la::Subspace radical(const StructAlgebra& a) {
  if (a.dim() == 0) return la::Subspace(a.field_ptr(), 0);
  if (a.field().is_prime()) return radical_prime(a);
  if (a.constants_in_prime_field()) {
    // J(A) is spanned by J of the GF(p)-form, since finite fields are perfect.
    const la::Subspace j = radical_prime(over_prime_field(a));
    return la::Subspace::span(a.field_ptr(), a.dim(), rows_of(j));
  }
  return extend_scalars(radical_prime(restrict_scalars(a)), a.field_ptr(), a.dim());
}

la::Subspace radical_by_powers(const StructAlgebra& a) {
  const std::size_t n = a.dim();
  const la::Field& f = a.field();
  if (n == 0) return la::Subspace(a.field_ptr(), 0);
  const std::uint64_t p = f.characteristic();
  unsigned r = 0;
  std::uint64_t pr = 1;
  while (pr < n) {
    pr *= p;
    ++r;
  }
  std::vector<Vec> comm;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = a.mul(a.basis(i), a.basis(j));
      f.axpy(std::span<Elt>(c), f.neg(1), std::span<const Elt>(a.mul(a.basis(j), a.basis(i))));
      comm.push_back(std::move(c));
    }
  }
  const la::Subspace k = la::Subspace::span(a.field_ptr(), n, comm);
  // x -> x^(p^r) mod K is p^r-semilinear: sum c_j e_j maps to
  // sum c_j^(p^r) (e_j^(p^r) mod K).
  la::Mat v(a.field_ptr(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec red = k.reduce(a.pow(a.basis(j), pr));
    std::copy(red.begin(), red.end(), v.row(j).begin());
  }
  const la::Subspace ker = la::mat_left_nullspace(v);
  std::vector<Vec> tvecs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec c = ker.vector(i);
    for (auto& x : c) x = f.frobenius_inverse(x, r % f.degree());
    tvecs.push_back(std::move(c));
  }
  const la::Subspace t = la::Subspace::span(a.field_ptr(), n, tvecs);
  // a in J iff a e_k in T for all k.
  la::Mat m(a.field_ptr(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t kk = 0; kk < n; ++kk) {
      const Vec red = t.reduce(a.mul(a.basis(i), a.basis(kk)));
      std::copy(red.begin(), red.end(), m.row(i).begin() + static_cast<std::ptrdiff_t>(kk * n));
    }
  }
  return la::mat_left_nullspace(m);
}

la::Subspace ideal_power(const StructAlgebra& a, const la::Subspace& ideal, unsigned k) {
  if (k == 0) throw Error("ideal_power: exponent must be positive");
  la::Subspace cur = ideal;
  for (unsigned step = 1; step < k && cur.dim() > 0; ++step) {
    la::EchelonBuilder eb(a.field_ptr(), a.dim());
    for (std::size_t i = 0; i < cur.dim(); ++i) {
      for (std::size_t j = 0; j < ideal.dim(); ++j) eb.add(a.mul(cur.vector(i), ideal.vector(j)));
    }
    cur = eb.subspace();
  }
  return cur;
}

}  // namespace hhb::galg
