#include "hhb/exactla/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "hhb/error.hpp"

namespace hhb::la {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;
constexpr std::uint64_t kAddTableLimit = 1024;

using Poly = std::vector<std::uint32_t>;  // coefficients low to high over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1u) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Rabin's test: f of degree m is irreducible iff x^(p^m) = x mod f and
// gcd(x^(p^(m/r)) - x, f) = 1 for every prime r dividing m.
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;

  auto x_pow_p_pow = [&](std::size_t k) {
    Poly h{0, 1};
    for (std::size_t i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](Poly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };

  if (!minus_x(x_pow_p_pow(m)).empty()) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Poly g = poly_gcd(f, minus_x(x_pow_p_pow(m / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, unsigned m) : p_(p), m_(m) {
  if (!hhb::la::is_prime(p)) throw Error("ff_make: " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error("ff_make: extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) throw Error("ff_make: field order exceeds 2^31");
  }
  q_ = q;

  if (m == 1) {
    modulus_ = {1, 1};
  } else {
    Poly cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint64_t v = 1; v < q; ++v) {
      std::uint64_t w = v;
      for (unsigned t = 0; t < m; ++t) {
        cand[t] = static_cast<std::uint32_t>(w % p);
        w /= p;
      }
      if (cand[0] == 0) continue;
      if (is_irreducible(cand, p)) {
        modulus_ = cand;
        break;
      }
    }
    if (modulus_.empty()) throw Error("ff_make: no irreducible polynomial found");
  }

  if (p == 2) {
    for (unsigned t = 0; t < m; ++t) reduction_mask_ |= modulus_[t] << t;
  }

  if (m == 1) return;

  if (p != 2 && q <= kAddTableLimit) {
    add_table_.resize(q * q);
    for (Elt a = 0; a < q; ++a) {
      for (Elt b = 0; b < q; ++b) add_table_[a * q + b] = add_digits(a, b);
    }
  }
  if (p != 2 && q <= kTableLimit) {
    neg_table_.resize(q);
    for (Elt a = 0; a < q; ++a) {
      Elt r = 0;
      std::uint64_t pw = 1, w = a;
      for (unsigned t = 0; t < m; ++t) {
        const std::uint32_t d = w % p;
        w /= p;
        r += static_cast<Elt>(((p - d) % p) * pw);
        pw *= p;
      }
      neg_table_[a] = r;
    }
  }

  if (q <= kTableLimit) {
    // Find a primitive element by testing candidate orders.
    const auto factors = prime_factors(q - 1);
    auto slow_pow = [&](Elt a, std::uint64_t e) {
      Elt r = 1;
      while (e > 0) {
        if (e & 1u) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
      }
      return r;
    };
    Elt gen = 0;
    for (Elt g = 2; g < q && gen == 0; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(g, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = g;
    }
    if (gen == 0) throw Error("ff_make: no primitive element found");
    exp_.resize(2 * (q - 1));
    log_.assign(q, 0);
    Elt cur = 1;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      exp_[k] = cur;
      exp_[k + q - 1] = cur;
      log_[cur] = static_cast<std::uint32_t>(k);
      cur = mul_poly(cur, gen);
    }
  }
}

Elt Field::add_digits(Elt a, Elt b) const {
  Elt r = 0;
  std::uint64_t pw = 1;
  for (unsigned t = 0; t < m_; ++t) {
    const std::uint32_t s = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    r += static_cast<Elt>(s * pw);
    pw *= p_;
  }
  return r;
}

Elt Field::mul_poly(Elt a, Elt b) const {
  if (p_ == 2) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      if ((b >> i) & 1u) r ^= static_cast<std::uint64_t>(a) << i;
    }
    const std::uint64_t full = (std::uint64_t{1} << m_) | reduction_mask_;
    for (int k = 2 * static_cast<int>(m_) - 2; k >= static_cast<int>(m_); --k) {
      if ((r >> k) & 1u) r ^= full << (k - m_);
    }
    return static_cast<Elt>(r);
  }
  std::vector<std::uint64_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
  for (unsigned t = 0; t < m_; ++t) {
    da[t] = a % p_;
    a /= p_;
    db[t] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int k = 2 * static_cast<int>(m_) - 2; k >= static_cast<int>(m_); --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint64_t sub = c * modulus_[i] % p_;
      prod[k - m_ + i] = (prod[k - m_ + i] + p_ - sub) % p_;
    }
    prod[k] = 0;
  }
  Elt r = 0;
  std::uint64_t pw = 1;
  for (unsigned t = 0; t < m_; ++t) {
    r += static_cast<Elt>(prod[t] * pw);
    pw *= p_;
  }
  return r;
}

Elt Field::add(Elt a, Elt b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  return add_digits(a, b);
}

Elt Field::neg(Elt a) const {
  if (p_ == 2 || a == 0) return a;
  if (m_ == 1) return p_ - a;
  if (!neg_table_.empty()) return neg_table_[a];
  Elt r = 0;
  std::uint64_t pw = 1;
  for (unsigned t = 0; t < m_; ++t) {
    const std::uint32_t d = a % p_;
    a /= p_;
    r += static_cast<Elt>(((p_ - d) % p_) * pw);
    pw *= p_;
  }
  return r;
}

Elt Field::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<Elt>(static_cast<std::uint64_t>(a) * b % p_);
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw Error("division by zero in " + name());
  if (m_ == 1) return inv_mod(a, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e > 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Elt>(((v % p) + p) % p);
}

Elt Field::frobenius(Elt a, unsigned k) const {
  k %= m_;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= p_;
  return pow(a, e);
}

Elt Field::frobenius_inverse(Elt a, unsigned k) const {
  return frobenius(a, (m_ - k % m_) % m_);
}

std::uint32_t Field::digit(Elt a, unsigned t) const {
  for (unsigned i = 0; i < t; ++i) a /= p_;
  return a % p_;
}

void Field::axpy(std::span<Elt> y, Elt c, std::span<const Elt> x) const {
  const std::size_t n = y.size();
  if (c == 0) return;
  if (p_ == 2 && (m_ == 1 || c == 1)) {
    for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
    return;
  }
  if (m_ == 1) {
    const std::uint64_t cc = c;
    const std::uint32_t p = p_;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      const Elt s = y[i] + static_cast<Elt>(cc * x[i] % p);
      y[i] = s >= p ? s - p : s;
    }
    return;
  }
  if (!exp_.empty()) {
    const std::uint32_t lc = log_[c];
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != 0) y[i] ^= exp_[lc + log_[x[i]]];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != 0) y[i] = add(y[i], exp_[lc + log_[x[i]]]);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0) y[i] = add(y[i], mul(c, x[i]));
  }
}

void Field::scale(std::span<Elt> y, Elt c) const {
  if (c == 1) return;
  for (auto& v : y) v = mul(c, v);
}

std::string Field::to_string(Elt a) const {
  if (m_ == 1) return std::to_string(a);
  std::ostringstream os;
  bool first = true;
  for (int t = static_cast<int>(m_) - 1; t >= 0; --t) {
    const auto d = digit(a, static_cast<unsigned>(t));
    if (d == 0) continue;
    if (!first) os << '+';
    first = false;
    if (t == 0 || d != 1) os << d;
    if (t >= 1) os << 'x';
    if (t >= 2) os << '^' << t;
  }
  if (first) os << '0';
  return os.str();
}

std::string Field::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

FieldPtr ff_make(std::uint32_t p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, m);
  cache.emplace(key, f);
  return f;
}

}  // namespace hhb::la
