#include "bent/gf2m.h"

#include <algorithm>
#include <bit>
#include <string>

#include "bent/errors.h"
#include "bent/rng.h"

namespace bent {

namespace gf2poly {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t modulus) {
  const int dm = degree(modulus);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= modulus << (d - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  a = mod(a, modulus);
  b = mod(b, modulus);
  const int dm = degree(modulus);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (degree(a) == dm) a ^= modulus;
  }
  return r;
}

bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q) {
    if (mod(p, q) == 0) return false;
  }
  return true;
}

std::uint32_t default_irreducible(int m) {
  for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw ParameterError("no irreducible polynomial of degree " + std::to_string(m));
}

}  // namespace gf2poly

namespace {

std::uint64_t powmod_poly(std::uint64_t a, std::uint64_t e, std::uint64_t modulus) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = gf2poly::mulmod(r, a, modulus);
    a = gf2poly::mulmod(a, a, modulus);
    e >>= 1;
  }
  return gf2poly::mod(r, modulus);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

Field Field::make(int m, std::optional<std::uint32_t> irred) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw ParameterError("field degree m=" + std::to_string(m) + " outside [1, 16]");
  }
  const std::uint32_t poly = irred ? *irred : gf2poly::default_irreducible(m);
  if (gf2poly::degree(poly) != m) {
    throw ParameterError("polynomial " + std::to_string(poly) + " does not have degree " +
                         std::to_string(m));
  }
  if ((poly & 1) == 0 || !gf2poly::is_irreducible(poly)) {
    throw ParameterError("polynomial " + std::to_string(poly) + " is reducible");
  }

  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  {
    // spot check of the multiplicative group order before tabulating
    Xorshift64Star rng(poly);
    for (int i = 0; i < 10; ++i) {
      const std::uint64_t x = 1 + rng.below(order);
      if (powmod_poly(x, order, poly) != 1) {
        throw ParameterError("multiplicative order check failed for polynomial " +
                             std::to_string(poly));
      }
    }
  }

  std::uint64_t gen = 1;
  if (order > 1) {
    const auto primes = prime_factors(order);
    for (gen = 2; gen <= order; ++gen) {
      bool primitive = true;
      for (std::uint64_t p : primes) {
        if (powmod_poly(gen, order / p, poly) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
  }

  auto t = std::make_shared<Tables>();
  t->exp.resize(order);
  t->log.assign(order + 1, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    t->exp[i] = static_cast<Elem>(x);
    t->log[x] = static_cast<std::uint32_t>(i);
    x = gf2poly::mulmod(x, gen, poly);
  }
  Field f(m, poly, t);
  t->abs_trace.resize(order + 1);
  for (Elem z = 0; z <= order; ++z) {
    Elem acc = 0, c = z;
    for (int i = 0; i < m; ++i) {
      acc ^= c;
      c = f.mul(c, c);
    }
    t->abs_trace[z] = static_cast<std::uint8_t>(acc & 1);
  }
  return f;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  const std::uint32_t l = t_->log[a];
  return t_->exp[l == 0 ? 0 : order() - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::int64_t ord = order();
  std::int64_t r = e % ord;
  if (r < 0) r += ord;
  const std::uint64_t s = (static_cast<std::uint64_t>(t_->log[a]) * static_cast<std::uint64_t>(r)) %
                          static_cast<std::uint64_t>(ord);
  return t_->exp[s];
}

Elem Field::frobenius(Elem a, int i) const {
  for (int j = 0; j < i % m_; ++j) a = mul(a, a);
  return a;
}

Elem Field::trace_rel(Elem x, int k) const {
  if (k < 1 || m_ % k != 0) {
    throw ParameterError("trace Tr_k^m needs k | m (k=" + std::to_string(k) +
                         ", m=" + std::to_string(m_) + ")");
  }
  Elem acc = 0;
  for (int i = 0; i < m_ / k; ++i) {
    acc ^= x;
    x = frobenius(x, k);
  }
  return acc;
}

Subfield::Subfield(const Field& field, int k) : field_(field), k_(k) {
  if (k < 1 || field.m() % k != 0) {
    throw ParameterError("subfield degree k=" + std::to_string(k) + " does not divide m=" +
                         std::to_string(field.m()));
  }
  index_.assign(field.size(), -1);
  for (Elem z = 0; z < field.size(); ++z) {
    if (field.frobenius(z, k) == z) {
      index_[z] = static_cast<std::int32_t>(elements_.size());
      elements_.push_back(z);
    }
  }
  // Reduced echelon basis with leading bits as pivots.
  std::vector<Elem> rows;
  for (Elem z : elements_) {
    Elem r = z;
    for (Elem b : rows) r = std::min(r, r ^ b);
    if (r == 0) continue;
    const Elem pivot = std::bit_floor(r);
    for (Elem& b : rows) {
      if (b & pivot) b ^= r;
    }
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  basis_ = rows;
  coords_.assign(elements_.size(), 0);
  for (std::uint32_t c = 0; c < (1u << k); ++c) {
    const Elem z = decode(c);
    coords_[static_cast<std::size_t>(index_[z])] = c;
  }
}

std::size_t Subfield::index_of(Elem z) const {
  if (z >= index_.size() || index_[z] < 0) {
    throw DomainError("element " + std::to_string(z) + " is not in the subfield S_" +
                      std::to_string(k_));
  }
  return static_cast<std::size_t>(index_[z]);
}

std::uint32_t Subfield::encode(Elem z) const { return coords_[index_of(z)]; }

Elem Subfield::decode(std::uint32_t coords) const {
  Elem z = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((coords >> i) & 1) z ^= basis_[i];
  }
  return z;
}

int Subfield::trace(Elem z) const {
  Elem acc = 0;
  for (int i = 0; i < k_; ++i) {
    acc ^= z;
    z = field_.mul(z, z);
  }
  return static_cast<int>(acc & 1);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_inverse_exponent(std::uint64_t e, int m) {
  const std::uint64_t mod = (std::uint64_t{1} << m) - 1;
  if (gcd_u64(e, mod) != 1) {
    throw ParameterError("gcd(e=" + std::to_string(e) + ", 2^" + std::to_string(m) +
                         "-1) != 1");
  }
  if (mod == 1) return 1;
  // extended Euclid on (e mod N, N)
  std::int64_t old_r = static_cast<std::int64_t>(e % mod), r = static_cast<std::int64_t>(mod);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t eta = old_s % static_cast<std::int64_t>(mod);
  if (eta < 0) eta += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(eta);
}

GpsParams validate_gps_params(int m, int k, std::uint64_t e) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw ParameterError("m=" + std::to_string(m) + " outside [1, 16]");
  }
  if (k < 1 || m % k != 0) {
    throw ParameterError("k | m fails (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  if (e == 0) throw ParameterError("e must be positive");
  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  if (gcd_u64(e, order) != 1) {
    throw ParameterError("gcd(e, 2^m - 1) = 1 fails (e=" + std::to_string(e) + ", m=" +
                         std::to_string(m) + ")");
  }
  GpsParams p;
  p.m = m;
  p.k = k;
  p.e = e;
  if (k > 1) {
    const std::uint64_t sub = (std::uint64_t{1} << k) - 1;
    p.ell = -1;
    for (int l = 0; l < k; ++l) {
      if (e % sub == (std::uint64_t{1} << l) % sub) {
        p.ell = l;
        break;
      }
    }
    if (p.ell < 0) {
      throw ParameterError("e = 2^l mod (2^k - 1) fails for every 0 <= l < k (e=" +
                           std::to_string(e) + ", k=" + std::to_string(k) + ")");
    }
  }
  p.eta = mod_inverse_exponent(e, m);
  return p;
}

}  // namespace bent
