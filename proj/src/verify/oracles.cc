#include "bent/verify/oracles.h"

#include <bit>
#include <cstdlib>

namespace bent::oracle {

std::uint32_t SlowField::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (int i = 0; i < m; ++i) {
    if ((b >> i) & 1) r ^= a;
    a <<= 1;
    if ((a >> m) & 1) a ^= irred;
  }
  return r;
}

std::uint32_t SlowField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t SlowField::frob(std::uint32_t a, int i) const {
  for (int j = 0; j < i; ++j) a = mul(a, a);
  return a;
}

std::uint32_t SlowField::trace_rel(std::uint32_t a, int k) const {
  std::uint32_t s = 0;
  for (int i = 0; i < m / k; ++i) {
    s ^= a;
    a = frob(a, k);
  }
  return s;
}

std::uint32_t smallest_irreducible(int m) {
  // constant term 1 keeps x itself out at m = 1
  for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
    bool reducible = false;
    // p reducible iff some product of two polynomials of degree >= 1 equals it
    for (std::uint32_t a = 2; a < (1u << m) && !reducible; ++a) {
      for (std::uint32_t b = a; b < (1u << m); ++b) {
        std::uint64_t prod = 0;
        for (int i = 0; i < 32; ++i) {
          if ((b >> i) & 1) prod ^= std::uint64_t{a} << i;
        }
        if (prod == p) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) return p;
  }
  return 0;
}

std::vector<std::int64_t> walsh_dot(const BoolFn& f) {
  std::vector<std::int64_t> w(f.size());
  for (std::uint64_t b = 0; b < f.size(); ++b) {
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) s += ((f(x) ? 1 : 0) ^ (std::popcount(b & x) & 1)) ? -1 : 1;
    w[b] = s;
  }
  return w;
}

std::vector<std::int64_t> walsh_trace2(const BoolFn& f, const SlowField& fld) {
  const int m = fld.m;
  const std::uint64_t mask = fld.size() - 1;
  std::vector<std::int64_t> w(f.size());
  for (std::uint64_t b = 0; b < f.size(); ++b) {
    const std::uint32_t u1 = static_cast<std::uint32_t>(b & mask), u2 = static_cast<std::uint32_t>(b >> m);
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const std::uint32_t x1 = static_cast<std::uint32_t>(x & mask), x2 = static_cast<std::uint32_t>(x >> m);
      const int t = fld.trace(fld.mul(u1, x1) ^ fld.mul(u2, x2));
      s += ((f(x) ? 1 : 0) ^ t) ? -1 : 1;
    }
    w[b] = s;
  }
  return w;
}

BoolFn dual_from(const std::vector<std::int64_t>& w, int n) {
  BoolFn g(n);
  for (std::uint64_t b = 0; b < w.size(); ++b) g.set(b, w[b] < 0);
  return g;
}

bool bent_by_derivatives(const BoolFn& f) {
  for (std::uint64_t a = 1; a < f.size(); ++a) {
    std::uint64_t ones = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) ones += f(x) != f(x ^ a);
    if (ones * 2 != f.size()) return false;
  }
  return true;
}

int anf_degree_subset_sum(const BoolFn& f) {
  int deg = 0;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    // sum over all submasks x of s
    bool c = f(0);
    for (std::uint64_t x = s; x != 0; x = (x - 1) & s) c ^= f(x);
    if (c) deg = std::max(deg, std::popcount(s));
  }
  return deg;
}

int second_derivative_constant(const BoolFn& f, std::uint64_t a, std::uint64_t b) {
  const bool first = f(0) ^ f(a) ^ f(b) ^ f(a ^ b);
  for (std::uint64_t x = 1; x < f.size(); ++x) {
    if ((f(x) ^ f(x ^ a) ^ f(x ^ b) ^ f(x ^ a ^ b)) != first) return -1;
  }
  return first ? 1 : 0;
}

bool property_p_equations_hold(const SlowField& fld, const std::vector<std::uint32_t>& pi,
                               std::uint32_t a1, std::uint32_t a2, std::uint32_t b1,
                               std::uint32_t b2) {
  for (std::uint32_t x = 0; x < fld.size(); ++x) {
    if ((pi[x] ^ pi[x ^ a2] ^ pi[x ^ b2] ^ pi[x ^ a2 ^ b2]) != 0) return false;
    const std::uint32_t t =
        fld.mul(a1, pi[x ^ a2]) ^ fld.mul(b1, pi[x ^ b2]) ^ fld.mul(a1 ^ b1, pi[x ^ a2 ^ b2]);
    if (fld.trace(t) != 0) return false;
  }
  return true;
}

std::optional<std::array<std::uint32_t, 4>> property_p_counterexample(
    const SlowField& fld, const std::vector<std::uint32_t>& pi) {
  const std::uint32_t q = fld.size();
  for (std::uint32_t a2 = 0; a2 < q; ++a2) {
    for (std::uint32_t b2 = 0; b2 < q; ++b2) {
      for (std::uint32_t a1 = 0; a1 < q; ++a1) {
        for (std::uint32_t b1 = 0; b1 < q; ++b1) {
          const bool trivial = (a1 == 0 && a2 == 0) || (b1 == 0 && b2 == 0) ||
                               (a1 == b1 && a2 == b2) || (a2 == 0 && b2 == 0);
          if (trivial) continue;
          if (property_p_equations_hold(fld, pi, a1, a2, b1, b2)) {
            return std::array<std::uint32_t, 4>{a1, a2, b1, b2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool bent_abs(const std::vector<std::int64_t>& w, int n, std::int64_t& amp, bool& plateau) {
  amp = 0;
  plateau = true;
  bool bent = n % 2 == 0;
  for (std::int64_t v : w) {
    const std::int64_t a = std::llabs(v);
    if (n % 2 == 0 && a != (std::int64_t{1} << (n / 2))) bent = false;
    if (a != 0) {
      if (amp == 0) amp = a;
      if (a != amp) plateau = false;
    }
  }
  return bent;
}

}  // namespace

RestrictionClass classify_by_enumeration(const BoolFn& f, std::uint64_t u, std::uint64_t v) {
  RestrictionClass out{};
  const int rn = f.n() - 2;
  for (int i = 0; i < 4; ++i) {
    std::vector<std::int64_t> w;
    for (std::uint64_t l = 0; l < f.size(); ++l) {
      std::int64_t s = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        const int cu = std::popcount(u & x) & 1, cv = std::popcount(v & x) & 1;
        if (2 * cu + cv != i) continue;
        s += ((f(x) ? 1 : 0) ^ (std::popcount(l & x) & 1)) ? -1 : 1;
      }
      w.push_back(s);
    }
    // Every functional on the coset arises from four l, so the |W| values
    // over all l are the restriction's spectrum with multiplicity four.
    std::int64_t amp;
    bool plateau;
    const bool bent = bent_abs(w, rn, amp, plateau);
    out.bent[static_cast<std::size_t>(i)] = bent;
    const std::int64_t semi = std::int64_t{1} << ((rn + (rn % 2 == 0 ? 2 : 1)) / 2);
    out.semibent[static_cast<std::size_t>(i)] = plateau && amp == semi;
  }
  return out;
}

}  // namespace bent::oracle
