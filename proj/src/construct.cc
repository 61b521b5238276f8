#include "bent/construct.h"

#include <bit>
#include <string>

#include "bent/errors.h"

namespace bent {

namespace {

bool bijective(std::span<const Elem> t, std::uint32_t size) {
  if (t.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (Elem v : t) {
    if (v >= size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

PermTable make_perm(const Field& f, std::vector<Elem> table) {
  if (!bijective(table, f.size())) {
    throw ParameterError("table is not a permutation of GF(2^" + std::to_string(f.m()) + ")");
  }
  return PermTable{f.m(), std::move(table)};
}

PermTable identity_perm(const Field& f) {
  std::vector<Elem> t(f.size());
  for (Elem x = 0; x < f.size(); ++x) t[x] = x;
  return PermTable{f.m(), std::move(t)};
}

PermTable power_perm(const Field& f, std::uint64_t e) {
  if (gcd_u64(e, f.order()) != 1) {
    throw ParameterError("x^" + std::to_string(e) + " is not a permutation: gcd(" +
                         std::to_string(e) + ", 2^" + std::to_string(f.m()) + "-1) != 1");
  }
  std::vector<Elem> t(f.size());
  for (Elem x = 0; x < f.size(); ++x) t[x] = f.pow(x, static_cast<std::int64_t>(e));
  return make_perm(f, std::move(t));
}

PermTable inverse_perm(const PermTable& p) {
  PermTable q{p.m, std::vector<Elem>(p.table.size())};
  for (Elem x = 0; x < p.table.size(); ++x) q.table[p.table[x]] = x;
  return q;
}

SubfieldFn subfield_trace_fn(const Subfield& s) {
  SubfieldFn p{s.field().m(), s.k(), {}};
  for (Elem z : s.elements()) p.table.push_back(static_cast<Elem>(s.trace(z)));
  return p;
}

SubfieldFn subfield_inverse_trace_fn(const Subfield& s) {
  SubfieldFn p{s.field().m(), s.k(), {}};
  for (Elem z : s.elements()) {
    p.table.push_back(static_cast<Elem>(s.trace(z == 0 ? 0 : s.field().inv(z))));
  }
  return p;
}

SubfieldFn subfield_identity(const Subfield& s) {
  SubfieldFn p{s.field().m(), s.k(), {}};
  for (Elem z : s.elements()) p.table.push_back(z);
  return p;
}

bool is_balanced_form(const SubfieldFn& p) {
  if (p.table.size() != (std::size_t{1} << p.k)) return false;
  std::size_t ones = 0;
  for (Elem v : p.table) {
    if (v > 1) return false;
    ones += v;
  }
  return ones == p.table.size() / 2;
}

bool is_permutation_form(const Subfield& s, const SubfieldFn& p) {
  if (p.k != s.k() || p.table.size() != s.elements().size()) return false;
  std::vector<bool> seen(p.table.size(), false);
  for (Elem v : p.table) {
    if (!s.contains(v)) return false;
    const std::size_t i = s.index_of(v);
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

BoolFn mm(const Field& f, const PermTable& pi, const std::optional<BoolFn>& g) {
  if (pi.m != f.m() || !bijective(pi.table, f.size())) {
    throw ParameterError("MM needs a permutation of GF(2^" + std::to_string(f.m()) + ")");
  }
  if (g && g->n() != f.m()) throw ParameterError("MM offset g must have m variables");
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  return BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    return (f.trace(f.mul(x, pi.table[y])) != 0) != (g && (*g)(y));
  });
}

BoolFn gmm_general(std::span<const BoolFn> family) {
  if (family.empty() || !std::has_single_bit(family.size())) {
    throw ParameterError("GMM family size must be a power of two");
  }
  const int k = std::countr_zero(family.size());
  const int m = family[0].n();
  std::vector<std::vector<std::int64_t>> spectra;
  for (std::size_t z = 0; z < family.size(); ++z) {
    if (family[z].n() != m) throw ParameterError("GMM family members differ in dimension");
    spectra.push_back(walsh_transform(family[z]));
    const auto s = plateaued_order_spectrum(spectra.back(), m);
    if (!s || *s != k) {
      throw ParameterError("GMM member z=" + std::to_string(z) + " is not " + std::to_string(k) +
                           "-plateaued");
    }
  }
  std::vector<std::int32_t> owner(std::size_t{1} << m, -1);
  for (std::size_t z = 0; z < family.size(); ++z) {
    for (std::size_t b = 0; b < owner.size(); ++b) {
      if (spectra[z][b] == 0) continue;
      if (owner[b] >= 0) {
        throw ParameterError("Walsh supports of GMM members z=" + std::to_string(owner[b]) +
                             " and z=" + std::to_string(z) + " overlap at b=" + std::to_string(b));
      }
      owner[b] = static_cast<std::int32_t>(z);
    }
  }
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  return BoolFn::from(m + k, [&](std::uint64_t i) { return family[i >> m](i & mask); });
}

namespace {

void check_gmm_family(const Field& fk, std::span<const BoolFn> family) {
  if (family.size() != fk.size()) {
    throw ParameterError("GMM family needs 2^k = " + std::to_string(fk.size()) + " members, got " +
                         std::to_string(family.size()));
  }
  for (std::size_t z = 0; z < family.size(); ++z) {
    if (family[z].n() != family[0].n()) throw ParameterError("GMM family members differ in dimension");
    if (!is_bent(family[z])) throw ParameterError("GMM member z=" + std::to_string(z) + " is not bent");
  }
}

}  // namespace

BoolFn gmm(const Field& fk, std::span<const BoolFn> family) {
  check_gmm_family(fk, family);
  const int n = family[0].n(), k = fk.m();
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1, kmask = fk.size() - 1;
  return BoolFn::from(n + 2 * k, [&](std::uint64_t i) {
    const Elem y = static_cast<Elem>((i >> n) & kmask), z = static_cast<Elem>(i >> (n + k));
    return family[z](i & xmask) != (fk.trace(fk.mul(y, z)) != 0);
  });
}

BoolFn gmm_dual(const Field& fk, std::span<const BoolFn> family) {
  check_gmm_family(fk, family);
  std::vector<BoolFn> duals;
  for (const BoolFn& g : family) duals.push_back(dual(g));
  const int n = family[0].n(), k = fk.m();
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1, kmask = fk.size() - 1;
  return BoolFn::from(n + 2 * k, [&](std::uint64_t i) {
    const Elem y = static_cast<Elem>((i >> n) & kmask), z = static_cast<Elem>(i >> (n + k));
    return duals[y](i & xmask) != (fk.trace(fk.mul(y, z)) != 0);
  });
}

Pairing gmm_pairing(int n, const Field& fk) {
  Pairing p = Pairing::dot(n);
  p.add_trace(fk).add_trace(fk);
  return p;
}

BoolFn psap(const Field& f, const SubfieldFn& p) {
  if (p.k != f.m() || p.table.size() != f.size()) {
    throw ParameterError("PS_ap needs P tabulated on all of GF(2^" + std::to_string(f.m()) + ")");
  }
  if (!is_balanced_form(p)) throw ParameterError("PS_ap needs a balanced P");
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const std::int64_t inv_exp = static_cast<std::int64_t>(f.size()) - 2;
  return BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    return p.table[f.mul(y, f.pow(x, inv_exp))] != 0;
  });
}

BoolFn build_cor_ex(int m, int k, CorExVariant variant) {
  if (k < 1) throw ParameterError("k must be positive");
  if (!(m > k + 2)) {
    throw ParameterError("m > k+2 fails (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  std::uint64_t e = 0;
  if (variant.kind == CorExVariant::kInverse) {
    if (m < 4) throw ParameterError("m >= 4 fails (m=" + std::to_string(m) + ")");
    e = (std::uint64_t{1} << m) - 2;
  } else {
    if (variant.kprime < 1 || gcd_u64(static_cast<std::uint64_t>(variant.kprime),
                                      static_cast<std::uint64_t>(m)) != 1) {
      throw ParameterError("gcd(k', m) = 1 fails (k'=" + std::to_string(variant.kprime) +
                           ", m=" + std::to_string(m) + ")");
    }
    if (m % 2 == 0) throw ParameterError("m odd fails (m=" + std::to_string(m) + ")");
    e = (std::uint64_t{1} << variant.kprime) + 1;
  }
  if (2 * m + 2 * k > kMaxVars) throw ParameterError("2m+2k exceeds the supported dimension");
  const Field f = Field::make(m);
  const Field fk = Field::make(k);
  const PermTable pi = power_perm(f, e);
  const std::uint64_t mmask = f.size() - 1, kmask = fk.size() - 1;
  return BoolFn::from(2 * m + 2 * k, [&](std::uint64_t i) {
    const Elem x1 = static_cast<Elem>(i & mmask), x2 = static_cast<Elem>((i >> m) & mmask);
    const Elem y = static_cast<Elem>((i >> (2 * m)) & kmask);
    const Elem z = static_cast<Elem>(i >> (2 * m + k));
    const int h = fk.trace(z) == 0 ? f.trace(f.mul(x1, pi.table[x2])) : f.trace(f.mul(x2, pi.table[x1]));
    return (h ^ fk.trace(fk.mul(y, z))) != 0;
  });
}

}  // namespace bent
