#include <algorithm>
#include <mutex>

#include "bent/construct.h"
#include "bent/errors.h"
#include "bent/pairing.h"
#include "bent/parallel.h"
#include "bent/subspace.h"

namespace bent {

bool property_p_trivial(Elem a1, Elem a2, Elem b1, Elem b2) {
  return (a1 == 0 && a2 == 0) || (b1 == 0 && b2 == 0) || (a1 == b1 && a2 == b2) ||
         (a2 == 0 && b2 == 0);
}

// For fixed (a2, b2) the second equation reads Tr(a1 A(x) + b1 B(x)) = 0 with
// A(x) = pi(x+a2) + pi(x+a2+b2) and B(x) = pi(x+b2) + pi(x+a2+b2), so its
// solutions (a1, b1) form the subspace orthogonal (under the trace pairing)
// to every (A(x), B(x)). Only pairs where the first equation holds for all x
// need that subspace; every other tuple fails already.
PropertyPResult check_property_p(const Field& f, const PermTable& pi) {
  make_perm(f, pi.table);
  const int m = f.m();
  const std::uint32_t size = f.size();
  const std::span<const Elem> p = pi.table;
  const Pairing tr = Pairing::trace2(f);
  LinearMap mt{2 * m, {}};
  for (int j = 0; j < 2 * m; ++j) mt.cols.push_back(tr.map(std::uint64_t{1} << j));
  const LinearMap mt_inv = mt.inverse();

  std::vector<std::optional<std::array<Elem, 4>>> first(size);
  parallel_for(size, [&](std::size_t i) {
    const Elem a2 = static_cast<Elem>(i);
    for (Elem b2 = 0; b2 < size; ++b2) {
      bool pi1 = true;
      for (Elem x = 0; x < size && pi1; ++x) pi1 = (p[x] ^ p[x ^ a2] ^ p[x ^ b2] ^ p[x ^ a2 ^ b2]) == 0;
      if (!pi1) continue;
      std::vector<std::uint64_t> rows;
      for (Elem x = 0; x < size; ++x) {
        const Elem ab = p[x ^ a2 ^ b2];
        rows.push_back(std::uint64_t{p[x ^ a2] ^ ab} | (std::uint64_t{p[x ^ b2] ^ ab} << m));
      }
      const auto comp = orthogonal_complement(rows, 2 * m);
      std::vector<std::uint64_t> basis;
      for (std::uint64_t c : comp) basis.push_back(mt_inv.apply(c));
      std::vector<std::uint64_t> sols{0};
      for (std::uint64_t b : basis) {
        const std::size_t sz = sols.size();
        for (std::size_t s = 0; s < sz; ++s) sols.push_back(sols[s] ^ b);
      }
      std::sort(sols.begin(), sols.end());
      for (std::uint64_t s : sols) {
        const Elem a1 = static_cast<Elem>(s & (size - 1)), b1 = static_cast<Elem>(s >> m);
        if (!property_p_trivial(a1, a2, b1, b2)) {
          first[i] = std::array<Elem, 4>{a1, a2, b1, b2};
          return;
        }
      }
    }
  });
  PropertyPResult r;
  for (const auto& c : first) {
    if (c) {
      r.counterexample = c;
      return r;
    }
  }
  r.holds = true;
  return r;
}

}  // namespace bent
