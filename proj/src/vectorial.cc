#include "bent/vectorial.h"

#include <atomic>
#include <bit>
#include <string>

#include "bent/errors.h"
#include "bent/parallel.h"

namespace bent {

void VecFn::validate() const {
  if (n < 1 || n > kMaxVars || k < 1 || k > 32) {
    throw ParameterError("vectorial function dimensions n=" + std::to_string(n) + " k=" +
                         std::to_string(k) + " out of range");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw ParameterError("vectorial table has " + std::to_string(table.size()) +
                         " entries, expected 2^" + std::to_string(n));
  }
  if (k < 32) {
    for (std::uint32_t v : table) {
      if (v >> k) throw ParameterError("vectorial table value exceeds k bits");
    }
  }
}

BoolFn component(const VecFn& f, std::uint32_t alpha) {
  if (alpha == 0) throw DomainError("component for alpha = 0");
  return BoolFn::from(f.n, [&](std::uint64_t x) { return (std::popcount(alpha & f.table[x]) & 1) != 0; });
}

BoolFn component_trace(const VecFn& f, const Subfield& s, Elem alpha) {
  if (alpha == 0) throw DomainError("component for alpha = 0");
  if (!s.contains(alpha)) throw DomainError("alpha not in the output subfield");
  const Field& fld = s.field();
  return BoolFn::from(f.n, [&](std::uint64_t x) {
    return s.trace(fld.mul(alpha, s.decode(f.table[x]))) != 0;
  });
}

bool is_vectorial_bent(const VecFn& f) {
  f.validate();
  if (f.n % 2 != 0) return false;
  const std::size_t count = (std::size_t{1} << f.k) - 1;
  std::atomic<bool> ok{true};
  parallel_for(count, [&](std::size_t i) {
    if (ok && !is_bent(component(f, static_cast<std::uint32_t>(i + 1)))) ok = false;
  });
  return ok;
}

bool check_component_dual_linearity(const VecFn& f) {
  f.validate();
  const std::size_t count = (std::size_t{1} << f.k) - 1;
  std::vector<BoolFn> duals(count + 1);
  std::atomic<bool> bent{true};
  parallel_for(count, [&](std::size_t i) {
    const BoolFn c = component(f, static_cast<std::uint32_t>(i + 1));
    if (!is_bent(c)) {
      bent = false;
      return;
    }
    duals[i + 1] = dual(c);
  });
  if (!bent) throw DomainError("component dual linearity needs a vectorial bent function");
  for (std::size_t a = 1; a <= count; ++a) {
    for (std::size_t b = a + 1; b <= count; ++b) {
      if ((duals[a] ^ duals[b]) != duals[a ^ b]) return false;
    }
  }
  return true;
}

}  // namespace bent
