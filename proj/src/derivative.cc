#include "bent/derivative.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>

#include "bent/errors.h"
#include "bent/kernels.h"
#include "bent/parallel.h"

namespace bent {

BoolFn derivative(const BoolFn& f, std::uint64_t a) {
  BoolFn g(f.n());
  kernels::translate(f.words(), g.words(), f.n(), a);
  g ^= f;
  return g;
}

BoolFn second_derivative(const BoolFn& f, std::uint64_t a, std::uint64_t b) {
  return derivative(derivative(f, a), b);
}

std::vector<std::uint64_t> invariant_directions(const BoolFn& g) {
  // g(x+b) = g(x) for all x iff W_g vanishes wherever <b,u> = 1, i.e. the
  // invariant directions are the orthogonal complement of span(supp W_g).
  const auto w = walsh_transform(g);
  std::vector<std::uint64_t> span;
  for (std::uint64_t u = 0; u < w.size() && static_cast<int>(span.size()) < g.n(); ++u) {
    if (w[u] == 0) continue;
    const std::uint64_t r = reduce(u, span);
    if (r == 0) continue;
    const std::uint64_t pivot = std::bit_floor(r);
    for (std::uint64_t& b : span) {
      if (b & pivot) b ^= r;
    }
    span.push_back(r);
  }
  return orthogonal_complement(span, g.n());
}

bool is_m_subspace(const BoolFn& f, const Subspace& u) {
  if (u.n() != f.n()) {
    throw DomainError("subspace lives in V_" + std::to_string(u.n()) + ", function in V_" +
                      std::to_string(f.n()));
  }
  const auto span = u.elements();
  for (std::size_t i = 1; i < span.size(); ++i) {
    const BoolFn d = derivative(f, span[i]);
    for (std::size_t j = i + 1; j < span.size(); ++j) {
      if (!kernels::translate_invariant(d.words(), f.n(), span[j])) return false;
    }
  }
  return true;
}

namespace {

constexpr int kMaxSearchVars = 20;

// flat(a, b) iff D_a D_b f == 0, stored per a as the RREF basis of the
// directions b leaving D_a f invariant (a subspace containing a).
class FlatTable {
 public:
  explicit FlatTable(const BoolFn& f) : n_(f.n()) {
    if (n_ > kMaxSearchVars) {
      throw ResourceError("M-subspace search limited to n <= " + std::to_string(kMaxSearchVars));
    }
    const std::size_t size = f.size();
    rows_.assign(size * static_cast<std::size_t>(n_), 0);
    dims_.assign(size, 0);
    for (int j = 0; j < n_; ++j) rows_[static_cast<std::size_t>(j)] = std::uint32_t{1} << j;
    dims_[0] = static_cast<std::uint8_t>(n_);
    parallel_for(size - 1, [&](std::size_t i) {
      const std::size_t a = i + 1;
      const auto basis = invariant_directions(derivative(f, a));
      dims_[a] = static_cast<std::uint8_t>(basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        rows_[a * static_cast<std::size_t>(n_) + j] = static_cast<std::uint32_t>(basis[j]);
      }
    });
  }

  bool flat(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t* r = &rows_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_)];
    for (int j = 0; j < dims_[a]; ++j) b = std::min(b, b ^ r[j]);
    return b == 0;
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint8_t> dims_;
};

std::uint32_t pivot_of(std::uint32_t v) { return std::bit_floor(v); }

int distinct_pivots(const std::vector<std::uint32_t>& cands, std::size_t from) {
  int count = 0;
  std::uint32_t last = 0;
  for (std::size_t i = from; i < cands.size(); ++i) {
    const std::uint32_t p = pivot_of(cands[i]);
    if (p != last) {
      ++count;
      last = p;
    }
  }
  return count;
}

// Depth-first search over RREF bases: each added vector has its leading bit
// above every existing pivot and zeros in the existing pivot columns, so each
// subspace is generated exactly once.
class Search {
 public:
  Search(const FlatTable& t, int target, bool enumerate)
      : t_(t), target_(target), enumerate_(enumerate) {}

  void run() {
    const std::uint32_t size = std::uint32_t{1} << t_.n();
    best_ = 1;
    parallel_for(size - 1, [&](std::size_t i) {
      const std::uint32_t c = static_cast<std::uint32_t>(i + 1);
      if (done()) return;
      std::vector<std::uint32_t> basis{c}, span{0, c}, cands;
      const std::uint32_t pc = pivot_of(c);
      for (std::uint32_t x = pc << 1; x < size; ++x) {
        if ((x & pc) == 0 && t_.flat(x, c) && t_.flat(x ^ c, c)) cands.push_back(x);
      }
      dfs(basis, span, cands);
    });
  }

  int best() const { return best_; }
  std::vector<Subspace> found(int n) const {
    std::vector<Subspace> out;
    for (const auto& b : found_) out.emplace_back(n, std::vector<std::uint64_t>(b.begin(), b.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool done() const { return !enumerate_ && best_.load(std::memory_order_relaxed) >= target_; }

  void dfs(std::vector<std::uint32_t>& basis, std::vector<std::uint32_t>& span,
           const std::vector<std::uint32_t>& cands) {
    const int d = static_cast<int>(basis.size());
    int cur = best_.load();
    while (d > cur && !best_.compare_exchange_weak(cur, d)) {
    }
    if (enumerate_ && d == target_) {
      std::lock_guard lock(mu_);
      found_.push_back(basis);
      return;
    }
    if (done()) return;
    const int need = enumerate_ ? target_ : best_.load() + 1;
    if (d + distinct_pivots(cands, 0) < need) return;

    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (done()) return;
      const int need_now = enumerate_ ? target_ : best_.load() + 1;
      if (d + distinct_pivots(cands, i) < need_now) return;
      const std::uint32_t c = cands[i];
      const std::uint32_t pc = pivot_of(c);
      const std::size_t half = span.size();
      basis.push_back(c);
      for (std::size_t s = 0; s < half; ++s) span.push_back(span[s] ^ c);
      std::vector<std::uint32_t> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const std::uint32_t x = cands[j];
        if (pivot_of(x) <= pc || (x & pc) != 0) continue;
        if (extends(x, basis, span, half)) next.push_back(x);
      }
      dfs(basis, span, next);
      basis.pop_back();
      span.resize(half);
    }
  }

  // x is already compatible with the old span (first `half` entries of
  // span, basis minus its last vector); check what the new vector adds.
  bool extends(std::uint32_t x, const std::vector<std::uint32_t>& basis,
               const std::vector<std::uint32_t>& span, std::size_t half) const {
    const std::uint32_t c = basis.back();
    for (std::size_t s = 0; s < half; ++s) {
      if (!t_.flat(x ^ span[s], c)) return false;
    }
    for (std::size_t s = half; s < span.size(); ++s) {
      const std::uint32_t a = x ^ span[s];
      for (std::uint32_t b : basis) {
        if (!t_.flat(a, b)) return false;
      }
    }
    return true;
  }

  const FlatTable& t_;
  int target_;
  bool enumerate_;
  std::atomic<int> best_{1};
  std::mutex mu_;
  std::vector<std::vector<std::uint32_t>> found_;
};

}  // namespace

int linearity_index(const BoolFn& f, std::optional<int> dim_cap) {
  const int cap = dim_cap.value_or(f.n());
  if (cap < 1) throw ParameterError("dimension cap must be positive");
  if (cap == 1) return 1;
  FlatTable t(f);
  Search s(t, cap, false);
  s.run();
  return std::min(s.best(), cap);
}

std::vector<Subspace> enumerate_m_subspaces(const BoolFn& f, int dim) {
  if (dim < 1 || dim > f.n()) throw ParameterError("subspace dimension out of range");
  FlatTable t(f);
  if (dim == 1) {
    std::vector<Subspace> out;
    for (std::uint64_t x = 1; x < f.size(); ++x) out.emplace_back(f.n(), std::vector<std::uint64_t>{x});
    return out;
  }
  Search s(t, dim, true);
  s.run();
  return s.found(f.n());
}

bool in_mm_completed(const BoolFn& f) {
  if (!is_bent(f)) throw DomainError("MM# membership test needs a bent function");
  return linearity_index(f, f.n() / 2) == f.n() / 2;
}

BoolFn ea_transform(const BoolFn& f, const LinearMap& l, std::uint64_t a, std::uint64_t c,
                    bool b) {
  if (l.n != f.n()) throw ParameterError("linear map dimension differs from function dimension");
  if (!l.invertible()) throw ParameterError("linear map is singular");
  return BoolFn::from(f.n(), [&](std::uint64_t x) {
    return (f(l.apply(x) ^ a) != ((std::popcount(c & x) & 1) != 0)) != b;
  });
}

}  // namespace bent
