#include "bent/boolfn.h"

#include <bit>
#include <cstdlib>
#include <string>

#include "bent/errors.h"
#include "bent/kernels.h"

namespace bent {

BoolFn::BoolFn(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) {
    throw ParameterError("number of variables n=" + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVars) + "]");
  }
  words_.assign(kernels::words_for(n), 0);
}

std::uint64_t BoolFn::weight() const {
  std::uint64_t w = 0;
  for (std::uint64_t x : words_) w += static_cast<std::uint64_t>(std::popcount(x));
  return w;
}

bool BoolFn::is_constant() const {
  const std::uint64_t w = weight();
  return w == 0 || w == size();
}

BoolFn& BoolFn::operator^=(const BoolFn& o) {
  if (o.n_ != n_) throw ParameterError("dimension mismatch in XOR of Boolean functions");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BoolFn BoolFn::complement() const {
  BoolFn g = *this;
  for (auto& w : g.words_) w = ~w;
  if (n_ < 6) g.words_[0] &= (std::uint64_t{1} << size()) - 1;
  return g;
}

std::vector<std::int64_t> walsh_transform(const BoolFn& f) {
  std::vector<std::int64_t> w(f.size());
  kernels::expand_signs(f.words(), w, f.n());
  kernels::fwht(w);
  return w;
}

std::vector<std::int64_t> walsh_transform(const BoolFn& f, const Pairing& p) {
  if (p.n() != f.n()) throw ParameterError("pairing dimension differs from function dimension");
  auto w = walsh_transform(f);
  if (p.is_dot()) return w;
  std::vector<std::int64_t> out(w.size());
  for (std::uint64_t b = 0; b < w.size(); ++b) out[b] = w[p.map(b)];
  return out;
}

std::vector<std::int64_t> walsh_naive(const BoolFn& f, const Pairing& p) {
  std::vector<std::int64_t> out(f.size());
  for (std::uint64_t b = 0; b < f.size(); ++b) {
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) s += ((f(x) ^ p.inner(b, x)) != 0) ? -1 : 1;
    out[b] = s;
  }
  return out;
}

bool is_bent_spectrum(std::span<const std::int64_t> w, int n) {
  if (n % 2 != 0) return false;
  const std::int64_t target = std::int64_t{1} << (n / 2);
  for (std::int64_t v : w) {
    if (std::llabs(v) != target) return false;
  }
  return true;
}

bool is_bent(const BoolFn& f) {
  if (f.n() % 2 != 0) return false;
  return is_bent_spectrum(walsh_transform(f), f.n());
}

bool is_balanced(const BoolFn& f) { return f.weight() == f.size() / 2; }

std::optional<int> plateaued_order_spectrum(std::span<const std::int64_t> w, int n) {
  std::int64_t amp = 0;
  for (std::int64_t v : w) {
    const std::int64_t a = std::llabs(v);
    if (a == 0) continue;
    if (amp == 0) {
      amp = a;
    } else if (a != amp) {
      return std::nullopt;
    }
  }
  // amp = 2^((n+s)/2)
  if (!std::has_single_bit(static_cast<std::uint64_t>(amp))) return std::nullopt;
  const int s = 2 * std::countr_zero(static_cast<std::uint64_t>(amp)) - n;
  if (s < 0) return std::nullopt;
  return s;
}

std::optional<int> plateaued_order(const BoolFn& f) {
  return plateaued_order_spectrum(walsh_transform(f), f.n());
}

bool is_semibent(const BoolFn& f) {
  const auto s = plateaued_order(f);
  if (!s) return false;
  return f.n() % 2 == 1 ? *s == 1 : *s == 2;
}

BoolFn dual(const BoolFn& f) { return dual(f, Pairing::dot(f.n())); }

BoolFn dual(const BoolFn& f, const Pairing& p) {
  const auto w = walsh_transform(f, p);
  if (!is_bent_spectrum(w, f.n())) throw DomainError("dual of a non-bent function");
  BoolFn g(f.n());
  for (std::uint64_t b = 0; b < w.size(); ++b) {
    if (w[b] < 0) g.set(b, true);
  }
  return g;
}

std::map<std::int64_t, std::uint64_t> ext_walsh_spectrum(const BoolFn& f) {
  std::map<std::int64_t, std::uint64_t> hist;
  for (std::int64_t v : walsh_transform(f)) ++hist[std::llabs(v)];
  return hist;
}

BoolFn anf(const BoolFn& f) {
  BoolFn g = f;
  kernels::moebius(g.words(), g.n());
  return g;
}

int anf_degree(const BoolFn& f) {
  const BoolFn a = anf(f);
  int deg = 0;
  bool any = false;
  for (std::uint64_t s = 0; s < a.size(); ++s) {
    if (a(s)) {
      any = true;
      deg = std::max(deg, std::popcount(s));
    }
  }
  return any ? deg : 0;
}

BoolFn linear_fn(int n, std::uint64_t c, bool b) {
  return BoolFn::from(n, [&](std::uint64_t x) { return ((std::popcount(c & x) & 1) != 0) != b; });
}

}  // namespace bent
