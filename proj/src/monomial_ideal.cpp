#include "mm/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "mm/error.hpp"

namespace mm {

namespace {

std::vector<Monomial> minimalize_naive(std::vector<Monomial> c) {
  std::sort(c.begin(), c.end(), canonical_less);
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<Monomial> kept;
  for (const auto& m : c) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

}  // namespace

std::vector<Monomial> minimalize(int nvars, std::vector<Monomial> candidates) {
  if (candidates.size() < 64 || !Staircase::fits(nvars, candidates)) return minimalize_naive(std::move(candidates));
  auto out = Staircase(nvars, candidates).minimal_generators();
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  if (nvars < 1 || nvars > static_cast<int>(kMaxVars)) throw Error(ErrorCode::kInput, "bad variable count");
  gens_ = minimalize(nvars, std::move(gens));
}

int MonomialIdeal::max_generator_degree(std::span<const int> weights) const noexcept {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, weighted_degree(g, weights));
  return d;
}

int MonomialIdeal::min_generator_degree(std::span<const int> weights) const noexcept {
  int d = std::numeric_limits<int>::max();
  for (const auto& g : gens_) d = std::min(d, weighted_degree(g, weights));
  return gens_.empty() ? 0 : d;
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& m) { return contains(m); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& b) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), b.gens_.begin(), b.gens_.end());
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& b) const {
  std::vector<Monomial> all;
  all.reserve(gens_.size() * b.gens_.size());
  for (const auto& x : gens_) {
    for (const auto& y : b.gens_) all.push_back(x * y);
  }
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::power(int n) const {
  if (n < 0) throw Error(ErrorCode::kInput, "negative ideal power");
  MonomialIdeal r = unit(nvars_);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& b) const {
  std::vector<Monomial> all;
  all.reserve(gens_.size() * b.gens_.size());
  for (const auto& x : gens_) {
    for (const auto& y : b.gens_) all.push_back(lcm(x, y));
  }
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> all;
  all.reserve(gens_.size());
  for (const auto& g : gens_) all.push_back(g / gcd(g, m));
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& b) const {
  if (b.is_zero()) return unit(nvars_);
  MonomialIdeal r = colon(b.gens_.front());
  for (std::size_t i = 1; i < b.gens_.size(); ++i) r = r.intersect(colon(b.gens_[i]));
  return r;
}

MonomialIdeal MonomialIdeal::saturate(const MonomialIdeal& b) const {
  if (b.is_zero()) return unit(nvars_);
  auto erase_support = [&](const Monomial& g) {
    std::vector<Monomial> all = gens_;
    for (auto& m : all) {
      for (int i = 0; i < nvars_; ++i) {
        if (g.exp[i] != 0) m.exp[i] = 0;
      }
    }
    return MonomialIdeal(nvars_, std::move(all));
  };
  MonomialIdeal r = erase_support(b.gens_.front());
  for (std::size_t i = 1; i < b.gens_.size(); ++i) r = r.intersect(erase_support(b.gens_[i]));
  return r;
}

int MonomialIdeal::krull_dim() const {
  if (is_unit()) return -1;
  std::vector<unsigned> supports;
  for (const auto& g : gens_) {
    unsigned s = 0;
    for (int i = 0; i < nvars_; ++i) {
      if (g.exp[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned v = 0; v < (1u << nvars_); ++v) {
    int size = __builtin_popcount(v);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](unsigned s) { return (s & ~v) == 0; });
    if (independent) best = size;
  }
  return best;
}

// ---------------------------------------------------------------- Staircase

namespace {

struct Geometry {
  int height = 0;
  std::vector<int> axes;
  std::vector<int> extent;
  std::size_t cells = 1;
  bool overflow = false;
};

Geometry geometry(int nvars, std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<int> max_exp(nvars, 0);
  auto scan = [&](std::span<const Monomial> s) {
    for (const auto& m : s) {
      for (int i = 0; i < nvars; ++i) max_exp[i] = std::max<int>(max_exp[i], m.exp[i]);
    }
  };
  scan(a);
  scan(b);
  Geometry g;
  g.height = static_cast<int>(std::max_element(max_exp.begin(), max_exp.end()) - max_exp.begin());
  for (int i = 0; i < nvars; ++i) {
    if (i == g.height) continue;
    g.axes.push_back(i);
    g.extent.push_back(max_exp[i] + 1);
    if (g.cells > Staircase::kMaxCells / static_cast<std::size_t>(max_exp[i] + 1)) g.overflow = true;
    g.cells *= static_cast<std::size_t>(max_exp[i] + 1);
  }
  if (g.cells > Staircase::kMaxCells) g.overflow = true;
  return g;
}

}  // namespace

bool Staircase::fits(int nvars, std::span<const Monomial> gens, std::span<const Monomial> cover) {
  return !geometry(nvars, gens, cover).overflow;
}

Staircase::Staircase(int nvars, std::span<const Monomial> gens, std::span<const Monomial> cover) : nvars_(nvars) {
  Geometry g = geometry(nvars, gens, cover);
  if (g.overflow) throw Error(ErrorCode::kComputationLimit, "staircase table too large");
  height_ = g.height;
  axes_ = std::move(g.axes);
  extent_ = std::move(g.extent);
  stride_.resize(axes_.size());
  std::size_t s = 1;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    stride_[k] = s;
    s *= static_cast<std::size_t>(extent_[k]);
  }
  table_.assign(s, kInfinite);
  build(gens);
}

std::size_t Staircase::cell_of(const Monomial& m) const noexcept {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    int c = std::min<int>(m.exp[axes_[k]], extent_[k] - 1);
    idx += static_cast<std::size_t>(c) * stride_[k];
  }
  return idx;
}

void Staircase::build(std::span<const Monomial> gens) {
  for (const auto& m : gens) {
    auto& slot = table_[cell_of(m)];
    slot = std::min<std::uint32_t>(slot, m.exp[height_]);
  }
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    const std::size_t st = stride_[k];
    const std::size_t ext = static_cast<std::size_t>(extent_[k]);
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
      if ((idx / st) % ext != 0) table_[idx] = std::min(table_[idx], table_[idx - st]);
    }
  }
}

bool Staircase::contains(const Monomial& m) const noexcept {
  std::uint32_t h = table_[cell_of(m)];
  return h != kInfinite && m.exp[height_] >= h;
}

std::vector<Monomial> Staircase::minimal_generators() const {
  std::vector<Monomial> out;
  for (std::size_t idx = 0; idx < table_.size(); ++idx) {
    const std::uint32_t h = table_[idx];
    if (h == kInfinite) continue;
    Monomial m;
    bool minimal = true;
    for (std::size_t k = 0; k < axes_.size() && minimal; ++k) {
      std::size_t c = (idx / stride_[k]) % static_cast<std::size_t>(extent_[k]);
      m.exp[axes_[k]] = static_cast<std::uint16_t>(c);
      if (c > 0 && table_[idx - stride_[k]] <= h) minimal = false;
    }
    if (!minimal) continue;
    m.exp[height_] = static_cast<std::uint16_t>(h);
    out.push_back(m);
  }
  return out;
}

std::int64_t Staircase::difference_count(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  const int n = outer.nvars();
  Staircase so(n, outer.generators(), inner.generators());
  Staircase si(n, inner.generators(), outer.generators());
  std::int64_t total = 0;
  for (std::size_t idx = 0; idx < so.table_.size(); ++idx) {
    const std::uint32_t ho = so.table_[idx];
    const std::uint32_t hi = si.table_[idx];
    if (ho == kInfinite) continue;
    if (hi == kInfinite) throw Error(ErrorCode::kPrecondition, "quotient of monomial ideals has infinite length");
    if (hi < ho) throw Error(ErrorCode::kPrecondition, "inner ideal is not contained in the outer one");
    if (hi == ho) continue;
    for (std::size_t k = 0; k < so.axes_.size(); ++k) {
      if ((idx / so.stride_[k]) % static_cast<std::size_t>(so.extent_[k]) ==
          static_cast<std::size_t>(so.extent_[k] - 1)) {
        throw Error(ErrorCode::kPrecondition, "quotient of monomial ideals has infinite length");
      }
    }
    total += hi - ho;
  }
  return total;
}

// ----------------------------------------------------------- Hilbert series

namespace {

using Series = std::vector<std::int64_t>;

void add_shifted(Series& acc, const Series& s, int shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

Series numerator(std::vector<Monomial> gens, std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  // Variable occurring in the most generators.
  int best = -1, best_count = 1;
  for (int j = 0; j < n; ++j) {
    int c = 0;
    for (const auto& g : gens) c += g.exp[j] != 0;
    if (c > best_count) {
      best = j;
      best_count = c;
    }
  }
  if (best < 0) {
    // Pairwise coprime generators: product of (1 - t^deg g).
    Series acc{1};
    for (const auto& g : gens) {
      int d = weighted_degree(g, w);
      Series next(acc.size() + d, 0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i];
        next[i + d] -= acc[i];
      }
      acc = std::move(next);
    }
    return acc;
  }
  // Pivot x_j^e with e the least exponent of x_j among mixed generators;
  // such a pivot is never in the ideal.
  int e = std::numeric_limits<int>::max();
  for (const auto& g : gens) {
    if (g.exp[best] == 0) continue;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (i != best && g.exp[i] != 0) pure = false;
    }
    if (!pure) e = std::min<int>(e, g.exp[best]);
  }
  Monomial pivot;
  pivot.exp[best] = static_cast<std::uint16_t>(e);

  std::vector<Monomial> with_pivot{pivot};
  for (const auto& g : gens) {
    if (!divides(pivot, g)) with_pivot.push_back(g);
  }
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, pivot));
  quotient = minimalize(n, std::move(quotient));

  Series acc = numerator(std::move(with_pivot), w);
  add_shifted(acc, numerator(std::move(quotient), w), weighted_degree(pivot, w));
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& M, std::span<const int> weights) {
  if (static_cast<int>(weights.size()) != M.nvars()) throw Error(ErrorCode::kInput, "weights arity mismatch");
  Series s = numerator(M.generators(), weights);
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

std::vector<std::int64_t> monomial_counts(std::span<const int> weights, int max_degree) {
  Series s(static_cast<std::size_t>(max_degree) + 1, 0);
  s[0] = 1;
  for (int w : weights) {
    for (int e = w; e <= max_degree; ++e) s[e] += s[e - w];
  }
  return s;
}

std::vector<std::int64_t> quotient_hilbert_function(const MonomialIdeal& M, std::span<const int> weights,
                                                    int max_degree) {
  Series num = hilbert_numerator(M, weights);
  Series s(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(max_degree); ++i) s[i] = num[i];
  for (int w : weights) {
    for (int e = w; e <= max_degree; ++e) s[e] += s[e - w];
  }
  return s;
}

}  // namespace mm
