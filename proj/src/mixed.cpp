#include "mm/mixed.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <numeric>

namespace mm {

namespace {

int max_total_degree(const Ideal& a) {
  int best = 0;
  for (const auto& g : a.generators()) best = std::max(best, g.total_degree());
  return best;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Grid point offsets in row-major order.
std::vector<int> decode(std::size_t idx, int dims, int side) {
  std::vector<int> off(dims);
  for (int d = dims - 1; d >= 0; --d) {
    off[d] = static_cast<int>(idx % side);
    idx /= side;
  }
  return off;
}

std::size_t grid_size(int dims, int window) {
  std::size_t n = 1;
  for (int d = 0; d < dims; ++d) n *= static_cast<std::size_t>(window + 1);
  return n;
}

// Products multiply generator counts; swapping in the reduced basis keeps
// the next product and the length computation small.
Ideal shrink(const Ideal& a) {
  if (a.is_monomial() || a.is_zero()) return a;
  return Ideal::from_groebner(a.groebner());
}

// Powers a^base .. a^{base+window}.
std::vector<Ideal> power_run(const Ideal& a, int base, int window, Path path) {
  std::vector<Ideal> out;
  out.push_back(ideal_power(a, base, path));
  for (int k = 1; k <= window; ++k) out.push_back(shrink(ideal_combine(out.back(), a, CombineOp::kProduct, path)));
  return out;
}

}  // namespace

ProblemInstance::ProblemInstance(LocalRingModel A, Ideal J, std::vector<Ideal> ideals)
    : A_(std::make_shared<const LocalRingModel>(std::move(A))),
      J_(std::move(J)),
      ideals_(std::move(ideals)),
      product_(Ideal::unit(A_->ring())),
      saturation_(A_->ring()) {
  if (ideals_.empty()) throw Error(ErrorCode::kInput, "the ideal family is empty");
  require_same_ring(J_.ring(), ring());
  require_homogeneous(J_, "J");
  for (const auto& I : ideals_) {
    require_same_ring(I.ring(), ring());
    require_homogeneous(I, "I");
  }
  if (!is_m_primary(*A_, J_)) throw Error(ErrorCode::kJNotMPrimary, "J is not m-primary: " + J_.to_string());
  for (const auto& I : ideals_) product_ = ideal_combine(product_, I, CombineOp::kProduct);
  saturation_ = ideal_saturate(A_->gamma(), product_);
  ell_ = krull_dim_quotient(saturation_);
  if (ell_ < 0) throw Error(ErrorCode::kINilpotent, "I = " + product_.to_string() + " is nilpotent in A");
  lengths_ = std::make_shared<const LengthCalculator>(*A_, J_);
}

int ProblemInstance::max_generator_degree() const {
  int best = max_total_degree(J_);
  for (const auto& I : ideals_) best = std::max(best, max_total_degree(I));
  return best;
}

ProblemInstance ProblemInstance::swapped(int i, int j) const {
  auto copy = *this;
  std::swap(copy.ideals_.at(i), copy.ideals_.at(j));
  return copy;
}

std::int64_t hilbert_value(const ProblemInstance& P, std::span<const int> n, Path path) {
  if (static_cast<int>(n.size()) != P.s() + 1) throw Error(ErrorCode::kInput, "grid point has the wrong arity");
  if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; }))
    throw Error(ErrorCode::kInput, "grid point has a negative entry");
  Ideal U = ideal_power(P.J(), n[0], path);
  for (int i = 0; i < P.s(); ++i) U = shrink(ideal_combine(U, ideal_power(P.ideals()[i], n[i + 1], path), CombineOp::kProduct, path));
  return P.lengths().length(U, path);
}

std::vector<std::int64_t> evaluate_grid(const ProblemInstance& P, int base, int window, Path path, Execution ex) {
  if (base < 0 || window < 0) throw Error(ErrorCode::kInput, "grid base and window must be non-negative");
  const int dims = P.s() + 1;
  std::vector<std::vector<Ideal>> powers;
  powers.push_back(power_run(P.J(), base, window, path));
  for (const auto& I : P.ideals()) powers.push_back(power_run(I, base, window, path));

  const std::size_t total = grid_size(dims, window);
  std::vector<std::int64_t> values(total, 0);
  auto point = [&](std::size_t idx) {
    auto off = decode(idx, dims, window + 1);
    Ideal U = powers[0][off[0]];
    for (int d = 1; d < dims; ++d) U = shrink(ideal_combine(U, powers[d][off[d]], CombineOp::kProduct, path));
    values[idx] = P.lengths().length(U, path);
  };

  if (ex == Execution::kSerial) {
    for (std::size_t idx = 0; idx < total; ++idx) point(idx);
    return values;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < total; ++idx) {
    try {
      point(idx);
    } catch (...) {
#pragma omp critical(mm_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

std::size_t HilbertTable::index(std::span<const int> offset) const {
  std::size_t idx = 0;
  for (int d = 0; d < dims; ++d) {
    if (offset[d] < 0 || offset[d] > window) throw Error(ErrorCode::kInput, "offset outside the grid");
    idx = idx * (window + 1) + offset[d];
  }
  return idx;
}

std::int64_t HilbertTable::difference(std::span<const int> k, std::span<const int> p) const {
  // sum over j <= k of (-1)^{|k|-|j|} prod C(k_i, j_i) H(p + j)
  std::vector<int> j(dims, 0), at(dims);
  std::int64_t total = 0;
  const int order = std::accumulate(k.begin(), k.end(), 0);
  while (true) {
    std::int64_t coef = 1;
    int jsum = 0;
    for (int d = 0; d < dims; ++d) {
      coef *= binomial(k[d], j[d]);
      jsum += j[d];
      at[d] = p[d] + j[d];
    }
    std::int64_t term = coef * this->at(at);
    total += (order - jsum) % 2 == 0 ? term : -term;
    int d = dims - 1;
    while (d >= 0 && j[d] == k[d]) j[d--] = 0;
    if (d < 0) break;
    ++j[d];
  }
  return total;
}

std::vector<std::vector<int>> mixed_types(int dims, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0 || dims <= 0) return out;
  std::vector<int> k(dims, 0);
  auto rec = [&](auto& self, int d, int left) -> void {
    if (d == dims - 1) {
      k[d] = left;
      out.push_back(k);
      return;
    }
    for (int v = left; v >= 0; --v) {
      k[d] = v;
      self(self, d + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool passes_stabilization(const HilbertTable& T) {
  if (T.ell < 0) return false;
  std::vector<int> p(T.dims);
  for (const auto& k : mixed_types(T.dims, T.ell)) {
    if (std::any_of(k.begin(), k.end(), [&](int v) { return v > T.window; })) return false;
    // every start point with p + k inside the grid
    std::fill(p.begin(), p.end(), 0);
    while (true) {
      if (T.difference(k, p) != 0) return false;
      int d = T.dims - 1;
      while (d >= 0 && p[d] + k[d] == T.window) p[d--] = 0;
      if (d < 0) break;
      ++p[d];
    }
  }
  if (T.ell == 0) return true;
  std::vector<int> zero(T.dims, 0), one(T.dims, 1);
  for (const auto& k : mixed_types(T.dims, T.ell - 1)) {
    if (std::any_of(k.begin(), k.end(), [&](int v) { return v + 1 > T.window; })) return false;
    if (T.difference(k, zero) != T.difference(k, one)) return false;
  }
  return true;
}

int difference_degree(const HilbertTable& T) {
  std::vector<int> zero(T.dims, 0);
  for (int order = T.dims * T.window; order >= 0; --order) {
    for (const auto& k : mixed_types(T.dims, order)) {
      if (std::any_of(k.begin(), k.end(), [&](int v) { return v > T.window; })) continue;
      if (T.difference(k, zero) != 0) return order;
    }
  }
  return -1;
}

HilbertTable build_table(const ProblemInstance& P, const TableOptions& options) {
  HilbertTable T;
  T.dims = P.s() + 1;
  T.ell = P.ell();
  T.window = options.window.value_or(T.ell + 1);
  if (T.window < T.ell)
    throw Error(ErrorCode::kPrecondition, "window " + std::to_string(T.window) +
                                              " leaves fewer than ell + 1 points per axis (ell = " +
                                              std::to_string(T.ell) + ")");
  int base = options.base0.value_or(P.default_base0());
  if (base < 0) throw Error(ErrorCode::kInput, "base0 must be non-negative");
  while (true) {
    T.base = base;
    T.values = evaluate_grid(P, base, T.window, options.path, options.execution);
    T.stabilized = passes_stabilization(T);
    if (T.stabilized) return T;
    if (base == 0) {
      base = 1;
    } else if (base * 2 <= options.base_cap) {
      base *= 2;
    } else {
      throw StabilizationFailure("Hilbert table did not stabilize up to base " + std::to_string(base), T);
    }
  }
}

std::string type_label(std::span<const int> k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

std::vector<int> parse_type(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<int> out;
  while (true) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || v < 0)
      throw Error(ErrorCode::kInput, "bad mixed type '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

const char* route_name(Route r) {
  switch (r) {
    case Route::kDirectTable: return "direct-table";
    case Route::kFcReduction: return "fc-reduction";
    case Route::kClosedForm: return "closed-form";
  }
  return "?";
}

std::int64_t MixedReport::value(std::span<const int> k) const {
  for (const auto& [type, e] : entries) {
    if (std::equal(type.begin(), type.end(), k.begin(), k.end())) return e;
  }
  throw Error(ErrorCode::kInput, "type " + type_label(k) + " is not of total degree ell - 1 = " + std::to_string(ell - 1));
}

MixedReport mixed_multiplicities(const HilbertTable& T) {
  if (!T.stabilized) throw Error(ErrorCode::kPrecondition, "table is not stabilized");
  MixedReport R;
  R.ell = T.ell;
  R.base = T.base;
  R.window = T.window;
  if (T.ell == 0) return R;
  std::vector<int> zero(T.dims, 0);
  bool any_positive = false;
  for (auto& k : mixed_types(T.dims, T.ell - 1)) {
    std::int64_t e = T.difference(k, zero);
    if (e < 0)
      throw Error(ErrorCode::kInternalInconsistency,
                  "negative mixed multiplicity " + std::to_string(e) + " at type " + type_label(k));
    any_positive = any_positive || e > 0;
    R.entries.emplace_back(std::move(k), e);
  }
  if (!any_positive) throw Error(ErrorCode::kInternalInconsistency, "all mixed multiplicities vanish");
  return R;
}

int free_algebra_dimension(int d, std::span<const int> t) {
  int dim = d;
  for (int ti : t) {
    if (ti <= 0) return 0;
    dim += ti - 1;
  }
  return dim;
}

FreeAlgebraResult free_algebra_report(const FreeAlgebraSpec& F, const TableOptions& options) {
  if (F.t.empty()) throw Error(ErrorCode::kInput, "free extension needs at least one direction");
  if (std::any_of(F.t.begin(), F.t.end(), [](int v) { return v < 0; }))
    throw Error(ErrorCode::kInput, "variable counts must be non-negative");
  LengthCalculator calc(F.A, F.J);
  HilbertTable T;
  T.dims = static_cast<int>(F.t.size()) + 1;
  T.ell = free_algebra_dimension(F.A.dim(), F.t);
  T.window = options.window.value_or(T.ell + 1);
  if (T.window < T.ell) throw Error(ErrorCode::kPrecondition, "window leaves fewer than ell + 1 points per axis");
  int base = options.base0.value_or(2 * max_total_degree(F.J) + 2);

  while (true) {
    T.base = base;
    std::vector<std::int64_t> first;
    Ideal Jn = ideal_power(F.J, base);
    for (int k = 0; k <= T.window; ++k) {
      first.push_back(calc.length(Jn));
      Jn = ideal_combine(Jn, F.J, CombineOp::kProduct);
    }
    T.values.assign(grid_size(T.dims, T.window), 0);
    for (std::size_t idx = 0; idx < T.values.size(); ++idx) {
      auto off = decode(idx, T.dims, T.window + 1);
      std::int64_t v = first[off[0]];
      for (std::size_t i = 0; i < F.t.size(); ++i) {
        const int n = base + off[i + 1];
        v *= F.t[i] == 0 ? (n == 0 ? 1 : 0) : binomial(n + F.t[i] - 1, F.t[i] - 1);
      }
      T.values[idx] = v;
    }
    T.stabilized = passes_stabilization(T);
    if (T.stabilized) break;
    if (base * 2 > options.base_cap) throw StabilizationFailure("free extension table did not stabilize", T);
    base = std::max(1, base * 2);
  }
  if (difference_degree(T) + 1 != T.ell)
    throw Error(ErrorCode::kInternalInconsistency, "free extension table has degree " +
                                                       std::to_string(difference_degree(T)) + ", expected " +
                                                       std::to_string(T.ell - 1));
  FreeAlgebraResult out{mixed_multiplicities(T), T};
  out.report.route = Route::kClosedForm;
  return out;
}

std::vector<FreeQuotientStep> free_algebra_sequence(const FreeAlgebraSpec& F, std::span<const int> directions,
                                                    const TableOptions& options) {
  std::vector<FreeQuotientStep> steps;
  FreeAlgebraSpec cur = F;
  int prev = free_algebra_report(cur, options).report.ell;
  steps.push_back({0, cur.t, prev, true});
  for (int dir : directions) {
    if (dir < 1 || dir > static_cast<int>(cur.t.size()) || cur.t[dir - 1] == 0)
      throw Error(ErrorCode::kPrecondition, "no variable left in direction " + std::to_string(dir));
    --cur.t[dir - 1];
    int dim = free_algebra_report(cur, options).report.ell;
    steps.push_back({dir, cur.t, dim, prev - dim == 1});
    prev = dim;
  }
  return steps;
}

}  // namespace mm
