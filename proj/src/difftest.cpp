#include "mm/difftest.hpp"

#include "mm/random.hpp"

namespace mm {

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<int> random_exponents(SplitMix64& rng, int n, int degree) {
  std::vector<int> e(n, 0);
  for (int k = 0; k < degree; ++k) e[rng.below(n)]++;
  return e;
}

ProblemFile draw(SplitMix64& rng, const RandomInstanceOptions& o) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  ProblemFile pf;
  const int n = o.min_vars + static_cast<int>(rng.below(o.max_vars - o.min_vars + 1));
  pf.vars.assign(names.begin(), names.begin() + n);
  pf.weights = std::vector<int>(n, 1);

  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1 + static_cast<int>(rng.below(std::min(3, o.max_degree)));
    pf.J.push_back(monomial_text(pf.vars, e));
  }
  const int extra = static_cast<int>(rng.below(3));
  for (int k = 0; k < extra; ++k)
    pf.J.push_back(monomial_text(pf.vars, random_exponents(rng, n, 1 + static_cast<int>(rng.below(o.max_degree)))));

  const int s = 1 + static_cast<int>(rng.below(o.max_s));
  for (int i = 0; i < s; ++i) {
    const int degree = 1 + static_cast<int>(rng.below(o.max_degree));
    const int count = 1 + static_cast<int>(rng.below(3));
    std::vector<std::string> gens;
    for (int k = 0; k < count; ++k) gens.push_back(monomial_text(pf.vars, random_exponents(rng, n, degree)));
    pf.I.push_back(std::move(gens));
  }
  if (o.allow_gamma && rng.below(4) == 0)
    pf.gamma.push_back(monomial_text(pf.vars, random_exponents(rng, n, 2 + static_cast<int>(rng.below(o.max_degree - 1)))));
  return pf;
}

}  // namespace

ProblemFile random_monomial_problem(std::uint64_t seed, const RandomInstanceOptions& options) {
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    SplitMix64 rng(derive_seed(seed, attempt));
    ProblemFile pf = draw(rng, options);
    try {
      build_instance(pf);
      return pf;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kINilpotent && e.code() != ErrorCode::kJNotMPrimary &&
          e.code() != ErrorCode::kPrecondition)
        throw;
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "random instance generator found no valid instance");
}

DiffOutcome run_difftest(int count, std::uint64_t seed, int base0, int window, Execution ex) {
  DiffOutcome out;
  for (int i = 0; i < count; ++i) {
    ProblemFile pf = random_monomial_problem(derive_seed(seed, 0x6469, i));
    auto loaded = build_instance(pf);
    const auto& P = loaded.instance;
    auto fast = evaluate_grid(P, base0, window, Path::kMonomial, ex);
    auto slow = evaluate_grid(P, base0, window, Path::kGroebner, ex);
    out.points += fast.size();
    HilbertTable shape{.dims = P.s() + 1, .base = base0, .window = window};
    for (std::size_t idx = 0; idx < fast.size(); ++idx) {
      if (fast[idx] == slow[idx]) continue;
      std::vector<int> n(shape.dims);
      std::size_t rest = idx;
      for (int d = shape.dims - 1; d >= 0; --d) {
        n[d] = base0 + static_cast<int>(rest % (window + 1));
        rest /= window + 1;
      }
      out.mismatches.push_back({i, n, fast[idx], slow[idx]});
    }
    out.problems.push_back(std::move(pf));
  }
  return out;
}

}  // namespace mm
