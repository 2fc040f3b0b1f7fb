#include "mm/fc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mm/random.hpp"

namespace mm {

namespace {

Ideal principal(const Polynomial& x) { return Ideal(x.ring(), std::vector<Polynomial>{x}); }

int saturation_dim(const Ideal& gamma, const Ideal& I) { return krull_dim_quotient(ideal_saturate(gamma, I)); }

void require_member(const LocalRingModel& A, const Ideal& I, const Polynomial& x, const char* what) {
  require_same_ring(x.ring(), A.ring());
  if (!x.is_homogeneous()) throw Error(ErrorCode::kHomogeneity, std::string(what) + " is not homogeneous");
  if (!A.lift(I).contains(x))
    throw Error(ErrorCode::kPrecondition, x.to_string() + " does not lie in " + I.to_string());
}

struct StepContext {
  const ProblemInstance& P;
  std::vector<Ideal> family;  // J, I_1, .., I_s
};

bool weak_fc(const LocalRingModel& A, const StepContext& ctx, const Polynomial& x, int dir, int base, int window,
             FcChecks& checks) {
  checks.fc1 = check_fc1(A, ctx.family, x, dir, base, window);
  checks.fc2 = checks.fc1 && check_fc2(A, ctx.P.product(), x);
  return checks.fc1 && checks.fc2;
}

bool reverify(const LocalRingModel& A, const StepContext& ctx, const Polynomial& x, int dir, int base, int window) {
  if (!x.is_homogeneous() || !A.lift(ctx.family[dir]).contains(x)) return false;
  return check_fc1(A, ctx.family, x, dir, base + 1, window) && check_fc2(A, ctx.P.product(), x);
}

bool dimension_drops(const LocalRingModel& A, const Ideal& I, const Polynomial& x) {
  return saturation_dim(A.lift(principal(x)), I) == saturation_dim(A.gamma(), I) - 1;
}

void push_step(FCSequenceRecord& rec, const Ideal& gamma, const Ideal& I) {
  rec.gammas.push_back(gamma);
  rec.dims.push_back(saturation_dim(gamma, I));
}

void finish_record(FCSequenceRecord& rec) {
  const std::size_t t = rec.elements.size();
  rec.maximal = t >= 1 && rec.dims.size() == t + 1 && rec.dims[t - 1] >= 0 && rec.dims[t] < 0;
}

int sequence_length(const ProblemInstance& P, std::span<const int> k) {
  if (static_cast<int>(k.size()) != P.s() + 1)
    throw Error(ErrorCode::kInput, "type " + type_label(k) + " needs " + std::to_string(P.s() + 1) + " entries");
  if (std::any_of(k.begin(), k.end(), [](int v) { return v < 0; }))
    throw Error(ErrorCode::kInput, "type entries must be non-negative");
  int t = std::accumulate(k.begin() + 1, k.end(), 0);
  if (t > P.ell())
    throw Error(ErrorCode::kPrecondition, "sequence length " + std::to_string(t) + " exceeds ell = " + std::to_string(P.ell()));
  return t;
}

}  // namespace

bool check_fc1(const LocalRingModel& A, std::span<const Ideal> family, const Polynomial& x, int i, int base,
               int window) {
  if (window < 1) throw Error(ErrorCode::kInput, "FC1 grid needs window >= 1");
  if (base < 1) throw Error(ErrorCode::kInput, "FC1 grid needs base >= 1");
  if (i < 0 || i >= static_cast<int>(family.size())) throw Error(ErrorCode::kInput, "direction out of range");
  require_member(A, family[i], x, "FC1 candidate");

  const int dims = static_cast<int>(family.size());
  // powers[d][e] = family[d]^(base - 1 + e)
  std::vector<std::vector<Ideal>> powers(dims);
  for (int d = 0; d < dims; ++d) {
    powers[d].push_back(ideal_power(family[d], base - 1));
    for (int e = 1; e <= window + 1; ++e) powers[d].push_back(ideal_combine(powers[d].back(), family[d], CombineOp::kProduct));
  }
  const Ideal X = A.lift(principal(x));
  std::vector<int> off(dims, 0);
  while (true) {
    Ideal full = Ideal::unit(A.ring()), lowered = Ideal::unit(A.ring());
    for (int d = 0; d < dims; ++d) {
      full = ideal_combine(full, powers[d][off[d] + 1], CombineOp::kProduct);
      lowered = ideal_combine(lowered, powers[d][off[d] + (d == i ? 0 : 1)], CombineOp::kProduct);
    }
    Ideal lhs = ideal_intersect(X, A.lift(full));
    Ideal rhs = A.lift(ideal_combine(principal(x), lowered, CombineOp::kProduct));
    if (!rhs.contains(lhs) || !lhs.contains(rhs)) return false;
    int d = dims - 1;
    while (d >= 0 && off[d] == window) off[d--] = 0;
    if (d < 0) break;
    ++off[d];
  }
  return true;
}

bool check_fc2(const LocalRingModel& A, const Ideal& I, const Polynomial& x) {
  require_same_ring(x.ring(), A.ring());
  if (!x.is_homogeneous()) throw Error(ErrorCode::kHomogeneity, "FC2 candidate is not homogeneous");
  return ideal_saturate(A.gamma(), I).contains(ideal_colon(A.gamma(), principal(x)));
}

bool check_fc3(const LocalRingModel& A, const Ideal& I, const Polynomial& x) {
  require_member(A, I, x, "FC3 candidate");
  return dimension_drops(A, I, x);
}

FCSequenceRecord build_sequence(const ProblemInstance& P, std::span<const int> k, const SequenceOptions& options) {
  sequence_length(P, k);
  if (options.retries < 1) throw Error(ErrorCode::kInput, "retries must be at least 1");
  StepContext ctx{P, {P.J()}};
  for (const auto& I : P.ideals()) ctx.family.push_back(I);
  const int base = std::max(1, options.fc_base);

  FCSequenceRecord rec;
  rec.fc_base = base;
  rec.fc_window = options.fc_window;
  Ideal gamma = P.model().gamma();
  push_step(rec, gamma, P.product());

  int step = 0;
  for (int dir = 1; dir <= P.s(); ++dir) {
    for (int draw = 0; draw < k[dir]; ++draw, ++step) {
      LocalRingModel A(gamma);
      std::vector<Polynomial> gens;
      for (const auto& g : ctx.family[dir].generators()) {
        if (!gamma.contains(g)) gens.push_back(g);
      }
      if (gens.empty()) {
        throw SearchFailure("I_" + std::to_string(dir) + " vanishes in the quotient at step " + std::to_string(step + 1),
                            rec);
      }
      std::set<int> strata;
      for (const auto& g : gens) strata.insert(g.degree());

      std::optional<FCCandidate> accepted;
      auto attempt = [&](int degree, std::uint64_t seed) {
        FCCandidate c{random_homogeneous_combo(gens, degree, seed), dir, seed, {}};
        if (gamma.contains(c.element)) return;
        if (!weak_fc(A, ctx, c.element, dir, base, options.fc_window, c.checks)) return;
        c.checks.reverified = reverify(A, ctx, c.element, dir, base, options.fc_window);
        if (!c.checks.reverified) return;
        c.checks.fc3 = dimension_drops(A, P.product(), c.element);
        accepted = std::move(c);
      };
      auto stratum = strata.begin();
      for (int r = 0; r < options.retries && !accepted; ++r) attempt(*stratum, derive_seed(options.seed, step, r));
      if (!accepted && std::next(stratum) != strata.end())
        attempt(*std::next(stratum), derive_seed(options.seed, step, options.retries));
      if (!accepted) {
        finish_record(rec);
        throw SearchFailure("no weak-(FC) element of I_" + std::to_string(dir) + " found at step " +
                                std::to_string(step + 1) + " after " + std::to_string(options.retries) + " seeds",
                            rec);
      }
      gamma = ideal_combine(gamma, principal(accepted->element), CombineOp::kSum);
      rec.elements.push_back(std::move(*accepted));
      push_step(rec, gamma, P.product());
    }
  }
  finish_record(rec);
  return rec;
}

SequenceCheck check_sequence(const ProblemInstance& P, std::span<const Polynomial> xs, std::span<const int> dirs,
                             int fc_base, int fc_window) {
  if (xs.size() != dirs.size()) throw Error(ErrorCode::kInput, "one direction per element is required");
  StepContext ctx{P, {P.J()}};
  for (const auto& I : P.ideals()) ctx.family.push_back(I);
  SequenceCheck out;
  out.record.fc_base = fc_base;
  out.record.fc_window = fc_window;
  Ideal gamma = P.model().gamma();
  push_step(out.record, gamma, P.product());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (dirs[j] < 0 || dirs[j] > P.s()) throw Error(ErrorCode::kInput, "direction out of range");
    LocalRingModel A(gamma);
    FCCandidate c{xs[j], dirs[j], 0, {}};
    bool ok = weak_fc(A, ctx, c.element, c.direction, fc_base, fc_window, c.checks);
    if (ok) c.checks.reverified = reverify(A, ctx, c.element, c.direction, fc_base, fc_window);
    if (c.direction > 0) c.checks.fc3 = dimension_drops(A, P.product(), c.element);
    out.weak_fc = out.weak_fc && ok && c.checks.reverified;
    gamma = ideal_combine(gamma, principal(c.element), CombineOp::kSum);
    out.record.elements.push_back(std::move(c));
    push_step(out.record, gamma, P.product());
  }
  finish_record(out.record);
  return out;
}

const char* positivity_name(Positivity p) {
  switch (p) {
    case Positivity::kPositiveCertified: return "positive-certified";
    case Positivity::kZeroCertified: return "zero-certified";
    case Positivity::kUndetermined: return "undetermined";
  }
  return "?";
}

PositivityResult positivity(const ProblemInstance& P, std::span<const int> k, std::span<const std::uint64_t> seeds,
                            std::optional<std::int64_t> e_direct, int fc_base, int retries) {
  const int t = sequence_length(P, k);
  if (std::accumulate(k.begin(), k.end(), 0) != P.ell() - 1)
    throw Error(ErrorCode::kPrecondition, "type " + type_label(k) + " does not have total degree ell - 1");
  PositivityResult out;
  for (auto seed : seeds) {
    out.seeds_tried.push_back(seed);
    try {
      auto rec = build_sequence(P, k, {seed, retries, fc_base, 1});
      if (rec.dims.back() == P.ell() - t) {
        out.witness = std::move(rec);
        break;
      }
    } catch (const SearchFailure&) {
    }
  }
  if (out.witness && e_direct == 0) {
    throw Error(ErrorCode::kInvariantViolation, "type " + type_label(k) +
                                                    " has e = 0 in the table but a weak-(FC) sequence reaches dimension " +
                                                    std::to_string(P.ell() - t));
  }
  if (out.witness) {
    out.outcome = Positivity::kPositiveCertified;
  } else if (e_direct == 0) {
    out.outcome = Positivity::kZeroCertified;
  }
  return out;
}

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kEqual: return "equal";
    case VerifyStatus::kUnequal: return "unequal";
    case VerifyStatus::kZeroByPositivity: return "zero-by-positivity";
    case VerifyStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

Theorem43Report verify_theorem43(const ProblemInstance& P, const HilbertTable& T, std::span<const int> k,
                                 std::uint64_t seed, int retries, int positivity_seeds) {
  Theorem43Report rep;
  rep.type.assign(k.begin(), k.end());
  rep.ell = T.ell;
  rep.base = T.base;
  const int t = sequence_length(P, k);
  auto report = mixed_multiplicities(T);
  rep.e_direct = report.value(k);

  if (rep.e_direct == 0) {
    std::vector<std::uint64_t> seeds;
    for (int j = 0; j < positivity_seeds; ++j) seeds.push_back(derive_seed(seed, 0x706f73, j));
    rep.positivity = positivity(P, k, seeds, rep.e_direct, T.base, retries);
    rep.status = VerifyStatus::kZeroByPositivity;
    return rep;
  }
  try {
    rep.sequence = build_sequence(P, k, {seed, retries, T.base, 1});
  } catch (const SearchFailure& f) {
    rep.sequence = f.record();
    rep.status = VerifyStatus::kInconclusive;
    rep.note = f.what();
    return rep;
  }
  const Ideal H = ideal_saturate(rep.sequence->gammas.back(), P.product());
  rep.e_reduced = hilbert_samuel(P.model(), P.J(), H).mult;
  rep.dimension_equality = rep.sequence->dims.back() == P.ell() - t;
  if (!rep.dimension_equality) {
    rep.status = VerifyStatus::kUnequal;
    rep.note = "sequence ends in dimension " + std::to_string(rep.sequence->dims.back()) + ", expected " +
               std::to_string(P.ell() - t);
  } else {
    rep.status = *rep.e_reduced == rep.e_direct ? VerifyStatus::kEqual : VerifyStatus::kUnequal;
  }
  return rep;
}

}  // namespace mm
