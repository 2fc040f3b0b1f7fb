#include "mm/ideal.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "mm/error.hpp"

namespace mm {

struct Ideal::State {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::optional<MonomialIdeal> mono;
  mutable std::once_flag gens_once;
  mutable std::vector<Polynomial> mono_gens;
  mutable std::once_flag gb_once;
  mutable std::optional<GroebnerBasis> gb;
};

namespace {

std::vector<Polynomial> monomials_as_polys(const RingPtr& ring, const MonomialIdeal& m) {
  std::vector<Polynomial> out;
  out.reserve(m.generators().size());
  for (const auto& g : m.generators()) out.push_back(Polynomial::monomial(ring, g, 1));
  return out;
}

bool use_monomial(Path path, std::initializer_list<const Ideal*> ideals) {
  bool all = std::all_of(ideals.begin(), ideals.end(), [](const Ideal* i) { return i->is_monomial(); });
  if (path == Path::kMonomial && !all) throw Error(ErrorCode::kInput, "monomial path requested for a non-monomial ideal");
  return path != Path::kGroebner && all;
}

}  // namespace

const RingPtr& Ideal::ring() const noexcept { return state_->ring; }
bool Ideal::is_monomial() const noexcept { return state_->mono.has_value(); }

Ideal::Ideal(RingPtr ring) : state_(std::make_shared<State>()) {
  state_->ring = std::move(ring);
  state_->mono = MonomialIdeal(state_->ring->nvars());
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : state_(std::make_shared<State>()) {
  state_->ring = std::move(ring);
  std::vector<Polynomial> kept;
  bool all_monomial = true;
  for (auto& g : gens) {
    require_same_ring(state_->ring, g.ring());
    if (g.is_zero()) continue;
    all_monomial = all_monomial && g.is_monomial();
    kept.push_back(std::move(g));
  }
  if (all_monomial) {
    std::vector<Monomial> mons;
    for (const auto& g : kept) mons.push_back(g.lead_monomial());
    state_->mono = MonomialIdeal(state_->ring->nvars(), std::move(mons));
  } else {
    state_->gens = std::move(kept);
  }
}

Ideal::Ideal(RingPtr ring, MonomialIdeal mono) : state_(std::make_shared<State>()) {
  if (mono.nvars() != ring->nvars()) throw Error(ErrorCode::kInput, "monomial ideal arity mismatch");
  state_->ring = std::move(ring);
  state_->mono = std::move(mono);
}

Ideal Ideal::unit(RingPtr ring) {
  int n = ring->nvars();
  return Ideal(std::move(ring), MonomialIdeal::unit(n));
}

Ideal Ideal::from_groebner(GroebnerBasis gb) {
  Ideal out(gb.ring(), gb.elements());
  if (!out.is_monomial()) {
    std::call_once(out.state_->gb_once, [&] { out.state_->gb = std::move(gb); });
  }
  return out;
}

const std::vector<Polynomial>& Ideal::generators() const {
  if (!state_->mono) return state_->gens;
  std::call_once(state_->gens_once, [&] { state_->mono_gens = monomials_as_polys(state_->ring, *state_->mono); });
  return state_->mono_gens;
}

const MonomialIdeal& Ideal::monomial() const {
  if (!state_->mono) throw Error(ErrorCode::kInput, "ideal is not monomial");
  return *state_->mono;
}

bool Ideal::is_zero() const { return state_->mono ? state_->mono->is_zero() : state_->gens.empty(); }

bool Ideal::is_unit() const { return state_->mono ? state_->mono->is_unit() : groebner().is_unit_ideal(); }

bool Ideal::is_homogeneous() const {
  if (state_->mono) return true;
  return std::all_of(state_->gens.begin(), state_->gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(state_->gb_once, [&] {
    if (state_->mono) {
      // Minimal monomial generators are already the reduced basis.
      std::vector<Polynomial> els = generators();
      const auto& R = *state_->ring;
      std::sort(els.begin(), els.end(), [&](const Polynomial& a, const Polynomial& b) {
        return R.compare(a.lead_monomial(), b.lead_monomial()) < 0;
      });
      state_->gb = GroebnerBasis(state_->ring, std::move(els));
    } else {
      state_->gb = buchberger(state_->gens, state_->ring);
    }
  });
  return *state_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring(), f.ring());
  if (state_->mono) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const Term& t) { return state_->mono->contains(t.mono); });
  }
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring(), other.ring());
  if (state_->mono && other.state_->mono) return state_->mono->contains(*other.state_->mono);
  const auto& gens = other.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return contains(g); });
}

int Ideal::max_generator_degree() const {
  if (state_->mono) return state_->mono->max_generator_degree(ring()->weights());
  int d = 0;
  for (const auto& g : state_->gens) d = std::max(d, g.degree());
  return d;
}

int Ideal::min_generator_degree() const {
  if (state_->mono) return state_->mono->min_generator_degree(ring()->weights());
  int d = std::numeric_limits<int>::max();
  for (const auto& g : state_->gens) d = std::min(d, g.degree());
  return state_->gens.empty() ? 0 : d;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& g : generators()) {
    if (!first) out += ", ";
    out += g.to_string();
    first = false;
  }
  return out + ")";
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_monomial() && b.is_monomial()) return a.monomial() == b.monomial();
  return a.groebner() == b.groebner();
}

void require_homogeneous(const Ideal& a, const char* what) {
  if (!a.is_homogeneous()) throw Error(ErrorCode::kHomogeneity, std::string(what) + " is not homogeneous");
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op, Path path) {
  require_same_ring(a.ring(), b.ring());
  if (use_monomial(path, {&a, &b})) {
    return Ideal(a.ring(), op == CombineOp::kSum ? a.monomial() + b.monomial() : a.monomial() * b.monomial());
  }
  std::vector<Polynomial> gens;
  if (op == CombineOp::kSum) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  } else {
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators()) gens.push_back(f * g);
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n, Path path) {
  if (n < 0) throw Error(ErrorCode::kInput, "negative ideal power");
  if (use_monomial(path, {&a})) return Ideal(a.ring(), a.monomial().power(n));
  Ideal r = Ideal::unit(a.ring());
  for (int k = 0; k < n; ++k) {
    Ideal prod = ideal_combine(r, a, CombineOp::kProduct, Path::kGroebner);
    r = prod.is_zero() ? prod : Ideal::from_groebner(buchberger(prod.generators(), a.ring()));
  }
  return r;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, Path path) {
  require_same_ring(a.ring(), b.ring());
  if (use_monomial(path, {&a, &b})) return Ideal(a.ring(), a.monomial().intersect(b.monomial()));
  const RingPtr& R = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(R);
  RingPtr E = R->with_elimination_variable();
  Polynomial w = Polynomial::variable(E, 0);
  Polynomial one_minus_w = Polynomial::constant(E, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * embed_shifted(f, E, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * embed_shifted(g, E, 1));
  GroebnerBasis G = buchberger(gens, E);
  std::vector<Polynomial> kept;
  for (const auto& g : G.elements()) {
    if (g.lead_monomial().exp[0] == 0) kept.push_back(project_shifted(g, R, 1));
  }
  if (kept.empty()) return Ideal(R);
  return Ideal::from_groebner(GroebnerBasis(R, std::move(kept)));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b, Path path) {
  require_same_ring(a.ring(), b.ring());
  if (use_monomial(path, {&a, &b})) return Ideal(a.ring(), a.monomial().colon(b.monomial()));
  const RingPtr& R = a.ring();
  if (b.is_zero()) return Ideal::unit(R);
  std::optional<Ideal> acc;
  for (const auto& f : b.generators()) {
    Ideal part(R);
    if (!a.is_zero()) {
      Ideal principal(R, std::vector<Polynomial>{f});
      Ideal meet = ideal_intersect(a, principal, Path::kGroebner);
      std::vector<Polynomial> quotients;
      for (const auto& h : meet.generators()) quotients.push_back(exact_divide(h, f));
      part = Ideal(R, std::move(quotients));
    }
    acc = acc ? ideal_intersect(*acc, part, Path::kGroebner) : part;
  }
  return *acc;
}

Ideal ideal_saturate(const Ideal& a, const Ideal& b, Path path) {
  require_same_ring(a.ring(), b.ring());
  if (use_monomial(path, {&a, &b})) return Ideal(a.ring(), a.monomial().saturate(b.monomial()));
  constexpr int kMaxIterations = 100;
  Ideal current = a;
  for (int it = 0; it < kMaxIterations; ++it) {
    Ideal next = ideal_colon(current, b, Path::kGroebner);
    if (next.groebner() == current.groebner()) return next;
    current = std::move(next);
  }
  throw Error(ErrorCode::kComputationLimit, "saturation did not stabilize within 100 colon steps");
}

MonomialIdeal lead_term_ideal(const Ideal& a, Path path) {
  if (use_monomial(path, {&a})) return a.monomial();
  if (path == Path::kGroebner && a.is_monomial()) {
    if (a.is_zero()) return MonomialIdeal(a.ring()->nvars());
    // Run the general engine even though the answer is known combinatorially.
    return MonomialIdeal(a.ring()->nvars(), buchberger(a.generators(), a.ring()).lead_monomials());
  }
  return MonomialIdeal(a.ring()->nvars(), a.groebner().lead_monomials());
}

std::int64_t graded_piece_dim(const Ideal& a, int e, Path path) {
  require_homogeneous(a, "ideal");
  if (e < 0) return 0;
  MonomialIdeal lt = lead_term_ideal(a, path);
  auto weights = a.ring()->weights();
  return monomial_counts(weights, e)[e] - quotient_hilbert_function(lt, weights, e)[e];
}

int krull_dim_quotient(const Ideal& a, Path path) { return lead_term_ideal(a, path).krull_dim(); }

}  // namespace mm
