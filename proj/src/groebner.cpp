#include "mm/groebner.hpp"

#include <algorithm>
#include <string>

#include "mm/error.hpp"

namespace mm {

namespace {

using Terms = std::vector<Term>;

// f[start+1..] - c * m * g[1..]; the leading terms cancel by construction.
Terms subtract_multiple(const RingContext& R, const Terms& f, std::size_t start, Coeff c, const Monomial& m,
                        const Terms& g) {
  const auto& F = R.field();
  Terms out;
  out.reserve(f.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = R.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, F.neg(F.mul(c, g[j].coeff))});
      ++j;
    } else {
      Coeff v = F.sub(f[i].coeff, F.mul(c, g[j].coeff));
      if (v != 0) out.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, F.neg(F.mul(c, g[j].coeff))});
  return out;
}

// Reducers have monic leading terms.
struct Reducer {
  const Terms* terms;
};

const Terms* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  for (const auto& r : reducers) {
    if (divides(r.terms->front().mono, m)) return r.terms;
  }
  return nullptr;
}

Terms reduce(const RingContext& R, Terms f, const std::vector<Reducer>& reducers, bool full) {
  Terms done;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lt = f[start];
    if (const Terms* g = find_reducer(reducers, lt.mono)) {
      Monomial q = lt.mono / g->front().mono;
      f = subtract_multiple(R, f, start, lt.coeff, q, *g);
      start = 0;
    } else if (full) {
      done.push_back(lt);
      ++start;
    } else {
      break;
    }
  }
  if (!full) {
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(start));
    return f;
  }
  return done;
}

void make_monic(const RingContext& R, Terms& f) {
  if (f.empty() || f.front().coeff == 1) return;
  const auto& F = R.field();
  Coeff inv = F.inv(f.front().coeff);
  for (auto& t : f) t.coeff = F.mul(t.coeff, inv);
}

int max_total_degree(const Terms& f) {
  int d = 0;
  for (const auto& t : f) d = std::max(d, t.mono.total_degree());
  return d;
}

int max_weighted_degree(const RingContext& R, const Terms& f) {
  int d = 0;
  for (const auto& t : f) d = std::max(d, R.degree(t.mono));
  return d;
}

struct Entry {
  Terms terms;
  int sugar;
  bool active;
  const Monomial& lead() const { return terms.front().mono; }
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const GbLimits& limits) : ring_(ring), R_(*ring), limits_(limits) {}

  GroebnerBasis run(std::span<const Polynomial> gens) {
    std::vector<Terms> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      Terms t = same_ring(g.ring(), ring_) ? g.terms() : g.in_ring(ring_).terms();
      make_monic(R_, t);
      input.push_back(std::move(t));
    }
    std::sort(input.begin(), input.end(),
              [&](const Terms& a, const Terms& b) { return R_.compare(a.front().mono, b.front().mono) < 0; });
    for (auto& f : input) {
      Terms h = reduce(R_, std::move(f), active_reducers(), false);
      if (!h.empty()) insert(std::move(h));
    }
    while (!pairs_.empty()) {
      Pair p = select_pair();
      if (++processed_ > limits_.max_pairs) {
        throw Error(ErrorCode::kComputationLimit,
                    "Groebner basis exceeded " + std::to_string(limits_.max_pairs) + " S-pairs (basis size " +
                        std::to_string(entries_.size()) + ", pending pairs " + std::to_string(pairs_.size()) + ")");
      }
      Terms s = s_polynomial(p);
      Terms h = reduce(R_, std::move(s), active_reducers(), false);
      if (!h.empty()) insert(std::move(h));
    }
    return finish();
  }

 private:
  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> r;
    for (const auto& e : entries_) {
      if (e.active) r.push_back({&e.terms});
    }
    return r;
  }

  Terms s_polynomial(const Pair& p) const {
    const Terms& f = entries_[p.i].terms;
    const Terms& g = entries_[p.j].terms;
    Terms a;
    a.reserve(f.size());
    Monomial mf = p.lcm / f.front().mono;
    for (const auto& t : f) a.push_back({t.mono * mf, t.coeff});
    // a - 1 * (lcm/lt g) * g, leading terms cancel.
    return subtract_multiple(R_, a, 0, 1, p.lcm / g.front().mono, g);
  }

  Pair select_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && R_.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  Pair make_pair(int i, int j) const {
    const Entry& a = entries_[i];
    const Entry& b = entries_[j];
    Monomial l = lcm(a.lead(), b.lead());
    int dl = R_.degree(l);
    int s = std::max(a.sugar + dl - R_.degree(a.lead()), b.sugar + dl - R_.degree(b.lead()));
    return {i, j, l, s};
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Terms h) {
    make_monic(R_, h);
    if (max_total_degree(h) > limits_.max_degree) {
      throw Error(ErrorCode::kComputationLimit,
                  "Groebner basis element exceeded degree " + std::to_string(limits_.max_degree));
    }
    const int hi = static_cast<int>(entries_.size());
    const int sugar = max_weighted_degree(R_, h);
    entries_.push_back({std::move(h), sugar, true});
    const Monomial& lh = entries_[hi].lead();

    std::vector<Pair> candidates;
    for (int g = 0; g < hi; ++g) {
      if (entries_[g].active) candidates.push_back(make_pair(g, hi));
    }
    std::vector<bool> dropped(candidates.size(), false);
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      dropped[a] = true;
      bool keep = coprime(lh, entries_[p.i].lead());
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (!dropped[b] && divides(candidates[b].lcm, p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (divides(kept[b].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      bool chain = divides(lh, p.lcm) && lcm(entries_[p.i].lead(), lh) != p.lcm &&
                   lcm(entries_[p.j].lead(), lh) != p.lcm;
      if (!chain) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!coprime(lh, entries_[p.i].lead())) next.push_back(p);
    }
    pairs_ = std::move(next);

    for (int g = 0; g < hi; ++g) {
      if (entries_[g].active && divides(lh, entries_[g].lead())) entries_[g].active = false;
    }
  }

  GroebnerBasis finish() {
    std::vector<Terms> basis;
    for (auto& e : entries_) {
      if (e.active) basis.push_back(e.terms);
    }
    // Minimality: drop elements whose lead is divisible by another lead.
    std::sort(basis.begin(), basis.end(),
              [&](const Terms& a, const Terms& b) { return R_.compare(a.front().mono, b.front().mono) < 0; });
    std::vector<Terms> minimal;
    for (auto& f : basis) {
      bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const Terms& g) { return divides(g.front().mono, f.front().mono); });
      if (!redundant) minimal.push_back(std::move(f));
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != k) others.push_back({&minimal[j]});
      }
      Terms tail(minimal[k].begin() + 1, minimal[k].end());
      Terms reduced = reduce(R_, std::move(tail), others, true);
      reduced.insert(reduced.begin(), minimal[k].front());
      make_monic(R_, reduced);
      out.push_back(Polynomial::from_sorted(ring_, std::move(reduced)));
    }
    // Leads are untouched by tail reduction, so this is the reduced basis,
    // in increasing lead order.
    return GroebnerBasis(ring_, std::move(out));
  }

  RingPtr ring_;
  const RingContext& R_;
  GbLimits limits_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.lead_monomial());
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  require_same_ring(f.ring(), G.ring());
  std::vector<Reducer> reducers;
  reducers.reserve(G.elements().size());
  for (const auto& g : G.elements()) reducers.push_back({&g.terms()});
  return Polynomial::from_sorted(G.ring(), reduce(*G.ring(), f.terms(), reducers, true));
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring, const GbLimits& limits) {
  return Buchberger(ring, limits).run(gens);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const GbLimits& limits) {
  if (gens.empty()) throw Error(ErrorCode::kInput, "buchberger needs at least one generator");
  return buchberger(gens, gens.front().ring()->with_order(order), limits);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const auto& el = G.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      Monomial l = lcm(el[i].lead_monomial(), el[j].lead_monomial());
      Polynomial s = el[i].times(l / el[i].lead_monomial()) - el[j].times(l / el[j].lead_monomial());
      if (!normal_form(s, G).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace mm
