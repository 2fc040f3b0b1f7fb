#include "mm/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "mm/error.hpp"

namespace mm {

namespace {

// Sorts decreasing, merges equal monomials and drops zero coefficients.
void normalize(const RingContext& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  const auto& F = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i++];
    while (i < terms.size() && terms[i].mono == t.mono) t.coeff = F.add(t.coeff, terms[i++].coeff);
    if (t.coeff != 0) terms[out++] = t;
  }
  terms.resize(out);
}

std::vector<Term> merge(const RingContext& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  const auto& F = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = F.neg(t.coeff);
      out.push_back(t);
    } else {
      Coeff v = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    if (subtract) t.coeff = F.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().from_int(c);
  std::vector<Term> t;
  if (v != 0) t.push_back({Monomial{}, v});
  return from_sorted(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  std::vector<Term> t;
  c %= ring->field().characteristic();
  if (c != 0) t.push_back({m, c});
  return from_sorted(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Monomial m = ring->variable(i);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  int d = ring_->degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return ring_->degree(t.mono) == d; });
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  return from_sorted(ring_, merge(*ring_, terms_, g.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  return from_sorted(ring_, merge(*ring_, terms_, g.terms_, true));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = ring_->field().neg(x.coeff);
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const auto& F = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = F.mul(x.coeff, c);
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, F.mul(x.coeff, c)});
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names() || !(target->field() == ring_->field())) {
    throw Error(ErrorCode::kInput, "target ring has different variables or field");
  }
  if (same_ring(target, ring_)) return from_sorted(target, terms_);
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = F.to_symmetric(t.coeff);
    bool neg = c < 0;
    std::uint64_t mag = neg ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool one = t.mono.is_one();
    if (mag != 1 || one) {
      out += std::to_string(mag);
      if (!one) out += '*';
    }
    if (!one) out += ring_->format(t.mono);
  }
  return out;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, Coeff scalar) {
  switch (op) {
    case ArithOp::kAdd: return f + g;
    case ArithOp::kSub: return f - g;
    case ArithOp::kMul: return f * g;
    case ArithOp::kScale:
      require_same_ring(f.ring(), g.ring());
      return f.scaled(scalar);
  }
  throw Error(ErrorCode::kInput, "unknown arithmetic operation");
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, int line, int col0)
      : ring_(ring), text_(text), line_(line), col0_(col0) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negate));
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_, col0_ + static_cast<int>(pos_) + 1);
  }

  Coeff parse_integer() {
    const auto& F = ring_->field();
    Coeff v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = F.add(F.mul(v, 10 % F.characteristic()), static_cast<Coeff>((text_[pos_] - '0') % F.characteristic()));
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  int parse_exponent() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent");
    return static_cast<int>(v);
  }

  Term parse_term(bool negate) {
    const auto& F = ring_->field();
    Coeff coeff = 1;
    Monomial mono;
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = F.mul(coeff, parse_integer());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
        }
        std::string_view name = text_.substr(start, pos_ - start);
        int idx = ring_->index_of(name);
        if (idx < 0) {
          pos_ = start;
          fail("unknown variable '" + std::string(name) + "'");
        }
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        int total = mono.exp[idx] + e;
        if (total > kMaxExponent) fail("exponent too large");
        mono.exp[idx] = static_cast<std::uint16_t>(total);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {mono, negate ? F.neg(coeff) : coeff};
  }

  const RingPtr& ring_;
  std::string_view text_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line, int column_offset) {
  return PolyParser(ring, text, line, column_offset).parse();
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error(ErrorCode::kInput, "division by zero polynomial");
  const auto& ring = f.ring();
  const auto& F = ring->field();
  Coeff inv_lead = F.inv(g.lead().coeff);
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& lt = rest.lead();
    if (!divides(g.lead_monomial(), lt.mono)) {
      throw Error(ErrorCode::kInternalInconsistency, "exact division failed: " + g.to_string() + " does not divide " +
                                                         f.to_string());
    }
    Term q{lt.mono / g.lead_monomial(), F.mul(lt.coeff, inv_lead)};
    quotient.push_back(q);
    rest = rest - g.times(q.mono, q.coeff);
  }
  return Polynomial::from_sorted(ring, std::move(quotient));
}

Polynomial embed_shifted(const Polynomial& f, const RingPtr& to, int shift) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i + shift < static_cast<int>(kMaxVars); ++i) m.exp[i + shift] = t.mono.exp[i];
    out.push_back({m, t.coeff});
  }
  return Polynomial(to, std::move(out));
}

Polynomial project_shifted(const Polynomial& f, const RingPtr& to, int shift) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < shift; ++i) {
      if (t.mono.exp[i] != 0) throw Error(ErrorCode::kInternalInconsistency, "projection of a term with eliminated variables");
    }
    for (int i = shift; i < static_cast<int>(kMaxVars); ++i) m.exp[i - shift] = t.mono.exp[i];
    out.push_back({m, t.coeff});
  }
  return Polynomial(to, std::move(out));
}

}  // namespace mm
