#include "sbt/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <utility>

namespace sbt {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"u", "v", "a", "b",
                                                              "x", "y", "z", "s"};
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_bits(std::uint64_t bits) {
  Monomial m;
  m.bits_ = bits;
  unsigned deg = 0;
  for (int i = 0; i < kNumVars; ++i) deg += (bits >> (8 * i)) & 0xffu;
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::of(Var v, unsigned exponent) {
  if (exponent > 127) throw std::overflow_error("monomial exponent exceeds 127");
  Monomial m;
  m.bits_ = static_cast<std::uint64_t>(exponent) << shift(v);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::operator*(Monomial rhs) const {
  Monomial m;
  m.bits_ = bits_ + rhs.bits_;
  if (m.bits_ & kHighBits) throw std::overflow_error("monomial exponent exceeds 127");
  m.degree_ = static_cast<std::uint16_t>(degree_ + rhs.degree_);
  return m;
}

bool Monomial::divides(Monomial rhs) const {
  // Every byte is below 128, so each byte of (rhs | H) - this stays >= 128
  // exactly when rhs has the larger exponent, and no borrow crosses bytes.
  return (((rhs.bits_ | kHighBits) - bits_) & kHighBits) == kHighBits;
}

Monomial Monomial::operator/(Monomial divisor) const {
  Monomial m;
  m.bits_ = bits_ - divisor.bits_;
  m.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return m;
}

Monomial Monomial::gcd(Monomial lhs, Monomial rhs) {
  std::uint64_t bits = 0;
  for (int i = 0; i < kNumVars; ++i) {
    const std::uint64_t l = (lhs.bits_ >> (8 * i)) & 0xffu;
    const std::uint64_t r = (rhs.bits_ >> (8 * i)) & 0xffu;
    bits |= std::min(l, r) << (8 * i);
  }
  return from_bits(bits);
}

Monomial Monomial::lcm(Monomial lhs, Monomial rhs) {
  std::uint64_t bits = 0;
  for (int i = 0; i < kNumVars; ++i) {
    const std::uint64_t l = (lhs.bits_ >> (8 * i)) & 0xffu;
    const std::uint64_t r = (rhs.bits_ >> (8 * i)) & 0xffu;
    bits |= std::max(l, r) << (8 * i);
  }
  return from_bits(bits);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    const unsigned e = exponent(static_cast<Var>(i));
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v) { return monomial(Monomial::of(v)); }

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.mono > r.mono; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& lhs,
                                          const std::vector<Polynomial::Term>& rhs,
                                          bool negate_rhs) {
  std::vector<Polynomial::Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto li = lhs.begin();
  auto ri = rhs.begin();
  while (li != lhs.end() || ri != rhs.end()) {
    if (ri == rhs.end() || (li != lhs.end() && li->mono > ri->mono)) {
      out.push_back(*li++);
    } else if (li == lhs.end() || ri->mono > li->mono) {
      out.push_back({ri->mono, negate_rhs ? Rational(-ri->coeff) : ri->coeff});
      ++ri;
    } else {
      Rational c = negate_rhs ? Rational(li->coeff - ri->coeff)
                              : Rational(li->coeff + ri->coeff);
      if (c != 0) out.push_back({li->mono, std::move(c)});
      ++li;
      ++ri;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.is_monomial()) {
    const auto& t = rhs.terms_[0];
    Polynomial p = lhs.shifted(t.mono);
    if (t.coeff != 1) {
      for (auto& term : p.terms_) term.coeff *= t.coeff;
    }
    return p;
  }
  if (lhs.is_monomial()) return rhs * lhs;
  std::vector<Polynomial::Term> terms;
  terms.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs.terms_) {
    for (const auto& r : rhs.terms_) terms.push_back({l.mono * r.mono, l.coeff * r.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::shifted(Monomial m) const {
  Polynomial p = *this;
  if (m.is_one()) return p;
  // Multiplying by a monomial preserves the graded-lex order.
  for (auto& t : p.terms_) t.mono = t.mono * m;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Polynomial{};
  const Term& lead = divisor.leading();
  if (terms_.size() < 1 || leading().mono.degree() < lead.mono.degree()) return std::nullopt;

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lead.mono;
    const Rational qc = it->second / lead.coeff;
    for (const auto& t : divisor.terms_) {
      const Monomial m = t.mono * qm;
      auto [pos, inserted] = rem.emplace(m, 0);
      pos->second -= qc * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, qc});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

Polynomial Polynomial::divided(Monomial m) const {
  Polynomial p = *this;
  if (m.is_one()) return p;
  for (auto& t : p.terms_) t.mono = t.mono / m;
  return p;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return g;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].mono != rhs.terms_[i].mono || lhs.terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  }
  return true;
}

int Polynomial::compare(const Polynomial& lhs, const Polynomial& rhs) {
  const std::size_t n = std::min(lhs.terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = lhs.terms_[i];
    const auto& r = rhs.terms_[i];
    if (l.mono != r.mono) return l.mono > r.mono ? -1 : 1;
    if (l.coeff != r.coeff) return l.coeff > r.coeff ? -1 : 1;
  }
  if (lhs.terms_.size() == rhs.terms_.size()) return 0;
  return lhs.terms_.size() > rhs.terms_.size() ? -1 : 1;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << t.mono.to_string();
    } else {
      out << mag.get_str() << '*' << t.mono.to_string();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

namespace {

using Factor = RationalFunction::Factor;

bool same_denominator(Monomial lm, const std::vector<Factor>& lf, Monomial rm,
                      const std::vector<Factor>& rf) {
  if (lm != rm || lf.size() != rf.size()) return false;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    if (lf[i].exp != rf[i].exp || !(lf[i].poly == rf[i].poly)) return false;
  }
  return true;
}

void insert_factor(std::vector<Factor>& factors, Polynomial poly, unsigned exp) {
  auto it = std::lower_bound(factors.begin(), factors.end(), poly,
                             [](const Factor& f, const Polynomial& p) {
                               return Polynomial::compare(f.poly, p) < 0;
                             });
  if (it != factors.end() && it->poly == poly) {
    it->exp += exp;
  } else {
    factors.insert(it, Factor{std::move(poly), exp});
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction RationalFunction::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RationalFunction r(num);
  if (r.num_.is_zero()) return r;
  const Monomial m = den.monomial_content();
  Polynomial rest = den.divided(m);
  Rational scale = rest.content();
  if (rest.leading().coeff < 0) scale = -scale;
  rest = rest.scaled(1 / scale);
  r.num_ = r.num_.scaled(1 / scale);
  r.den_mono_ = m;
  if (!rest.is_constant()) r.den_factors_.push_back({std::move(rest), 1});
  r.normalize();
  return r;
}

bool RationalFunction::is_one() const {
  return is_polynomial() && num_.is_constant() && num_.constant_value() == 1;
}

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::monomial(den_mono_);
  for (const auto& f : den_factors_) d = d * f.poly.pow(f.exp);
  return d;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_mono_ = Monomial{};
    den_factors_.clear();
    return;
  }
  if (!den_mono_.is_one()) {
    const Monomial g = Monomial::gcd(num_.monomial_content(), den_mono_);
    if (!g.is_one()) {
      num_ = num_.divided(g);
      den_mono_ = den_mono_ / g;
    }
  }
  for (auto& f : den_factors_) {
    while (f.exp > 0) {
      auto q = num_.divide_exact(f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.exp;
    }
  }
  std::erase_if(den_factors_, [](const Factor& f) { return f.exp == 0; });
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

void RationalFunction::add_signed(const RationalFunction& rhs, bool negate) {
  if (rhs.is_zero()) return;
  if (is_zero()) {
    *this = negate ? -rhs : rhs;
    return;
  }
  if (same_denominator(den_mono_, den_factors_, rhs.den_mono_, rhs.den_factors_)) {
    if (negate) {
      num_ -= rhs.num_;
    } else {
      num_ += rhs.num_;
    }
    normalize();
    return;
  }
  const Monomial lcm_mono = Monomial::lcm(den_mono_, rhs.den_mono_);
  Polynomial lhs_mul = Polynomial::monomial(lcm_mono / den_mono_);
  Polynomial rhs_mul = Polynomial::monomial(lcm_mono / rhs.den_mono_);
  std::vector<Factor> lcm_factors;
  auto li = den_factors_.begin();
  auto ri = rhs.den_factors_.begin();
  while (li != den_factors_.end() || ri != rhs.den_factors_.end()) {
    int c = 0;
    if (li == den_factors_.end()) {
      c = 1;
    } else if (ri == rhs.den_factors_.end()) {
      c = -1;
    } else {
      c = Polynomial::compare(li->poly, ri->poly);
    }
    if (c < 0) {
      rhs_mul = rhs_mul * li->poly.pow(li->exp);
      lcm_factors.push_back(*li++);
    } else if (c > 0) {
      lhs_mul = lhs_mul * ri->poly.pow(ri->exp);
      lcm_factors.push_back(*ri++);
    } else {
      const unsigned e = std::max(li->exp, ri->exp);
      if (e > li->exp) lhs_mul = lhs_mul * li->poly.pow(e - li->exp);
      if (e > ri->exp) rhs_mul = rhs_mul * ri->poly.pow(e - ri->exp);
      lcm_factors.push_back({li->poly, e});
      ++li;
      ++ri;
    }
  }
  Polynomial l = num_ * lhs_mul;
  Polynomial r = rhs.num_ * rhs_mul;
  num_ = negate ? l - r : l + r;
  den_mono_ = lcm_mono;
  den_factors_ = std::move(lcm_factors);
  normalize();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  add_signed(rhs, false);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  add_signed(rhs, true);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction{};
  num_ = num_ * rhs.num_;
  den_mono_ = den_mono_ * rhs.den_mono_;
  for (const auto& f : rhs.den_factors_) insert_factor(den_factors_, f.poly, f.exp);
  if (!rhs.is_polynomial() || !is_polynomial()) normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  if (num_.is_monomial()) {
    // Keeps the factored denominator structure when it moves to the numerator.
    RationalFunction r;
    r.num_ = denominator().scaled(1 / num_.leading().coeff);
    r.den_mono_ = num_.leading().mono;
    r.normalize();
    return r;
  }
  return fraction(denominator(), num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1);
  RationalFunction base = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

class PolynomialEvaluator {
 public:
  explicit PolynomialEvaluator(const Bindings& bindings) : bindings_(bindings) {}

  RationalFunction eval(const Polynomial& p) {
    // Unbound variables stay symbolic and are multiplied in as a monomial.
    RationalFunction acc;
    for (const auto& t : p.terms()) {
      Monomial free_part;
      RationalFunction term(t.coeff);
      for (int i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        const unsigned e = t.mono.exponent(v);
        if (e == 0) continue;
        if (bindings_.count(v) == 0) {
          free_part = free_part * Monomial::of(v, e);
        } else {
          term *= power(v, e);
        }
      }
      if (!free_part.is_one()) term *= RationalFunction(Polynomial::monomial(free_part));
      acc += term;
    }
    return acc;
  }

  RationalFunction eval_monomial(Monomial m) { return eval(Polynomial::monomial(m)); }

 private:
  const RationalFunction& power(Var v, unsigned e) {
    auto& cache = powers_[static_cast<int>(v)];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * bindings_.at(v));
    return cache[e];
  }

  const Bindings& bindings_;
  std::array<std::vector<RationalFunction>, kNumVars> powers_;
};

}  // namespace

RationalFunction RationalFunction::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  PolynomialEvaluator ev(bindings);
  RationalFunction num = ev.eval(num_);
  RationalFunction den = ev.eval_monomial(den_mono_);
  for (const auto& f : den_factors_) den *= ev.eval(f.poly).pow(static_cast<int>(f.exp));
  if (den.is_zero()) throw DivisionByZero("substitution makes a denominator identically zero");
  return num / den;
}

bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (same_denominator(lhs.den_mono_, lhs.den_factors_, rhs.den_mono_, rhs.den_factors_))
    return lhs.num_ == rhs.num_;
  return (lhs - rhs).is_zero();
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string den;
  if (!den_mono_.is_one()) den = den_mono_.to_string();
  for (const auto& f : den_factors_) {
    if (!den.empty()) den += '*';
    den += '(' + f.poly.to_string() + ')';
    if (f.exp > 1) den += '^' + std::to_string(f.exp);
  }
  return '(' + num_.to_string() + ")/(" + den + ')';
}

// ---------------------------------------------------------------------------
// Scalar

const RationalFunction& generic_w_square() {
  static const RationalFunction value = [] {
    const Polynomial a = Polynomial::variable(Var::a);
    const Polynomial b = Polynomial::variable(Var::b);
    const Polynomial u = Polynomial::variable(Var::u);
    const Polynomial v = Polynomial::variable(Var::v);
    return RationalFunction::fraction(a + b - v * b, a * u);
  }();
  return value;
}

Scalar::Scalar(RationalFunction f0) : f0_(std::move(f0)) {}

Scalar::Scalar(RationalFunction f0, RationalFunction f1,
               std::shared_ptr<const RationalFunction> w_square)
    : f0_(std::move(f0)), f1_(std::move(f1)), w_square_(std::move(w_square)) {}

Scalar Scalar::w() { return Scalar(RationalFunction{}, RationalFunction(1)); }

const RationalFunction& Scalar::w_square() const {
  return w_square_ ? *w_square_ : generic_w_square();
}

std::shared_ptr<const RationalFunction> Scalar::join_context(const Scalar& lhs,
                                                             const Scalar& rhs) {
  if (lhs.w_square_ == rhs.w_square_) return lhs.w_square_;
  if (!rhs.has_w()) return lhs.w_square_ ? lhs.w_square_ : rhs.w_square_;
  if (!lhs.has_w()) return rhs.w_square_;
  if (lhs.w_square() == rhs.w_square()) return lhs.w_square_;
  throw std::logic_error("scalars with different w^2 relations cannot be combined");
}

Scalar Scalar::operator-() const { return Scalar(-f0_, -f1_, w_square_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  w_square_ = join_context(*this, rhs);
  f0_ += rhs.f0_;
  f1_ += rhs.f1_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  w_square_ = join_context(*this, rhs);
  f0_ -= rhs.f0_;
  f1_ -= rhs.f1_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  auto ctx = join_context(*this, rhs);
  if (!has_w() && !rhs.has_w()) {
    f0_ *= rhs.f0_;
  } else {
    const RationalFunction& wsq = ctx ? *ctx : generic_w_square();
    RationalFunction f0 = f0_ * rhs.f0_;
    if (has_w() && rhs.has_w()) f0 += f1_ * rhs.f1_ * wsq;
    RationalFunction f1 = f0_ * rhs.f1_;
    f1 += f1_ * rhs.f0_;
    f0_ = std::move(f0);
    f1_ = std::move(f1);
  }
  w_square_ = std::move(ctx);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (!has_w()) return Scalar(f0_.inverse(), RationalFunction{}, w_square_);
  RationalFunction norm = f0_ * f0_ - f1_ * f1_ * w_square();
  if (norm.is_zero()) throw DivisionByZero("scalar norm vanishes");
  RationalFunction inv = norm.inverse();
  return Scalar(f0_ * inv, -(f1_ * inv), w_square_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar Scalar::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  RationalFunction wsq = w_square().substitute(bindings);
  if (wsq.is_zero()) throw DivisionByZero("substitution makes w^2 vanish");
  std::shared_ptr<const RationalFunction> ctx;
  if (!(wsq == generic_w_square())) ctx = std::make_shared<const RationalFunction>(std::move(wsq));
  return Scalar(f0_.substitute(bindings), f1_.substitute(bindings), std::move(ctx));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.has_w() || rhs.has_w()) {
    const bool same_ctx = lhs.w_square_ == rhs.w_square_ || lhs.w_square() == rhs.w_square();
    if (!same_ctx) return false;
  }
  return lhs.f0_ == rhs.f0_ && lhs.f1_ == rhs.f1_;
}

std::string Scalar::to_string() const {
  if (!has_w()) return f0_.to_string();
  std::string wpart = f1_.to_string();
  if (f1_.is_polynomial()) wpart = '(' + wpart + ')';
  wpart += "*w";
  if (f0_.is_zero()) return wpart;
  return f0_.to_string() + " + " + wpart;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar s = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Scalar term() {
    Scalar acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (negative) {
        if (base.is_zero()) fail("division by zero");
        e = -e;
      }
      return base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "w") return Scalar::w();
      if (auto v = parse_var(name)) return Scalar::variable(*v);
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace sbt
