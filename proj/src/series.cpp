#include "fgc/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace fgc {

#ifndef NDEBUG
#define FGC_VALIDATE(s) (s).validate()
#else
#define FGC_VALIDATE(s) ((void)0)
#endif

Monomial::Monomial(const std::vector<unsigned>& exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  unsigned total = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    total += exps[i];
    if (total > kMaxTrunc) throw std::invalid_argument("monomial degree exceeds 255");
    e[i] = static_cast<std::uint8_t>(exps[i]);
  }
}

std::string monomial_to_string(const Monomial& m, std::size_t nvars, const std::vector<std::string>* names) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += names ? (*names)[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <class S>
struct SeriesAccess {
  using Term = typename Series<S>::Term;
  using Map = std::unordered_map<Monomial, S, MonomialHash>;

  static Series<S> raw(CoefficientRing ring, std::size_t nvars, unsigned trunc, std::vector<Term> sorted) {
    Series<S> out(ring, nvars, trunc);
    out.terms_ = std::move(sorted);
    FGC_VALIDATE(out);
    return out;
  }

  static Series<S> from_map(CoefficientRing ring, std::size_t nvars, unsigned trunc, Map& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!ScalarOps<S>::is_zero(c) && m.degree() <= trunc) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GradedLexLess{}(a.first, b.first); });
    return raw(ring, nvars, trunc, std::move(terms));
  }
};

namespace {

template <class S>
void require_compatible(const Series<S>& a, const Series<S>& b, const char* op) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument(std::string(op) + ": ring mismatch " + a.ring().tag() + " vs " + b.ring().tag());
  if (a.nvars() != b.nvars())
    throw std::invalid_argument(std::string(op) + ": arity mismatch " + std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()));
}

template <class S>
void accumulate(typename SeriesAccess<S>::Map& acc, const Monomial& m, const S& c, const CoefficientRing& ring) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second = ScalarOps<S>::add(it->second, c, ring);
}

// end[d] = index one past the last term of degree <= d.
template <class S>
std::vector<std::size_t> degree_ends(const Series<S>& a, unsigned max_degree) {
  std::vector<std::size_t> end(max_degree + 1, 0);
  std::size_t idx = 0;
  const auto& t = a.terms();
  for (unsigned d = 0; d <= max_degree; ++d) {
    while (idx < t.size() && t[idx].first.degree() <= d) ++idx;
    end[d] = idx;
  }
  return end;
}

template <class S>
Series<S> monomial_times(const Monomial& m, const S& c, const Series<S>& b, unsigned trunc) {
  using Ops = ScalarOps<S>;
  std::vector<typename Series<S>::Term> out;
  auto dm = m.degree();
  if (dm > trunc) return Series<S>(b.ring(), b.nvars(), trunc);
  // Multiplying by a fixed monomial preserves graded-lex order.
  for (const auto& [mb, cb] : b.terms()) {
    if (mb.degree() + dm > trunc) break;
    auto coeff = Ops::mul(c, cb, b.ring());
    if (!Ops::is_zero(coeff)) out.emplace_back(m * mb, std::move(coeff));
  }
  return SeriesAccess<S>::raw(b.ring(), b.nvars(), trunc, std::move(out));
}

}  // namespace

template <class S>
Series<S>::Series(CoefficientRing ring, std::size_t nvars, unsigned trunc) : ring_(ring), nvars_(nvars), trunc_(trunc) {
  if (!Ops::accepts(ring)) throw std::invalid_argument("scalar type does not match ring " + ring.tag());
  if (nvars > kMaxVars) throw std::invalid_argument("at most 16 variables are supported");
  if (trunc > kMaxTrunc) throw std::invalid_argument("trunc above 255 is not supported");
}

template <class S>
Series<S> Series<S>::constant(CoefficientRing ring, std::size_t nvars, unsigned trunc, const S& c) {
  return monomial(ring, nvars, trunc, Monomial{}, c);
}

template <class S>
Series<S> Series<S>::variable(CoefficientRing ring, std::size_t nvars, unsigned trunc, std::size_t slot) {
  if (slot >= nvars) throw std::out_of_range("variable slot out of range");
  Monomial m;
  m[slot] = 1;
  return monomial(ring, nvars, trunc, m, Ops::from_int(1, ring));
}

template <class S>
Series<S> Series<S>::monomial(CoefficientRing ring, std::size_t nvars, unsigned trunc, const Monomial& m,
                              const S& c) {
  std::vector<Term> terms;
  terms.emplace_back(m, c);
  return from_terms(ring, nvars, trunc, std::move(terms));
}

template <class S>
Series<S> Series<S>::from_terms(CoefficientRing ring, std::size_t nvars, unsigned trunc, std::vector<Term> terms) {
  Series check(ring, nvars, trunc);
  typename SeriesAccess<S>::Map acc;
  for (auto& [m, c] : terms) {
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (m[i]) throw std::invalid_argument("monomial uses a slot beyond nvars");
    if (!Ops::valid(c, ring)) throw std::invalid_argument("coefficient not in ring " + ring.tag());
    accumulate<S>(acc, m, c, ring);
  }
  return SeriesAccess<S>::from_map(ring, nvars, trunc, acc);
}

template <class S>
S Series<S>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return GradedLexLess{}(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Ops::zero(ring_);
}

template <class S>
std::optional<unsigned> Series<S>::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first.degree();
}

template <class S>
std::optional<unsigned> Series<S>::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first.degree();
}

template <class S>
bool Series<S>::is_homogeneous() const {
  return terms_.empty() || *min_degree() == *max_degree();
}

template <class S>
Series<S> Series<S>::truncated(unsigned t) const {
  if (t >= trunc_) return *this;
  std::vector<Term> kept;
  for (const auto& term : terms_) {
    if (term.first.degree() > t) break;
    kept.push_back(term);
  }
  return SeriesAccess<S>::raw(ring_, nvars_, t, std::move(kept));
}

template <class S>
Series<S> Series<S>::as_polynomial(unsigned t) const {
  if (t < trunc_) return truncated(t);
  return SeriesAccess<S>::raw(ring_, nvars_, t, terms_);
}

template <class S>
void Series<S>::validate() const {
  auto fail = [](const std::string& what) { throw std::logic_error("series invariant: " + what); };
  if (!Ops::accepts(ring_)) fail("scalar type does not match ring");
  if (nvars_ > kMaxVars) fail("too many variables");
  if (trunc_ > kMaxTrunc) fail("trunc too large");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    if (Ops::is_zero(c)) fail("zero coefficient stored");
    if (!Ops::valid(c, ring_)) fail("coefficient not canonical in " + ring_.tag());
    if (m.degree() > trunc_) fail("term above trunc");
    for (std::size_t v = nvars_; v < kMaxVars; ++v)
      if (m[v]) fail("exponent in unused slot");
    if (i && !GradedLexLess{}(terms_[i - 1].first, m)) fail("terms not strictly graded-lex sorted");
  }
}

template <class S>
bool Series<S>::agrees_with(const Series& other) const {
  if (!(ring_ == other.ring_) || nvars_ != other.nvars_) return false;
  auto t = std::min(trunc_, other.trunc_);
  return truncated(t).terms_ == other.truncated(t).terms_;
}

template <class S>
Series<S> operator+(const Series<S>& a, const Series<S>& b) {
  require_compatible(a, b, "add");
  using Ops = ScalarOps<S>;
  auto t = std::min(a.trunc(), b.trunc());
  std::vector<typename Series<S>::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  GradedLexLess less;
  while (ia != ea || ib != eb) {
    const typename Series<S>::Term* pick;
    if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
      pick = &*ia++;
    } else if (ia == ea || less(ib->first, ia->first)) {
      pick = &*ib++;
    } else {
      if (ia->first.degree() > t) break;
      auto c = Ops::add(ia->second, ib->second, a.ring());
      if (!Ops::is_zero(c)) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
      continue;
    }
    if (pick->first.degree() > t) break;
    out.push_back(*pick);
  }
  return SeriesAccess<S>::raw(a.ring(), a.nvars(), t, std::move(out));
}

template <class S>
Series<S> operator-(const Series<S>& a) {
  using Ops = ScalarOps<S>;
  std::vector<typename Series<S>::Term> out;
  out.reserve(a.size());
  for (const auto& [m, c] : a.terms()) out.emplace_back(m, Ops::neg(c, a.ring()));
  return SeriesAccess<S>::raw(a.ring(), a.nvars(), a.trunc(), std::move(out));
}

template <class S>
Series<S> operator-(const Series<S>& a, const Series<S>& b) {
  return a + (-b);
}

template <class S>
Series<S> operator*(const Series<S>& a, const Series<S>& b) {
  require_compatible(a, b, "mul");
  auto t = std::min(a.trunc(), b.trunc());
  if (a.is_zero() || b.is_zero()) return Series<S>(a.ring(), a.nvars(), t);
  if (a.size() == 1) return monomial_times(a.terms()[0].first, a.terms()[0].second, b, t);
  if (b.size() == 1) return monomial_times(b.terms()[0].first, b.terms()[0].second, a, t);
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  auto ends = degree_ends(large, t);
  typename SeriesAccess<S>::Map acc;
  acc.reserve(std::min<std::size_t>(small.size() * large.size(), 1u << 20));
  for (const auto& [ms, cs] : small.terms()) {
    auto ds = ms.degree();
    if (ds > t) break;
    auto stop = ends[t - ds];
    for (std::size_t i = 0; i < stop; ++i) {
      const auto& [ml, cl] = large.terms()[i];
      accumulate<S>(acc, ms * ml, ScalarOps<S>::mul(cs, cl, a.ring()), a.ring());
    }
  }
  return SeriesAccess<S>::from_map(a.ring(), a.nvars(), t, acc);
}

template <class S>
Series<S> scalar_mul(const Series<S>& a, const S& c) {
  using Ops = ScalarOps<S>;
  if (!Ops::valid(c, a.ring())) throw std::invalid_argument("scalar not in ring " + a.ring().tag());
  std::vector<typename Series<S>::Term> out;
  for (const auto& [m, x] : a.terms()) {
    auto y = Ops::mul(x, c, a.ring());
    if (!Ops::is_zero(y)) out.emplace_back(m, std::move(y));
  }
  return SeriesAccess<S>::raw(a.ring(), a.nvars(), a.trunc(), std::move(out));
}

template <class S>
Series<S> scale(const Series<S>& a, long c) {
  return scalar_mul(a, ScalarOps<S>::from_int(c, a.ring()));
}

template <class S>
Series<S> pow(const Series<S>& a, unsigned e) {
  auto result = Series<S>::one(a.ring(), a.nvars(), a.trunc());
  auto base = a;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) {
      if (base.is_zero()) break;
      base = base * base;
    }
  }
  return result;
}

template <class S>
Series<S> invert(const Series<S>& a) {
  using Ops = ScalarOps<S>;
  auto c0 = a.constant_term();
  if (Ops::is_zero(c0) || !Ops::is_unit(c0, a.ring()))
    throw std::domain_error("invert: constant term " + Ops::to_string(c0) + " is not a unit in " + a.ring().tag());
  auto c0inv = Ops::inverse(c0, a.ring());
  // a = c0 (1 + r) with r of positive order.
  auto r = scalar_mul(a, c0inv) - Series<S>::one(a.ring(), a.nvars(), a.trunc());
  auto t = a.trunc();
  auto order = r.min_degree();
  if (!order) return Series<S>::constant(a.ring(), a.nvars(), t, c0inv);
  if (t / *order <= 8) {
    // Few powers of r survive truncation: plain geometric series.
    auto neg_r = -r;
    auto sum = Series<S>::one(a.ring(), a.nvars(), t);
    auto power = sum;
    while (true) {
      power = power * neg_r;
      if (power.is_zero()) break;
      sum = sum + power;
    }
    return scalar_mul(sum, c0inv);
  }
  // Newton: b <- b + b (1 - a b), doubling the number of correct degrees.
  auto unit = scalar_mul(a, c0inv);
  auto b = Series<S>::one(a.ring(), a.nvars(), 0);
  unsigned correct = 1;
  while (correct <= t) {
    unsigned next = std::min<unsigned>(2 * correct, t + 1);
    auto tp = next - 1;
    auto bt = b.as_polynomial(tp);
    auto err = Series<S>::one(a.ring(), a.nvars(), tp) - unit.truncated(tp) * bt;
    b = bt + bt * err;
    correct = next;
  }
  return scalar_mul(b, c0inv);
}

template <class S>
Series<S> substitute(const Series<S>& a, const std::vector<Series<S>>& images, SubstitutionMode mode) {
  using Ops = ScalarOps<S>;
  if (images.size() != a.nvars())
    throw std::invalid_argument("substitute: expected " + std::to_string(a.nvars()) + " images, got " +
                                std::to_string(images.size()));
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  const auto ring = images[0].ring();
  const auto nv = images[0].nvars();
  if (!(ring == a.ring())) throw std::invalid_argument("substitute: ring mismatch");
  unsigned t = kMaxTrunc;
  unsigned valuation = kMaxTrunc + 1;
  for (const auto& img : images) {
    if (!(img.ring() == ring) || img.nvars() != nv) throw std::invalid_argument("substitute: images disagree");
    t = std::min(t, img.trunc());
    if (auto d = img.min_degree()) valuation = std::min(valuation, *d);
  }
  if (mode == SubstitutionMode::PowerSeries) {
    for (const auto& img : images)
      if (!Ops::is_zero(img.constant_term()))
        throw std::domain_error("substitute: image with nonzero constant term into a truncated series");
    // Unknown terms of a above its trunc land in degree >= (trunc+1)*valuation.
    if (valuation <= kMaxTrunc) {
      unsigned long bound = (static_cast<unsigned long>(a.trunc()) + 1) * valuation - 1;
      t = static_cast<unsigned>(std::min<unsigned long>(t, bound));
    }
  }

  typename SeriesAccess<S>::Map acc;
  bool all_monomial = std::all_of(images.begin(), images.end(), [](const auto& s) { return s.size() <= 1; });
  if (all_monomial) {
    for (const auto& [m, c] : a.terms()) {
      Monomial out;
      S coeff = c;
      unsigned deg = 0;
      bool dead = false;
      for (std::size_t v = 0; v < a.nvars() && !dead; ++v) {
        if (!m[v]) continue;
        if (images[v].is_zero()) {
          dead = true;
          break;
        }
        const auto& [im, ic] = images[v].terms()[0];
        deg += im.degree() * m[v];
        if (deg > t) {
          dead = true;
          break;
        }
        for (std::size_t j = 0; j < nv; ++j) out[j] = static_cast<std::uint8_t>(out[j] + im[j] * m[v]);
        for (unsigned r = 0; r < m[v]; ++r) coeff = Ops::mul(coeff, ic, ring);
      }
      if (!dead) accumulate<S>(acc, out, coeff, ring);
    }
    return SeriesAccess<S>::from_map(ring, nv, t, acc);
  }

  // powers[v][e] = images[v]^e truncated at t, filled on demand.
  std::vector<std::vector<Series<S>>> powers(a.nvars());
  auto power_of = [&](std::size_t v, unsigned e) -> const Series<S>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Series<S>::one(ring, nv, t));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v].truncated(t));
    return pw[e];
  };
  for (const auto& [m, c] : a.terms()) {
    if (mode == SubstitutionMode::PowerSeries && valuation <= kMaxTrunc &&
        static_cast<unsigned long>(m.degree()) * valuation > t)
      break;
    auto term = Series<S>::constant(ring, nv, t, c);
    for (std::size_t v = 0; v < a.nvars() && !term.is_zero(); ++v)
      if (m[v]) term = term * power_of(v, m[v]);
    for (const auto& [tm, tc] : term.terms()) accumulate<S>(acc, tm, tc, ring);
  }
  return SeriesAccess<S>::from_map(ring, nv, t, acc);
}

template <class S>
Series<S> remap_variables(const Series<S>& a, std::size_t new_nvars, const std::vector<std::size_t>& targets) {
  if (targets.size() != a.nvars()) throw std::invalid_argument("remap_variables: one target per slot required");
  for (auto t : targets)
    if (t >= new_nvars) throw std::out_of_range("remap_variables: target slot out of range");
  typename SeriesAccess<S>::Map acc;
  for (const auto& [m, c] : a.terms()) {
    Monomial out;
    for (std::size_t v = 0; v < a.nvars(); ++v) out[targets[v]] = static_cast<std::uint8_t>(out[targets[v]] + m[v]);
    accumulate<S>(acc, out, c, a.ring());
  }
  return SeriesAccess<S>::from_map(a.ring(), new_nvars, a.trunc(), acc);
}

template <class S>
Series<S> homogeneous_part(const Series<S>& a, unsigned d, std::uint32_t mask) {
  std::vector<typename Series<S>::Term> out;
  for (const auto& term : a.terms())
    if (term.first.degree(mask) == d) out.push_back(term);
  return SeriesAccess<S>::raw(a.ring(), a.nvars(), a.trunc(), std::move(out));
}

template <class S>
std::optional<Series<S>> leading_form(const Series<S>& a, std::uint32_t mask) {
  std::optional<unsigned> lowest;
  for (const auto& [m, c] : a.terms()) {
    auto d = m.degree(mask);
    if (d > 0 && (!lowest || d < *lowest)) lowest = d;
  }
  if (!lowest) return std::nullopt;
  return homogeneous_part(a, *lowest, mask);
}

template <class S>
Series<S> coefficient_of_power(const Series<S>& a, std::size_t slot, unsigned e) {
  if (slot >= a.nvars()) throw std::out_of_range("coefficient_of_power: slot out of range");
  if (e > a.trunc()) return Series<S>(a.ring(), a.nvars(), 0);
  std::vector<typename Series<S>::Term> out;
  for (const auto& [m, c] : a.terms()) {
    if (m[slot] != e) continue;
    auto stripped = m;
    stripped[slot] = 0;
    out.emplace_back(stripped, c);
  }
  // Removing a fixed power from every term preserves graded-lex order.
  return SeriesAccess<S>::raw(a.ring(), a.nvars(), a.trunc() - e, std::move(out));
}

QSeries exp_series(const QSeries& a) {
  if (a.ring().kind != RingKind::Rationals) throw std::invalid_argument("exp_series: requires ring Q");
  if (sgn(a.constant_term()) != 0) throw std::domain_error("exp_series: nonzero constant term");
  auto sum = QSeries::one(a.ring(), a.nvars(), a.trunc());
  auto term = sum;
  for (long n = 1; n <= static_cast<long>(a.trunc()); ++n) {
    term = scalar_mul(term * a, mpq_class(1, n));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

QSeries log_series(const QSeries& a) {
  if (a.ring().kind != RingKind::Rationals) throw std::invalid_argument("log_series: requires ring Q");
  if (a.constant_term() != 1) throw std::domain_error("log_series: constant term must be 1");
  auto r = a - QSeries::one(a.ring(), a.nvars(), a.trunc());
  QSeries sum(a.ring(), a.nvars(), a.trunc());
  auto power = QSeries::one(a.ring(), a.nvars(), a.trunc());
  for (long n = 1; n <= static_cast<long>(a.trunc()); ++n) {
    power = power * r;
    if (power.is_zero()) break;
    sum = sum + scalar_mul(power, mpq_class(n % 2 ? 1 : -1, n));
  }
  return sum;
}

std::optional<Monomial> first_non_integral(const QSeries& a, std::uint64_t p) {
  for (const auto& [m, c] : a.terms())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return m;
  return std::nullopt;
}

ModSeries reduce(const QSeries& a, CoefficientRing target) {
  if (!target.modular()) throw std::invalid_argument("reduce: target must be modular");
  using Ops = ScalarOps<Residue>;
  std::vector<ModSeries::Term> out;
  for (const auto& [m, c] : a.terms()) {
    auto den = Ops::from_mpz(c.get_den(), target);
    if (!Ops::is_unit(den, target) || Ops::is_zero(den))
      throw std::domain_error("reduce: coefficient " + c.get_str() + " of " + monomial_to_string(m, a.nvars()) +
                              " is not integral at " + target.tag());
    auto num = Ops::from_mpz(c.get_num(), target);
    auto v = Ops::mul(num, Ops::inverse(den, target), target);
    if (!Ops::is_zero(v)) out.emplace_back(m, v);
  }
  return SeriesAccess<Residue>::raw(target, a.nvars(), a.trunc(), std::move(out));
}

ModSeries reduce(const ModSeries& a, CoefficientRing target) {
  if (!target.modular()) throw std::invalid_argument("reduce: target must be modular");
  if (a.ring().modulus % target.modulus != 0)
    throw std::invalid_argument("reduce: " + target.tag() + " is not a quotient of " + a.ring().tag());
  std::vector<ModSeries::Term> out;
  for (const auto& [m, c] : a.terms()) {
    Residue v{c.value % target.modulus};
    if (v.value) out.emplace_back(m, v);
  }
  return SeriesAccess<Residue>::raw(target, a.nvars(), a.trunc(), std::move(out));
}

QSeries change_ring(const QSeries& a, CoefficientRing target) {
  if (target.modular()) throw std::invalid_argument("change_ring: use reduce for modular targets");
  if (target.kind == RingKind::Integers)
    for (const auto& [m, c] : a.terms())
      if (c.get_den() != 1)
        throw std::domain_error("change_ring: coefficient " + c.get_str() + " of " +
                                monomial_to_string(m, a.nvars()) + " is not an integer");
  return SeriesAccess<Rational>::raw(target, a.nvars(), a.trunc(), a.terms());
}

#define FGC_INSTANTIATE(S)                                                                                  \
  template class Series<S>;                                                                                 \
  template Series<S> operator+(const Series<S>&, const Series<S>&);                                         \
  template Series<S> operator-(const Series<S>&, const Series<S>&);                                         \
  template Series<S> operator-(const Series<S>&);                                                           \
  template Series<S> operator*(const Series<S>&, const Series<S>&);                                         \
  template Series<S> scalar_mul(const Series<S>&, const S&);                                                \
  template Series<S> scale(const Series<S>&, long);                                                         \
  template Series<S> pow(const Series<S>&, unsigned);                                                       \
  template Series<S> invert(const Series<S>&);                                                              \
  template Series<S> substitute(const Series<S>&, const std::vector<Series<S>>&, SubstitutionMode);         \
  template Series<S> remap_variables(const Series<S>&, std::size_t, const std::vector<std::size_t>&);       \
  template Series<S> homogeneous_part(const Series<S>&, unsigned, std::uint32_t);                           \
  template std::optional<Series<S>> leading_form(const Series<S>&, std::uint32_t);                          \
  template Series<S> coefficient_of_power(const Series<S>&, std::size_t, unsigned);

FGC_INSTANTIATE(Rational)
FGC_INSTANTIATE(Residue)

}  // namespace fgc
