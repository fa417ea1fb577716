#include "fgc/weil.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fgc {

namespace {

void require_field(const ModSeries& u, std::uint64_t p, const char* op) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(op) + ": p must be prime");
  if (u.ring().modulus != p)
    throw std::invalid_argument(std::string(op) + ": series ring " + u.ring().tag() + " is not F" + std::to_string(p));
}

void require_cocycle(const ModSeries& u, Target target, std::size_t passive, const char* op) {
  auto check = is_symmetric_cocycle(u, target, passive);
  if (!check.ok)
    throw std::domain_error(std::string(op) + ": input is not a symmetric cocycle (" + check.failure + " fails at " +
                            check.witness + ")");
}

// Images for u(i x1, x1, x2, ..., x_{k-1}) in passive + k - 1 variables.
std::vector<ModSeries> half_weil_images(const ModSeries& u, std::size_t passive, long i) {
  const auto nv = u.nvars() - 1;
  std::vector<ModSeries> images;
  for (std::size_t s = 0; s < u.nvars(); ++s) {
    std::size_t target;
    if (s < passive)
      target = s;
    else if (s == passive)
      target = passive;
    else
      target = s - 1;
    images.push_back(ModSeries::variable(u.ring(), nv, u.trunc(), target));
  }
  images[passive] = scale(images[passive], i);
  return images;
}

std::size_t active_count(const ModSeries& u, std::size_t passive, std::size_t at_least, const char* op) {
  if (u.nvars() < passive + at_least)
    throw std::invalid_argument(std::string(op) + ": needs at least " + std::to_string(at_least) +
                                " active variables");
  return u.nvars() - passive;
}

}  // namespace

ModSeries half_weil_multiplicative(const ModSeries& u, std::uint64_t p, std::size_t passive, bool verify) {
  require_field(u, p, "half_weil_multiplicative");
  active_count(u, passive, 2, "half_weil_multiplicative");
  if (verify) require_cocycle(u, Target::Multiplicative, passive, "half_weil_multiplicative");
  auto e = ModSeries::one(u.ring(), u.nvars() - 1, u.trunc());
  for (std::uint64_t i = 1; i < p; ++i) e = e * substitute(u, half_weil_images(u, passive, static_cast<long>(i)));
  return e;
}

ModSeries half_weil_additive(const ModSeries& u_plus, std::uint64_t p, std::size_t passive, bool verify) {
  require_field(u_plus, p, "half_weil_additive");
  active_count(u_plus, passive, 2, "half_weil_additive");
  if (verify) require_cocycle(u_plus, Target::Additive, passive, "half_weil_additive");
  ModSeries e(u_plus.ring(), u_plus.nvars() - 1, u_plus.trunc());
  for (std::uint64_t i = 1; i < p; ++i)
    e = e + substitute(u_plus, half_weil_images(u_plus, passive, static_cast<long>(i)));
  return e;
}

template <class S>
Series<S> delta1(const Series<S>& e, Target target, std::size_t slot, std::size_t passive) {
  if (e.nvars() < passive + 1) throw std::invalid_argument("delta1: needs an active variable");
  if (e.nvars() + 1 > kMaxVars) throw std::invalid_argument("delta1: too many variables");
  const auto active = e.nvars() - passive;
  if (slot < 1 || slot > active) throw std::out_of_range("delta1: slot out of range");
  if (target == Target::Multiplicative && !ScalarOps<S>::is_one(e.constant_term()))
    throw std::domain_error("delta1: multiplicative cochain must have constant term 1");
  const auto nv = e.nvars() + 1;
  const auto doubled = passive + slot - 1;
  const auto fresh = e.nvars();
  std::vector<std::size_t> same(e.nvars()), moved(e.nvars());
  for (std::size_t s = 0; s < e.nvars(); ++s) same[s] = moved[s] = s;
  moved[doubled] = fresh;
  auto a = remap_variables(e, nv, same);
  auto b = remap_variables(e, nv, moved);
  std::vector<Series<S>> images;
  for (std::size_t s = 0; s < e.nvars(); ++s) images.push_back(Series<S>::variable(e.ring(), nv, e.trunc(), s));
  images[doubled] = images[doubled] + Series<S>::variable(e.ring(), nv, e.trunc(), fresh);
  auto c = substitute(e, images);
  if (target == Target::Additive) return a + b - c;
  return a * b * invert(c);
}

ModSeries classical_weil(const ModSeries& u, std::uint64_t p, std::size_t passive, bool verify) {
  require_field(u, p, "classical_weil");
  if (u.nvars() != passive + 3) throw std::invalid_argument("classical_weil: needs exactly three active variables");
  if (verify) require_cocycle(u, Target::Multiplicative, passive, "classical_weil");
  const auto nv = passive + 2;
  auto v = [&](std::size_t s) { return ModSeries::variable(u.ring(), nv, u.trunc(), s); };
  auto num = ModSeries::one(u.ring(), nv, u.trunc());
  auto den = num;
  for (std::uint64_t i = 1; i < p; ++i) {
    std::vector<ModSeries> top, bottom;
    for (std::size_t s = 0; s < passive; ++s) {
      top.push_back(v(s));
      bottom.push_back(v(s));
    }
    auto x1 = v(passive), x2 = v(passive + 1);
    top.insert(top.end(), {x1, scale(x1, static_cast<long>(i)), x2});
    bottom.insert(bottom.end(), {x1, scale(x2, static_cast<long>(i)), x2});
    num = num * substitute(u, top);
    den = den * substitute(u, bottom);
  }
  return num * invert(den);
}

namespace {

// zeta_{d,2} mod p, cached per call.
class ZetaCache {
 public:
  explicit ZetaCache(CoefficientRing ring) : ring_(ring) {}
  const ModSeries& get(unsigned d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, zeta(d, 2, ring_)).first;
    return it->second;
  }

 private:
  CoefficientRing ring_;
  std::map<unsigned, ModSeries> cache_;
};

// zeta_{n,2}(x1, x2) x3^m x^I inside k variables.
ModSeries embed_slice(const ModSeries& bivariate, std::size_t k, unsigned trunc, unsigned m,
                      const std::vector<unsigned>& I) {
  std::vector<ModSeries::Term> terms;
  for (const auto& [mono, c] : bivariate.terms()) {
    Monomial out;
    out[0] = mono[0];
    out[1] = mono[1];
    if (k >= 3) out[2] = static_cast<std::uint8_t>(m);
    for (std::size_t i = 0; i < I.size(); ++i) out[3 + i] = static_cast<std::uint8_t>(I[i]);
    terms.emplace_back(out, c);
  }
  return ModSeries::from_terms(bivariate.ring(), k, trunc, std::move(terms));
}

}  // namespace

ModSeries BivariateDecomposition::reassemble() const {
  auto ring = CoefficientRing::prime_field(p);
  ZetaCache zetas(ring);
  auto out = residual;
  for (const auto& e : entries) out = out + scalar_mul(embed_slice(zetas.get(e.n), k, trunc, e.m, e.I), e.r);
  return out;
}

Residue BivariateDecomposition::coefficient(unsigned n, unsigned m, const std::vector<unsigned>& I) const {
  for (const auto& e : entries)
    if (e.n == n && e.m == m && e.I == I) return e.r;
  return Residue{0};
}

BivariateDecomposition bivariate_decompose(const ModSeries& u_plus, std::uint64_t p) {
  require_field(u_plus, p, "bivariate_decompose");
  const auto k = u_plus.nvars();
  if (k < 2) throw std::invalid_argument("bivariate_decompose: needs at least two variables");
  BivariateDecomposition out;
  out.p = p;
  out.k = k;
  out.trunc = u_plus.trunc();
  out.residual = ModSeries(u_plus.ring(), k, u_plus.trunc());

  // (d, m, I) -> terms of the slice in x1, x2.
  using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>>;
  std::map<Key, std::vector<ModSeries::Term>> slices;
  for (const auto& [mono, c] : u_plus.terms()) {
    std::vector<unsigned> I;
    for (std::size_t i = 3; i < k; ++i) I.push_back(mono[i]);
    Monomial bivariate;
    bivariate[0] = mono[0];
    bivariate[1] = mono[1];
    unsigned m = k >= 3 ? mono[2] : 0;
    slices[{static_cast<unsigned>(mono[0] + mono[1]), m, I}].emplace_back(bivariate, c);
  }

  ZetaCache zetas(u_plus.ring());
  for (auto& [key, terms] : slices) {
    const auto& [d, m, I] = key;
    auto slice = ModSeries::from_terms(u_plus.ring(), 2, d, std::move(terms));
    if (d < 2) {
      out.residual = out.residual + embed_slice(slice, k, u_plus.trunc(), m, I);
      continue;
    }
    const auto& z = zetas.get(d);
    const auto& [lead, lead_coeff] = z.terms().front();
    auto r = ScalarOps<Residue>::mul(slice.coefficient(lead), ScalarOps<Residue>::inverse(lead_coeff, z.ring()),
                                     z.ring());
    auto rest = slice.as_polynomial(d) - scalar_mul(z, r);
    if (!rest.is_zero()) out.residual = out.residual + embed_slice(rest, k, u_plus.trunc(), m, I);
    if (r.value) out.entries.push_back({d, m, I, r});
  }
  return out;
}

ObstructionVerdict obstruction_test(const ModSeries& u_plus, std::uint64_t p) {
  require_field(u_plus, p, "obstruction_test");
  ObstructionVerdict verdict;
  auto form = u_plus;
  if (!u_plus.is_homogeneous()) form = *leading_form(u_plus);
  if (auto d = form.min_degree()) verdict.tested_degree = *d;
  verdict.decomposition = bivariate_decompose(form, p);
  const auto& dec = verdict.decomposition;
  if (!dec.residual.is_zero()) {
    const auto& [mono, c] = dec.residual.terms().front();
    throw DecompositionError("obstruction_test: input is not an additive cocycle; no zeta decomposition covers " +
                             monomial_to_string(mono, dec.k));
  }
  using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>>;
  std::optional<Key> best;
  for (const auto& e : dec.entries) {
    if (!is_power_of(p, e.n) || !is_power_of(p, e.m)) continue;
    if (dec.coefficient(e.m, e.n, e.I) == e.r) continue;
    Key mine{e.n, e.m, e.I}, mirror{e.m, e.n, e.I};
    auto candidate = std::min(mine, mirror);
    if (!best || candidate < *best) best = candidate;
  }
  if (best) {
    const auto& [n, m, I] = *best;
    verdict.obstructed = true;
    verdict.witness = ObstructionWitness{n, m, I, dec.coefficient(n, m, I), dec.coefficient(m, n, I)};
  }
  return verdict;
}

template QSeries delta1(const QSeries&, Target, std::size_t, std::size_t);
template ModSeries delta1(const ModSeries&, Target, std::size_t, std::size_t);

}  // namespace fgc
