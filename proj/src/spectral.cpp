#include "fgc/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "fgc/series_io.hpp"
#include "fgc/weil.hpp"

namespace fgc {

std::string E1Class::name(bool rational) const {
  if (rational) return "b";
  std::string out;
  auto emit = [&](char letter, const std::vector<unsigned>& exps) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i]) continue;
      if (!out.empty()) out += ' ';
      out += letter;
      out += '_' + std::to_string(i);
      if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
    }
  };
  emit('a', a);
  emit('b', b);
  return out;
}

std::vector<std::string> E1Page::names(unsigned s, unsigned t) const {
  std::vector<std::string> out;
  auto it = cells.find({s, t});
  if (it == cells.end()) return out;
  for (const auto& c : it->second) out.push_back(c.name(ring.kind == RingKind::Rationals));
  return out;
}

std::string E1Page::to_table() const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"t\\s"};
  for (unsigned s = 1; s <= smax; ++s) header.push_back(std::to_string(s));
  rows.push_back(header);
  for (unsigned t = tmax; t >= 1; --t) {
    std::vector<std::string> row{std::to_string(t)};
    for (unsigned s = 1; s <= smax; ++s) {
      std::string cell;
      for (const auto& n : names(s, t)) cell += (cell.empty() ? "" : ", ") + n;
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(smax + 1, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << "E1 page over " << ring.tag() << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

nlohmann::json E1Page::to_json() const {
  nlohmann::json cells_json = nlohmann::json::array();
  for (unsigned t = 1; t <= tmax; ++t)
    for (unsigned s = 1; s <= smax; ++s) {
      auto n = names(s, t);
      if (!n.empty()) cells_json.push_back({{"s", s}, {"t", t}, {"classes", n}});
    }
  return {{"ring", ring.tag()}, {"smax", smax}, {"tmax", tmax}, {"cells", cells_json}};
}

namespace {

struct Generator {
  bool is_b;
  unsigned index;
  unsigned s;
  unsigned t;
  bool exterior;
};

void enumerate(const std::vector<Generator>& gens, std::size_t g, E1Class& current, E1Page& page) {
  if (g == gens.size()) {
    if (current.s >= 1 && current.t >= 1) page.cells[{current.s, current.t}].push_back(current);
    return;
  }
  const auto& gen = gens[g];
  auto& exps = gen.is_b ? current.b : current.a;
  const unsigned s0 = current.s, t0 = current.t;
  for (unsigned e = 0;; ++e) {
    if (current.s > page.smax || current.t > page.tmax) break;
    if (gen.exterior && e > 1) break;
    exps[gen.index] = e;
    enumerate(gens, g + 1, current, page);
    current.s += gen.s;
    current.t += gen.t;
  }
  exps[gen.index] = 0;
  current.s = s0;
  current.t = t0;
}

}  // namespace

E1Page e1_page(CoefficientRing ring, unsigned smax, unsigned tmax) {
  if (smax < 1 || tmax < 1) throw std::invalid_argument("e1_page: bounds must be at least 1");
  E1Page page;
  page.ring = ring;
  page.smax = smax;
  page.tmax = tmax;
  std::vector<Generator> gens;
  if (ring.kind == RingKind::Rationals) {
    gens.push_back({true, 0, 1, 1, true});
  } else {
    if (ring.kind != RingKind::PrimeField) throw std::invalid_argument("e1_page: ring must be Q or a prime field");
    const auto p = ring.modulus;
    std::vector<unsigned> powers;
    for (std::uint64_t q = 1; q <= tmax; q *= p) powers.push_back(static_cast<unsigned>(q));
    for (unsigned i = 0; i < powers.size(); ++i) gens.push_back({false, i, 1, powers[i], p != 2});
    if (p != 2)
      for (unsigned i = 0; i < powers.size(); ++i) gens.push_back({true, i, 2, powers[i], false});
  }
  E1Class current;
  for (const auto& g : gens) (g.is_b ? current.b : current.a).resize(g.index + 1, 0);
  enumerate(gens, 0, current, page);
  const bool rational = ring.kind == RingKind::Rationals;
  for (auto& [key, classes] : page.cells)
    std::sort(classes.begin(), classes.end(),
              [&](const E1Class& x, const E1Class& y) { return x.name(rational) < y.name(rational); });
  return page;
}

ModSeries bud_coboundary(const ModSeries& u_bud, std::size_t passive) {
  return delta2(u_bud, Target::Multiplicative, passive);
}

ModSeries c_part(const ModSeries& u, unsigned r) { return coefficient_of_power(u, 0, r); }

std::string DifferentialCheck::to_string() const {
  if (match) return "match";
  return "mismatch: computed - expected = " + to_text(difference);
}

ModSeries realize_a_monomial(std::uint64_t p, const std::vector<unsigned>& indices, std::size_t passive,
                             unsigned trunc) {
  auto ring = CoefficientRing::prime_field(p);
  std::vector<unsigned> exps(passive, 0);
  for (auto e : indices) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (q > kMaxTrunc) throw std::out_of_range("realize_a_monomial: exponent too large");
    exps.push_back(static_cast<unsigned>(q));
  }
  return ModSeries::monomial(ring, exps.size(), trunc, Monomial(exps), ScalarOps<Residue>::from_int(1, ring));
}

namespace {

DifferentialCheck finish(ModSeries computed, ModSeries expected) {
  DifferentialCheck out;
  out.difference = computed - expected;
  out.match = out.difference.is_zero();
  out.computed = std::move(computed);
  out.expected = std::move(expected);
  return out;
}

unsigned checked_budget(std::uint64_t t, const char* op) {
  if (t > kMaxTrunc) throw std::out_of_range(std::string(op) + ": required trunc exceeds " + std::to_string(kMaxTrunc));
  return static_cast<unsigned>(t);
}

}  // namespace

DifferentialCheck differential_F2(unsigned i, unsigned j) {
  if (i == j) throw std::invalid_argument("differential_F2: needs i != j");
  if (i > 6 || j > 6) throw std::out_of_range("differential_F2: index too large");
  const auto ring = CoefficientRing::prime_field(2);
  const unsigned a = 1u << i, b = 1u << j;
  const auto trunc = checked_budget(2ull * (a + b) + 2, "differential_F2");
  auto bud = ModSeries::one(ring, 3, trunc) +
             ModSeries::monomial(ring, 3, trunc, Monomial(std::vector<unsigned>{1, a, b}), Residue{1});
  auto computed = c_part(bud_coboundary(bud), 2);
  auto expected = realize_a_monomial(2, {i, i, j + 1}, 1, computed.trunc()) -
                  realize_a_monomial(2, {i + 1, j, j}, 1, computed.trunc());
  return finish(std::move(computed), std::move(expected));
}

DifferentialCheck differential_a_next(unsigned i) {
  if (i > 6) throw std::out_of_range("differential_a_next: index too large");
  const auto ring = CoefficientRing::prime_field(2);
  const unsigned n = 2u << i;
  const auto trunc = checked_budget(2ull * n + 2, "differential_a_next");
  auto e = ModSeries::one(ring, 2, trunc) +
           ModSeries::monomial(ring, 2, trunc, Monomial(std::vector<unsigned>{1, n}), Residue{1});
  auto quotient = invert(delta1(e, Target::Multiplicative, 1, 1));
  auto computed = c_part(quotient, 2);
  auto expected = -realize_a_monomial(2, {i + 1, i + 1}, 1, computed.trunc());
  return finish(std::move(computed), std::move(expected));
}

ModSeries texp(const ModSeries& z, std::uint64_t p) {
  if (z.ring().modulus != p || !is_prime(p)) throw std::invalid_argument("texp: series must be over F_p");
  if (z.constant_term().value != 0) throw std::domain_error("texp: constant term must be zero");
  auto out = ModSeries::one(z.ring(), z.nvars(), z.trunc());
  auto power = out;
  std::uint64_t factorial = 1;
  for (std::uint64_t n = 1; n < p; ++n) {
    power = power * z;
    factorial = factorial * n % p;
    out = out + scalar_mul(power, ScalarOps<Residue>::inverse(Residue{factorial}, z.ring()));
  }
  return out;
}

DifferentialCheck differential_odd(std::uint64_t p, unsigned i, unsigned j) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("differential_odd: p must be an odd prime");
  if (i == j) throw std::invalid_argument("differential_odd: needs i != j");
  const auto ring = CoefficientRing::prime_field(p);
  std::uint64_t a = 1, b = 1;
  for (unsigned s = 0; s < i; ++s) a *= p;
  for (unsigned s = 0; s < j; ++s) b *= p;
  const auto trunc = checked_budget(p * (a + b) + p, "differential_odd");
  auto v = [&](std::size_t s) { return ModSeries::variable(ring, 4, trunc, s); };
  auto c = v(0), w = v(1), x = v(2), y = v(3);
  const auto ua = static_cast<unsigned>(a), ub = static_cast<unsigned>(b);
  auto product = texp(c * pow(x, ua) * pow(y, ub), p) * texp(-(c * pow(w + x, ua) * pow(y, ub)), p) *
                 texp(c * pow(w, ua) * pow(x + y, ub), p) * texp(-(c * pow(w, ua) * pow(x, ub)), p);
  auto computed = c_part(product, static_cast<unsigned>(p));
  const auto t = computed.trunc();
  auto zeta_in = [&](std::uint64_t n, std::size_t first) {
    return remap_variables(zeta(n, 2, ring), 4, {first, first + 1}).as_polynomial(t);
  };
  auto mono = [&](std::size_t slot, std::uint64_t e) {
    std::vector<unsigned> exps(4, 0);
    exps[slot] = static_cast<unsigned>(e);
    return ModSeries::monomial(ring, 4, t, Monomial(exps), Residue{1});
  };
  auto expected = mono(1, p * a) * zeta_in(p * b, 2) - zeta_in(p * a, 1) * mono(3, p * b);
  return finish(std::move(computed), std::move(expected));
}

}  // namespace fgc
