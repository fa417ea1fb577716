#include "fgc/ringpres.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fgc/linalg.hpp"

namespace fgc {

QSeries artin_hasse(std::uint64_t p, unsigned trunc) {
  if (!is_prime(p)) throw std::invalid_argument("artin_hasse: p must be prime");
  if (trunc < 1 || trunc > kMaxTrunc) throw std::out_of_range("artin_hasse: trunc out of range");
  const auto q = CoefficientRing::rationals();
  QSeries log(q, 1, trunc);
  mpz_class denom = 1;
  for (std::uint64_t power = 1; power <= trunc; power *= p, denom *= static_cast<unsigned long>(p)) {
    Monomial m(std::vector<unsigned>{static_cast<unsigned>(power)});
    log = log + QSeries::monomial(q, 1, trunc, m, Rational(mpq_class(1, denom)));
  }
  auto e = exp_series(log);
  if (auto bad = first_non_integral(e, p))
    throw std::logic_error("artin_hasse: coefficient of " + monomial_to_string(*bad, 1) + " is not " +
                           std::to_string(p) + "-integral");
  return e;
}

bool AhExtension::strict_hypothesis() const { return nu < fgc::nu(p, n); }

AhExtension ah_extension(std::uint64_t p, std::uint64_t n, std::size_t k, unsigned trunc) {
  if (!is_prime(p)) throw std::invalid_argument("ah_extension: p must be prime");
  if (n < 1 || k < 1) throw std::invalid_argument("ah_extension: needs n, k >= 1");
  if (k + 1 > kMaxVars) throw std::invalid_argument("ah_extension: too many variables");
  if (trunc > kMaxTrunc) throw std::out_of_range("ah_extension: trunc out of range");
  AhExtension out;
  out.p = p;
  out.n = n;
  out.k = k;
  out.trunc = trunc;
  const mpz_class ph = phi(n, k);
  out.nu = nu(p, ph);
  mpz_class pnu;
  mpz_ui_pow_ui(pnu.get_mpz_t(), p, out.nu);
  mpz_class unit = ph / pnu;
  const auto unit_mod = static_cast<std::int64_t>(mpz_fdiv_ui(unit.get_mpz_t(), p));
  out.omega = static_cast<std::uint64_t>(inverse_mod(unit_mod, static_cast<std::int64_t>(p)));

  const auto q = CoefficientRing::rationals();
  QSeries log(q, 2, trunc);
  mpz_class denom = pnu;
  for (std::uint64_t power = 1; power * (n + 1) <= trunc; power *= p, denom *= static_cast<unsigned long>(p)) {
    Monomial m(std::vector<unsigned>{static_cast<unsigned>(power), static_cast<unsigned>(n * power)});
    log = log + QSeries::monomial(q, 2, trunc, m, Rational(mpq_class(mpz_class(out.omega), denom)));
  }
  out.rational = exp_series(theta_additive(log, k, 1));
  out.non_integral = first_non_integral(out.rational, p);
  if (!out.non_integral) out.series = reduce(out.rational, CoefficientRing::prime_field(p));
  return out;
}

bool linear_part_is_zeta(const ModSeries& u, std::uint64_t p, std::uint64_t n, std::size_t k) {
  if (u.nvars() != k + 1 || u.trunc() < 1) return false;
  auto linear = coefficient_of_power(u, 0, 1);
  std::vector<std::size_t> slots(k);
  for (std::size_t i = 0; i < k; ++i) slots[i] = i + 1;
  auto z = remap_variables(zeta(n, k, CoefficientRing::prime_field(p)), k + 1, slots);
  return linear == z.as_polynomial(linear.trunc()).truncated(linear.trunc());
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Polynomial:
      return "polynomial";
    case GeneratorKind::DividedPower:
      return "divided_power";
    case GeneratorKind::SquareZero:
      return "square_zero";
  }
  return "?";
}

PresentationRing parse_presentation_ring(const std::string& tag) {
  if (tag == "F2") return PresentationRing::F2;
  if (tag == "Z2loc" || tag == "Z(2)") return PresentationRing::Z2Local;
  throw std::invalid_argument("unknown presentation ring '" + tag + "' (expected F2 or Z2loc)");
}

std::string to_string(PresentationRing ring) { return ring == PresentationRing::F2 ? "F2" : "Z2loc"; }

std::string RingGenerator::name() const {
  switch (kind) {
    case GeneratorKind::Polynomial:
      return "z_" + std::to_string(n);
    case GeneratorKind::DividedPower: {
      auto base = "b_{" + std::to_string(source_degree) + "," + std::to_string(index) + "}";
      return power > 1 ? base + "^{[" + std::to_string(power) + "]}" : base;
    }
    case GeneratorKind::SquareZero:
      return "b_{" + std::to_string(n) + "," + std::to_string(index) + "}";
  }
  return "?";
}

namespace {

bool polynomial_degree(std::uint64_t n, std::size_t k) { return nu_phi_kummer(2, n, k) <= nu(2, n); }

}  // namespace

std::vector<RingGenerator> classify_generators(std::size_t k, std::uint64_t n_max, PresentationRing ring) {
  if (k < 2) throw std::invalid_argument("classify_generators: needs k >= 2");
  std::vector<RingGenerator> out;
  for (std::uint64_t n = k; n <= n_max; ++n) {
    const auto g = gamma(2, n, k);
    RingGenerator lead;
    lead.n = n;
    lead.source_degree = n;
    if (polynomial_degree(n, k)) {
      lead.kind = GeneratorKind::Polynomial;
    } else {
      lead.kind = GeneratorKind::DividedPower;
      lead.index = g;
    }
    out.push_back(lead);

    std::uint64_t inherited = 0;
    for (std::uint64_t power = 2; n % power == 0; power *= 2) {
      const auto m = n / power;
      if (m < k || polynomial_degree(m, k)) continue;
      RingGenerator dp;
      dp.n = n;
      dp.kind = GeneratorKind::DividedPower;
      dp.index = gamma(2, m, k);
      dp.source_degree = m;
      dp.power = power;
      out.push_back(dp);
      ++inherited;
    }

    const auto total = D_prime(2, n, k);
    if (total < 1 + inherited)
      throw std::logic_error("classify_generators: more inherited divided powers than classes in degree " +
                             std::to_string(n));
    for (std::uint64_t i = g + 1; i <= g + (total - 1 - inherited); ++i) {
      RingGenerator b;
      b.n = n;
      b.index = i;
      b.kind = GeneratorKind::SquareZero;
      b.source_degree = n;
      b.additive_order = ring == PresentationRing::Z2Local ? 2 : 0;
      out.push_back(b);
    }
  }
  return out;
}

AdditivePresentation additive_presentation(std::size_t k, std::uint64_t n_max, const std::vector<std::uint64_t>& primes) {
  if (k < 2) throw std::invalid_argument("additive_presentation: needs k >= 2");
  AdditivePresentation out;
  out.k = k;
  out.n_max = n_max;
  out.primes = primes;
  std::sort(out.primes.begin(), out.primes.end());
  out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
  for (auto p : out.primes)
    if (!is_prime(p)) throw std::invalid_argument("additive_presentation: " + std::to_string(p) + " is not prime");
  for (std::uint64_t n = k; n <= n_max; ++n) {
    out.free.push_back(n);
    for (auto p : out.primes)
      for (std::uint64_t i = 1; i < D_prime(p, n, k); ++i) out.torsion.push_back({p, n, i});
  }
  return out;
}

std::string AdditivePresentation::to_text() const {
  std::ostringstream out;
  out << "additive presentation, k = " << k << ", degrees " << k << ".." << n_max << "\n";
  out << "Z[";
  for (std::size_t i = 0; i < free.size(); ++i) out << (i ? ", " : "") << "c_" << free[i];
  out << "]\n";
  for (auto p : primes) {
    out << "⊗ Z(" << p << ")[";
    bool first = true;
    for (const auto& t : torsion) {
      if (t.p != p) continue;
      out << (first ? "" : ", ") << "b_{" << p << "," << t.n << "," << t.i << "}";
      first = false;
    }
    out << "] / (" << p << " b)\n";
  }
  return out.str();
}

nlohmann::json AdditivePresentation::to_json() const {
  nlohmann::json tors = nlohmann::json::array();
  for (const auto& t : torsion)
    tors.push_back({{"p", t.p},
                    {"n", t.n},
                    {"i", t.i},
                    {"name", "b_{" + std::to_string(t.p) + "," + std::to_string(t.n) + "," + std::to_string(t.i) + "}"}});
  return {{"k", k}, {"n_max", n_max}, {"primes", primes}, {"free", free}, {"torsion", tors}};
}

RingPresentation present_ring(std::size_t k, std::uint64_t n_max, PresentationRing ring) {
  RingPresentation out;
  out.ring = ring;
  out.k = k;
  out.n_max = n_max;
  out.generators = classify_generators(k, n_max, ring);
  return out;
}

std::string RingPresentation::to_text() const {
  const std::string base = ring == PresentationRing::F2 ? "F2" : "Z(2)";
  std::vector<std::string> poly, gamma_gens, square;
  for (const auto& g : generators) {
    if (g.inherited()) continue;
    switch (g.kind) {
      case GeneratorKind::Polynomial:
        poly.push_back(g.name());
        break;
      case GeneratorKind::DividedPower:
        gamma_gens.push_back(g.name());
        break;
      case GeneratorKind::SquareZero:
        square.push_back(g.name());
        break;
    }
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  std::ostringstream out;
  out << "ring " << to_string(ring) << ", k = " << k << ", degrees " << k << ".." << n_max << "\n";
  out << base << "[" << join(poly) << "]\n";
  out << "⊗ Gamma[" << join(gamma_gens) << "]\n";
  out << "⊗ " << base << "[" << join(square) << "] / "
      << (ring == PresentationRing::F2 ? "(b_{n,i}^2)" : "(2 b_{n,i}, b_{n,i}^2)") << "\n";
  if (ring == PresentationRing::Z2Local)
    out << "note: the torsion of the Gamma factor over Z(2) is not determined here\n";
  return out.str();
}

nlohmann::json RingPresentation::to_json() const {
  nlohmann::json degrees = nlohmann::json::array();
  std::map<std::uint64_t, nlohmann::json> by_degree;
  for (const auto& g : generators) {
    auto& entry = by_degree[g.n];
    if (entry.is_null()) entry = nlohmann::json::array();
    entry.push_back({{"name", g.name()},
                     {"kind", to_string(g.kind)},
                     {"order", g.additive_order},
                     {"index", g.index},
                     {"source_degree", g.source_degree},
                     {"power", g.power}});
  }
  for (auto& [n, gens] : by_degree) degrees.push_back({{"n", n}, {"generators", gens}});
  return {{"ring", to_string(ring)}, {"k", k}, {"n_max", n_max}, {"degrees", degrees}};
}

namespace {

std::string node_id(std::size_t k, const Partition& root, std::size_t depth) {
  return "k" + std::to_string(k) + ":" + root.to_string() + "@" + std::to_string(depth);
}

}  // namespace

const StrataNode* StrataDiagram::find(const std::string& id) const {
  for (const auto& node : nodes)
    if (node.id == id) return &node;
  return nullptr;
}

StrataDiagram strata_diagram(std::uint64_t p, std::uint64_t n, std::size_t kmin, std::size_t kmax) {
  if (kmin < 2 || kmin > kmax) throw std::invalid_argument("strata_diagram: needs 2 <= kmin <= kmax");
  StrataDiagram out;
  out.p = p;
  out.n = n;
  out.kmin = kmin;
  out.kmax = kmax;
  for (std::size_t k = kmin; k <= kmax; ++k)
    for (auto& c : additive_basis(p, n, k)) {
      StrataNode node;
      node.id = node_id(k, c.root, c.depth);
      node.k = k;
      node.root = c.root;
      node.depth = c.depth;
      node.cocycle = std::move(c);
      out.nodes.push_back(std::move(node));
    }
  std::set<std::pair<std::string, std::string>> seen;
  auto add = [&](const std::string& from, const std::string& to, StrataEdgeKind kind) {
    if (seen.insert({from, to}).second) out.edges.push_back({from, to, kind});
  };
  for (const auto& node : out.nodes) {
    if (node.k > kmin) {
      auto next = node_id(node.k - 1, node.root, node.depth + 1);
      if (out.find(next)) add(node.id, next, StrataEdgeKind::Gathering);
    }
    if (node.depth != 0) continue;
    for (std::size_t i = 0; i < node.root.length(); ++i) {
      const auto part = node.root[i];
      if (part < p) continue;
      std::vector<std::uint64_t> parts;
      for (std::size_t j = 0; j < node.root.length(); ++j)
        if (j != i) parts.push_back(node.root[j]);
      for (std::uint64_t r = 0; r < p; ++r) parts.push_back(part / p);
      Partition split(parts);
      if (split.length() > kmax) {
        add(node.id, "cdots", StrataEdgeKind::Splitting);
        continue;
      }
      auto target = node_id(split.length(), split, 0);
      if (out.find(target)) add(node.id, target, StrataEdgeKind::Splitting);
    }
  }
  return out;
}

std::string StrataDiagram::to_text() const {
  std::ostringstream out;
  out << "strata p = " << p << ", n = " << n << ", k = " << kmin << ".." << kmax << "\n";
  for (const auto& node : nodes)
    out << "  [" << node.id << "] k=" << node.k << " " << node.cocycle.to_string() << "\n";
  for (const auto& e : edges)
    out << "  " << e.from << (e.kind == StrataEdgeKind::Gathering ? " --gather--> " : " --split--> ") << e.to << "\n";
  return out.str();
}

nlohmann::json StrataDiagram::to_json() const {
  nlohmann::json nodes_json = nlohmann::json::array(), edges_json = nlohmann::json::array();
  for (const auto& node : nodes) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mu, c] : node.cocycle.terms) terms.push_back({{"tau", mu.parts()}, {"coeff", c.value}});
    nodes_json.push_back({{"id", node.id},
                          {"k", node.k},
                          {"root", node.root.parts()},
                          {"depth", node.depth},
                          {"label", node.cocycle.to_string()},
                          {"terms", terms}});
  }
  for (const auto& e : edges)
    edges_json.push_back(
        {{"from", e.from}, {"to", e.to}, {"kind", e.kind == StrataEdgeKind::Gathering ? "gathering" : "splitting"}});
  return {{"p", p}, {"n", n}, {"kmin", kmin}, {"kmax", kmax}, {"nodes", nodes_json}, {"edges", edges_json}};
}

}  // namespace fgc
