#include "fgc/cochain.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "fgc/series_io.hpp"

namespace fgc {

namespace {

template <class S>
Series<S> var(const CoefficientRing& ring, std::size_t nvars, unsigned trunc, std::size_t slot) {
  return Series<S>::variable(ring, nvars, trunc, slot);
}

// Images for g(passive..., sum_{i in X} x_i) in a space of passive + k variables.
template <class S>
std::vector<Series<S>> subset_images(const Series<S>& g, std::size_t k, std::size_t passive, unsigned subset) {
  const auto nv = passive + k;
  std::vector<Series<S>> images;
  for (std::size_t s = 0; s < passive; ++s) images.push_back(var<S>(g.ring(), nv, g.trunc(), s));
  Series<S> sum(g.ring(), nv, g.trunc());
  for (std::size_t i = 0; i < k; ++i)
    if (subset >> i & 1u) sum = sum + var<S>(g.ring(), nv, g.trunc(), passive + i);
  images.push_back(sum);
  return images;
}

void check_theta_args(std::size_t g_nvars, std::size_t k, std::size_t passive) {
  if (k == 0 || k > 16) throw std::invalid_argument("theta: k must lie in [1, 16]");
  if (g_nvars != passive + 1) throw std::invalid_argument("theta: g must have passive + 1 variables");
  if (passive + k > kMaxVars) throw std::invalid_argument("theta: too many variables");
}

template <class S>
std::string first_term_text(const Series<S>& s) {
  if (s.is_zero()) return "";
  const auto& [m, c] = s.terms().front();
  return ScalarOps<S>::to_string(c) + "*" + monomial_to_string(m, s.nvars());
}

}  // namespace

template <class S>
Series<S> theta_additive(const Series<S>& g, std::size_t k, std::size_t passive) {
  check_theta_args(g.nvars(), k, passive);
  Series<S> total(g.ring(), passive + k, g.trunc());
  for (unsigned subset = 1; subset < (1u << k); ++subset) {
    auto term = substitute(g, subset_images(g, k, passive, subset));
    total = std::popcount(subset) % 2 ? total - term : total + term;
  }
  return total;
}

template <class S>
Series<S> theta_multiplicative(const Series<S>& g, std::size_t k, std::size_t passive) {
  check_theta_args(g.nvars(), k, passive);
  if (!ScalarOps<S>::is_one(g.constant_term()))
    throw std::domain_error("theta_multiplicative: constant term must be 1");
  auto num = Series<S>::one(g.ring(), passive + k, g.trunc());
  auto den = num;
  for (unsigned subset = 1; subset < (1u << k); ++subset) {
    auto factor = substitute(g, subset_images(g, k, passive, subset));
    if (std::popcount(subset) % 2)
      den = den * factor;
    else
      num = num * factor;
  }
  return num * invert(den);
}

template <class S>
Series<S> delta2(const Series<S>& u, Target target, std::size_t passive) {
  if (u.nvars() < passive + 2) throw std::invalid_argument("delta2: needs at least two active variables");
  if (u.nvars() + 1 > kMaxVars) throw std::invalid_argument("delta2: too many variables");
  if (target == Target::Multiplicative && !ScalarOps<S>::is_one(u.constant_term()))
    throw std::domain_error("delta2: multiplicative cochain must have constant term 1");
  const auto k = u.nvars() - passive;
  const auto nv = u.nvars() + 1;
  const auto& ring = u.ring();
  const auto t = u.trunc();
  const auto x0 = passive, x1 = passive + 1, x2 = passive + 2;

  // Slot map for the terms that only rename variables.
  std::vector<std::size_t> shift(u.nvars()), drop(u.nvars());
  for (std::size_t s = 0; s < passive; ++s) shift[s] = drop[s] = s;
  for (std::size_t i = 0; i < k; ++i) {
    shift[passive + i] = passive + i + 1;
    drop[passive + i] = i < 2 ? passive + i : passive + i + 1;
  }
  auto t1 = remap_variables(u, nv, shift);
  auto t4 = remap_variables(u, nv, drop);

  std::vector<Series<S>> img2, img3;
  for (std::size_t s = 0; s < u.nvars(); ++s) {
    img2.push_back(var<S>(ring, nv, t, shift[s]));
    img3.push_back(var<S>(ring, nv, t, shift[s]));
  }
  img2[passive] = var<S>(ring, nv, t, x0) + var<S>(ring, nv, t, x1);
  img3[passive] = var<S>(ring, nv, t, x0);
  img3[passive + 1] = var<S>(ring, nv, t, x1) + var<S>(ring, nv, t, x2);
  auto t2 = substitute(u, img2);
  auto t3 = substitute(u, img3);
  if (target == Target::Additive) return t1 - t2 + t3 - t4;
  return t1 * t3 * invert(t2 * t4);
}

template <class S>
Series<S> permute_active(const Series<S>& u, const std::vector<std::size_t>& perm, std::size_t passive) {
  if (perm.size() + passive != u.nvars()) throw std::invalid_argument("permute_active: wrong permutation size");
  std::vector<std::size_t> targets(u.nvars());
  for (std::size_t s = 0; s < passive; ++s) targets[s] = s;
  for (std::size_t i = 0; i < perm.size(); ++i) targets[passive + i] = passive + perm[i];
  return remap_variables(u, u.nvars(), targets);
}

template <class S>
CocycleCheck is_symmetric_cocycle(const Series<S>& u, Target target, std::size_t passive) {
  CocycleCheck out;
  if (u.nvars() < passive + 2) {
    out.ok = false;
    out.failure = "arity";
    return out;
  }
  const auto k = u.nvars() - passive;
  // A transposition and a k-cycle generate the symmetric group.
  std::vector<std::size_t> swap01(k), cycle(k);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (std::size_t i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  for (const auto& perm : {swap01, cycle}) {
    auto diff = permute_active(u, perm, passive) - u;
    if (!diff.is_zero()) {
      out.ok = false;
      out.failure = "symmetry";
      out.witness = first_term_text(diff);
      return out;
    }
  }
  auto d = delta2(u, target, passive);
  if (target == Target::Multiplicative) d = d - Series<S>::one(d.ring(), d.nvars(), d.trunc());
  if (!d.is_zero()) {
    out.ok = false;
    out.failure = "coboundary";
    out.witness = first_term_text(d);
  }
  return out;
}

QSeries zeta(std::uint64_t n, std::size_t k) {
  if (k == 0 || n < k) throw std::invalid_argument("zeta: requires n >= k >= 1");
  if (n > kMaxTrunc) throw std::invalid_argument("zeta: degree above 255");
  auto q = CoefficientRing::rationals();
  Monomial xn;
  xn[0] = static_cast<std::uint8_t>(n);
  auto g = QSeries::monomial(q, 1, static_cast<unsigned>(n), xn, 1);
  auto theta = theta_additive(g, k);
  return change_ring(scalar_mul(theta, Rational(mpq_class(1) / mpq_class(phi(n, k)))), CoefficientRing::integers());
}

ModSeries zeta(std::uint64_t n, std::size_t k, CoefficientRing ring) { return reduce(zeta(n, k), ring); }

mpz_class zeta_coefficient(const Partition& mu, std::size_t k) {
  if (mu.length() != k) return 0;
  mpz_class c = multinomial(mu);
  mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), phi(mu.total(), k).get_mpz_t());
  return k % 2 ? mpz_class(-c) : c;
}

template <class S>
Series<S> tau(const Partition& mu, std::size_t k, CoefficientRing ring, unsigned trunc) {
  if (mu.length() > k) throw std::invalid_argument("tau: partition longer than the number of variables");
  if (k > kMaxVars) throw std::invalid_argument("tau: too many variables");
  std::vector<unsigned> exps(k, 0);
  for (std::size_t i = 0; i < mu.length(); ++i) exps[i] = static_cast<unsigned>(mu[i]);
  std::sort(exps.begin(), exps.end());
  std::vector<typename Series<S>::Term> terms;
  auto one = ScalarOps<S>::from_int(1, ring);
  do {
    terms.emplace_back(Monomial(exps), one);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return Series<S>::from_terms(ring, k, trunc, std::move(terms));
}

ModSeries tau(const Partition& mu, std::size_t k, CoefficientRing ring) {
  return tau<Residue>(mu, k, ring, static_cast<unsigned>(mu.total()));
}

Monomial orbit_representative(const Partition& mu) {
  std::vector<unsigned> exps(mu.parts().begin(), mu.parts().end());
  return Monomial(exps);
}

Partition gather(const Partition& lambda, std::size_t i, std::size_t j) {
  if (i == j || i < 1 || j < 1 || i > lambda.length() || j > lambda.length())
    throw std::out_of_range("gather: indices must be distinct and within 1.." + std::to_string(lambda.length()));
  std::vector<std::uint64_t> parts;
  for (std::size_t idx = 1; idx <= lambda.length(); ++idx)
    if (idx != i && idx != j) parts.push_back(lambda[idx - 1]);
  parts.push_back(lambda[i - 1] + lambda[j - 1]);
  return Partition(std::move(parts));
}

std::set<Partition> gathered_set(const Partition& lambda, std::size_t m) {
  if (lambda.empty() || m + 1 > lambda.length())
    throw std::invalid_argument("gathered_set: need m <= length - 1");
  std::set<Partition> level{lambda};
  for (std::size_t step = 0; step < m; ++step) {
    std::set<Partition> next;
    for (const auto& mu : level)
      for (std::size_t i = 1; i <= mu.length(); ++i)
        for (std::size_t j = i + 1; j <= mu.length(); ++j) next.insert(gather(mu, i, j));
    level = std::move(next);
  }
  return level;
}

ModSeries GatheredCocycle::expand() const {
  auto ring = CoefficientRing::prime_field(p);
  ModSeries out(ring, k, static_cast<unsigned>(root.total()));
  for (const auto& [mu, c] : terms) out = out + scalar_mul(tau(mu, k, ring), c);
  return out;
}

std::string GatheredCocycle::to_string() const {
  std::string out;
  for (const auto& [mu, c] : terms) {
    // Print residues by their representative of least absolute value.
    bool negative = c.value > p / 2;
    auto mag = negative ? p - c.value : c.value;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "tau" + mu.to_string();
  }
  return out.empty() ? "0" : out;
}

GatheredCocycle gathered_cocycle(std::uint64_t p, const Partition& lambda, std::size_t m) {
  if (!is_prime(p)) throw std::invalid_argument("gathered_cocycle: p must be prime");
  if (lambda.empty()) throw std::invalid_argument("gathered_cocycle: empty partition");
  for (auto part : lambda.parts())
    if (!is_power_of(p, part))
      throw std::invalid_argument("gathered_cocycle: part " + std::to_string(part) + " is not a power of " +
                                  std::to_string(p));
  if (m + 1 > lambda.length()) throw std::invalid_argument("gathered_cocycle: depth exceeds length - 1");
  bool shortest = lambda == shortest_power_p_partition(p, lambda.total());
  if (!shortest && m + 1 >= p)
    throw HypothesisError("gathered_cocycle: root " + lambda.to_string() + " is not the shortest power-of-" +
                          std::to_string(p) + " partition and depth " + std::to_string(m) + " >= p - 1");
  GatheredCocycle out;
  out.p = p;
  out.root = lambda;
  out.depth = m;
  out.k = lambda.length() - m;
  auto ring = CoefficientRing::prime_field(p);
  auto level = gathered_set(lambda, m);
  for (auto it = level.rbegin(); it != level.rend(); ++it) {
    auto c = ScalarOps<Residue>::from_mpz(zeta_coefficient(*it, out.k), ring);
    if (c.value) out.terms.emplace_back(*it, c);
  }
  return out;
}

std::vector<GatheredCocycle> additive_basis(std::uint64_t p, std::uint64_t n, std::size_t k) {
  if (k < 2 || n < k) throw std::invalid_argument("additive_basis: requires n >= k >= 2");
  std::vector<GatheredCocycle> basis;
  auto shortest = shortest_power_p_partition(p, n);
  for (std::size_t m = 0; k + m <= n; ++m) {
    for (const auto& root : power_p_partitions(p, n, k + m)) {
      if (m + 1 < p || root == shortest) basis.push_back(gathered_cocycle(p, root, m));
    }
  }
  return basis;
}

namespace {

void partitions_at_most(std::uint64_t remaining, std::size_t slots, std::uint64_t max_part,
                        std::vector<std::uint64_t>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (slots == 0) return;
  for (auto part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    partitions_at_most(remaining - part, slots - 1, part, current, out);
    current.pop_back();
  }
}

}  // namespace

ModSeries OracleResult::basis_element(std::size_t row) const {
  auto ring = CoefficientRing::prime_field(p);
  ModSeries out(ring, k, static_cast<unsigned>(n));
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    auto c = kernel(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i));
    if (c) out = out + scalar_mul(tau(coordinates[i], k, ring), Residue{static_cast<std::uint64_t>(c)});
  }
  return out;
}

OracleResult brute_force_cocycle_space(std::uint64_t p, std::uint64_t n, std::size_t k, const OracleLimits& limits) {
  if (!is_prime(p) || p >= (1u << 20)) throw std::invalid_argument("oracle: p must be a prime below 2^20");
  if (k < 2 || n < k) throw std::invalid_argument("oracle: requires n >= k >= 2");
  if (n > kMaxTrunc || k + 1 > kMaxVars) throw std::invalid_argument("oracle: degree or arity too large");
  OracleResult out;
  out.p = p;
  out.n = n;
  out.k = k;
  std::vector<std::uint64_t> scratch;
  partitions_at_most(n, k, n, scratch, out.coordinates);
  const auto rows = out.coordinates.size();
  if (rows > limits.max_coordinates)
    throw std::length_error("oracle: " + std::to_string(rows) + " coordinates exceed the size guard");

  auto ring = CoefficientRing::prime_field(p);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> sparse(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto image = delta2(tau(out.coordinates[r], k, ring), Target::Additive);
    for (const auto& [m, c] : image.terms()) {
      auto [it, inserted] = column.try_emplace(m, column.size());
      sparse[r].emplace_back(it->second, static_cast<std::int64_t>(c.value));
    }
    if (column.size() > limits.max_columns)
      throw std::length_error("oracle: coboundary support exceeds the size guard");
  }

  // Column blocks shrink the kernel K (rows are kernel vectors in tau
  // coordinates) without ever forming the full matrix.
  const auto P = static_cast<std::int64_t>(p);
  const auto R = static_cast<Eigen::Index>(rows);
  ModMatrix kernel = ModMatrix::Identity(R, R);
  const std::size_t block = 2048;
  const auto ncols = column.size();
  std::vector<std::size_t> cursor(rows, 0);
  for (auto& row : sparse) std::sort(row.begin(), row.end());
  for (std::size_t start = 0; start < ncols && kernel.rows() > 0; start += block) {
    const auto width = std::min(block, ncols - start);
    ModMatrix a = ModMatrix::Zero(R, static_cast<Eigen::Index>(width));
    bool any = false;
    for (std::size_t r = 0; r < rows; ++r) {
      auto& cur = cursor[r];
      while (cur < sparse[r].size() && sparse[r][cur].first < start + width) {
        a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(sparse[r][cur].first - start)) = sparse[r][cur].second;
        any = true;
        ++cur;
      }
    }
    if (!any) continue;
    ModMatrix w = mod_reduce(kernel * a, P);
    ModMatrix y = left_kernel_mod(w, P);
    kernel = mod_reduce(y * kernel, P);
  }
  out.kernel = rref_mod(kernel, P).rref;
  return out;
}

std::optional<ModVector> tau_coordinates(const OracleResult& oracle, const ModSeries& u) {
  auto ring = CoefficientRing::prime_field(oracle.p);
  if (!(u.ring() == ring) || u.nvars() != oracle.k) return std::nullopt;
  ModVector coords = ModVector::Zero(static_cast<Eigen::Index>(oracle.coordinates.size()));
  ModSeries rebuilt(ring, oracle.k, static_cast<unsigned>(oracle.n));
  for (std::size_t i = 0; i < oracle.coordinates.size(); ++i) {
    auto c = u.coefficient(orbit_representative(oracle.coordinates[i]));
    coords(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(c.value);
    if (c.value) rebuilt = rebuilt + scalar_mul(tau(oracle.coordinates[i], oracle.k, ring), c);
  }
  if (rebuilt.terms() != u.terms()) return std::nullopt;
  return coords;
}

bool spans_oracle_kernel(const OracleResult& oracle, const std::vector<GatheredCocycle>& basis) {
  if (basis.size() != oracle.dimension()) return false;
  const auto cols = static_cast<Eigen::Index>(oracle.coordinates.size());
  const auto P = static_cast<std::int64_t>(oracle.p);
  ModMatrix b(static_cast<Eigen::Index>(basis.size()), cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto coords = tau_coordinates(oracle, basis[i].expand());
    if (!coords) return false;
    b.row(static_cast<Eigen::Index>(i)) = *coords;
  }
  if (rank_mod(b, P) != basis.size()) return false;
  ModMatrix stacked(oracle.kernel.rows() + b.rows(), cols);
  stacked << oracle.kernel, b;
  return rank_mod(stacked, P) == oracle.dimension();
}

GatheringGraph gathering_graph(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gathering_graph: n must be positive");
  GatheringGraph g;
  g.n = n;
  g.nodes.resize(n + 1);
  std::set<std::pair<Partition, Partition>> edges;
  for (std::size_t l = 1; l <= n; ++l) {
    g.nodes[l] = power_p_partitions(2, n, l);
    for (const auto& lambda : g.nodes[l]) {
      for (std::size_t i = 1; i < lambda.length(); ++i) {
        // Two parts sum to a power of two exactly when they are equal.
        if (lambda[i - 1] == lambda[i]) edges.emplace(lambda, gather(lambda, i, i + 1));
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool check_level_connectivity(const GatheringGraph& g, std::size_t l) {
  if (l < 2 || l >= g.nodes.size()) throw std::out_of_range("check_level_connectivity: level out of range");
  std::vector<Partition> members;
  for (auto level : {l, l - 1})
    for (const auto& node : g.nodes[level]) members.push_back(node);
  if (members.size() <= 1) return true;
  std::sort(members.begin(), members.end());
  auto index = [&](const Partition& x) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = members.size();
  for (const auto& [src, dst] : g.edges) {
    if (src.length() != l) continue;
    auto a = find(index(src)), b = find(index(dst));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

template QSeries theta_additive(const QSeries&, std::size_t, std::size_t);
template ModSeries theta_additive(const ModSeries&, std::size_t, std::size_t);
template QSeries theta_multiplicative(const QSeries&, std::size_t, std::size_t);
template ModSeries theta_multiplicative(const ModSeries&, std::size_t, std::size_t);
template QSeries delta2(const QSeries&, Target, std::size_t);
template ModSeries delta2(const ModSeries&, Target, std::size_t);
template QSeries permute_active(const QSeries&, const std::vector<std::size_t>&, std::size_t);
template ModSeries permute_active(const ModSeries&, const std::vector<std::size_t>&, std::size_t);
template CocycleCheck is_symmetric_cocycle(const QSeries&, Target, std::size_t);
template CocycleCheck is_symmetric_cocycle(const ModSeries&, Target, std::size_t);
template QSeries tau(const Partition&, std::size_t, CoefficientRing, unsigned);
template ModSeries tau(const Partition&, std::size_t, CoefficientRing, unsigned);

}  // namespace fgc
