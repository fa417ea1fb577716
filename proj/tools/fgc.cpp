#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgc/ringpres.hpp"
#include "fgc/selfcheck.hpp"
#include "fgc/series_io.hpp"
#include "fgc/spectral.hpp"
#include "fgc/weil.hpp"

using nlohmann::json;
using namespace fgc;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kComputation = 3 };

struct Report {
  json data;
  std::string text;
  bool verified = true;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// --trunc beats FGC_TRUNC, which beats the subcommand default.
unsigned resolve_trunc(const std::optional<unsigned>& flag, unsigned fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FGC_TRUNC")) {
    try {
      auto v = std::stoul(env);
      if (v > kMaxTrunc) throw Usage("FGC_TRUNC exceeds " + std::to_string(kMaxTrunc));
      return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
      throw Usage(std::string("FGC_TRUNC is not a number: ") + env);
    }
  }
  return fallback;
}

std::pair<std::uint64_t, std::size_t> parse_pair(const std::string& s, const char* flag) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Usage(std::string(flag) + " expects N,K");
  try {
    return {std::stoull(s.substr(0, comma)), std::stoull(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw Usage(std::string(flag) + " expects N,K");
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Usage("p = " + std::to_string(p) + " is not prime");
}

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

ModSeries load_mod_series(const std::string& path, std::uint64_t p) {
  auto text = read_input(path);
  auto first = text.find_first_not_of(" \t\r\n");
  AnySeries any = first != std::string::npos && text[first] == '{' ? series_from_json(json::parse(text))
                                                                      : parse_canonical_text(text);
  auto field = CoefficientRing::prime_field(p);
  if (auto* q = std::get_if<QSeries>(&any)) return reduce(*q, field);
  return reduce(std::get<ModSeries>(any), field);
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

json cocycle_json(const GatheredCocycle& c) {
  json terms = json::array();
  for (const auto& [mu, r] : c.terms) terms.push_back({{"tau", mu.parts()}, {"coeff", r.value}});
  return {{"root", c.root.parts()}, {"depth", c.depth}, {"k", c.k}, {"label", c.to_string()}, {"terms", terms}};
}

// ---- subcommands ----

Report cmd_phi(std::uint64_t n, std::uint64_t k, const std::vector<std::uint64_t>& primes) {
  if (n < 1 || k < 1 || k > n) throw Usage("phi needs 1 <= k <= n");
  Report r;
  auto value = phi(n, k);
  json vals = json::array();
  std::vector<std::string> lines{"phi(" + std::to_string(n) + "," + std::to_string(k) + ") = " + value.get_str()};
  for (auto p : primes) {
    require_prime(p);
    auto direct = nu(p, value);
    auto kummer = nu_phi_kummer(p, n, k);
    r.verified = r.verified && direct == kummer;
    vals.push_back({{"p", p}, {"nu", direct}, {"kummer", kummer}, {"agree", direct == kummer}});
    lines.push_back("nu_" + std::to_string(p) + " = " + std::to_string(direct) + " (Kummer " + std::to_string(kummer) +
                    ")");
  }
  r.data = {{"n", n}, {"k", k}, {"phi", value.get_str()}, {"valuations", vals}};
  r.text = join_lines(lines);
  return r;
}

Report cmd_zeta(std::uint64_t n, std::size_t k, const std::string& ring_tag, std::optional<unsigned> trunc_flag) {
  if (n < 1 || k < 1) throw Usage("zeta needs n, k >= 1");
  auto ring = parse_ring(ring_tag);
  auto trunc = resolve_trunc(trunc_flag, static_cast<unsigned>(n));
  Report r;
  auto z = zeta(n, k);
  auto fit = [&](auto s) { return trunc >= n ? s.as_polynomial(trunc) : s.truncated(trunc); };
  if (ring.modular()) {
    auto m = fit(reduce(z, ring));
    r.text = to_text(m) + "\n";
    r.data = to_json(m);
  } else {
    auto q = fit(change_ring(z, ring));
    r.text = to_text(q) + "\n";
    r.data = to_json(q);
  }
  r.data["n"] = n;
  r.data["k"] = k;
  return r;
}

Report cmd_basis(std::uint64_t p, std::uint64_t n, std::size_t k) {
  require_prime(p);
  Report r;
  auto basis = additive_basis(p, n, k);
  json items = json::array();
  std::vector<std::string> lines{"dimension " + std::to_string(basis.size())};
  for (const auto& b : basis) {
    items.push_back(cocycle_json(b));
    lines.push_back(b.root.to_string() + " depth " + std::to_string(b.depth) + ": " + b.to_string());
  }
  r.data = {{"p", p}, {"n", n}, {"k", k}, {"dimension", basis.size()}, {"cocycles", items}};
  r.text = join_lines(lines);
  return r;
}

Report cmd_oracle(std::uint64_t p, std::uint64_t n, std::size_t k) {
  require_prime(p);
  Report r;
  auto oracle = brute_force_cocycle_space(p, n, k);
  auto basis = additive_basis(p, n, k);
  bool spans = basis.size() == oracle.dimension() && spans_oracle_kernel(oracle, basis);
  r.verified = spans;
  json coords = json::array(), kernel = json::array();
  for (const auto& mu : oracle.coordinates) coords.push_back(mu.parts());
  for (Eigen::Index i = 0; i < oracle.kernel.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < oracle.kernel.cols(); ++j) row.push_back(oracle.kernel(i, j));
    kernel.push_back(row);
  }
  r.data = {{"p", p},           {"n", n},           {"k", k},
            {"dimension", oracle.dimension()},       {"basis_dimension", basis.size()},
            {"spans", spans},   {"coordinates", coords}, {"kernel", kernel}};
  std::vector<std::string> lines{"oracle dimension " + std::to_string(oracle.dimension()),
                                 "basis dimension " + std::to_string(basis.size()),
                                 std::string("span equality ") + (spans ? "holds" : "FAILS")};
  for (std::size_t i = 0; i < oracle.dimension(); ++i) lines.push_back("  " + to_text(oracle.basis_element(i)));
  r.text = join_lines(lines);
  return r;
}

Report cmd_graph(std::uint64_t n, std::optional<std::size_t> level) {
  if (n < 1) throw Usage("graph needs n >= 1");
  Report r;
  auto g = gathering_graph(n);
  json nodes = json::object(), edges = json::array(), levels = json::array();
  for (std::size_t l = 1; l < g.nodes.size(); ++l) {
    if (g.nodes[l].empty()) continue;
    json list = json::array();
    for (const auto& x : g.nodes[l]) list.push_back(x.parts());
    nodes[std::to_string(l)] = list;
  }
  for (const auto& [a, b] : g.edges) edges.push_back({a.parts(), b.parts()});
  std::vector<std::string> lines;
  for (std::size_t l = 2; l < g.nodes.size(); ++l) {
    if (level && *level != l) continue;
    bool ok = check_level_connectivity(g, l);
    r.verified = r.verified && ok;
    levels.push_back({{"l", l}, {"connected", ok}});
    lines.push_back("levels " + std::to_string(l) + "/" + std::to_string(l - 1) + ": " +
                    (ok ? "connected" : "DISCONNECTED"));
  }
  if (level && (*level < 2 || *level >= g.nodes.size())) throw Usage("level out of range");
  r.data = {{"n", n}, {"nodes", nodes}, {"edges", edges}, {"levels", levels}};
  r.text = join_lines(lines);
  return r;
}

Report cmd_e1page(const std::string& ring_tag, std::optional<std::uint64_t> p, unsigned smax, unsigned tmax) {
  CoefficientRing ring;
  if (p) {
    require_prime(*p);
    ring = CoefficientRing::prime_field(*p);
  } else {
    ring = parse_ring(ring_tag);
    if (ring.kind != RingKind::Rationals && ring.kind != RingKind::PrimeField)
      throw Usage("e1page needs Q or a prime field");
  }
  if (smax < 1 || tmax < 1) throw Usage("e1page bounds must be at least 1");
  Report r;
  auto page = e1_page(ring, smax, tmax);
  r.data = page.to_json();
  r.text = page.to_table();
  return r;
}

Report cmd_differential(const std::string& kind, unsigned i, unsigned j, std::uint64_t p) {
  DifferentialCheck check;
  if (kind == "f2")
    check = differential_F2(i, j);
  else if (kind == "anext")
    check = differential_a_next(i);
  else if (kind == "odd")
    check = differential_odd(p, i, j);
  else
    throw Usage("unknown differential kind " + kind);
  static const std::vector<std::string> cwxy{"c", "w", "x", "y"}, cxy{"c", "x", "y"};
  const auto* names = check.computed.nvars() == 4 ? &cwxy : &cxy;
  Report r;
  r.verified = check.match;
  r.data = {{"kind", kind},
            {"i", i},
            {"j", j},
            {"p", kind == "odd" ? p : 2},
            {"match", check.match},
            {"computed", to_text(check.computed, names)},
            {"expected", to_text(check.expected, names)}};
  r.text = "computed: " + to_text(check.computed, names) + "\nexpected: " + to_text(check.expected, names) +
           "\nverdict: " + (check.match ? "match" : "MISMATCH") + "\n";
  return r;
}

struct SeriesSource {
  std::string input;
  std::string zeta;
  std::string ah;
  std::optional<unsigned> trunc;
};

struct LoadedSeries {
  ModSeries u;
  std::size_t passive = 0;
  std::string label;
};

LoadedSeries load_source(const SeriesSource& src, std::uint64_t p, std::optional<std::size_t> passive) {
  int given = !src.input.empty() + !src.zeta.empty() + !src.ah.empty();
  if (given != 1) throw Usage("give exactly one of --input, --zeta, --ah");
  LoadedSeries out;
  if (!src.input.empty()) {
    out.u = load_mod_series(src.input, p);
    out.passive = passive.value_or(0);
    out.label = src.input;
  } else if (!src.zeta.empty()) {
    auto [n, k] = parse_pair(src.zeta, "--zeta");
    out.u = zeta(n, k, CoefficientRing::prime_field(p));
    out.passive = 0;
    out.label = "zeta(" + src.zeta + ")";
  } else {
    auto [n, k] = parse_pair(src.ah, "--ah");
    auto ah = ah_extension(p, n, k, resolve_trunc(src.trunc, static_cast<unsigned>(3 * n)));
    if (!ah.integral())
      throw std::domain_error("Artin-Hasse extension is not " + std::to_string(p) + "-integral at " +
                              monomial_to_string(*ah.non_integral, k + 1));
    out.u = *ah.series;
    out.passive = 1;
    out.label = "ah(" + src.ah + ")";
  }
  return out;
}

Report cmd_weil(std::uint64_t p, const SeriesSource& src, std::string mode, std::optional<std::size_t> passive) {
  require_prime(p);
  auto loaded = load_source(src, p, passive);
  if (mode.empty()) mode = src.ah.empty() ? "additive" : "multiplicative";
  const auto& u = loaded.u;
  Report r;
  ModSeries e;
  json checks = json::object();
  if (mode == "additive") {
    e = half_weil_additive(u, p, loaded.passive);
    bool ok = delta1(e, Target::Additive, 1, loaded.passive).is_zero();
    checks["delta1_vanishes"] = ok;
    r.verified = ok;
  } else if (mode == "multiplicative") {
    e = half_weil_multiplicative(u, p, loaded.passive);
    bool ok = delta1(e, Target::Multiplicative, 1, loaded.passive) == pow(u, static_cast<unsigned>(p));
    checks["delta1_equals_u_to_p"] = ok;
    r.verified = ok;
  } else if (mode == "classical") {
    e = classical_weil(u, p, loaded.passive);
  } else {
    throw Usage("unknown weil mode " + mode);
  }
  r.data = {{"p", p}, {"mode", mode}, {"source", loaded.label}, {"passive", loaded.passive},
            {"form", to_json(e)}, {"checks", checks}};
  r.text = "half-Weil (" + mode + ") of " + loaded.label + ":\n" + to_text(e) + "\n";
  for (auto& [name, ok] : checks.items()) r.text += name + ": " + (ok.get<bool>() ? "yes" : "NO") + "\n";
  return r;
}

json verdict_json(const ObstructionVerdict& v) {
  json entries = json::array();
  for (const auto& e : v.decomposition.entries) entries.push_back({{"n", e.n}, {"m", e.m}, {"I", e.I}, {"r", e.r.value}});
  json out = {{"status", v.obstructed ? "obstructed" : "unobstructed"},
              {"tested_degree", v.tested_degree},
              {"decomposition", entries}};
  if (v.witness)
    out["witness"] = {{"n", v.witness->n},
                      {"m", v.witness->m},
                      {"I", v.witness->I},
                      {"r_nm", v.witness->r_nm.value},
                      {"r_mn", v.witness->r_mn.value}};
  return out;
}

std::string verdict_text(const std::string& label, const ObstructionVerdict& v) {
  std::string s = label + ": " + (v.obstructed ? "obstructed" : "unobstructed");
  if (v.witness) {
    const auto& w = *v.witness;
    std::string idx;
    for (auto i : w.I) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    s += " (r_{" + std::to_string(w.n) + "," + std::to_string(w.m) + ",(" + idx + ")} = " + std::to_string(w.r_nm.value) +
         " but r_{" + std::to_string(w.m) + "," + std::to_string(w.n) + ",(" + idx + ")} = " +
         std::to_string(w.r_mn.value) + ")";
  }
  return s;
}

Report cmd_obstruct(std::uint64_t p, const SeriesSource& src, const std::string& basis) {
  require_prime(p);
  Report r;
  json results = json::array();
  std::vector<std::string> lines;
  auto run = [&](const std::string& label, const ModSeries& u) {
    auto v = obstruction_test(u, p);
    auto j = verdict_json(v);
    j["label"] = label;
    results.push_back(j);
    lines.push_back(verdict_text(label, v));
  };
  if (!basis.empty()) {
    if (!src.input.empty() || !src.zeta.empty() || !src.ah.empty()) throw Usage("--basis excludes other sources");
    auto [n, k] = parse_pair(basis, "--basis");
    for (const auto& b : additive_basis(p, n, k)) run(b.to_string(), b.expand());
  } else {
    auto loaded = load_source(src, p, 0);
    if (loaded.passive) throw Usage("obstruct takes an additive cocycle without passive variables");
    run(loaded.label, loaded.u);
  }
  r.data = {{"p", p}, {"results", results}};
  r.text = join_lines(lines);
  return r;
}

Report cmd_ahext(std::uint64_t p, std::uint64_t n, std::size_t k, std::optional<unsigned> trunc_flag, bool series) {
  require_prime(p);
  if (n < 1 || k < 1) throw Usage("ahext needs n, k >= 1");
  auto trunc = resolve_trunc(trunc_flag, static_cast<unsigned>(3 * n));
  auto ah = ah_extension(p, n, k, trunc);
  bool admissible = ah.nu <= nu(p, n);
  bool cocycle = false, linear = false;
  if (ah.series) {
    cocycle = k < 2 || is_symmetric_cocycle(*ah.series, Target::Multiplicative, 1).ok;
    linear = linear_part_is_zeta(*ah.series, p, n, k);
  }
  Report r;
  r.verified = ah.integral() && cocycle && linear;
  r.data = {{"p", p},
            {"n", n},
            {"k", k},
            {"trunc", trunc},
            {"nu_phi", ah.nu},
            {"nu_n", nu(p, n)},
            {"omega", ah.omega},
            {"admissible", admissible},
            {"strict_hypothesis", ah.strict_hypothesis()},
            {"integral", ah.integral()},
            {"cocycle", cocycle},
            {"linear_part_is_zeta", linear}};
  if (ah.non_integral) r.data["non_integral_at"] = monomial_to_string(*ah.non_integral, k + 1);
  if (series && ah.series) r.data["series"] = to_json(*ah.series);
  std::ostringstream t;
  t << "Artin-Hasse extension p=" << p << " n=" << n << " k=" << k << " trunc=" << trunc << "\n"
    << "nu_p phi = " << ah.nu << ", nu_p n = " << nu(p, n) << ", omega = " << ah.omega << "\n"
    << "admissible: " << (admissible ? "yes" : "no") << "\n"
    << "p-integral: " << (ah.integral() ? "yes" : "no (at " + monomial_to_string(*ah.non_integral, k + 1) + ")")
    << "\n"
    << "multiplicative cocycle: " << (cocycle ? "yes" : "no") << "\n"
    << "c-linear part is zeta: " << (linear ? "yes" : "no") << "\n";
  if (series && ah.series) {
    std::vector<std::string> names{"c"};
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    t << to_text(*ah.series, &names) << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_generators(std::size_t k, std::uint64_t n_max, const std::string& ring, bool additive,
                      const std::vector<std::uint64_t>& primes) {
  if (k < 2) throw Usage("generators needs k >= 2");
  Report r;
  if (additive) {
    auto pres = additive_presentation(k, n_max, primes);
    r.data = pres.to_json();
    r.text = pres.to_text();
  } else {
    auto pres = present_ring(k, n_max, parse_presentation_ring(ring));
    r.data = pres.to_json();
    r.text = pres.to_text();
  }
  return r;
}

Report cmd_strata(std::uint64_t p, std::uint64_t n, std::size_t kmin, std::size_t kmax) {
  require_prime(p);
  if (kmin < 2 || kmin > kmax) throw Usage("strata needs 2 <= kmin <= kmax");
  auto d = strata_diagram(p, n, kmin, kmax);
  return {d.to_json(), d.to_text(), true};
}

Report cmd_selfcheck() {
  Report r;
  auto items = run_selfcheck();
  std::vector<std::string> lines;
  for (const auto& i : items) {
    r.verified = r.verified && i.ok;
    lines.push_back((i.ok ? "PASS " : "FAIL ") + i.name + (i.ok ? "" : ": " + i.detail));
  }
  r.data = {{"ok", r.verified}, {"checks", to_json(items)}};
  r.text = join_lines(lines);
  return r;
}

void emit_error(const std::string& kind, const std::string& message) {
  json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric 2-cocycles of formal groups: construction, classification and obstruction tests"};
  app.require_subcommand(1);
  std::string format = "text", output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", output, "Write the report here instead of standard output");

  std::uint64_t p = 2, n = 0;
  std::size_t k = 0, kmin = 2, kmax = 6;
  std::optional<unsigned> trunc;
  std::optional<std::uint64_t> p_opt;
  std::optional<std::size_t> level, passive;
  std::string ring = "Z", kind, mode, basis, pres_ring = "F2";
  std::vector<std::uint64_t> primes{2, 3, 5};
  unsigned smax = 6, tmax = 8, i = 0, j = 1;
  bool additive = false, emit_series = false;
  SeriesSource src;

  auto* phi_cmd = app.add_subcommand("phi", "phi(n,k) and its p-adic valuations");
  phi_cmd->add_option("--n", n)->required();
  phi_cmd->add_option("--k", k)->required();
  phi_cmd->add_option("--primes", primes)->delimiter(',');

  auto* zeta_cmd = app.add_subcommand("zeta", "The cocycle zeta_{n,k}");
  zeta_cmd->add_option("--n", n)->required();
  zeta_cmd->add_option("--k", k)->required();
  zeta_cmd->add_option("--ring", ring, "Z, Q, Z/m or Fp");
  zeta_cmd->add_option("--trunc", trunc);

  auto* basis_cmd = app.add_subcommand("basis", "Gathering basis of additive cocycles over F_p");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cocycle space and span comparison");
  for (auto* c : {basis_cmd, oracle_cmd}) {
    c->add_option("--p", p)->required();
    c->add_option("--n", n)->required();
    c->add_option("--k", k)->required();
  }

  auto* graph_cmd = app.add_subcommand("graph", "Gathering graph of power-of-2 partitions");
  graph_cmd->add_option("--n", n)->required();
  graph_cmd->add_option("--level", level, "Check only levels l and l-1");

  auto* e1_cmd = app.add_subcommand("e1page", "E1 page of the tangent spectral sequence");
  e1_cmd->add_option("--p", p_opt);
  e1_cmd->add_option("--ring", ring, "F2, F3, ... or Q");
  e1_cmd->add_option("--smax", smax);
  e1_cmd->add_option("--tmax", tmax);

  auto* diff_cmd = app.add_subcommand("differential", "Check a differential formula by expansion");
  diff_cmd->add_option("--kind", kind, "f2, anext or odd")->required()->check(CLI::IsMember({"f2", "anext", "odd"}));
  diff_cmd->add_option("--i", i);
  diff_cmd->add_option("--j", j);
  diff_cmd->add_option("--p", p, "Prime for --kind odd")->default_val(3);

  auto* weil_cmd = app.add_subcommand("weil", "Half-Weil forms");
  auto* obstruct_cmd = app.add_subcommand("obstruct", "Power-pair obstruction test");
  for (auto* c : {weil_cmd, obstruct_cmd}) {
    c->add_option("--p", p)->required();
    c->add_option("--input", src.input, "Series file (canonical text or JSON), - for stdin");
    c->add_option("--zeta", src.zeta, "Use zeta(N,K) mod p");
    c->add_option("--ah", src.ah, "Use the Artin-Hasse extension of zeta(N,K)");
    c->add_option("--trunc", src.trunc);
  }
  weil_cmd->add_option("--mode", mode)->check(CLI::IsMember({"additive", "multiplicative", "classical"}));
  weil_cmd->add_option("--passive", passive, "Leading variables carried along");
  obstruct_cmd->add_option("--basis", basis, "Test every basis cocycle of degree N in K variables");

  auto* ah_cmd = app.add_subcommand("ahext", "Artin-Hasse multiplicative extension of zeta");
  ah_cmd->add_option("--p", p)->required();
  ah_cmd->add_option("--n", n)->required();
  ah_cmd->add_option("--k", k)->required();
  ah_cmd->add_option("--trunc", trunc);
  ah_cmd->add_flag("--series", emit_series, "Include the reduced series");

  auto* gen_cmd = app.add_subcommand("generators", "Ring presentation generators");
  gen_cmd->add_option("--k", k)->required();
  gen_cmd->add_option("--nmax", n)->required();
  gen_cmd->add_option("--ring", pres_ring, "F2 or Z2loc")->check(CLI::IsMember({"F2", "Z2loc"}));
  gen_cmd->add_flag("--additive", additive, "Additive presentation over Z with p-torsion");
  gen_cmd->add_option("--primes", primes)->delimiter(',');

  auto* strata_cmd = app.add_subcommand("strata", "Strata diagram of basis cocycles");
  strata_cmd->add_option("--p", p)->required();
  strata_cmd->add_option("--n", n)->required();
  strata_cmd->add_option("--kmin", kmin);
  strata_cmd->add_option("--kmax", kmax);

  auto* self_cmd = app.add_subcommand("selfcheck", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report report;
  try {
    if (phi_cmd->parsed())
      report = cmd_phi(n, k, primes);
    else if (zeta_cmd->parsed())
      report = cmd_zeta(n, k, ring, trunc);
    else if (basis_cmd->parsed())
      report = cmd_basis(p, n, k);
    else if (oracle_cmd->parsed())
      report = cmd_oracle(p, n, k);
    else if (graph_cmd->parsed())
      report = cmd_graph(n, level);
    else if (e1_cmd->parsed())
      report = cmd_e1page(ring == "Z" ? "F2" : ring, p_opt, smax, tmax);
    else if (diff_cmd->parsed())
      report = cmd_differential(kind, i, j, p);
    else if (weil_cmd->parsed())
      report = cmd_weil(p, src, mode, passive);
    else if (obstruct_cmd->parsed())
      report = cmd_obstruct(p, src, basis);
    else if (ah_cmd->parsed())
      report = cmd_ahext(p, n, k, trunc, emit_series);
    else if (gen_cmd->parsed())
      report = cmd_generators(k, n, pres_ring, additive, primes);
    else if (strata_cmd->parsed())
      report = cmd_strata(p, n, kmin, kmax);
    else if (self_cmd->parsed())
      report = cmd_selfcheck();
  } catch (const Usage& e) {
    emit_error("usage", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    emit_error("invalid_argument", e.what());
    return kUsage;
  } catch (const std::out_of_range& e) {
    emit_error("out_of_range", e.what());
    return kComputation;
  } catch (const DecompositionError& e) {
    emit_error("decomposition", e.what());
    return kComputation;
  } catch (const HypothesisError& e) {
    emit_error("hypothesis", e.what());
    return kComputation;
  } catch (const std::exception& e) {
    emit_error("computation", e.what());
    return kComputation;
  }

  const std::string body = format == "json" ? report.data.dump(2) + "\n" : report.text;
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(output);
    if (!out) {
      emit_error("usage", "cannot write " + output);
      return kUsage;
    }
    out << body;
  }
  return report.verified ? kOk : kVerificationFailed;
}
