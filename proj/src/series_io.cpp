#include "fgc/series_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fgc {

namespace {

std::string coefficient_text(const Rational& c, bool& negative) {
  negative = sgn(c) < 0;
  mpq_class mag = abs(c);
  return mag.get_str();
}

std::string coefficient_text(const Residue& c, bool& negative) {
  negative = false;
  return std::to_string(c.value);
}

bool is_unit_magnitude(const std::string& s) { return s == "1"; }

}  // namespace

template <class S>
std::string to_text(const Series<S>& a, const std::vector<std::string>* names) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    bool negative = false;
    auto mag = coefficient_text(c, negative);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit_monomial = m == Monomial{};
    if (unit_monomial) {
      out += mag;
    } else {
      if (!is_unit_magnitude(mag)) out += mag + "*";
      out += monomial_to_string(m, a.nvars(), names);
    }
  }
  return out;
}

template <class S>
std::string to_canonical_text(const Series<S>& a) {
  std::ostringstream os;
  os << "series ring=" << a.ring().tag() << " nvars=" << a.nvars() << " trunc=" << a.trunc() << "\n"
     << to_text(a) << "\n";
  return os.str();
}

namespace {

class BodyParser {
 public:
  BodyParser(const std::string& text, std::size_t nvars, const std::vector<std::string>* names)
      : s_(text), nvars_(nvars), names_(names) {}

  struct RawTerm {
    bool negative = false;
    std::string coeff = "1";
    std::vector<unsigned> exps;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    if (pos_ == s_.size()) throw error("empty series body");
    bool first = true;
    while (pos_ < s_.size()) {
      RawTerm t;
      t.exps.assign(nvars_, 0);
      if (peek() == '+' || peek() == '-') {
        t.negative = get() == '-';
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      parse_term(t);
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("series parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  void parse_term(RawTerm& t) {
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = digits();
      if (peek() == '/') {
        get();
        auto den = digits();
        if (den.empty()) throw error("missing denominator");
        t.coeff += "/" + den;
      }
      have_factor = true;
      skip();
      if (peek() != '*') return;
      get();
      skip();
    }
    while (true) {
      parse_variable(t);
      have_factor = true;
      skip();
      if (peek() != '*') break;
      get();
      skip();
    }
    if (!have_factor) throw error("empty term");
  }

  void parse_variable(RawTerm& t) {
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
    if (name.empty()) throw error("expected a variable");
    std::size_t slot = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto expected = names_ ? (*names_)[i] : "x" + std::to_string(i + 1);
      if (name == expected) slot = i;
    }
    if (slot == nvars_) throw error("unknown variable '" + name + "'");
    unsigned e = 1;
    if (peek() == '^') {
      get();
      auto d = digits();
      if (d.empty()) throw error("missing exponent");
      e = static_cast<unsigned>(std::stoul(d));
    }
    t.exps[slot] += e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  const std::vector<std::string>* names_;
};

template <class S>
Series<S> build(const std::vector<BodyParser::RawTerm>& raw, CoefficientRing ring, std::size_t nvars,
                unsigned trunc) {
  using Ops = ScalarOps<S>;
  std::vector<typename Series<S>::Term> terms;
  for (const auto& t : raw) {
    auto c = Ops::parse(t.coeff, ring);
    if (t.negative) c = Ops::neg(c, ring);
    Monomial m(t.exps);
    if (m.degree() > trunc)
      throw std::invalid_argument("term " + monomial_to_string(m, nvars) + " exceeds trunc " + std::to_string(trunc));
    terms.emplace_back(m, c);
  }
  return Series<S>::from_terms(ring, nvars, trunc, std::move(terms));
}

}  // namespace

AnySeries parse_series_body(const std::string& body, CoefficientRing ring, std::size_t nvars, unsigned trunc,
                            const std::vector<std::string>* names) {
  std::vector<BodyParser::RawTerm> raw;
  auto first = body.find_first_not_of(" \t\r\n");
  auto last = body.find_last_not_of(" \t\r\n");
  auto trimmed = first == std::string::npos ? std::string() : body.substr(first, last - first + 1);
  if (trimmed != "0") raw = BodyParser(trimmed, nvars, names).parse();
  if (ring.modular()) return build<Residue>(raw, ring, nvars, trunc);
  return build<Rational>(raw, ring, nvars, trunc);
}

AnySeries parse_canonical_text(const std::string& text) {
  auto newline = text.find('\n');
  auto header = text.substr(0, newline);
  auto body = newline == std::string::npos ? std::string() : text.substr(newline + 1);
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "series") throw std::invalid_argument("missing 'series' header");
  std::string ring_tag;
  long nvars = -1, trunc = -1;
  while (hs >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad header field: " + word);
    auto key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "ring") ring_tag = value;
    else if (key == "nvars") nvars = std::stol(value);
    else if (key == "trunc") trunc = std::stol(value);
    else throw std::invalid_argument("unknown header field: " + key);
  }
  if (ring_tag.empty() || nvars < 0 || trunc < 0) throw std::invalid_argument("incomplete series header");
  return parse_series_body(body, parse_ring(ring_tag), static_cast<std::size_t>(nvars),
                           static_cast<unsigned>(trunc));
}

template <class S>
nlohmann::json to_json(const Series<S>& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back({{"exps", m.exponents(a.nvars())}, {"coeff", ScalarOps<S>::to_string(c)}});
  return {{"ring", a.ring().tag()}, {"nvars", a.nvars()}, {"trunc", a.trunc()}, {"terms", terms}};
}

namespace {

template <class S>
Series<S> terms_from_json(const nlohmann::json& j, CoefficientRing ring, std::size_t nvars, unsigned trunc) {
  std::vector<typename Series<S>::Term> terms;
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<unsigned>>();
    if (exps.size() != nvars) throw std::invalid_argument("term arity does not match nvars");
    Monomial m(exps);
    if (m.degree() > trunc) throw std::invalid_argument("term exceeds trunc");
    auto c = ScalarOps<S>::parse(t.at("coeff").get<std::string>(), ring);
    terms.emplace_back(m, c);
  }
  return Series<S>::from_terms(ring, nvars, trunc, std::move(terms));
}

}  // namespace

AnySeries series_from_json(const nlohmann::json& j) {
  auto ring = parse_ring(j.at("ring").get<std::string>());
  auto nvars = j.at("nvars").get<std::size_t>();
  auto trunc = j.at("trunc").get<unsigned>();
  if (ring.modular()) return terms_from_json<Residue>(j, ring, nvars, trunc);
  return terms_from_json<Rational>(j, ring, nvars, trunc);
}

std::string any_to_canonical_text(const AnySeries& a) {
  return std::visit([](const auto& s) { return to_canonical_text(s); }, a);
}

nlohmann::json any_to_json(const AnySeries& a) {
  return std::visit([](const auto& s) { return to_json(s); }, a);
}

template std::string to_text(const QSeries&, const std::vector<std::string>*);
template std::string to_text(const ModSeries&, const std::vector<std::string>*);
template std::string to_canonical_text(const QSeries&);
template std::string to_canonical_text(const ModSeries&);
template nlohmann::json to_json(const QSeries&);
template nlohmann::json to_json(const ModSeries&);

}  // namespace fgc
