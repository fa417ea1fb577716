#include "fgc/ring.hpp"

#include <cstdint>

namespace fgc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::integers_mod(std::uint64_t m) {
  if (m < 2 || m >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("modulus must lie in [2, 2^32)");
  return {RingKind::IntegersMod, m};
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("F" + std::to_string(p) + ": not a prime below 2^32");
  return {RingKind::PrimeField, p};
}

std::string CoefficientRing::tag() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + std::to_string(modulus);
    case RingKind::PrimeField: return "F" + std::to_string(modulus);
  }
  return "?";
}

namespace {

std::uint64_t parse_modulus(const std::string& digits, const std::string& tag) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("unknown ring tag: " + tag);
  return std::stoull(digits);
}

}  // namespace

CoefficientRing parse_ring(const std::string& tag) {
  if (tag == "Z") return CoefficientRing::integers();
  if (tag == "Q") return CoefficientRing::rationals();
  if (tag.rfind("Z/", 0) == 0) {
    auto m = parse_modulus(tag.substr(2), tag);
    // Z/p is the same ring as F_p; keep the tag the caller chose.
    return CoefficientRing::integers_mod(m);
  }
  if (tag.rfind("F", 0) == 0) return CoefficientRing::prime_field(parse_modulus(tag.substr(1), tag));
  throw std::invalid_argument("unknown ring tag: " + tag);
}

bool ScalarOps<mpq_class>::is_unit(const mpq_class& a, const CoefficientRing& r) {
  if (r.kind == RingKind::Rationals) return sgn(a) != 0;
  return a == 1 || a == -1;
}

mpq_class ScalarOps<mpq_class>::inverse(const mpq_class& a, const CoefficientRing& r) {
  if (!is_unit(a, r)) throw std::domain_error(a.get_str() + " is not a unit in " + r.tag());
  return 1 / a;
}

bool ScalarOps<mpq_class>::valid(const mpq_class& a, const CoefficientRing& r) {
  return r.kind == RingKind::Rationals || a.get_den() == 1;
}

mpq_class ScalarOps<mpq_class>::parse(const std::string& text, const CoefficientRing& r) {
  mpq_class value;
  if (value.set_str(text, 10) != 0) throw std::invalid_argument("bad coefficient: " + text);
  value.canonicalize();
  if (!valid(value, r)) throw std::invalid_argument("coefficient " + text + " not in " + r.tag());
  return value;
}

Residue ScalarOps<Residue>::from_int(long v, const CoefficientRing& r) {
  auto m = static_cast<long long>(r.modulus);
  auto rem = static_cast<long long>(v) % m;
  if (rem < 0) rem += m;
  return {static_cast<std::uint64_t>(rem)};
}

Residue ScalarOps<Residue>::from_mpz(const mpz_class& v, const CoefficientRing& r) {
  mpz_class rem;
  mpz_fdiv_r_ui(rem.get_mpz_t(), v.get_mpz_t(), r.modulus);
  return {rem.get_ui()};
}

bool ScalarOps<Residue>::is_unit(Residue a, const CoefficientRing& r) {
  mpz_class g;
  mpz_class av(static_cast<unsigned long>(a.value)), mv(static_cast<unsigned long>(r.modulus));
  mpz_gcd(g.get_mpz_t(), av.get_mpz_t(), mv.get_mpz_t());
  return g == 1;
}

Residue ScalarOps<Residue>::inverse(Residue a, const CoefficientRing& r) {
  mpz_class inv;
  mpz_class av(static_cast<unsigned long>(a.value)), mv(static_cast<unsigned long>(r.modulus));
  if (mpz_invert(inv.get_mpz_t(), av.get_mpz_t(), mv.get_mpz_t()) == 0)
    throw std::domain_error(std::to_string(a.value) + " is not a unit in " + r.tag());
  return {inv.get_ui()};
}

Residue ScalarOps<Residue>::parse(const std::string& text, const CoefficientRing& r) {
  mpz_class value;
  if (value.set_str(text, 10) != 0) throw std::invalid_argument("bad coefficient: " + text);
  return from_mpz(value, r);
}

}  // namespace fgc
