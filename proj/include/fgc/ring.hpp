#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fgc {

enum class RingKind { Integers, Rationals, IntegersMod, PrimeField };

/// Tag selecting the exact coefficient arithmetic of a series.
/// Modular rings use moduli below 2^32 so products of residues fit in 64 bits.
struct CoefficientRing {
  RingKind kind = RingKind::Integers;
  std::uint64_t modulus = 0;

  static CoefficientRing integers() { return {RingKind::Integers, 0}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, 0}; }
  static CoefficientRing integers_mod(std::uint64_t m);
  static CoefficientRing prime_field(std::uint64_t p);

  bool modular() const { return kind == RingKind::IntegersMod || kind == RingKind::PrimeField; }

  /// "Z", "Q", "Z/9", "F3"
  std::string tag() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

CoefficientRing parse_ring(const std::string& tag);

bool is_prime(std::uint64_t n);

/// Canonical representative in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

template <class Scalar>
struct ScalarOps;

/// Integers and Rationals share mpq_class storage; Integers additionally keeps
/// every coefficient integral.
template <>
struct ScalarOps<mpq_class> {
  static bool accepts(const CoefficientRing& r) { return !r.modular(); }
  static mpq_class zero(const CoefficientRing&) { return 0; }
  static mpq_class from_int(long v, const CoefficientRing&) { return v; }
  static mpq_class from_mpz(const mpz_class& v, const CoefficientRing&) { return mpq_class(v); }
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  static bool is_one(const mpq_class& a) { return a == 1; }
  static mpq_class add(const mpq_class& a, const mpq_class& b, const CoefficientRing&) { return a + b; }
  static mpq_class sub(const mpq_class& a, const mpq_class& b, const CoefficientRing&) { return a - b; }
  static mpq_class neg(const mpq_class& a, const CoefficientRing&) { return -a; }
  static mpq_class mul(const mpq_class& a, const mpq_class& b, const CoefficientRing&) { return a * b; }
  static bool is_unit(const mpq_class& a, const CoefficientRing& r);
  static mpq_class inverse(const mpq_class& a, const CoefficientRing& r);
  static bool valid(const mpq_class& a, const CoefficientRing& r);
  static std::string to_string(const mpq_class& a) { return a.get_str(); }
  static mpq_class parse(const std::string& text, const CoefficientRing& r);
};

template <>
struct ScalarOps<Residue> {
  static bool accepts(const CoefficientRing& r) { return r.modular(); }
  static Residue zero(const CoefficientRing&) { return {0}; }
  static Residue from_int(long v, const CoefficientRing& r);
  static Residue from_mpz(const mpz_class& v, const CoefficientRing& r);
  static bool is_zero(const Residue& a) { return a.value == 0; }
  static bool is_one(const Residue& a) { return a.value == 1; }
  static Residue add(Residue a, Residue b, const CoefficientRing& r) {
    auto s = a.value + b.value;
    return {s >= r.modulus ? s - r.modulus : s};
  }
  static Residue sub(Residue a, Residue b, const CoefficientRing& r) {
    return {a.value >= b.value ? a.value - b.value : a.value + r.modulus - b.value};
  }
  static Residue neg(Residue a, const CoefficientRing& r) { return {a.value ? r.modulus - a.value : 0}; }
  static Residue mul(Residue a, Residue b, const CoefficientRing& r) { return {a.value * b.value % r.modulus}; }
  static bool is_unit(Residue a, const CoefficientRing& r);
  static Residue inverse(Residue a, const CoefficientRing& r);
  static bool valid(Residue a, const CoefficientRing& r) { return a.value < r.modulus; }
  static std::string to_string(Residue a) { return std::to_string(a.value); }
  static Residue parse(const std::string& text, const CoefficientRing& r);
};

using Rational = mpq_class;

}  // namespace fgc
