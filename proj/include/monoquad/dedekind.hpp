#pragma once

/**
 * @file dedekind.hpp
 * @brief Dedekind's index criterion and the discriminant-driven monogenicity check.
 *
 * For monic f and prime p, factor f mod p = prod g_i^(a_i), lift each g_i
 * monically to Z and set M = (f - prod lifts^(a_i)) / p. Then p divides the
 * index [O_K : Z[theta]] iff some g_i with a_i >= 2 divides M mod p.
 *
 * Only primes with p^2 | disc(f) can divide the index, since
 * disc(f) = index^2 * disc(K).
 */

#include "int_poly.hpp"
#include "integer.hpp"
#include "mod_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monoquad {

enum class IndexMethod { Oracle, Lemma5, FastPath };

inline const char* to_string(IndexMethod m) {
  switch (m) {
    case IndexMethod::Oracle: return "oracle";
    case IndexMethod::Lemma5: return "lemma5";
    case IndexMethod::FastPath: return "fastpath";
  }
  return "?";
}

struct IndexWitness {
  ModPoly factor;  // irreducible over F_p, divides both f mod p and M mod p
  unsigned multiplicity;
  bool operator==(const IndexWitness&) const = default;
};

struct IndexVerdict {
  std::uint64_t p = 0;
  bool divides_index = false;
  std::optional<IndexWitness> witness;
  IndexMethod method = IndexMethod::Oracle;
  int fast_case = 0;  // 1..6 for the fast path, 0 otherwise
  std::string rule;   // which condition decided, e.g. "3(iii)"
  bool operator==(const IndexVerdict&) const = default;
};

enum class LiftConvention { Canonical, Symmetric };

/// M(x) = (f - prod lifts^mult) / p for a factorization of f mod p; asserts exactness.
inline IntPoly dedekind_remainder(const IntPoly& f, const FpFactorization& fac,
                                  LiftConvention lifts = LiftConvention::Canonical) {
  IntPoly prod = IntPoly::constant(1);
  for (const auto& [g, m] : fac.factors)
    prod = prod * pow(IntPoly::lift(g, lifts == LiftConvention::Symmetric), m);
  const IntPoly diff = f - prod;
  const Integer p = from_u64(fac.p);
  for (const auto& v : diff.coeffs())
    require_invariant(mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0,
                      "dedekind: f - prod(lifts) is not divisible by p");
  return diff.divexact(p);
}

/// Does p divide [O_K : Z[theta]]? Irreducibility of f is the caller's responsibility.
inline IndexVerdict dedekind_test(const IntPoly& f, std::uint64_t p,
                                  LiftConvention lifts = LiftConvention::Canonical,
                                  std::uint64_t seed = kDefaultSeed) {
  if (!f.is_monic() || f.degree() < 2)
    throw DomainError("dedekind_test: need a monic polynomial of degree >= 2");
  if (!is_prime(p)) throw DomainError("dedekind_test: p must be prime");
  IndexVerdict out;
  out.p = p;
  out.method = IndexMethod::Oracle;
  out.rule = "dedekind";
  const FpFactorization fac = fp_factor(f.reduce_mod(p), seed);
  if (fac.squarefree()) return out;
  const ModPoly m_bar = dedekind_remainder(f, fac, lifts).reduce_mod(p);
  for (const auto& [g, mult] : fac.factors) {
    if (mult < 2) continue;
    if (divides(g, m_bar)) {
      out.divides_index = true;
      out.witness = IndexWitness{g, mult};
      break;
    }
  }
  return out;
}

/// Shortcut when p divides every non-leading coefficient: p | index iff p^2 | f(0).
inline IndexVerdict lemma5_test(const IntPoly& f, std::uint64_t p) {
  if (!f.is_monic() || f.degree() < 2)
    throw DomainError("lemma5_test: need a monic polynomial of degree >= 2");
  for (long i = 0; i < f.degree(); ++i)
    if (residue(f.coeffs()[static_cast<std::size_t>(i)], p) != 0)
      throw DomainError("lemma5_test: p must divide every coefficient below the leading one");
  IndexVerdict out;
  out.p = p;
  out.method = IndexMethod::Lemma5;
  out.rule = "lemma5";
  const Integer p2 = from_u64(p) * from_u64(p);
  if (mpz_divisible_p(f[0].get_mpz_t(), p2.get_mpz_t())) {
    out.divides_index = true;
    out.witness = IndexWitness{ModPoly::monomial(p, 1), static_cast<unsigned>(f.degree())};
  }
  return out;
}

struct CandidatePrimes {
  std::vector<std::uint64_t> primes;  // exponent >= 2 in the known part, ascending
  std::vector<Integer> oversized;     // primes with exponent >= 2 that exceed 2^63
  bool cofactor_unfactored = false;
};

/// Primes that can divide the index: those with exponent >= 2 in disc(f).
inline CandidatePrimes index_divisor_primes(const FactoredInteger& disc) {
  CandidatePrimes out;
  for (const auto& [p, e] : disc.factors) {
    if (e < 2) continue;
    if (fits_u64(p) && to_u64(p) < (std::uint64_t{1} << 63))
      out.primes.push_back(to_u64(p));
    else
      out.oversized.push_back(p);
  }
  out.cofactor_unfactored = !disc.complete();
  return out;
}

enum class VerdictKind { Monogenic, NotMonogenic, Inconclusive };

inline const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Monogenic: return "Monogenic";
    case VerdictKind::NotMonogenic: return "NotMonogenic";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::vector<std::uint64_t> witness_primes;  // NotMonogenic
  std::string reason;                         // Inconclusive
  bool operator==(const Verdict&) const = default;
};

struct MonogenicityReport {
  IntPoly polynomial;
  FactoredInteger discriminant;
  std::vector<IndexVerdict> per_prime;
  IrreducibilityCertificate irreducibility;
  Verdict verdict;
  bool operator==(const MonogenicityReport&) const = default;
};

struct OracleBudget {
  FactorBudget factoring;
  std::vector<std::uint64_t> irreducibility_primes = default_irreducibility_primes();
};

/**
 * Combine per-prime results into a verdict. Monogenic needs an irreducibility
 * certificate, a complete discriminant factorization and no index divisor.
 * A found index divisor yields NotMonogenic even if the factorization is
 * partial, provided f is certified irreducible.
 */
inline Verdict combine_verdict(const IrreducibilityCertificate& irr, const CandidatePrimes& cand,
                               const std::vector<IndexVerdict>& per_prime) {
  Verdict v;
  if (std::holds_alternative<Reducible>(irr)) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "polynomial is reducible over Q";
    return v;
  }
  if (std::holds_alternative<IrreducibilityUnknown>(irr)) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "irreducibility not certified";
    return v;
  }
  for (const auto& r : per_prime)
    if (r.divides_index) v.witness_primes.push_back(r.p);
  if (!v.witness_primes.empty()) {
    v.kind = VerdictKind::NotMonogenic;
    return v;
  }
  if (cand.cofactor_unfactored) {
    v.reason = "discriminant cofactor not factored";
  } else if (!cand.oversized.empty()) {
    v.reason = "candidate prime exceeds the 63-bit F_p kernel";
  } else {
    v.kind = VerdictKind::Monogenic;
  }
  return v;
}

inline MonogenicityReport monogenicity_oracle(const IntPoly& f, const OracleBudget& budget = {}) {
  if (!f.is_monic() || f.degree() < 2)
    throw DomainError("monogenicity_oracle: need a monic polynomial of degree >= 2");
  MonogenicityReport rep;
  rep.polynomial = f;
  const Integer d = discriminant(f);
  if (d == 0) throw DomainError("monogenicity_oracle: polynomial has a repeated root");
  rep.discriminant = factor(d, budget.factoring);
  rep.irreducibility =
      irreducibility_certificate(f, budget.irreducibility_primes, budget.factoring);
  const CandidatePrimes cand = index_divisor_primes(rep.discriminant);
  for (std::uint64_t p : cand.primes) {
    IndexVerdict v = dedekind_test(f, p, LiftConvention::Canonical, budget.factoring.seed);
    require_invariant(!v.divides_index || rep.discriminant.exponent_of(from_u64(p)) >= 2,
                      "dedekind: index divisor without p^2 | disc");
    rep.per_prime.push_back(std::move(v));
  }
  rep.verdict = combine_verdict(rep.irreducibility, cand, rep.per_prime);
  return rep;
}

}  // namespace monoquad
