#pragma once

/**
 * @file quadrinomial.hpp
 * @brief The family f(x) = x^n + a x^3 + b x + c with a/(a-c) = k, n = 3k > 4
 *        and 2ab = 3ac - bc.
 *
 * The constraints force nc = (n-3)a = (n-1)b. Every prime falls into one of
 * six divisibility patterns of (a, b, c); each pattern has a closed-form test
 * deciding whether p divides the index of Z[theta]. Those tests are run next
 * to the general Dedekind criterion and the two are compared.
 *
 * Conditions written with fractional exponents such as (-c)^(3/n) are
 * multivalued. They are evaluated through the equivalent statement that the
 * reduced polynomial and the auxiliary cubic share no zero, i.e. as a gcd
 * in F_p[x].
 */

#include "dedekind.hpp"
#include "int_poly.hpp"
#include "integer.hpp"
#include "mod_poly.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace monoquad {

/// Input rejected by validate(); `condition` names the first violated hypothesis.
struct ValidationError : std::invalid_argument {
  std::string condition;
  ValidationError(std::string cond, const std::string& msg)
      : std::invalid_argument(msg), condition(std::move(cond)) {}
};

struct Quadrinomial {
  long n = 0;
  Integer a, b, c;
  long k = 0;

  IntPoly polynomial() const {
    std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1, Integer(0));
    coeffs[0] = c;
    coeffs[1] += b;
    coeffs[3] += a;
    coeffs[static_cast<std::size_t>(n)] = 1;
    return IntPoly(std::move(coeffs));
  }

  bool operator==(const Quadrinomial&) const = default;
};

inline Quadrinomial validate(long n, const Integer& a, const Integer& b, const Integer& c) {
  if (a == c) throw ValidationError("a != c", "a/(a-c) is undefined because a = c");
  const Integer diff = a - c;
  if (!mpz_divisible_p(a.get_mpz_t(), diff.get_mpz_t()))
    throw ValidationError("k integral", "k = a/(a-c) = " + a.get_str() + "/" + diff.get_str() +
                                            " is not an integer");
  const Integer kz = a / diff;
  if (kz < 1) throw ValidationError("k natural", "k = a/(a-c) = " + kz.get_str() + " is not positive");
  if (kz * 3 != n)
    throw ValidationError("n = 3k", "n = " + std::to_string(n) + " but 3k = " + Integer(kz * 3).get_str());
  if (n <= 4) throw ValidationError("n > 4", "n = " + std::to_string(n) + " must exceed 4");
  if (2 * a * b != 3 * a * c - b * c)
    throw ValidationError("2ab = 3ac - bc", "2ab = " + Integer(2 * a * b).get_str() +
                                                " but 3ac - bc = " + Integer(3 * a * c - b * c).get_str());
  if (c == 0) throw ValidationError("c != 0", "c = 0 makes x a factor of f");
  require_invariant(n * c == (n - 3) * a && (n - 3) * a == (n - 1) * b,
                    "validate: nc = (n-3)a = (n-1)b fails for an accepted member");
  return Quadrinomial{n, a, b, c, n / 3};
}

/// Family members (s * lcm(n, n-1, n-3)) / {n-3, n-1, n} for s in [s_lo, s_hi], s != 0.
inline std::vector<Quadrinomial> enumerate_family(long n, long s_lo, long s_hi) {
  if (n <= 4 || n % 3 != 0) throw DomainError("enumerate_family: need 3 | n and n > 4");
  if (s_lo > s_hi) throw DomainError("enumerate_family: malformed range (lo > hi)");
  const long l = std::lcm(std::lcm(n, n - 1), n - 3);
  std::vector<Quadrinomial> out;
  for (long s = s_lo; s <= s_hi; ++s) {
    if (s == 0) continue;
    const Integer big_n = Integer(s) * l;
    out.push_back(validate(n, big_n / (n - 3), big_n / (n - 1), big_n / n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prime classification
// ---------------------------------------------------------------------------

enum class CaseTag { Case1 = 1, Case2, Case3, Case4, Case5, Case6 };

inline std::string to_string(CaseTag t) { return "Case" + std::to_string(static_cast<int>(t)); }

/// p | a, p | b, p ∤ c. p^r || n, n = p^r m.
struct Case2Quantities {
  unsigned r;
  long m;
  Integer u0, u1, u2;
  bool operator==(const Case2Quantities&) const = default;
};

/// p | a, p ∤ b, p | c. p^s || n-1, n-1 = p^s m1.
struct Case3Quantities {
  unsigned s;
  long m1;
  Integer v0, v1, v2;
  bool operator==(const Case3Quantities&) const = default;
};

/// p ∤ a, p | b, p | c. p^t || n-3, n-3 = p^t m2.
struct Case4Quantities {
  unsigned t;
  long m2;
  Integer w0, w1, w2;
  bool operator==(const Case4Quantities&) const = default;
};

/// p = 3 | b, 3 ∤ ac, k = 3 k1 + R.
struct Case5Quantities {
  long k1;
  int R;
  bool operator==(const Case5Quantities&) const = default;
};

using CaseQuantities =
    std::variant<std::monostate, Case2Quantities, Case3Quantities, Case4Quantities, Case5Quantities>;

struct PrimeCase {
  CaseTag tag;
  CaseQuantities aux;
  bool operator==(const PrimeCase&) const = default;
};

namespace detail {

inline bool divisible(const Integer& x, std::uint64_t p) {
  return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

inline Integer exact_div(const Integer& x, std::uint64_t p, const char* what) {
  require_invariant(divisible(x, p), what);
  Integer out;
  mpz_divexact_ui(out.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return out;
}

/// (x + (-x)^(p^e)) / p
inline Integer frobenius_defect(const Integer& x, std::uint64_t p, unsigned e, const char* what) {
  Integer pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= from_u64(p);
  Integer neg = -x;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), neg.get_mpz_t(), static_cast<unsigned long>(pe.get_ui()));
  return exact_div(x + power, p, what);
}

inline std::pair<unsigned, long> split_valuation(long value, std::uint64_t p) {
  const auto [v, rest] = p_adic_valuation(Integer(value), from_u64(p));
  return {v, rest.get_si()};
}

}  // namespace detail

/**
 * Classify p against (a, b, c). Patterns that cannot occur for a valid member
 * (p | a alone, p | c alone, p | b alone with p != 3 or 9 | n) raise
 * InvariantViolation.
 */
inline PrimeCase classify_prime(const Quadrinomial& q, std::uint64_t p) {
  using detail::divisible;
  if (!is_prime(p)) throw DomainError("classify_prime: p must be prime");
  const bool pa = divisible(q.a, p), pb = divisible(q.b, p), pc = divisible(q.c, p);
  if (pa && pb && pc) return {CaseTag::Case1, std::monostate{}};
  if (pa && pb) {
    require_invariant(q.n % static_cast<long>(p) == 0, "Case2 without p | n");
    auto [r, m] = detail::split_valuation(q.n, p);
    return {CaseTag::Case2,
            Case2Quantities{r, m, detail::frobenius_defect(q.c, p, r, "Case2: u0 inexact"),
                            detail::exact_div(q.b, p, "Case2: u1 inexact"),
                            detail::exact_div(q.a, p, "Case2: u2 inexact")}};
  }
  if (pa && pc) {
    require_invariant((q.n - 1) % static_cast<long>(p) == 0, "Case3 without p | n-1");
    auto [s, m1] = detail::split_valuation(q.n - 1, p);
    return {CaseTag::Case3,
            Case3Quantities{s, m1, detail::exact_div(q.c, p, "Case3: v0 inexact"),
                            detail::frobenius_defect(q.b, p, s, "Case3: v1 inexact"),
                            detail::exact_div(q.a, p, "Case3: v2 inexact")}};
  }
  if (pb && pc) {
    require_invariant((q.n - 3) % static_cast<long>(p) == 0, "Case4 without p | n-3");
    auto [t, m2] = detail::split_valuation(q.n - 3, p);
    return {CaseTag::Case4,
            Case4Quantities{t, m2, detail::exact_div(q.c, p, "Case4: w0 inexact"),
                            detail::exact_div(q.b, p, "Case4: w1 inexact"),
                            detail::frobenius_defect(q.a, p, t, "Case4: w2 inexact")}};
  }
  if (pa) throw InvariantViolation("impossible pattern: p | a, p does not divide bc");
  if (pc) throw InvariantViolation("impossible pattern: p | c, p does not divide ab");
  if (pb) {
    require_invariant(p == 3, "Case5 with p != 3");
    require_invariant(q.n % 3 == 0 && q.n % 9 != 0, "Case5 without 3 || n");
    const int R = static_cast<int>(q.k % 3);
    require_invariant(R == 1 || R == 2, "Case5 with 3 | k");
    return {CaseTag::Case5, Case5Quantities{q.k / 3, R}};
  }
  require_invariant(p != 2 && p != 3, "Case6 with p in {2, 3}");
  return {CaseTag::Case6, std::monostate{}};
}

// ---------------------------------------------------------------------------
// Fast paths
// ---------------------------------------------------------------------------

namespace detail {

inline IndexVerdict fast_verdict(std::uint64_t p, int fast_case, std::string rule) {
  IndexVerdict v;
  v.p = p;
  v.method = IndexMethod::FastPath;
  v.fast_case = fast_case;
  v.rule = std::move(rule);
  return v;
}

inline std::uint64_t neg(std::uint64_t x, std::uint64_t p) { return sub_mod(0, x, p); }

/// x^m + constant over F_p.
inline ModPoly binomial(std::uint64_t p, long m, std::uint64_t constant) {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
  coeffs[0] = constant;
  coeffs[static_cast<std::size_t>(m)] = add_mod(coeffs[static_cast<std::size_t>(m)], 1, p);
  return ModPoly(p, std::move(coeffs));
}

/// t2 x^3 + t1 x + t0 over F_p.
inline ModPoly aux_cubic(std::uint64_t p, const Integer& t2, const Integer& t1, const Integer& t0) {
  return ModPoly(p, {residue(t0, p), residue(t1, p), 0, residue(t2, p)});
}

/// Do the binomial and the auxiliary polynomial share a zero over the algebraic closure?
inline bool share_zero(const ModPoly& binom, const ModPoly& aux) {
  return !fp_gcd(binom, aux).is_one();
}

/// First canonical irreducible factor of `binom` dividing `aux`, with the given multiplicity.
inline std::optional<IndexWitness> binomial_witness(const ModPoly& binom, const ModPoly& aux,
                                                    unsigned multiplicity, std::uint64_t seed) {
  for (const auto& [g, m] : fp_factor(binom, seed).factors)
    if (aux.is_zero() || divides(g, aux)) return IndexWitness{g, multiplicity};
  return std::nullopt;
}

inline unsigned prime_power(std::uint64_t p, unsigned e) {
  unsigned out = 1;
  for (unsigned i = 0; i < e; ++i) out *= static_cast<unsigned>(p);
  return out;
}

inline const Case2Quantities& case2(const PrimeCase& pc) {
  if (pc.tag != CaseTag::Case2) throw DomainError("fast path: prime is not in Case2");
  return std::get<Case2Quantities>(pc.aux);
}
inline const Case3Quantities& case3(const PrimeCase& pc) {
  if (pc.tag != CaseTag::Case3) throw DomainError("fast path: prime is not in Case3");
  return std::get<Case3Quantities>(pc.aux);
}
inline const Case4Quantities& case4(const PrimeCase& pc) {
  if (pc.tag != CaseTag::Case4) throw DomainError("fast path: prime is not in Case4");
  return std::get<Case4Quantities>(pc.aux);
}

}  // namespace detail

/// Case 1: p | index iff p^2 | c.
inline IndexVerdict fastpath_case1(const Quadrinomial& q, std::uint64_t p) {
  if (classify_prime(q, p).tag != CaseTag::Case1) throw DomainError("fastpath_case1: prime is not in Case1");
  IndexVerdict v = detail::fast_verdict(p, 1, "1");
  const Integer p2 = from_u64(p) * from_u64(p);
  if (mpz_divisible_p(q.c.get_mpz_t(), p2.get_mpz_t())) {
    v.divides_index = true;
    v.witness = IndexWitness{ModPoly::monomial(p, 1), static_cast<unsigned>(q.n)};
  }
  return v;
}

inline IndexVerdict fastpath_case2(const Quadrinomial& q, std::uint64_t p,
                                   std::uint64_t seed = kDefaultSeed) {
  using detail::neg;
  const PrimeCase pc = classify_prime(q, p);
  const Case2Quantities& cq = detail::case2(pc);
  require_invariant(q.n % static_cast<long>(p) == 0, "fastpath_case2: p does not divide n");
  const std::uint64_t u0 = residue(cq.u0, p), u1 = residue(cq.u1, p), u2 = residue(cq.u2, p);
  const std::uint64_t c = residue(q.c, p);
  const auto n = static_cast<std::uint64_t>(q.n);
  const int zeros = (u0 == 0) + (u1 == 0) + (u2 == 0);

  std::string rule;
  bool divides = false;
  if (zeros == 3) {
    rule = "2(all)";
    divides = true;
  } else if (zeros == 2) {
    rule = "2(i)";
  } else if (zeros == 1 && u2 == 0) {
    rule = "2(ii)";
    divides = add_mod(pow_mod(neg(u0, p), n, p), mul_mod(pow_mod(u1, n, p), c, p), p) == 0;
  } else if (zeros == 1 && u1 == 0) {
    rule = "2(iii)";
    divides = add_mod(mul_mod(c, pow_mod(u2, n / 3, p), p), pow_mod(neg(u0, p), n / 3, p), p) == 0;
  } else if (zeros == 1) {
    rule = "2(iv)";
    if (n % 2 == 0)
      divides = add_mod(mul_mod(c, pow_mod(u2, n / 2, p), p), pow_mod(neg(u1, p), n / 2, p), p) == 0;
    else
      divides = add_mod(mul_mod(mul_mod(c, c, p), pow_mod(u2, n, p), p), pow_mod(u1, n, p), p) == 0;
  } else {
    rule = "2(v)";
    divides = detail::share_zero(detail::binomial(p, cq.m, c),
                                 detail::aux_cubic(p, cq.u2, cq.u1, cq.u0));
  }

  IndexVerdict v = detail::fast_verdict(p, 2, rule);
  v.divides_index = divides;
  if (divides)
    v.witness = detail::binomial_witness(detail::binomial(p, cq.m, c),
                                         detail::aux_cubic(p, cq.u2, cq.u1, cq.u0),
                                         detail::prime_power(p, cq.r), seed);
  return v;
}

/**
 * Case 3 as the closed-form conditions state it. In particular p^2 | c
 * (v0 = 0 mod p) is reported as an index divisor, with x (multiplicity 1 in
 * f mod p) as the claimed common factor; the Dedekind oracle may disagree.
 */
inline IndexVerdict fastpath_case3(const Quadrinomial& q, std::uint64_t p,
                                   std::uint64_t seed = kDefaultSeed) {
  using detail::neg;
  const PrimeCase pc = classify_prime(q, p);
  const Case3Quantities& cq = detail::case3(pc);
  require_invariant((q.n - 1) % static_cast<long>(p) == 0, "fastpath_case3: p does not divide n-1");
  const std::uint64_t v0 = residue(cq.v0, p), v1 = residue(cq.v1, p), v2 = residue(cq.v2, p);
  const std::uint64_t b = residue(q.b, p);
  const auto n1 = static_cast<std::uint64_t>(q.n - 1);

  if (v0 == 0) {
    IndexVerdict v = detail::fast_verdict(p, 3, "3(p^2|c)");
    v.divides_index = true;
    v.witness = IndexWitness{ModPoly::monomial(p, 1), 1};
    return v;
  }
  std::string rule;
  bool divides = false;
  if (v2 == 0) {
    rule = "3(i)";
    const std::uint64_t bracket = add_mod(pow_mod(neg(v0, p), n1, p), mul_mod(pow_mod(v1, n1, p), b, p), p);
    divides = mul_mod(v0, bracket, p) == 0;
  } else if (v1 == 0) {
    rule = "3(ii)";
    const std::uint64_t b3 = mul_mod(mul_mod(b, b, p), b, p);
    divides = add_mod(mul_mod(pow_mod(v2, n1, p), b3, p), pow_mod(neg(v0, p), n1, p), p) == 0;
  } else {
    rule = "3(iii)";
    divides = detail::share_zero(detail::binomial(p, cq.m1, b),
                                 detail::aux_cubic(p, cq.v2, cq.v1, cq.v0));
  }
  IndexVerdict v = detail::fast_verdict(p, 3, rule);
  v.divides_index = divides;
  if (divides)
    v.witness = detail::binomial_witness(detail::binomial(p, cq.m1, b),
                                         detail::aux_cubic(p, cq.v2, cq.v1, cq.v0),
                                         detail::prime_power(p, cq.s), seed);
  return v;
}

inline IndexVerdict fastpath_case4(const Quadrinomial& q, std::uint64_t p,
                                   std::uint64_t seed = kDefaultSeed) {
  using detail::neg;
  const PrimeCase pc = classify_prime(q, p);
  const Case4Quantities& cq = detail::case4(pc);
  require_invariant((q.n - 3) % static_cast<long>(p) == 0, "fastpath_case4: p does not divide n-3");
  const std::uint64_t w0 = residue(cq.w0, p), w1 = residue(cq.w1, p), w2 = residue(cq.w2, p);
  const std::uint64_t a = residue(q.a, p);
  const auto n3 = static_cast<std::uint64_t>(q.n - 3);

  if (w0 == 0) {
    // x has multiplicity 3 in f mod p and divides M mod p
    IndexVerdict v = detail::fast_verdict(p, 4, "4(p^2|c)");
    v.divides_index = true;
    v.witness = IndexWitness{ModPoly::monomial(p, 1), 3};
    return v;
  }
  std::string rule;
  bool divides = false;
  if (w2 == 0) {
    rule = "4(i)";
    const std::uint64_t bracket = add_mod(pow_mod(neg(w0, p), n3, p), mul_mod(pow_mod(w1, n3, p), a, p), p);
    divides = mul_mod(w0, bracket, p) == 0;
  } else if (w1 == 0) {
    rule = "4(ii)";
    divides = add_mod(pow_mod(neg(w0, p), n3 / 3, p), mul_mod(a, pow_mod(w2, n3 / 3, p), p), p) == 0;
  } else {
    rule = "4(iii)";
    divides = detail::share_zero(detail::binomial(p, cq.m2, a),
                                 detail::aux_cubic(p, cq.w2, cq.w1, cq.w0));
  }
  IndexVerdict v = detail::fast_verdict(p, 4, rule);
  v.divides_index = divides;
  if (divides)
    v.witness = detail::binomial_witness(detail::binomial(p, cq.m2, a),
                                         detail::aux_cubic(p, cq.w2, cq.w1, cq.w0),
                                         detail::prime_power(p, cq.t), seed);
  return v;
}

/// The cubic-part polynomial used for R = 2:
/// 2((a^2-1)/3) x^3 + x^2 + (2+ac) x + (c^2-1)/3 over F_3.
inline ModPoly case5_auxiliary(const Quadrinomial& q) {
  const Integer a2 = q.a * q.a - 1, c2 = q.c * q.c - 1;
  const Integer t3 = 2 * detail::exact_div(a2, 3, "Case5: 3 does not divide a^2 - 1");
  const Integer t0 = detail::exact_div(c2, 3, "Case5: 3 does not divide c^2 - 1");
  const Integer t1 = 2 + q.a * q.c;
  return ModPoly(3, {residue(t0, 3), residue(t1, 3), 1, residue(t3, 3)});
}

inline IndexVerdict fastpath_case5(const Quadrinomial& q, std::uint64_t seed = kDefaultSeed) {
  const PrimeCase pc = classify_prime(q, 3);
  if (pc.tag != CaseTag::Case5) throw DomainError("fastpath_case5: 3 is not in Case5");
  const auto& cq = std::get<Case5Quantities>(pc.aux);
  const ModPoly f_bar = q.polynomial().reduce_mod(3);
  if (cq.R == 1) {
    IndexVerdict v = detail::fast_verdict(3, 5, "5(i)");
    const Integer a2 = q.a * q.a - 1;
    v.divides_index = mpz_divisible_ui_p(a2.get_mpz_t(), 9) != 0;
    if (v.divides_index) {
      const auto fac = fp_factor(f_bar, seed);
      v.witness = IndexWitness{fac.factors.front().factor, fac.factors.front().multiplicity};
    }
    return v;
  }
  IndexVerdict v = detail::fast_verdict(3, 5, "5(ii)");
  const ModPoly aux = case5_auxiliary(q);
  v.divides_index = !fp_gcd(f_bar, aux).is_one();
  if (v.divides_index) {
    for (const auto& [g, m] : fp_factor(f_bar, seed).factors)
      if (divides(g, aux)) {
        v.witness = IndexWitness{g, m};
        break;
      }
  }
  return v;
}

inline IndexVerdict fastpath_case6(const Quadrinomial& q, std::uint64_t p,
                                   std::uint64_t seed = kDefaultSeed) {
  if (classify_prime(q, p).tag != CaseTag::Case6) throw DomainError("fastpath_case6: prime is not in Case6");
  require_invariant(p != 2 && p != 3, "fastpath_case6: p in {2, 3}");
  const IntPoly f = q.polynomial();
  const ModPoly f_bar = f.reduce_mod(p);
  const ModPoly cubic(p, {1, 1, 0, 1});
  const ModPoly common = fp_gcd(cubic, f_bar);
  if (common.is_one()) return detail::fast_verdict(p, 6, "6(i)");

  IndexVerdict v = detail::fast_verdict(p, 6, "6(ii)");
  const FpFactorization fac = fp_factor(f_bar, seed);
  const ModPoly m_bar = dedekind_remainder(f, fac).reduce_mod(p);
  for (const auto& [g, mult] : fac.factors) {
    if (mult < 2 || !divides(g, common)) continue;
    if (divides(g, m_bar)) {
      v.divides_index = true;
      v.witness = IndexWitness{g, mult};
      break;
    }
  }
  return v;
}

/// Dispatch on the case of p.
inline IndexVerdict fastpath(const Quadrinomial& q, std::uint64_t p, std::uint64_t seed = kDefaultSeed) {
  switch (classify_prime(q, p).tag) {
    case CaseTag::Case1: return fastpath_case1(q, p);
    case CaseTag::Case2: return fastpath_case2(q, p, seed);
    case CaseTag::Case3: return fastpath_case3(q, p, seed);
    case CaseTag::Case4: return fastpath_case4(q, p, seed);
    case CaseTag::Case5: return fastpath_case5(q, seed);
    case CaseTag::Case6: return fastpath_case6(q, p, seed);
  }
  throw InvariantViolation("fastpath: unknown case");
}

/**
 * The common-zero form of Cases 2-4: does x^m + (const) share a zero with the
 * auxiliary cubic? Defined for Case 2 always, and for Cases 3 and 4 when
 * p^2 does not divide c. Used to cross-check the closed-form subcases.
 */
inline std::optional<bool> common_zero_divides(const Quadrinomial& q, std::uint64_t p) {
  const PrimeCase pc = classify_prime(q, p);
  switch (pc.tag) {
    case CaseTag::Case2: {
      const auto& cq = std::get<Case2Quantities>(pc.aux);
      return detail::share_zero(detail::binomial(p, cq.m, residue(q.c, p)),
                                detail::aux_cubic(p, cq.u2, cq.u1, cq.u0));
    }
    case CaseTag::Case3: {
      const auto& cq = std::get<Case3Quantities>(pc.aux);
      if (residue(cq.v0, p) == 0) return std::nullopt;
      return detail::share_zero(detail::binomial(p, cq.m1, residue(q.b, p)),
                                detail::aux_cubic(p, cq.v2, cq.v1, cq.v0));
    }
    case CaseTag::Case4: {
      const auto& cq = std::get<Case4Quantities>(pc.aux);
      if (residue(cq.w0, p) == 0) return std::nullopt;
      return detail::share_zero(detail::binomial(p, cq.m2, residue(q.a, p)),
                                detail::aux_cubic(p, cq.w2, cq.w1, cq.w0));
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

struct FamilyPrimeRow {
  std::uint64_t p = 0;
  PrimeCase prime_case;
  IndexVerdict fastpath;
  IndexVerdict oracle;
  bool agree = true;
  bool operator==(const FamilyPrimeRow&) const = default;
};

struct FamilyReport {
  Quadrinomial q;
  MonogenicityReport report;  // verdict comes from the oracle
  std::vector<FamilyPrimeRow> rows;

  std::vector<FamilyPrimeRow> disagreements() const {
    std::vector<FamilyPrimeRow> out;
    for (const auto& r : rows)
      if (!r.agree) out.push_back(r);
    return out;
  }

  bool operator==(const FamilyReport&) const = default;
};

/// One (q, p) cell: classification, fast path, oracle.
inline FamilyPrimeRow family_cell(const Quadrinomial& q, std::uint64_t p, std::uint64_t seed = kDefaultSeed) {
  FamilyPrimeRow row;
  row.p = p;
  row.prime_case = classify_prime(q, p);
  row.fastpath = fastpath(q, p, seed);
  row.oracle = dedekind_test(q.polynomial(), p, LiftConvention::Canonical, seed);
  row.agree = row.fastpath.divides_index == row.oracle.divides_index;
  return row;
}

inline FamilyReport family_report(const Quadrinomial& q, const OracleBudget& budget = {}) {
  FamilyReport out;
  out.q = q;
  out.report = monogenicity_oracle(q.polynomial(), budget);
  for (const auto& oracle : out.report.per_prime) {
    FamilyPrimeRow row;
    row.p = oracle.p;
    row.prime_case = classify_prime(q, oracle.p);
    row.fastpath = fastpath(q, oracle.p, budget.factoring.seed);
    row.oracle = oracle;
    row.agree = row.fastpath.divides_index == row.oracle.divides_index;
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Symbolic form of the general solution of y^(n) + a y''' + b y' + c y = 0
/// when Z[theta] is the full ring of integers.
inline std::string ode_solution_template(const Quadrinomial& q, const MonogenicityReport& report) {
  if (report.verdict.kind != VerdictKind::Monogenic)
    throw DomainError(std::string("ode_solution_template: verdict is ") + to_string(report.verdict.kind) +
                      "; the integral power basis is not established, so no solution form is emitted");
  const std::string n = std::to_string(q.n);
  const std::string nm1 = std::to_string(q.n - 1);
  std::string out;
  out += "differential equation: y^(" + n + ") + (" + q.a.get_str() + ") y''' + (" + q.b.get_str() +
         ") y' + (" + q.c.get_str() + ") y = 0\n";
  out += "auxiliary polynomial: " + q.polynomial().to_string('z') + " (irreducible, root theta)\n";
  out += "power integral basis: {1, theta, ..., theta^" + nm1 + "} is an integral basis of Q(theta)\n";
  out += "general solution: y(x) = sum_{i=1}^{" + n + "} c_i * prod_{j=1}^{" + n +
         "} exp(a_{j-1}^{(i)} * theta^{j-1} * x)\n";
  out += "where a_{j-1}^{(i)} are integers (one root theta_i = sum_j a_{j-1}^{(i)} theta^{j-1} per i) "
         "and c_i are arbitrary constants\n";
  return out;
}

}  // namespace monoquad
