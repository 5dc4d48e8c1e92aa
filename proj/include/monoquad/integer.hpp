#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integer utilities on top of GMP.
 *
 * Modular exponentiation, p-adic valuation, primality testing and a
 * budgeted factorizer (trial division followed by Brent's variant of
 * Pollard rho). Factorizations may be partial: whatever could not be split
 * within budget is kept as a composite cofactor.
 *
 * Primality strategy:
 *   - x < 2^64: Miller-Rabin with the first twelve prime bases
 *     {2, 3, ..., 37}. This base set is deterministic below 3.3 * 10^24,
 *     which covers the whole 64-bit range.
 *   - x >= 2^64: the same twelve strong-pseudoprime rounds (already a proof
 *     below 3.3 * 10^24), then GMP's Baillie-PSW test plus additional random
 *     Miller-Rabin rounds. No BPSW pseudoprime is known.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monoquad {

using Integer = mpz_class;

/// Seed used by every randomized step unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 0xD15C;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A violated internal invariant: either a bug or a falsified lemma.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

// ---------------------------------------------------------------------------
// 64-bit modular helpers (moduli below 2^63)
// ---------------------------------------------------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo prime m; a must be nonzero mod m.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  if (new_r == 0) throw DomainError("inv_mod: zero has no inverse");
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("inv_mod: argument not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

/// Canonical residue of x modulo m in [0, m).
inline std::uint64_t residue(const Integer& x, std::uint64_t m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

inline bool fits_u64(const Integer& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& x) {
  if (!fits_u64(x)) throw DomainError("integer does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, x.get_mpz_t());
  return out;
}

inline Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

// ---------------------------------------------------------------------------
// mod_pow / valuation
// ---------------------------------------------------------------------------

/// base^exp mod modulus in [0, modulus), with 0^0 = 1.
inline Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus) {
  if (modulus < 2) throw DomainError("mod_pow: modulus must be >= 2");
  if (sgn(exp) < 0) throw DomainError("mod_pow: negative exponent");
  Integer result = 1;
  Integer b;
  mpz_fdiv_r(b.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % modulus;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = result * b % modulus;
  }
  return result;
}

struct Valuation {
  unsigned v;
  Integer cofactor;
  bool operator==(const Valuation&) const = default;
};

/// x = p^v * cofactor with p not dividing cofactor.
inline Valuation p_adic_valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw DomainError("p_adic_valuation: zero has infinite valuation");
  if (p < 2) throw DomainError("p_adic_valuation: p must be a prime");
  Valuation out{0, x};
  while (mpz_divisible_p(out.cofactor.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p.get_mpz_t());
    ++out.v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint64_t kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool strong_probable_prime(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Integer x;
  Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == minus_one) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : detail::kWitnessBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t a : detail::kWitnessBases)
    if (!detail::strong_probable_prime_u64(n, a)) return false;
  return true;
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  for (unsigned long p : detail::kWitnessBases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  for (unsigned long a : detail::kWitnessBases)
    if (!detail::strong_probable_prime(n, a)) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 16) != 0;
}

/// All primes p <= bound.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

/// Primes p with lo <= p <= hi.
inline std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  auto all = primes_up_to(hi);
  all.erase(all.begin(), std::lower_bound(all.begin(), all.end(), lo));
  return all;
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_cap = 1u << 20;  // total rho iterations per composite
  std::uint64_t seed = kDefaultSeed;
};

struct PrimePower {
  Integer prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// sign * prod(p_i^e_i) * cofactor; cofactor == 1 iff the factorization is complete.
struct FactoredInteger {
  int sign = 1;
  std::vector<PrimePower> factors;
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }

  Integer value() const {
    Integer out = cofactor;
    for (const auto& [p, e] : factors) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      out *= pe;
    }
    return sign < 0 ? Integer(-out) : out;
  }

  /// Exponent of p in the factored part, 0 if absent.
  unsigned exponent_of(const Integer& p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  bool operator==(const FactoredInteger&) const = default;
};

namespace detail {

/// Brent's cycle-finding rho; returns a nontrivial divisor of n or 0.
inline Integer brent_rho(const Integer& n, std::uint64_t& iterations_left, std::mt19937_64& rng) {
  constexpr std::uint64_t kBatch = 128;
  while (iterations_left > 0) {
    Integer y = Integer(from_u64(rng())) % n;
    Integer c = Integer(from_u64(rng() | 1)) % n;
    if (c == 0) c = 1;
    Integer g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    while (g == 1 && iterations_left > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1 && iterations_left > 0) {
        ys = y;
        const std::uint64_t steps = std::min({kBatch, r - k, iterations_left});
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        iterations_left -= steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // Batched product overshot; replay one step at a time.
      do {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

/// Returns k >= 2 and root with root^k == n, or k = 1.
inline std::pair<Integer, unsigned long> perfect_power(const Integer& n) {
  if (!mpz_perfect_power_p(n.get_mpz_t())) return {n, 1};
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) return {root, k};
  }
  return {n, 1};
}

inline void split_composite(const Integer& n, unsigned mult, std::uint64_t& budget,
                            std::mt19937_64& rng, std::vector<PrimePower>& primes,
                            std::vector<std::pair<Integer, unsigned>>& stuck) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back({n, mult});
    return;
  }
  if (auto [root, k] = perfect_power(n); k > 1) {
    split_composite(root, mult * static_cast<unsigned>(k), budget, rng, primes, stuck);
    return;
  }
  Integer d = brent_rho(n, budget, rng);
  if (d == 0) {
    stuck.emplace_back(n, mult);
    return;
  }
  Integer rest = n / d;
  split_composite(d, mult, budget, rng, primes, stuck);
  split_composite(rest, mult, budget, rng, primes, stuck);
}


/// Primes for trial division. Bounds up to 10^6 share one immutable table.
inline const std::vector<std::uint64_t>& trial_primes(std::uint64_t bound, std::vector<std::uint64_t>& own) {
  static const std::vector<std::uint64_t> table = primes_up_to(1'000'000);
  if (bound <= 1'000'000) return table;
  own = primes_up_to(bound);
  return own;
}

}  // namespace detail

/// Factor x within the given budget. Never fails: unsplit composites end up in
/// the cofactor, which is then >= trial_bound^2.
inline FactoredInteger factor(const Integer& x, const FactorBudget& budget = {}) {
  if (x == 0) throw DomainError("factor: zero has no factorization");
  FactoredInteger out;
  out.sign = sgn(x) < 0 ? -1 : 1;
  Integer n = abs(x);

  std::vector<PrimePower> found;
  std::vector<std::uint64_t> own;
  const std::vector<std::uint64_t>& primes = detail::trial_primes(budget.trial_bound, own);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p > budget.trial_bound || n == 1) break;
    if (i % 64 == 0) {
      if (Integer(from_u64(p)) * from_u64(p) > n) break;
      if (i > 0 && is_prime(n)) break;
    }
    const unsigned long pl = static_cast<unsigned long>(p);
    if (!mpz_divisible_ui_p(n.get_mpz_t(), pl)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), pl)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), pl);
      ++e;
    }
    found.push_back({Integer(from_u64(p)), e});
  }

  std::vector<std::pair<Integer, unsigned>> stuck;
  if (n > 1) {
    std::mt19937_64 rng(budget.seed);
    std::uint64_t iterations = budget.rho_cap;
    detail::split_composite(n, 1, iterations, rng, found, stuck);
  }

  std::sort(found.begin(), found.end(),
            [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
  for (const auto& f : found) {
    if (!out.factors.empty() && out.factors.back().prime == f.prime)
      out.factors.back().exponent += f.exponent;
    else
      out.factors.push_back(f);
  }
  for (const auto& [c, m] : stuck) {
    Integer cm;
    mpz_pow_ui(cm.get_mpz_t(), c.get_mpz_t(), m);
    out.cofactor *= cm;
  }
  return out;
}

}  // namespace monoquad
