#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials over Z.
 *
 * Resultants are computed by the subresultant polynomial remainder sequence
 * (Collins/Brown, in the formulation of Cohen, Algorithm 3.3.7). A second,
 * independent route evaluates the resultant modulo many word-size primes and
 * reconstructs it by CRT under a Hadamard bound on the Sylvester matrix.
 *
 * Resultant convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the
 * roots alpha_i of f, i.e. the Sylvester determinant with f's rows first.
 */

#include "integer.hpp"
#include "mod_poly.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace monoquad {

class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }

  static IntPoly monomial(std::size_t k, const Integer& v = 1) {
    std::vector<Integer> c(k + 1, Integer(0));
    c[k] = v;
    return IntPoly(std::move(c));
  }

  /// Lift of a polynomial over F_p, residues taken in [0, p) or (-p/2, p/2].
  static IntPoly lift(const ModPoly& f, bool symmetric = false) {
    std::vector<Integer> c;
    c.reserve(f.coeffs().size());
    const std::uint64_t p = f.modulus();
    for (std::uint64_t v : f.coeffs()) {
      Integer z = from_u64(v);
      if (symmetric && v > p / 2) z -= from_u64(p);
      c.push_back(std::move(z));
    }
    return IntPoly(std::move(c));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Integer& lead() const {
    static const Integer zero = 0;
    return c_.empty() ? zero : c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  IntPoly derivative() const {
    std::vector<Integer> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(out));
  }

  /// Exact division of every coefficient by d; throws InvariantViolation if inexact.
  IntPoly divexact(const Integer& d) const {
    if (d == 0) throw DomainError("IntPoly::divexact: division by zero");
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      require_invariant(mpz_divisible_p(c_[i].get_mpz_t(), d.get_mpz_t()) != 0,
                        "IntPoly::divexact: coefficient not divisible");
      mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(out));
  }

  ModPoly reduce_mod(std::uint64_t p) const {
    std::vector<std::uint64_t> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(residue(v, p));
    return ModPoly(p, std::move(c));
  }

  friend IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<Integer> out(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
    return IntPoly(std::move(out));
  }

  friend IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<Integer> out(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - g[i];
    return IntPoly(std::move(out));
  }

  friend IntPoly operator-(const IntPoly& f) { return IntPoly() - f; }

  friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Integer> out(f.c_.size() + g.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i] == 0) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j)
        mpz_addmul(out[i + j].get_mpz_t(), f.c_[i].get_mpz_t(), g.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
  }

  friend IntPoly operator*(const IntPoly& f, const Integer& s) {
    std::vector<Integer> out(f.c_);
    for (auto& v : out) v *= s;
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(const Integer& s, const IntPoly& f) { return f * s; }

  bool operator==(const IntPoly&) const = default;

  /// Human-readable form, e.g. "x^9 + 12*x^3 + 9*x + 8".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer& v = c_[i];
      if (v == 0) continue;
      const bool neg = sgn(v) < 0;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const Integer mag = abs(v);
      const bool show_coeff = mag != 1 || i == 0;
      if (show_coeff) out += mag.get_str();
      if (i > 0) {
        if (show_coeff) out += '*';
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

inline IntPoly pow(const IntPoly& base, unsigned exp) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    exp >>= 1;
    if (exp > 0) b = b * b;
  }
  return result;
}

inline ModPoly reduce_mod_p(const IntPoly& f, std::uint64_t p) { return f.reduce_mod(p); }

namespace detail {

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exactly over Z.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const long db = b.degree();
  const Integer& lb = b.lead();
  long dr = a.degree();
  long e = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const Integer lr = r[static_cast<std::size_t>(dr)];
    r.pop_back();
    for (auto& v : r) v *= lb;
    for (long j = 0; j < db; ++j)
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    --e;
    --dr;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
      r.pop_back();
      --dr;
    }
  }
  if (e > 0) {
    const Integer scale = ipow(lb, static_cast<unsigned long>(e));
    for (auto& v : r) v *= scale;
  }
  return IntPoly(std::move(r));
}

/// Res over F_p by the Euclidean algorithm.
inline std::uint64_t fp_resultant(ModPoly a, ModPoly b) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return 0;
  std::uint64_t acc = 1;
  for (;;) {
    const long da = a.degree(), db = b.degree();
    if (db == 0) return mul_mod(acc, pow_mod(b.lead(), static_cast<std::uint64_t>(da), p), p);
    if (da == 0) return mul_mod(acc, pow_mod(a.lead(), static_cast<std::uint64_t>(db), p), p);
    // Res(a, b) = (-1)^(da db) lc(b)^(da - deg r) Res(b, r), r = a mod b
    ModPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((da & 1) && (db & 1)) acc = sub_mod(0, acc, p);
    acc = mul_mod(acc, pow_mod(b.lead(), static_cast<std::uint64_t>(da - r.degree()), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace detail

/// Res(f, g) through the subresultant PRS.
inline Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant: zero polynomial");
  using detail::ipow;
  IntPoly A = f, B = g;
  const Integer ca = A.content(), cb = B.content();
  A = A.divexact(ca);
  B = B.divexact(cb);
  Integer t = ipow(ca, static_cast<unsigned long>(g.degree())) *
              ipow(cb, static_cast<unsigned long>(f.degree()));
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
  }
  if (B.degree() == 0) return s * t * ipow(B.lead(), static_cast<unsigned long>(A.degree()));
  Integer gg = 1, h = 1;
  for (;;) {
    const long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = detail::pseudo_remainder(A, B);
    if (R.is_zero()) return 0;
    A = std::move(B);
    B = R.divexact(gg * ipow(h, static_cast<unsigned long>(delta)));
    gg = A.lead();
    // h <- h^(1 - delta) g^delta, exact
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = ipow(gg, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      require_invariant(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
                        "resultant: inexact subresultant scaling");
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) break;
  }
  const long da = A.degree();
  Integer num = ipow(B.lead(), static_cast<unsigned long>(da));
  Integer den = ipow(h, static_cast<unsigned long>(da - 1));
  require_invariant(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
                    "resultant: inexact final scaling");
  Integer hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

/// Hadamard bound on |Res(f, g)|: product of the Euclidean norms of the Sylvester rows.
inline Integer resultant_bound(const IntPoly& f, const IntPoly& g) {
  auto norm_sq = [](const IntPoly& h) {
    Integer s = 0;
    for (const auto& v : h.coeffs()) s += v * v;
    return s;
  };
  // |Res| <= |f|^deg g * |g|^deg f, so |Res|^2 <= N(f)^deg g * N(g)^deg f
  Integer sq = detail::ipow(norm_sq(f), static_cast<unsigned long>(g.degree())) *
               detail::ipow(norm_sq(g), static_cast<unsigned long>(f.degree()));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  return root + 1;
}

/// Res(f, g) by evaluation modulo word-size primes and CRT reconstruction.
inline Integer resultant_modular(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant_modular: zero polynomial");
  const Integer bound = resultant_bound(f, g);
  const Integer target = 2 * bound + 1;
  Integer modulus = 1, value = 0;
  std::uint64_t candidate = (std::uint64_t{1} << 62) - 1;
  while (modulus < target) {
    while (!is_prime(candidate)) candidate -= 2;
    const std::uint64_t p = candidate;
    candidate -= 2;
    if (residue(f.lead(), p) == 0 || residue(g.lead(), p) == 0) continue;
    const std::uint64_t r = detail::fp_resultant(f.reduce_mod(p), g.reduce_mod(p));
    // value <- value + modulus * ((r - value) / modulus mod p)
    const std::uint64_t vm = residue(value, p);
    const std::uint64_t mm = residue(modulus, p);
    const std::uint64_t k = mul_mod(sub_mod(r, vm, p), inv_mod(mm, p), p);
    value += modulus * from_u64(k);
    modulus *= from_u64(p);
  }
  // symmetric representative
  if (value > modulus / 2) value -= modulus;
  return value;
}

namespace detail {
inline void check_disc_input(const IntPoly& f) {
  if (!f.is_monic()) throw DomainError("discriminant: polynomial must be monic");
  if (f.degree() < 2) throw DomainError("discriminant: degree must be at least 2");
}
inline int disc_sign(long n) { return ((n * (n - 1) / 2) & 1) ? -1 : 1; }
}  // namespace detail

/// Discriminant of a monic f: (-1)^(n(n-1)/2) Res(f, f').
inline Integer discriminant(const IntPoly& f) {
  detail::check_disc_input(f);
  return detail::disc_sign(f.degree()) * resultant(f, f.derivative());
}

/// Same quantity, computed through resultant_modular.
inline Integer discriminant_modular(const IntPoly& f) {
  detail::check_disc_input(f);
  return detail::disc_sign(f.degree()) * resultant_modular(f, f.derivative());
}

// ---------------------------------------------------------------------------
// Irreducibility certificate
// ---------------------------------------------------------------------------

struct Irreducible {
  std::uint64_t prime;
  bool operator==(const Irreducible&) const = default;
};

struct Reducible {
  IntPoly factor;  // a verified nontrivial factor
  bool operator==(const Reducible&) const = default;
};

struct IrreducibilityUnknown {
  /// Degrees d for which every tested prime allows a factor of degree d.
  std::vector<long> possible_factor_degrees;
  bool operator==(const IrreducibilityUnknown&) const = default;
};

using IrreducibilityCertificate = std::variant<Irreducible, Reducible, IrreducibilityUnknown>;

inline std::vector<std::uint64_t> default_irreducibility_primes() { return primes_up_to(1000); }

namespace detail {

/// Subset sums of the factor degrees of f mod p.
inline std::set<long> achievable_degrees(const FpFactorization& fac) {
  std::set<long> sums{0};
  for (const auto& [g, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i) {
      std::set<long> next = sums;
      for (long s : sums) next.insert(s + g.degree());
      sums = std::move(next);
    }
  return sums;
}

/// An integer root of monic f, found by testing the divisors of f(0).
inline std::optional<Integer> integer_root(const IntPoly& f, const FactorBudget& budget) {
  const Integer c0 = f[0];
  if (c0 == 0) return Integer(0);
  const FactoredInteger fc = factor(c0, budget);
  if (!fc.complete()) return std::nullopt;
  constexpr std::size_t kMaxDivisors = 200000;
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : fc.factors) {
    const std::size_t base = divisors.size();
    if (base * (e + 1) > kMaxDivisors) return std::nullopt;
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (const auto& d : divisors) {
    if (f.eval(d) == 0) return d;
    if (f.eval(Integer(-d)) == 0) return Integer(-d);
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Irreducible(p) when f mod p is irreducible for a tested p (f is monic, so
 * the degree is preserved). Reducible only with an exhibited integer root.
 * Otherwise Unknown, carrying the degree patterns no tested prime excludes.
 */
inline IrreducibilityCertificate irreducibility_certificate(
    const IntPoly& f, const std::vector<std::uint64_t>& primes, const FactorBudget& budget = {}) {
  if (!f.is_monic() || f.degree() < 2)
    throw DomainError("irreducibility_certificate: need a monic polynomial of degree >= 2");
  std::set<long> possible;
  for (long d = 0; d <= f.degree(); ++d) possible.insert(d);
  for (std::uint64_t p : primes) {
    const ModPoly fp = f.reduce_mod(p);
    if (fp_is_irreducible(fp)) return Irreducible{p};
    const std::set<long> here = detail::achievable_degrees(fp_factor(fp, budget.seed));
    std::set<long> meet;
    std::set_intersection(possible.begin(), possible.end(), here.begin(), here.end(),
                          std::inserter(meet, meet.begin()));
    possible = std::move(meet);
  }
  if (auto root = detail::integer_root(f, budget))
    return Reducible{IntPoly(std::vector<Integer>{Integer(-*root), Integer(1)})};
  std::vector<long> degrees;
  for (long d : possible)
    if (d > 0 && d < f.degree()) degrees.push_back(d);
  return IrreducibilityUnknown{std::move(degrees)};
}

}  // namespace monoquad
