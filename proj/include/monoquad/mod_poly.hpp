#pragma once

/**
 * @file mod_poly.hpp
 * @brief Dense polynomials over F_p (p prime, p < 2^63) and their factorization.
 *
 * Factorization pipeline: squarefree decomposition (with p-th root
 * extraction when the derivative vanishes), distinct-degree factorization,
 * then equal-degree splitting. Equal-degree splitting uses Cantor-Zassenhaus
 * for odd p and the trace map x + x^2 + ... + x^(2^(d-1)) for p = 2.
 * Frobenius powers are plain square-and-multiply modulo f; modular
 * composition would be faster for large degrees but is not needed here.
 */

#include "integer.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace monoquad {

class ModPoly {
 public:
  ModPoly() = default;

  explicit ModPoly(std::uint64_t p) : p_(check_modulus(p)) {}

  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
      : p_(check_modulus(p)), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
  }

  /// Coefficients given as signed values, reduced to [0, p).
  static ModPoly from_signed(std::uint64_t p, const std::vector<long long>& coeffs) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) {
      long long r = v % static_cast<long long>(p);
      c.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r));
    }
    return ModPoly(p, std::move(c));
  }

  static ModPoly constant(std::uint64_t p, std::uint64_t v) { return ModPoly(p, {v}); }

  static ModPoly monomial(std::uint64_t p, std::size_t k, std::uint64_t v = 1) {
    std::vector<std::uint64_t> c(k + 1, 0);
    c[k] = v;
    return ModPoly(p, std::move(c));
  }

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
    return acc;
  }

  ModPoly monic() const {
    if (is_zero() || lead() == 1) return *this;
    const std::uint64_t inv = inv_mod(lead(), p_);
    return scaled(inv);
  }

  ModPoly scaled(std::uint64_t s) const {
    ModPoly out(*this);
    for (auto& v : out.c_) v = mul_mod(v, s % p_, p_);
    out.trim();
    return out;
  }

  ModPoly derivative() const {
    ModPoly out(p_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = mul_mod(c_[i], i % p_, p_);
    out.trim();
    return out;
  }

  friend ModPoly operator+(const ModPoly& f, const ModPoly& g) {
    check_same(f, g);
    ModPoly out(f.p_);
    out.c_.resize(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = add_mod(f[i], g[i], f.p_);
    out.trim();
    return out;
  }

  friend ModPoly operator-(const ModPoly& f, const ModPoly& g) {
    check_same(f, g);
    ModPoly out(f.p_);
    out.c_.resize(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = sub_mod(f[i], g[i], f.p_);
    out.trim();
    return out;
  }

  friend ModPoly operator*(const ModPoly& f, const ModPoly& g) {
    check_same(f, g);
    ModPoly out(f.p_);
    if (f.is_zero() || g.is_zero()) return out;
    const std::uint64_t p = f.p_;
    out.c_.assign(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i] == 0) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j)
        out.c_[i + j] = add_mod(out.c_[i + j], mul_mod(f.c_[i], g.c_[j], p), p);
    }
    out.trim();
    return out;
  }

  struct DivMod;
  friend DivMod divmod(const ModPoly& f, const ModPoly& g);

  friend ModPoly operator/(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator%(const ModPoly& f, const ModPoly& g);

  bool operator==(const ModPoly& o) const = default;

  /// Canonical order: degree, then coefficients from the leading term down.
  std::strong_ordering canonical_compare(const ModPoly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = c_.size(); i-- > 0;)
      if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const std::uint64_t v = c_[i];
      if (v == 0) continue;
      if (!out.empty()) out += " + ";
      const bool show_coeff = v != 1 || i == 0;
      if (show_coeff) out += std::to_string(v);
      if (i > 0) {
        if (show_coeff) out += '*';
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::uint64_t check_modulus(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63))
      throw DomainError("ModPoly: modulus must satisfy 2 <= p < 2^63");
    return p;
  }

  static void check_same(const ModPoly& f, const ModPoly& g) {
    if (f.p_ != g.p_) throw DomainError("ModPoly: modulus mismatch");
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

struct ModPoly::DivMod {
  ModPoly quotient;
  ModPoly remainder;
};

inline ModPoly::DivMod divmod(const ModPoly& f, const ModPoly& g) {
  ModPoly::check_same(f, g);
  if (g.is_zero()) throw DomainError("ModPoly: division by the zero polynomial");
  const std::uint64_t p = f.p_;
  ModPoly r(f);
  ModPoly q(p);
  if (f.degree() < g.degree()) return {q, r};
  const std::uint64_t inv = inv_mod(g.lead(), p);
  const std::size_t dg = g.c_.size() - 1;
  q.c_.assign(f.c_.size() - dg, 0);
  for (std::size_t i = f.c_.size(); i-- > dg;) {
    const std::uint64_t coef = mul_mod(r.c_[i], inv, p);
    q.c_[i - dg] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j)
      r.c_[i - dg + j] = sub_mod(r.c_[i - dg + j], mul_mod(coef, g.c_[j], p), p);
  }
  r.trim();
  q.trim();
  return {q, r};
}

inline ModPoly operator/(const ModPoly& f, const ModPoly& g) { return divmod(f, g).quotient; }
inline ModPoly operator%(const ModPoly& f, const ModPoly& g) { return divmod(f, g).remainder; }

inline bool divides(const ModPoly& g, const ModPoly& f) { return (f % g).is_zero(); }

/// Monic gcd; both zero is an error.
inline ModPoly fp_gcd(ModPoly f, ModPoly g) {
  if (f.modulus() != g.modulus()) throw DomainError("fp_gcd: modulus mismatch");
  if (f.is_zero() && g.is_zero()) throw DomainError("fp_gcd: gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    ModPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

/// base^exp mod modpoly by square-and-multiply over the bits of exp.
inline ModPoly fp_pow_mod(const ModPoly& base, const Integer& exp, const ModPoly& modpoly) {
  if (modpoly.is_zero()) throw DomainError("fp_pow_mod: zero modulus polynomial");
  if (sgn(exp) < 0) throw DomainError("fp_pow_mod: negative exponent");
  ModPoly result = ModPoly::constant(modpoly.modulus(), 1) % modpoly;
  const ModPoly b = base % modpoly;
  const std::size_t bits = sgn(exp) == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % modpoly;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = result * b % modpoly;
  }
  return result;
}

inline ModPoly fp_pow_mod(const ModPoly& base, std::uint64_t exp, const ModPoly& modpoly) {
  return fp_pow_mod(base, from_u64(exp), modpoly);
}

/// Plain power without reduction.
inline ModPoly fp_pow(const ModPoly& base, std::uint64_t exp) {
  ModPoly result = ModPoly::constant(base.modulus(), 1);
  ModPoly b = base;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    exp >>= 1;
    if (exp > 0) b = b * b;
  }
  return result;
}

struct FpFactor {
  ModPoly factor;
  unsigned multiplicity;
  bool operator==(const FpFactor&) const = default;
};

struct FpFactorization {
  std::uint64_t p = 2;
  std::uint64_t unit = 1;
  std::vector<FpFactor> factors;

  ModPoly product() const {
    ModPoly out = ModPoly::constant(p, unit);
    for (const auto& [g, m] : factors) out = out * fp_pow(g, m);
    return out;
  }

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const FpFactor& f) { return f.multiplicity == 1; });
  }

  bool operator==(const FpFactorization&) const = default;
};

namespace detail {

/// Sort canonically and merge equal factors.
inline void canonicalize(std::vector<FpFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const FpFactor& l, const FpFactor& r) {
    return l.factor.canonical_compare(r.factor) < 0;
  });
  std::vector<FpFactor> merged;
  for (auto& f : fs) {
    if (!merged.empty() && merged.back().factor == f.factor)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(std::move(f));
  }
  fs = std::move(merged);
}

/// g(x)^(1/p) for a polynomial with g' = 0 (coefficients live at multiples of p).
inline ModPoly pth_root(const ModPoly& g) {
  const std::uint64_t p = g.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < g.coeffs().size(); i += p) {
    // a^(1/p) = a in F_p
    c.push_back(g.coeffs()[i]);
  }
  return ModPoly(p, std::move(c));
}

}  // namespace detail

/// Pairwise coprime monic squarefree parts with their multiplicities, ordered
/// by multiplicity. The unit is dropped.
inline std::vector<FpFactor> squarefree_decomposition(const ModPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
  const std::uint64_t p = f.modulus();
  std::vector<FpFactor> out;
  ModPoly g = f.monic();
  if (g.degree() == 0) return out;

  ModPoly c = fp_gcd(g, g.derivative());
  ModPoly w = g / c;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = fp_gcd(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [h, m] : squarefree_decomposition(detail::pth_root(c.monic())))
      out.push_back({h, m * static_cast<unsigned>(p)});
  }
  std::sort(out.begin(), out.end(),
            [](const FpFactor& l, const FpFactor& r) { return l.multiplicity < r.multiplicity; });
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<ModPoly, unsigned>> distinct_degree_factorization(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly rest = f.monic();
  const ModPoly x = ModPoly::monomial(p, 1);
  ModPoly h = x % rest;
  unsigned d = 1;
  while (rest.degree() >= 2 * static_cast<long>(d)) {
    h = fp_pow_mod(h, p, rest);
    ModPoly g = fp_gcd(h - x, rest);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

namespace detail {

inline ModPoly random_poly(std::uint64_t p, long below_degree, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = rng() % p;
  return ModPoly(p, std::move(c));
}

inline void equal_degree_split(const ModPoly& f, unsigned d, std::mt19937_64& rng,
                               std::vector<ModPoly>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  Integer half_exp;
  if (p != 2) {
    Integer pd;
    Integer pz = from_u64(p);
    mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), d);
    half_exp = (pd - 1) / 2;
  }
  const ModPoly one = ModPoly::constant(p, 1);
  for (;;) {
    ModPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModPoly g = fp_gcd(a, f);
    if (g.is_one()) {
      ModPoly b(p);
      if (p == 2) {
        ModPoly term = a;
        b = a;
        for (unsigned i = 1; i < d; ++i) {
          term = term * term % f;
          b = b + term;
        }
      } else {
        b = fp_pow_mod(a, half_exp, f) - one;
      }
      if (b.is_zero()) continue;
      g = fp_gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
/// gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
inline bool fp_is_irreducible(const ModPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const std::uint64_t p = f.modulus();
  const ModPoly g = f.monic();
  const auto n = static_cast<std::uint64_t>(g.degree());
  const ModPoly x = ModPoly::monomial(p, 1);
  // frob[k] = x^(p^k) mod g
  std::vector<ModPoly> frob{x % g};
  for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(fp_pow_mod(frob.back(), p, g));
  if (!(frob[n] - x % g).is_zero()) return false;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    if (!fp_gcd(frob[n / q] - x, g).is_one()) return false;
  }
  return true;
}

/// Complete factorization into distinct monic irreducibles, canonical order.
inline FpFactorization fp_factor(const ModPoly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw DomainError("fp_factor: zero polynomial");
  FpFactorization out;
  out.p = f.modulus();
  out.unit = f.lead();
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part)) {
      std::vector<ModPoly> pieces;
      detail::equal_degree_split(block, d, rng, pieces);
      for (auto& g : pieces) {
        require_invariant(g.degree() == static_cast<long>(d),
                          "fp_factor: equal-degree split produced a factor of the wrong degree");
        out.factors.push_back({std::move(g), mult});
      }
    }
  }
  detail::canonicalize(out.factors);
  return out;
}

/// All roots in F_p, listed with multiplicity, ascending.
inline std::vector<std::uint64_t> fp_roots(const ModPoly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw DomainError("fp_roots: zero polynomial");
  std::vector<std::uint64_t> out;
  if (f.degree() < 1) return out;
  const std::uint64_t p = f.modulus();
  const ModPoly g = f.monic();
  const ModPoly x = ModPoly::monomial(p, 1);
  ModPoly split = fp_gcd(fp_pow_mod(x, p, g) - x, g);
  if (split.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<ModPoly> linear;
  detail::equal_degree_split(split, 1, rng, linear);
  for (const auto& l : linear) {
    const std::uint64_t r = sub_mod(0, l[0], p);
    ModPoly rest = g;
    while (rest.degree() >= 1 && rest.eval(r) == 0) {
      out.push_back(r);
      rest = rest / l;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monoquad
