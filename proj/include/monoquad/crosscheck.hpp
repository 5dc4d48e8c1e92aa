#pragma once

/**
 * @file crosscheck.hpp
 * @brief Sweeps over the quadrinomial family comparing every fast path with
 *        the Dedekind oracle, plus structural audits of each member.
 *
 * Members are processed on a thread pool; results are collected per member
 * index and aggregated in enumeration order, so output never depends on
 * scheduling.
 */

#include "dedekind.hpp"
#include "integer.hpp"
#include "mod_poly.hpp"
#include "quadrinomial.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace monoquad {

struct SweepMember {
  long n = 0;
  long s = 0;
  Quadrinomial q;
};

/// Members for every n in `ns` and s in [s_lo, s_hi] \ {0}, ordered by n then s.
inline std::vector<SweepMember> sweep_members(const std::vector<long>& ns, long s_lo, long s_hi) {
  std::vector<SweepMember> out;
  for (long n : ns) {
    const auto family = enumerate_family(n, s_lo, s_hi);
    long s = s_lo;
    for (const auto& q : family) {
      if (s == 0) ++s;
      out.push_back({n, s, q});
      ++s;
    }
  }
  return out;
}

/// Rebuild the member with parameter s directly.
inline Quadrinomial family_member(long n, long s) {
  if (s == 0) throw DomainError("family_member: s must be nonzero");
  const auto family = enumerate_family(n, s, s);
  return family.front();
}

struct LemmaViolation {
  long n = 0;
  long s = 0;
  std::uint64_t p = 0;  // 0 when the check is not tied to a prime
  std::string lemma;    // "l1", "l2", "case5", "case2-frobenius"
  std::string detail;
};

struct LemmaCounts {
  std::size_t l1_members = 0;
  std::size_t l2_classifications = 0;
  std::size_t case5_occurrences = 0;
  std::size_t case2_frobenius = 0;
};

struct MemberAudit {
  LemmaCounts counts;
  std::vector<LemmaViolation> violations;
};

/**
 * Structural checks on one member:
 *  - l1: nc = (n-3)a = (n-1)b and the member matches its parametrization,
 *  - l2: classify every prime up to `prime_bound` without hitting an
 *    impossible divisibility pattern,
 *  - case5: every Case5 prime is 3 and 3 || n,
 *  - case2-frobenius: for every Case2 prime, f mod p = (x^m + c)^(p^r).
 */
inline MemberAudit audit_member(const SweepMember& m, const std::vector<std::uint64_t>& primes) {
  MemberAudit out;
  const Quadrinomial& q = m.q;
  const long n = q.n;
  auto violate = [&](std::uint64_t p, const char* lemma, std::string detail) {
    out.violations.push_back({m.n, m.s, p, lemma, std::move(detail)});
  };

  const long l = std::lcm(std::lcm(n, n - 1), n - 3);
  const Integer big_n = Integer(m.s) * l;
  ++out.counts.l1_members;
  if (!(n * q.c == (n - 3) * q.a && (n - 3) * q.a == (n - 1) * q.b))
    violate(0, "l1", "nc = (n-3)a = (n-1)b fails");
  if (q.a * (n - 3) != big_n || q.b * (n - 1) != big_n || q.c * n != big_n)
    violate(0, "l1", "member does not match s * lcm(n, n-1, n-3)");

  const IntPoly f = q.polynomial();
  for (std::uint64_t p : primes) {
    ++out.counts.l2_classifications;
    PrimeCase pc;
    try {
      pc = classify_prime(q, p);
    } catch (const InvariantViolation& e) {
      violate(p, "l2", e.what());
      continue;
    }
    if (pc.tag == CaseTag::Case5) {
      ++out.counts.case5_occurrences;
      if (p != 3 || n % 3 != 0 || n % 9 == 0) violate(p, "case5", "Case5 outside p = 3, 3 || n");
    }
    if (pc.tag == CaseTag::Case2) {
      ++out.counts.case2_frobenius;
      const auto& cq = std::get<Case2Quantities>(pc.aux);
      const ModPoly expected = fp_pow(detail::binomial(p, cq.m, residue(q.c, p)), detail::prime_power(p, cq.r));
      if (f.reduce_mod(p) != expected) violate(p, "case2-frobenius", "f mod p != (x^m + c)^(p^r)");
    }
  }
  return out;
}

struct SweepCell {
  long n = 0;
  long s = 0;
  Quadrinomial q;
  FamilyPrimeRow row;
};

struct CaseTally {
  std::size_t cells = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
};

struct IncompleteMember {
  long n = 0;
  long s = 0;
  std::string reason;
};

struct MemberResult {
  SweepMember member;
  FamilyReport report;
  MemberAudit audit;
};

struct CrosscheckSummary {
  std::size_t members = 0;
  std::array<CaseTally, 6> tally{};  // indexed by case - 1
  std::vector<SweepCell> disagreements;
  std::vector<IncompleteMember> inconclusive;
  LemmaCounts lemmas;
  std::vector<LemmaViolation> lemma_violations;
  bool stopped_early = false;

  std::size_t cells() const {
    std::size_t t = 0;
    for (const auto& c : tally) t += c.cells;
    return t;
  }

  std::size_t non_case3_disagreements() const {
    return static_cast<std::size_t>(std::count_if(disagreements.begin(), disagreements.end(), [](const SweepCell& c) {
      return c.row.prime_case.tag != CaseTag::Case3;
    }));
  }

  /// 0 when the fast paths hold outside Case 3 and no audit failed.
  int exit_code() const { return non_case3_disagreements() == 0 && lemma_violations.empty() ? 0 : 1; }
};

struct SweepOptions {
  OracleBudget budget;
  std::uint64_t audit_prime_bound = 10'000;
  bool fail_fast = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline bool member_fails(const MemberResult& r) {
  if (!r.audit.violations.empty()) return true;
  for (const auto& row : r.report.rows)
    if (!row.agree && row.prime_case.tag != CaseTag::Case3) return true;
  return false;
}

}  // namespace detail

/**
 * Analyze every member in parallel. With fail_fast, members after the first
 * failing one (in enumeration order) are dropped from the result. Exceptions
 * from any member are rethrown in enumeration order.
 */
inline std::vector<MemberResult> run_members(const std::vector<SweepMember>& members, const SweepOptions& opt) {
  const std::vector<std::uint64_t> primes = primes_up_to(opt.audit_prime_bound);
  std::vector<std::optional<MemberResult>> results(members.size());
  std::vector<std::exception_ptr> errors(members.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{members.size()};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= members.size()) return;
      if (opt.fail_fast && i > first_failure.load()) continue;
      try {
        MemberResult r{members[i], family_report(members[i].q, opt.budget), audit_member(members[i], primes)};
        if (opt.fail_fast && detail::member_fails(r)) {
          std::size_t cur = first_failure.load();
          while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
          }
        }
        results[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(members.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<MemberResult> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (!results[i]) break;  // skipped after an earlier failure
    out.push_back(std::move(*results[i]));
    if (opt.fail_fast && detail::member_fails(out.back())) break;
  }
  return out;
}

inline CrosscheckSummary summarize(const std::vector<MemberResult>& results, std::size_t planned) {
  CrosscheckSummary sum;
  sum.members = results.size();
  sum.stopped_early = results.size() < planned;
  for (const auto& r : results) {
    const auto& rep = r.report.report;
    if (rep.verdict.kind == VerdictKind::Inconclusive)
      sum.inconclusive.push_back({r.member.n, r.member.s, rep.verdict.reason});
    for (const auto& row : r.report.rows) {
      auto& t = sum.tally[static_cast<std::size_t>(row.prime_case.tag) - 1];
      ++t.cells;
      if (row.agree) {
        ++t.agree;
      } else {
        ++t.disagree;
        sum.disagreements.push_back({r.member.n, r.member.s, r.member.q, row});
      }
    }
    sum.lemmas.l1_members += r.audit.counts.l1_members;
    sum.lemmas.l2_classifications += r.audit.counts.l2_classifications;
    sum.lemmas.case5_occurrences += r.audit.counts.case5_occurrences;
    sum.lemmas.case2_frobenius += r.audit.counts.case2_frobenius;
    sum.lemma_violations.insert(sum.lemma_violations.end(), r.audit.violations.begin(), r.audit.violations.end());
  }
  return sum;
}

inline CrosscheckSummary crosscheck(const std::vector<long>& ns, long s_lo, long s_hi, const SweepOptions& opt = {}) {
  const auto members = sweep_members(ns, s_lo, s_hi);
  return summarize(run_members(members, opt), members.size());
}

}  // namespace monoquad
