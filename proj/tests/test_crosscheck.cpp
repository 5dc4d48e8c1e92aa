#include <monoquad/crosscheck.hpp>

#include <gtest/gtest.h>

using namespace monoquad;

namespace {

const std::vector<long> kSweepN{6, 9, 12, 15, 18};

std::vector<long> all_ns() {
  std::vector<long> ns;
  for (long n = 6; n <= 30; n += 3) ns.push_back(n);
  return ns;
}

}  // namespace

TEST(SweepMembers, SkipsZeroAndKeepsOrder) {
  const auto m = sweep_members({9, 6}, -1, 1);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0].n, 9);
  EXPECT_EQ(m[0].s, -1);
  EXPECT_EQ(m[1].s, 1);
  EXPECT_EQ(m[2].n, 6);
  EXPECT_EQ(m[1].q, validate(9, 12, 9, 8));
  EXPECT_TRUE(sweep_members({9}, 0, 0).empty());
  EXPECT_THROW(family_member(9, 0), DomainError);
  EXPECT_EQ(family_member(12, 1), validate(12, 44, 36, 33));
}

TEST(Crosscheck, DefaultSweep) {
  const CrosscheckSummary sum = crosscheck(kSweepN, -20, 20);
  EXPECT_EQ(sum.members, 5u * 40u);
  EXPECT_FALSE(sum.stopped_early);
  EXPECT_EQ(sum.non_case3_disagreements(), 0u);
  EXPECT_TRUE(sum.lemma_violations.empty());
  EXPECT_EQ(sum.exit_code(), 0);
  for (const auto& d : sum.disagreements) {
    EXPECT_EQ(d.row.prime_case.tag, CaseTag::Case3);
    EXPECT_EQ(d.row.fastpath.rule, "3(p^2|c)");
    // the oracle never confirms the p^2 | c rule here
    EXPECT_TRUE(d.row.fastpath.divides_index);
    EXPECT_FALSE(d.row.oracle.divides_index);
  }
  EXPECT_FALSE(sum.disagreements.empty());
  for (std::size_t c = 0; c < 6; ++c) EXPECT_GT(sum.tally[c].cells, 0u) << "Case" << c + 1;
  EXPECT_EQ(sum.lemmas.l1_members, sum.members);
}

TEST(Crosscheck, LemmaAuditsOverWideRange) {
  SweepOptions opt;
  opt.audit_prime_bound = 10'000;
  std::size_t violations = 0, classifications = 0, case5 = 0, frob = 0;
  for (const auto& m : sweep_members(all_ns(), -50, 50)) {
    const MemberAudit a = audit_member(m, primes_up_to(opt.audit_prime_bound));
    for (const auto& v : a.violations) ADD_FAILURE() << v.lemma << " n=" << v.n << " s=" << v.s << " p=" << v.p;
    violations += a.violations.size();
    classifications += a.counts.l2_classifications;
    case5 += a.counts.case5_occurrences;
    frob += a.counts.case2_frobenius;
  }
  EXPECT_EQ(violations, 0u);
  EXPECT_EQ(classifications, 9u * 100u * primes_up_to(10'000).size());
  EXPECT_GT(case5, 0u);
  EXPECT_GT(frob, 0u);
}

TEST(Crosscheck, AuditCatchesCorruptedMember) {
  SweepMember m = sweep_members({9}, 2, 2).front();
  m.s = 3;
  const MemberAudit a = audit_member(m, primes_up_to(50));
  ASSERT_FALSE(a.violations.empty());
  EXPECT_EQ(a.violations.front().lemma, "l1");

  SweepMember bad{9, 1, Quadrinomial{9, 2, 1, 1, 3}};
  const MemberAudit b = audit_member(bad, {2});
  bool l2 = false;
  for (const auto& v : b.violations) l2 |= v.lemma == "l2" && v.p == 2;
  EXPECT_TRUE(l2);
}

TEST(Crosscheck, DeterministicAcrossThreadCounts) {
  SweepOptions one, many;
  one.threads = 1;
  many.threads = 8;
  const auto members = sweep_members({9, 12, 15}, -8, 8);
  const auto r1 = run_members(members, one);
  const auto r8 = run_members(members, many);
  ASSERT_EQ(r1.size(), r8.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(r1[i].member.s, r8[i].member.s);
    EXPECT_EQ(r1[i].report, r8[i].report);
  }
  const auto s1 = summarize(r1, members.size()), s8 = summarize(r8, members.size());
  EXPECT_EQ(s1.cells(), s8.cells());
  ASSERT_EQ(s1.disagreements.size(), s8.disagreements.size());
  for (std::size_t i = 0; i < s1.disagreements.size(); ++i) {
    EXPECT_EQ(s1.disagreements[i].s, s8.disagreements[i].s);
    EXPECT_EQ(s1.disagreements[i].row, s8.disagreements[i].row);
  }
}

TEST(Crosscheck, FailFastStopsAtFirstFailureInOrder) {
  auto members = sweep_members({9}, 1, 6);
  members[2].s = 99;  // l1 violation
  members[4].s = 98;
  SweepOptions opt;
  opt.fail_fast = true;
  opt.threads = 4;
  opt.audit_prime_bound = 50;
  const auto results = run_members(members, opt);
  ASSERT_EQ(results.size(), 3u);
  const CrosscheckSummary sum = summarize(results, members.size());
  EXPECT_TRUE(sum.stopped_early);
  EXPECT_EQ(sum.lemma_violations.size(), 1u);
  EXPECT_EQ(sum.exit_code(), 1);

  opt.fail_fast = false;
  const auto all = run_members(members, opt);
  EXPECT_EQ(all.size(), members.size());
  EXPECT_EQ(summarize(all, members.size()).lemma_violations.size(), 2u);
}

TEST(Crosscheck, EmptyRange) {
  const CrosscheckSummary sum = crosscheck(kSweepN, 0, 0);
  EXPECT_EQ(sum.members, 0u);
  EXPECT_EQ(sum.cells(), 0u);
  EXPECT_EQ(sum.exit_code(), 0);
  EXPECT_THROW(crosscheck(kSweepN, 3, 1), DomainError);
}
