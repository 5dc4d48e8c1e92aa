// Certify one family member and inspect the per-prime comparison.
#include <monoquad/quadrinomial.hpp>

#include <iostream>

int main() {
  using namespace monoquad;

  const Quadrinomial q = validate(12, 44, 36, 33);
  const FamilyReport rep = family_report(q);

  std::cout << rep.report.polynomial.to_string() << "\n";
  std::cout << "disc = " << rep.report.discriminant.value() << "\n";
  for (const auto& row : rep.rows)
    std::cout << "p = " << row.p << "  " << to_string(row.prime_case.tag) << " rule " << row.fastpath.rule
              << (row.oracle.divides_index ? "  divides the index\n" : "  does not divide the index\n");
  std::cout << to_string(rep.report.verdict.kind) << "\n";

  // Any monic integer polynomial works with the general machinery.
  const IntPoly g{-5, 0, 1};  // x^2 - 5
  const IndexVerdict v = dedekind_test(g, 2);
  std::cout << g.to_string() << ": 2 " << (v.divides_index ? "divides" : "does not divide") << " the index\n";
}
