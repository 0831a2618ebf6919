"""The complete classification: S_{n,k} (k >= 2, n >= k+2) is Cayley exactly
when n = k+2, or k = 2 with n a prime power, or k = 3 with n-1 a prime
power, or (n,k) is one of six exceptional pairs.
"""

import starcayley as sc

print("classification for n <= 13:")
for n in range(4, 14):
    row = []
    for k in range(2, n - 1):
        row.append("C" if sc.classify(n, k).is_cayley else ".")
    print(f"  n={n:>2}: k=2..{n - 2}:  {' '.join(row)}")

print("\nthe six exceptional pairs:")
for n, k in sorted({(9, 4), (9, 6), (11, 4), (12, 5), (33, 4), (33, 30)}):
    print(f"  ({n},{k}):", sc.classify(n, k).clause)

# prime-power detection drives the k=2 and k=3 columns
for n in (32, 33, 34):
    print(f"\nis_prime_power({n}) = {sc.is_prime_power(n)}"
          f"  ->  S_{n},2 Cayley: {sc.classify(n, 2).is_cayley}")

# arithmetic eliminates every would-be point group for the no-cases with
# large k; each record names the contradiction it found
from starcayley.case_elim import CaseFamily, eliminate_case
for family, n, k in [(CaseFamily.M11, 11, 8), (CaseFamily.M12, 12, 9),
                     (CaseFamily.AGL1_8, 8, 5)]:
    rec = eliminate_case(family, n, k)
    print(f"\n{family.value} on {n} points, k={k}: t = {rec.t}")
    print(f"  refuted by {rec.refuted_by}: {rec.detail}")

# the surviving projective candidates are exactly q = 8 and q = 32, which
# yield the (9,6) and (33,30) exceptional pairs
print("\nprojective-subgroup scan:", sc.pgammal_solution_scan(5))
