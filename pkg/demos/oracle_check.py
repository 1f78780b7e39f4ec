"""
Brute-force double cosets against the closed form
=================================================

Every quotient edge between X_n and X_m is an H_n-H_m double coset in a
finite set of polynomial matrices.  Enumerate the set, count the classes
and compare.
"""

from btquotient import Place, double_coset_count, enumerate_upsilon
from btquotient.quotient import closed_form_multiplicity

place = Place.default(2, 5)
print("place:", place)

for n, m in [(0, 1), (1, 2), (0, 3), (2, 3), (1, 1), (0, 5)]:
    U = enumerate_upsilon(place, n, m)
    print(f"n={n} m={m}  |U|={len(U):5d}  double cosets={double_coset_count(U)}"
          f"  closed form={closed_form_multiplicity(2, 5, n, m)}")

# the whole check in one call; timing is left out so the json is stable
from btquotient import verify_instance

report = verify_instance(3, 2)
print("pass:", report.passed)
print(report.census)
