"""
Quotient graphs for small degrees
=================================

Build the quotient for a few degrees and print the chains and the extra
edge bundles.  For even d the quotient is a double cover, so every vertex
comes with a primed twin.
"""

from btquotient.quotient import GAMMA_TILDE, build_quotient
from btquotient.serialize import to_ascii

for d in (1, 3, 5):
    print(to_ascii(build_quotient(2, d, 2 * d + 2)))

# even degree: the folded graph has loops, the cover does not
g = build_quotient(3, 4, 8, GAMMA_TILDE)
print(to_ascii(g))
print("loops:", {str(v): k for v, k in g.loops().items()})
print(to_ascii(build_quotient(3, 4, 8)))

# bundle sizes are polynomials in q
from btquotient.quotient import closed_form_multiplicity

for q in (2, 3, 4, 5):
    print(q, [closed_form_multiplicity(q, 7, a, b) for a, b in [(0, 1), (1, 2), (0, 3), (2, 3)]])
