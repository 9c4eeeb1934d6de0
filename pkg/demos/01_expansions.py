"""Chromatic and LLT expansions of a unit interval graph.

A weakly increasing function h with j <= h(j) <= n encodes the graph on
{1..n} whose edges are the pairs (j, i) with j < i <= h(j).  Colorings
weighted by q^(ascents) produce two symmetric functions: the chromatic one
(proper colorings only) and the LLT one (all colorings).  This script
expands both in several bases and demonstrates the q -> q+1 shift that
makes the LLT expansion e-positive, with its orientation model.
"""

from hessllt import HessenbergFunction, csf, llt, orientation_e_expansion

h = HessenbergFunction.parse("2,3,3")
print(f"h = {h!r}, edges = {h.edge_pairs()}\n")

X = csf(h)
G = llt(h)
print("chromatic, e basis:   ", X.in_basis("e").to_latex())
print("chromatic, s basis:   ", X.in_basis("s").to_latex())
print("llt, e basis:         ", G.in_basis("e").to_latex())
print("llt, p basis:         ", G.in_basis("p").to_latex())

print("\nAt q = 1 the LLT expansion carries the regular representation:")
from hessllt.qrat import QRat

at_one = G.subs_coeffs(lambda c: QRat.of(c.evaluate(1)))
print("llt at q=1, p basis:  ", at_one.in_basis("p").to_latex())

print("\nShifting q -> q+1 exposes positivity:")
positive, table = G.is_e_positive_shifted()
for lam, poly in sorted(table.items(), reverse=True):
    from hessllt.qrat import format_poly

    print(f"  e_{''.join(map(str, lam))}: {format_poly(poly)}")
print("e-positive after the shift:", positive)

print("\nThe same coefficients count graph orientations by ascending edges:")
print("orientation route, e basis:", orientation_e_expansion(h).to_latex())
