"""Knot polynomials: classical colored values and their two-parameter
deformation.

A knot is described by the integer Laurent polynomials multiplying the
classical cyclotomic coefficients.  Two knots are built in; any other
knot enters through a small JSON record.
"""

import json
import tempfile

from gjones import (classical_jones, figure_eight, generalized_jones,
                    load_knot_file, qint, universal_eval, unknot)

print("Unknot")
print("------")
u = unknot()
for n in range(1, 5):
    print(f"  J_{n}(q) = {classical_jones(u, n)}")
print("  (these are the quantum dimensions [n] in q^2)")
for n in range(1, 5):
    assert classical_jones(u, n) == qint(n, 2)
print()

print("Deformed unknot at t2 = 1 (a geometric sum in q^2 t1^-1):")
for n in range(1, 4):
    print(f"  J_{n}(q, t1) = {generalized_jones(u, n, t2=1)}")
print()

print("Figure-eight")
print("------------")
e = figure_eight()
for n in range(1, 4):
    print(f"  J_{n}(q) = {classical_jones(e, n)}")
print()
print("Full two-parameter deformation at n = 2:")
print(f"  J_2(q, t1, t2) = {generalized_jones(e, 2)}")
print()
print("The class-evaluation route gives the same polynomials:")
print("  universal route == coefficient route (n <= 4):",
      all(universal_eval(e, n) == generalized_jones(e, n) for n in range(1, 5)))
print()

print("File ingestion")
print("--------------")
record = {
    "name": "padded-unknot",
    "habiro": [[[0, 1]], [], []],       # H_0 = 1, H_1 = H_2 = 0
    "all_ones": False,
}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(record, fh)
    path = fh.name
k = load_knot_file(path)
print(f"  loaded {k.name!r}; J_3 matches the built-in unknot:",
      classical_jones(k, 3) == classical_jones(u, 3))
