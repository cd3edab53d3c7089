#!/usr/bin/env python3
"""Hull sizes of cyclic codes over Z4, by formula and by brute force.

Run from the repository root after `pip install -e .`:

    python demos/hull_walkthrough.py
"""

from z4lcd import CodeSpec, build_factor_table, code_size, factor_label, hull_report
from z4lcd.lcdenum import all_partitions
from z4lcd.oracle import dual_bruteforce, expand_code

# Every cyclic code of odd length N over Z4 is determined by a partition of
# the factors of X^N - 1 into three divisors (f, g, h); the code is
# generated by f(x)g(x) and 2f(x) and has 4^deg(h) * 2^deg(g) words.
# Its hull (the intersection with its dual) has size
# 4^deg(H) * 2^deg(G), computed from the factor sets alone.

table = build_factor_table(7)
labels = {r.index: factor_label(r) for r in table.records}


def show(name, f=(), g=()):
    spec = CodeSpec.of(table, f, g)
    report = hull_report(spec)
    print(f"  {name:<22} |C|={code_size(spec):>6}"
          f"  degH={report.deg_H} degG={report.deg_G}"
          f"  |Hull|={report.hull_size:>4}  LCD={'yes' if report.lcd else 'no'}")


print("length 7, factors:", ", ".join(labels.values()))
show("C = (1)              ")                      # the whole ambient module
show("C = (g[1,1])         ", f={0})               # self-reciprocal generator
show("C = (f[1,7])         ", f={1})               # half of a pair: not LCD
show("C = (f[1,7]f*[1,7])  ", f={1, 2})            # whole pair: LCD again
show("C = (2)              ", g=table.ids())       # all coefficients even
show("C = (0)              ", f=table.ids())       # the zero code

# The brute force agrees: expand the code into its codeword set, scan the
# whole ambient space for the dual, intersect.  Here for every one of the
# 27 partitions at length 7.

print("\nformula vs brute force over all 27 partitions at length 7:")
disagreements = 0
for spec in all_partitions(table):
    code = expand_code(spec)
    dual = dual_bruteforce(code)
    hull = len(code.words & dual.words)
    assert len(code) * len(dual) == 4**7  # duality cardinality identity
    if hull != hull_report(spec).hull_size:
        disagreements += 1
print(f"  checked 27 partitions, {disagreements} disagreements")

# A code and its dual always multiply out to the full space, and the hull
# is trivial exactly when the code is generated by one self-reciprocal
# divisor; the next demo enumerates those.
