#!/usr/bin/env python3
"""A tour of exact continued-fraction expansions.

Every value here is exact: rationals are reduced integer pairs, quadratic
irrationals are (P + sqrt(D))/Q triples, and no floating point is involved
anywhere.
"""

from fareyloops import (
    QuadSurd,
    Rational,
    cf_from_rational,
    cf_of_surd,
    convergent,
    format_cf,
    height,
    multiply_cf,
    semiconvergent,
    shift_cf,
)

print("== the two expansions of a rational ==")
canonical, twin = cf_from_rational(Rational(3, 7))
print(f"3/7  ->  {format_cf(canonical)}  and  {format_cf(twin)}")
print("(the trailing oo marks the infinite final partial quotient rationals carry)")

print()
print("== quadratic irrationals are eventually periodic ==")
for label, surd in [
    ("sqrt(2)", QuadSurd(0, 1, 2)),
    ("sqrt(8)", QuadSurd(0, 1, 8)),
    ("golden ratio", QuadSurd(1, 2, 5)),
    ("golden conjugate", QuadSurd(-1, 2, 5)),
]:
    e = cf_of_surd(surd)
    print(f"{label:18} {str(surd):16} -> {format_cf(e)}   height B = {height(e)}")

print()
print("== convergents and semi-convergents of the golden conjugate ==")
golden = cf_of_surd(QuadSurd(-1, 2, 5))
chain = [str(convergent(golden, k)) for k in range(-1, 7)]
print("convergents:", " -> ".join(chain))
print("the fan between convergents 2 and 4 visits:")
for m in range(0, 2):
    print(f"  {{3,{m}}}-th semi-convergent:", semiconvergent(golden, 3, m))

print()
print("== exact integer arithmetic on expansions ==")
e = cf_from_rational(Rational(3, 7))[0]
print(f"5 * 3/7:   {format_cf(multiply_cf(e, 5))}")
print(f"3/7 + 2:   {format_cf(shift_cf(e, 2))}")
print(f"2 * golden conjugate: {format_cf(multiply_cf(golden, 2))}")
print("the scaled expansions are computed through the exact value domain,")
print("so they round-trip with value semantics at every step")
