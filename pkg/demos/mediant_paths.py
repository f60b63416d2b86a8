#!/usr/bin/env python3
"""Mediant-insertion paths from 0 to 1 at level n.

The vertex algorithm refines {0/1, 1/1} by inserting Farey mediants between
consecutive pairs that are not level-n neighbours; the denominator algorithm
runs the identical recursion on residues mod n.  The process stops for
n = 2, 3 and runs forever for every larger modulus, which is exactly the
existence statement for infinite loops.
"""

from fareyloops import d_algorithm, loop_exists, nonterminating, v_algorithm


def show_vertices(n, rounds):
    run = v_algorithm(n, rounds)
    for i, verts in enumerate(run.rounds):
        print(f"V_{i} = {{" + ",".join(str(v) for v in verts) + "}")
    print("terminated" if run.terminated else f"still refining after {run.rounds_run} rounds")
    print()


print("== level 2: one insertion suffices ==")
show_vertices(2, 10)

print("== level 3: two rounds ==")
show_vertices(3, 10)

print("== level 5: the refinement never settles ==")
show_vertices(5, 4)

print("== the same story on residues ==")
run = d_algorithm(5, 5)
for i, seq in enumerate(run.rounds):
    print(f"D_{i} = {{" + ",".join(str(d) for d in seq) + "}")
print()

print("== the dichotomy, decided structurally ==")
print("level: terminates?")
for n in range(2, 13):
    blocked = nonterminating(n)
    assert blocked == loop_exists(n)
    print(f"  n={n:2}  {'never terminates' if blocked else 'terminates'}")
print()
print("the residue pair (1,2) regenerates itself for every n > 3, so no")
print("finite level-n neighbour path can connect 0 to 1 there")
