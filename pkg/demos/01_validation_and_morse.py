#!/usr/bin/env python3
# Parse a few permutations and see which ones encode a Sturm attractor.
from sturm import is_dissipative, is_meander, is_morse, is_sturm, parse_permutation

candidates = [
    "1 4 5 6 3 2 7",  # the seven-crossing workhorse example
    "1 3 2 4 5",      # arcs above the axis cross
    "1 2 4 3 5",      # arcs below the axis cross
    "2 1 3",          # does not fix the first label
    "1 4 3 2 5",      # the non-trivial five-crossing attractor
]

for text in candidates:
    p = parse_permutation(text)
    print(f"sigma = {text}")
    print(f"  dissipative={is_dissipative(p)}  morse={is_morse(p)}  meander={is_meander(p)}")
    print(f"  sturm={is_sturm(p)}  morse numbers={list(p.morse)}")
    print()

# The Morse numbers count clockwise half-windings of the meander tangent,
# so they rise and fall by exactly one along the curve.
p = parse_permutation("1 4 5 6 3 2 7")
for j, i in enumerate(p.morse, start=1):
    print(f"  equilibrium {j}: Morse index {i}, axis position {p.position(j)}")
