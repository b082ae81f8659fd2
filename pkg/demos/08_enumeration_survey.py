#!/usr/bin/env python3
# Exhaustive counts at small sizes, and the self-check harness.
from sturm import count_sturm, enumerate_sturm, property_harness

print("Sturm permutations by size:")
for n in (1, 3, 5, 7, 9, 11):
    print(f"  n={n:2d}: {count_sturm(n)}")

print("\nall seven-crossing Sturm permutations:")
for p in enumerate_sturm(7):
    print("  ", p, " Morse", list(p.morse))

print("\nproperty harness over every permutation up to size 7:")
report = property_harness(7)
print(report.text())
