#!/usr/bin/env python3
# Suspension: rotate the crossing block, add two extreme equilibria, and
# every inner Morse and zero number climbs by one.
from sturm import SturmPermutation, format_permutation, suspend, verify_suspension

p = SturmPermutation((1, 4, 5, 6, 3, 2, 7))
result = suspend(p)
q = result.suspended

print("original: ", format_permutation(p), "   Morse", list(p.morse))
print("suspended:", format_permutation(q), "Morse", list(q.morse))
print("zero-based display:", format_permutation(q, zero_based=True))

report = verify_suspension(p)
print()
for item in report.items:
    print(f"  [{'ok' if item.passed else 'FAIL'}] {item.name}")
print("all checks:", report.passed)

# Iterating builds towers of increasingly unstable attractors.
tower = SturmPermutation((1,))
for _ in range(3):
    tower = suspend(tower).suspended
print("\ntriple suspension of the point:", format_permutation(tower))
print("its Morse numbers:", list(tower.morse))
