"""The Kashiwara-Nakashima column model as an independent decomposition oracle.

Columns are strictly increasing words in 1 < ... < n < nbar < ... < 1bar
subject to a one-column admissibility condition; they realize the same
fundamental crystals as the monomial model but share no code with it, so
agreement between the two is genuine evidence.

Run:  python3 demos/tableau_oracle.py
"""

from collections import Counter

from cncrystal import (
    Column,
    column_crystal,
    column_is_admissible,
    tensor_decomposition_closed_form,
    tensor_highest_weights,
    weight_of_pair,
)

print("== admissibility at rank 2 ==")
for letters in [(1, 2), (1, -1), (2, -2), (2, -1)]:
    column = Column(2, letters)
    print(f"  {column}: {'admissible' if column_is_admissible(column) else 'rejected'}")
print()

print("== the rank-2 length-2 crystal, walked by lowering operators ==")
top = Column(2, (1, 2))
current, path = top, [str(top)]
while True:
    step = next(
        ((i, current.f(i)) for i in (1, 2) if current.f(i) is not None), None
    )
    if step is None:
        break
    path.append(f"-[{step[0]}]-> {step[1]}")
    current = step[1]
print("  " + " ".join(path))
print(f"  ({len(column_crystal(2, 2))} columns in total)")
print()

print("== highest-weight pairs in length-3 (x) length-3 at rank 5 ==")
pairs = tensor_highest_weights(5, 3, 3)
for u, v, w in pairs:
    print(f"  {u} (x) {v}   ->   B({w})")
oracle = Counter(w.coeffs for _, _, w in pairs)
closed = Counter(
    weight_of_pair(5, a, c).coeffs for a, c in tensor_decomposition_closed_form(5, 3, 3)
)
print(f"  oracle matches the closed form: {oracle == closed}")
