"""Solving single isolation-game instances.

Two players alternately pick vertices; a pick must dominate a vertex that
still lies in a live component (one containing a forbidden pattern) of the
graph minus everything dominated so far. Dominator wants a short game,
Staller a long one. This script walks through the basic API on a few
hand-sized instances.
"""

from isogame import (
    Mover,
    cycle_graph,
    h_graph,
    mask_list,
    optimal_moves,
    initial_closure,
    path_graph,
    single_edge_family,
    single_vertex_family,
    solve,
)

fam = single_edge_family()  # classic isolation game: leftover parts must be edge-free

print("== Cycle C6 ==")
c6 = cycle_graph(6)
for mover in (Mover.DOMINATOR, Mover.STALLER):
    result = solve(c6, fam, mover)
    print(f"  {mover.name.lower()} starts: {result.value} moves, "
          f"line {list(result.principal_line)}")

print()
print("== Path P7 ==")
p7 = path_graph(7)
result = solve(p7, fam, Mover.DOMINATOR)
print(f"  dominator starts: {result.value} moves")
state = initial_closure(p7, fam, 0)
best = optimal_moves(p7, fam, state, Mover.DOMINATOR)
print(f"  optimal first moves: {mask_list(best)} (on P7 every opening ties; "
      "the center is the classical pick)")

print()
print("== The 12-vertex gadget ==")
h = h_graph()
for marks, tag in ((0, "unmarked"), ([3], "anchor pre-marked")):
    d = solve(h, fam, Mover.DOMINATOR, marks).value
    s = solve(h, fam, Mover.STALLER, marks).value
    print(f"  {tag}: dominator-start {d}, staller-start {s}")

print()
print("== Domination game is the single-vertex family ==")
dom = single_vertex_family()
print(f"  P7 domination game value: {solve(p7, dom, Mover.DOMINATOR).value}")
print(f"  P7 isolation game value:  {solve(p7, fam, Mover.DOMINATOR).value}")
