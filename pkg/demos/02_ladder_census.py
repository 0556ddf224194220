"""One cubic graph, every Hamiltonian cycle, every fate.

The five-rung Moebius ladder is the graph behind all three words of the
first demo.  Each Hamiltonian cycle through it turns the graph into a
Gauss diagram: cycle edges become the circle, the five leftover edges
become chords.  The census groups the cycles by the diagram class they
produce and asks which classes are realizable.
"""

from gaussflip import diagram_from_cycle, ham_census, hamiltonian_cycles, moebius_ladder

ladder = moebius_ladder(5)
print("edges of the ladder:")
print(ladder.to_edge_list())

cycles = hamiltonian_cycles(ladder)
print(f"{len(cycles)} Hamiltonian cycles:")
for h in cycles:
    word = diagram_from_cycle(ladder, h).word()
    print(f"  {h}  ->  {word}")
print()

report = ham_census(ladder)
for entry in report.entries:
    verdict = "realizable" if entry.realizable else "unrealizable"
    print(f"{entry.word}  from {entry.cycles} cycle(s)  {verdict}")
print()
print("Same graph throughout; only the cycle choice decides realizability.")
