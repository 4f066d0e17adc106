"""Build gamma-tilde, its string complex, and check that it is presilting."""

from silting_lab.arcs import format_arc, gamma, index_sequence, is_simple, reverse
from silting_lab.bridge import arc_to_complex
from silting_lab.complexes import homology_dims, to_literal
from silting_lab.homotopy import hom_dims, is_presilting
from silting_lab.search import SearchConfig

F = SearchConfig().primes
g = gamma()
X = arc_to_complex(g)

print(f"arc {format_arc(g)}, reversed {format_arc(reverse(g))}")
print(f"index sequence {index_sequence(g)}, simple: {is_simple(g)}")
print("complex:")
print(to_literal(X), end="")
print(f"homology {homology_dims(X)}")
for d in range(0, 4):
    print(f"dim Hom(X, X[{d}]) per prime: {hom_dims(X, X, d, F)}")
print(f"presilting: {is_presilting(X, F)}")
