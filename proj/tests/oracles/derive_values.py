"""Independent derivation of the frozen expected values used by the C++ tests.

Uses sympy for symbolic block sums over U_p and networkx for graph6 decoding
and isomorphism counts. Shares no code with the C++ engines. Run:

    python3 tests/oracles/derive_values.py
"""
from fractions import Fraction
from itertools import combinations, product

import networkx as nx
import sympy as sp

p = sp.symbols("p")


def t_up(n, edges):
    """Block sum of the edge product of U_p over {0,1}^n, each box of measure 2^-n."""
    total = 0
    for blocks in product((0, 1), repeat=n):
        term = 1
        for u, v in edges:
            term *= (2 * p - 1) if blocks[u] == blocks[v] else -1
        total += term
    return sp.expand(total / sp.Integer(2) ** n)


def pinned(n, edges, a, b, ba, bb):
    total = 0
    for blocks in product((0, 1), repeat=n):
        if blocks[a] != ba or blocks[b] != bb:
            continue
        term = 1
        for u, v in edges:
            term *= (2 * p - 1) if blocks[u] == blocks[v] else -1
        total += term
    return sp.expand(total / sp.Integer(2) ** n)


def delta(n, edges):
    return sp.expand(t_up(n, edges) - (p - 1) ** len(edges))


def deficit(n, edges):
    total = 0
    for size in range(2, len(edges) + 1, 2):
        for sub in combinations(edges, size):
            total += delta(n, list(sub))
    return sp.expand(total)


def coeffs(expr):
    poly = sp.Poly(expr, p)
    return [str(c) for c in reversed(poly.all_coeffs())] if expr != 0 else []


def witness(d):
    q = Fraction(1, 2)
    while True:
        value = sp.Rational(q.numerator, q.denominator)
        if d.subs(p, value) < 0:
            return value, d.subs(p, value)
        q /= 2


K3 = (3, [(0, 1), (0, 2), (1, 2)])
P3 = (3, [(0, 1), (1, 2)])
PAW = (4, [(0, 1), (0, 2), (1, 2), (2, 3)])
DIAMOND = (4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
BOWTIE = (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
K4 = (4, list(combinations(range(4), 2)))


def cycle(k):
    return (k, [(i, (i + 1) % k) for i in range(k)])


def path(k):
    return (k + 1, [(i, i + 1) for i in range(k)])


print("graph6 Bw:", sorted(nx.from_graph6_bytes(b"Bw").edges()))
print("graph6 Bg:", sorted(nx.from_graph6_bytes(b"Bg").edges()))
print("graph6 B?:", sorted(nx.from_graph6_bytes(b"B?").edges()))
print("graph6 of paw:", nx.to_graph6_bytes(nx.Graph(PAW[1]), header=False).strip())

print("t K3:", coeffs(t_up(*K3)))
print("t P3:", coeffs(t_up(*P3)))
print("t paw:", coeffs(t_up(*PAW)))
print("t paw == t K3 (p-1):", sp.expand(t_up(*PAW) - t_up(*K3) * (p - 1)) == 0)
for k in range(3, 9):
    print(f"delta C{k}:", coeffs(delta(*cycle(k))))
for k in range(1, 9):
    print(f"delta P{k}edges:", coeffs(delta(*path(k))))
print("delta paw:", coeffs(delta(*PAW)))
print("delta K4:", coeffs(delta(*K4)))
print("cherry f:", coeffs(pinned(3, [(0, 2), (1, 2)], 0, 1, 0, 0)))
print("cherry g:", coeffs(pinned(3, [(0, 2), (1, 2)], 0, 1, 0, 1)))
for name, g in [("K3", K3), ("paw", PAW), ("C4", cycle(4)), ("C5", cycle(5)),
                ("diamond", DIAMOND), ("bowtie", BOWTIE), ("K4", K4)]:
    d = deficit(*g)
    line = f"deficit {name}: {coeffs(d)}"
    if sp.Poly(d, p).coeff_monomial(p**3) < 0:
        w, v = witness(d)
        line += f" witness {w} value {v}"
    print(line)

# inequality for paw with W = (1 + U_{1/2}) / 2: 2^(1-e) * deficit(1/2)
print("paw inequality at 1/2:", sp.Rational(1, 8) * deficit(*PAW).subs(p, sp.Rational(1, 2)))

# oracle values at p = 1/4
print("K2 at 1/4:", (p - 1).subs(p, sp.Rational(1, 4)))
print("K3 at 1/4:", t_up(*K3).subs(p, sp.Rational(1, 4)))

# isomorphism class counts from the graph atlas (all graphs up to 7 vertices)
atlas = nx.graph_atlas_g()
for n in range(1, 8):
    print(f"graphs on {n} vertices:", sum(1 for g in atlas if g.number_of_nodes() == n))
print("graphs on 7 vertices with a triangle and e>=4:",
      sum(1 for g in atlas if g.number_of_nodes() == 7 and g.number_of_edges() >= 4
          and sum(nx.triangles(g).values()) > 0))
print("graphs on 6 vertices with a triangle and e>=4:",
      sum(1 for g in atlas if g.number_of_nodes() == 6 and g.number_of_edges() >= 4
          and sum(nx.triangles(g).values()) > 0))
