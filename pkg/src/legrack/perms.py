"""Permutations of {0..n-1} and small explicit permutation groups.

A permutation is a plain tuple ``p`` with ``p[i]`` the image of ``i``.
The composition convention is fixed as ``(p o q)(x) = p(q(x))``; every
other module states its formulas in this convention.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def validate_perm(image) -> Perm:
    """Check that ``image`` is a bijection on {0..n-1} and return it as a tuple."""
    p = tuple(image)
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {p!r}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """Return p o q, i.e. x -> p(q(x))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    """Integer power of a permutation (negative powers via the inverse)."""
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    for _ in range(k):
        result = compose(p, result)
    return result


def conjugate(g: Perm, p: Perm) -> Perm:
    """Return g p g^-1."""
    if len(g) != len(p):
        raise ValueError(f"degree mismatch: {len(g)} vs {len(p)}")
    out = [0] * len(g)
    for i, pi in enumerate(p):
        out[g[i]] = g[pi]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points omitted, each cycle led by its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Sorted (descending) cycle lengths, including fixed points."""
    lengths = [len(c) for c in cycles(p)]
    lengths.extend([1] * (len(p) - sum(lengths)))
    return tuple(sorted(lengths, reverse=True))


def cycle_string(p: Perm) -> str:
    """Render in cycle notation, e.g. ``(0 1 2)(3 4)``; ``()`` for the identity."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cs)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like ``(0 1 2)(3 4)`` into a permutation of ``degree``."""
    text = text.strip()
    if text in ("()", "", "id"):
        return identity(degree)
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    image = list(range(degree))
    touched = set()
    for group in re.findall(r"\(([^()]*)\)", text):
        entries = [int(tok) for tok in re.split(r"[\s,]+", group.strip()) if tok]
        if any(e >= degree for e in entries):
            raise ValueError(f"cycle entry out of range for degree {degree}: {text!r}")
        if len(set(entries)) != len(entries) or touched & set(entries):
            raise ValueError(f"repeated point in cycle notation: {text!r}")
        touched.update(entries)
        for a, b in zip(entries, entries[1:] + entries[:1]):
            image[a] = b
    return tuple(image)


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group stored by explicit element listing."""

    degree: int
    elements: frozenset[Perm]

    def __post_init__(self):
        for p in self.elements:
            if len(p) != self.degree:
                raise ValueError(f"element degree {len(p)} != group degree {self.degree}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, frozenset({identity(degree)}))


def symmetric_group(n: int) -> PermGroup:
    return PermGroup(n, frozenset(itertools.permutations(range(n))))


def subgroup_closure(generators, degree: int | None = None) -> PermGroup:
    """Smallest group containing the generators (breadth-first closure)."""
    gens = [validate_perm(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator set")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("generators of mixed degree")
    elements = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in elements:
                    elements.add(b)
                    nxt.append(b)
        frontier = nxt
    return PermGroup(degree, frozenset(elements))


def centralizer(group: PermGroup, others) -> PermGroup:
    """Elements of ``group`` commuting with every permutation in ``others``."""
    others = [validate_perm(s) for s in others]
    if any(len(s) != group.degree for s in others):
        raise ValueError("degree mismatch between group and centralized set")
    kept = frozenset(
        g for g in group.elements
        if all(compose(g, s) == compose(s, g) for s in others)
    )
    return PermGroup(group.degree, kept)


@dataclass(frozen=True)
class PairOrbit:
    """One orbit of pairs under diagonal conjugation, with its canonical rep."""

    representative: tuple[Perm, Perm]
    members: tuple[tuple[Perm, Perm], ...]

    @property
    def size(self) -> int:
        return len(self.members)


def diagonal_pair_orbits(pairs, group: PermGroup) -> list[PairOrbit]:
    """Partition ``pairs`` into orbits of g.(a,b) = (gag^-1, gbg^-1).

    Orbits are returned sorted by their lexicographically least pair.
    """
    pairs = {(validate_perm(a), validate_perm(b)) for a, b in pairs}
    for a, b in pairs:
        if len(a) != group.degree or len(b) != group.degree:
            raise ValueError("pair degree does not match acting group")
    elements = group.sorted_elements()
    seen: set[tuple[Perm, Perm]] = set()
    orbits = []
    for pair in sorted(pairs):
        if pair in seen:
            continue
        a, b = pair
        orbit = {(conjugate(g, a), conjugate(g, b)) for g in elements}
        if not orbit <= pairs:
            raise ValueError("pair set is not closed under the group action")
        seen |= orbit
        members = tuple(sorted(orbit))
        orbits.append(PairOrbit(members[0], members))
    return sorted(orbits, key=lambda o: o.representative)


def burnside_pair_count(group: PermGroup) -> int:
    """Number of orbits of G x G under diagonal conjugation: (1/|G|) sum |C(g)|^2."""
    elements = group.sorted_elements()
    total = 0
    for g in elements:
        c = sum(1 for h in elements if compose(g, h) == compose(h, g))
        total += c * c
    assert total % group.order == 0
    return total // group.order
