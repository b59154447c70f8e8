"""Finite racks as operation tables: validation, example families, symmetry groups.

Elements are always the indices 0..n-1.  ``table[x][y] = x > y`` where ``>``
is the rack operation, so each column ``y`` is the translation map ``b_y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .perms import (
    Perm,
    PermGroup,
    compose,
    conjugate,
    cycle_type,
    identity,
    inverse,
    subgroup_closure,
    validate_perm,
)


class RackError(ValueError):
    """Axiom or format violation, carrying the axiom name and a witness."""

    def __init__(self, message: str, axiom: str | None = None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


@dataclass(frozen=True)
class RackTable:
    """A validated n x n rack operation table."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def op(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def inv_op(self, x: int, y: int) -> int:
        """x >^-1 y, the inverse translation applied to x."""
        return self.inv_columns[y][x]

    def column(self, y: int) -> Perm:
        return self.columns[y]

    @cached_property
    def columns(self) -> tuple[Perm, ...]:
        return tuple(
            tuple(self.rows[x][y] for x in range(self.n)) for y in range(self.n)
        )

    @cached_property
    def inv_columns(self) -> tuple[Perm, ...]:
        return tuple(inverse(c) for c in self.columns)


@dataclass(frozen=True)
class RackFlags:
    is_quandle: bool
    is_involutory: bool
    kink: Perm


def validate_rack(table) -> RackTable:
    """Validate R1/R2 for a candidate table; raise RackError with a witness."""
    if isinstance(table, RackTable):
        rows = table.rows
    else:
        rows = tuple(tuple(row) for row in table)
    n = len(rows)
    for x, row in enumerate(rows):
        if len(row) != n:
            raise RackError(f"row {x} has length {len(row)}, expected {n}",
                            axiom="shape", witness=x)
        for y, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise RackError(f"entry out of range at ({x},{y}): {v!r}",
                                axiom="range", witness=(x, y))
    for y in range(n):
        col = [rows[x][y] for x in range(n)]
        if sorted(col) != list(range(n)):
            raise RackError(f"R1 violated: column {y} is not a bijection",
                            axiom="R1", witness=y)
    for z in range(n):
        col_z = [rows[x][z] for x in range(n)]
        for y in range(n):
            yz = col_z[y]
            for x in range(n):
                if rows[rows[x][y]][z] != rows[col_z[x]][yz]:
                    raise RackError(
                        f"R2 violated at (x,y,z)=({x},{y},{z})",
                        axiom="R2", witness=(x, y, z))
    return RackTable(n, rows)


def rack_flags(rack: RackTable) -> RackFlags:
    """Kink map x -> x>x plus the quandle / involutory flags."""
    kink = tuple(rack.rows[x][x] for x in range(rack.n))
    is_quandle = kink == identity(rack.n)
    is_involutory = all(
        compose(c, c) == identity(rack.n) for c in rack.columns
    )
    return RackFlags(is_quandle=is_quandle, is_involutory=is_involutory, kink=kink)


# --- example families ------------------------------------------------------

def trivial_quandle(n: int) -> RackTable:
    return validate_rack([[x] * n for x in range(n)])


def dihedral_quandle(n: int) -> RackTable:
    return validate_rack([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def alexander_quandle(n: int, t: int) -> RackTable:
    if n > 0 and gcd(t % n, n) != 1:
        raise RackError(f"alexander: gcd(t,n) must be 1, got t={t}, n={n}")
    return validate_rack(
        [[((1 - t) * y + t * x) % n for y in range(n)] for x in range(n)]
    )


def ts_rack(n: int, t: int, s: int) -> RackTable:
    if n > 0 and gcd(t % n, n) != 1:
        raise RackError(f"ts_rack: gcd(t,n) must be 1, got t={t}, n={n}")
    if n > 0 and (s * s - s * (1 - t)) % n != 0:
        raise RackError(f"ts_rack: s^2 = s(1-t) mod n fails for t={t}, s={s}, n={n}")
    return validate_rack([[(t * x + s * y) % n for y in range(n)] for x in range(n)])


def permutation_rack(sigma) -> RackTable:
    sigma = validate_perm(sigma)
    n = len(sigma)
    return validate_rack([[sigma[x]] * n for x in range(n)])


def _group_from_table(mult):
    """Validate a group multiplication table; return (table, identity, inverses)."""
    rows = tuple(tuple(row) for row in mult)
    n = len(rows)
    for x, row in enumerate(rows):
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise RackError(f"group table row {x} malformed", axiom="group")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    raise RackError(
                        f"group table not associative at ({a},{b},{c})",
                        axiom="group", witness=(a, b, c))
    ident = None
    for e in range(n):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
            ident = e
            break
    if ident is None:
        raise RackError("group table has no identity", axiom="group")
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if rows[a][b] == ident:
                inv[a] = b
                break
        if inv[a] is None:
            raise RackError(f"group table: no inverse for {a}", axiom="group")
    return rows, ident, inv


def conjugation_quandle(mult) -> RackTable:
    """Conj(G): a > b = b a b^-1, from an explicit multiplication table."""
    rows, _, inv = _group_from_table(mult)
    n = len(rows)
    return validate_rack(
        [[rows[rows[b][a]][inv[b]] for b in range(n)] for a in range(n)]
    )


def core_quandle(mult) -> RackTable:
    """Core(G): a > b = b a^-1 b."""
    rows, _, inv = _group_from_table(mult)
    n = len(rows)
    return validate_rack(
        [[rows[rows[b][inv[a]]][b] for b in range(n)] for a in range(n)]
    )


def takasaki_quandle(mult) -> RackTable:
    """T(A) for an abelian group table: a > b = 2b - a."""
    rows, _, inv = _group_from_table(mult)
    n = len(rows)
    for a in range(n):
        for b in range(n):
            if rows[a][b] != rows[b][a]:
                raise RackError(
                    f"takasaki requires an abelian group; ({a},{b}) do not commute",
                    axiom="abelian", witness=(a, b))
    return validate_rack(
        [[rows[rows[b][b]][inv[a]] for b in range(n)] for a in range(n)]
    )


FAMILIES = {
    "trivial": trivial_quandle,
    "dihedral": dihedral_quandle,
    "alexander": alexander_quandle,
    "ts": ts_rack,
    "permutation": permutation_rack,
    "conj": conjugation_quandle,
    "core": core_quandle,
    "takasaki": takasaki_quandle,
}


def make_family(tag: str, *args) -> RackTable:
    if tag not in FAMILIES:
        raise RackError(f"unknown rack family {tag!r}")
    return FAMILIES[tag](*args)


# --- automorphisms and isomorphisms ----------------------------------------

def _iso_search(src: RackTable, dst: RackTable, first_only: bool):
    """Backtracking search for table isomorphisms src -> dst with propagation.

    Assigning phi(x)=v forces phi(src[x][y]) = dst[v][phi(y)] for every
    already-assigned y (and symmetrically), which prunes hard.
    """
    n = src.n
    if dst.n != n:
        return []
    if n == 0:
        return [()]
    src_types = [cycle_type(c) for c in src.columns]
    dst_types = [cycle_type(c) for c in dst.columns]
    if sorted(src_types) != sorted(dst_types):
        return []
    srows, drows = src.rows, dst.rows
    fwd = [-1] * n
    bwd = [-1] * n
    found: list[Perm] = []

    def assign(x: int, v: int, trail: list[int]) -> bool:
        queue = [(x, v)]
        while queue:
            x, v = queue.pop()
            if fwd[x] != -1:
                if fwd[x] != v:
                    return False
                continue
            if bwd[v] != -1 or src_types[x] != dst_types[v]:
                return False
            fwd[x] = v
            bwd[v] = x
            trail.append(x)
            sx, dv = srows[x], drows[v]
            for y in range(n):
                fy = fwd[y]
                if fy == -1:
                    continue
                queue.append((sx[y], dv[fy]))
                queue.append((srows[y][x], drows[fy][v]))
        return True

    def extend() -> bool:
        for x in range(n):
            if fwd[x] == -1:
                break
        else:
            found.append(tuple(fwd))
            return first_only
        for v in range(n):
            if bwd[v] != -1 or src_types[x] != dst_types[v]:
                continue
            trail: list[int] = []
            if assign(x, v, trail) and extend():
                return True
            for i in trail:
                bwd[fwd[i]] = -1
                fwd[i] = -1
        return False

    extend()
    return found


def find_isomorphism(a: RackTable, b: RackTable) -> Perm | None:
    """A rack isomorphism a -> b, or None; deterministic first-found."""
    result = _iso_search(a, b, first_only=True)
    return result[0] if result else None


def automorphism_group(rack: RackTable) -> PermGroup:
    return PermGroup(rack.n, frozenset(_iso_search(rack, rack, first_only=False)))


def inner_group(rack: RackTable) -> PermGroup:
    """Inn(X), the closure of the column translation maps."""
    return subgroup_closure(rack.columns, degree=rack.n)


# --- text format ------------------------------------------------------------

def rack_to_text(rack: RackTable) -> str:
    lines = [str(rack.n)]
    for row in rack.rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def rack_from_text(text: str) -> RackTable:
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(([int(tok) for tok in line.split()], lineno))
        except ValueError:
            raise RackError(f"line {lineno}: expected integers, got {raw!r}")
    if not values:
        raise RackError("empty rack file")
    header, lineno = values[0]
    if len(header) != 1:
        raise RackError(f"line {lineno}: expected a single order, got {header}")
    n = header[0]
    body = values[1:]
    if len(body) != n:
        raise RackError(f"expected {n} table rows, got {len(body)}")
    return validate_rack([row for row, _ in body])


def load_rack(path) -> RackTable:
    with open(path, encoding="utf-8") as fh:
        return rack_from_text(fh.read())


def save_rack(rack: RackTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(rack_to_text(rack))
