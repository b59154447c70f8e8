"""Enumeration of all racks of a given order up to isomorphism, plus the
4-Legendrian structure census over the rack / involutory / quandle / kei
families.

A rack on {0..n-1} is exactly a choice of column permutations b_0..b_{n-1}
with b_{b_z(y)} = b_z b_y b_z^-1 for all y, z.  The search backtracks over
columns with that conjugation constraint propagated in both directions, so
most columns are forced rather than branched.  Symmetry breaking: column 0
is required to have the minimal cycle type among all columns and to be the
canonical representative of its orbit under conjugation by the stabilizer
of the point 0; every rack has a relabeling of that shape.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .fourleg import classify_structures
from .perms import Perm, compose, conjugate, cycle_type, inverse
from .racks import (
    RackError,
    RackTable,
    find_isomorphism,
    rack_flags,
    rack_from_text,
    rack_to_text,
    validate_rack,
)

MAX_ENUM_ORDER = 6

FAMILY_NAMES = ("racks", "involutory", "quandles", "kei")


@dataclass(frozen=True)
class CensusRow:
    order: int
    family: str
    rack_count: int
    structure_count: int


@lru_cache(maxsize=None)
def _tables(n: int):
    """Integer-indexed S_n arithmetic: perms, index map, products, inverses,
    and a total rank on cycle types (identity type ranks lowest)."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    inv = [index[inverse(p)] for p in perms]
    prod = [[index[compose(p, q)] for q in perms] for p in perms]
    types = sorted({cycle_type(p) for p in perms})
    type_rank = {t: i for i, t in enumerate(types)}
    rank = [type_rank[cycle_type(p)] for p in perms]
    return perms, index, prod, inv, rank


@lru_cache(maxsize=None)
def _canonical_first_columns(n: int) -> tuple[int, ...]:
    """Perm indices minimal in their orbit under conjugation by Stab(0)."""
    perms, index, _, _, _ = _tables(n)
    stab0 = [h for h in perms if h[0] == 0]
    seen: set[Perm] = set()
    out = []
    for i, p in enumerate(perms):
        if p in seen:
            continue
        out.append(i)
        seen.update(conjugate(h, p) for h in stab0)
    return tuple(out)


def _search_shard(n: int, first_col: int) -> list[tuple[int, ...]]:
    """All column assignments with the given canonical first column."""
    perms, _, prod, inv, rank = _tables(n)
    base_rank = rank[first_col]
    pool = [i for i in range(len(perms)) if rank[i] >= base_rank]
    cols = [-1] * n
    assigned: list[int] = []
    results: list[tuple[int, ...]] = []

    def assign(t: int, r: int, trail: list[int]) -> bool:
        queue = [(t, r)]
        while queue:
            t, r = queue.pop()
            cur = cols[t]
            if cur != -1:
                if cur != r:
                    return False
                continue
            if rank[r] < base_rank:
                return False
            cols[t] = r
            trail.append(t)
            snapshot = list(assigned)
            assigned.append(t)
            pr = perms[r]
            prod_r = prod[r]
            ir = inv[r]
            snapshot.append(t)
            for b in snapshot:
                cb = cols[b]
                icb = inv[cb]
                # target b_b(t) is conj(b_b, b_t)
                queue.append((perms[cb][t], prod[prod[cb][r]][icb]))
                # target b_t(b) is conj(b_t, b_b)
                queue.append((pr[b], prod[prod_r[cb]][ir]))
                # backward: the column mapped onto t by b_b is forced
                queue.append((perms[icb][t], prod[prod[icb][r]][cb]))
            # backward through the new column: if b_t maps y onto an
            # assigned column s, then b_y = b_t^-1 b_s b_t is forced
            prod_ir = prod[ir]
            for y in range(n):
                s = cols[pr[y]]
                if s != -1 and cols[y] == -1:
                    queue.append((y, prod[prod_ir[s]][r]))
        return True

    def undo(trail: list[int]) -> None:
        for t in reversed(trail):
            cols[t] = -1
            assigned.pop()

    def extend() -> None:
        for y in range(n):
            if cols[y] == -1:
                break
        else:
            results.append(tuple(cols))
            return
        for r in pool:
            trail: list[int] = []
            if assign(y, r, trail):
                extend()
            undo(trail)

    trail: list[int] = []
    if assign(0, first_col, trail):
        extend()
    undo(trail)
    return results


def _cols_to_table(n: int, col_ids: tuple[int, ...]) -> RackTable:
    perms, _, _, _, _ = _tables(n)
    cols = [perms[i] for i in col_ids]
    rows = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
    return RackTable(n, rows)


def _invariant_key(rack: RackTable):
    flags = rack_flags(rack)
    col_types = [cycle_type(c) for c in rack.columns]
    kink_len = {x: 0 for x in range(rack.n)}
    for x in range(rack.n):
        length, i = 1, flags.kink[x]
        while i != x:
            length += 1
            i = flags.kink[i]
        kink_len[x] = length
    profile = tuple(sorted(
        (col_types[x],
         kink_len[x],
         tuple(sorted((rack.rows[x].count(v) for v in set(rack.rows[x])),
                      reverse=True)))
        for x in range(rack.n)
    ))
    return (flags.is_quandle, flags.is_involutory,
            cycle_type(flags.kink), profile)


def dedupe_racks(racks) -> list[RackTable]:
    """One representative per isomorphism class, deterministic order."""
    buckets: dict = {}
    candidates = sorted(racks, key=lambda r: (_invariant_key(r), r.rows))
    reps: list[RackTable] = []
    for rack in candidates:
        key = _invariant_key(rack)
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(rack, other) is not None for other in bucket):
            continue
        bucket.append(rack)
        reps.append(rack)
    return reps


def enumerate_racks(n: int, jobs: int = 1) -> list[RackTable]:
    """One RackTable per isomorphism class of racks of order ``n``."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > MAX_ENUM_ORDER:
        raise NotImplementedError(
            f"rack enumeration is supported for orders <= {MAX_ENUM_ORDER}")
    if n == 0:
        return [RackTable(0, ())]
    shards = _canonical_first_columns(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shard_results = list(pool.map(_search_shard, [n] * len(shards), shards))
    else:
        shard_results = [_search_shard(n, fc) for fc in shards]
    tables = [_cols_to_table(n, cols)
              for result in shard_results for cols in result]
    return dedupe_racks(tables)


def _in_family(flags, family: str) -> bool:
    if family == "racks":
        return True
    if family == "involutory":
        return flags.is_involutory
    if family == "quandles":
        return flags.is_quandle
    if family == "kei":
        return flags.is_involutory and flags.is_quandle
    raise ValueError(f"unknown family {family!r}")


def census_counts(n: int, racks: list[RackTable] | None = None,
                  jobs: int = 1) -> list[CensusRow]:
    """Structure-class counts per family (racks, involutory, quandles, kei)."""
    if racks is None:
        racks = enumerate_racks(n, jobs=jobs)
    per_rack = [(rack_flags(r), len(classify_structures(r))) for r in racks]
    rows = []
    for family in FAMILY_NAMES:
        members = [(f, c) for f, c in per_rack if _in_family(f, family)]
        rows.append(CensusRow(
            order=n,
            family=family,
            rack_count=len(members),
            structure_count=sum(c for _, c in members),
        ))
    return rows


# --- rack-set files ----------------------------------------------------------

def export_rack_set(racks, dirpath) -> list[str]:
    """Write one ``.rack`` file per table; returns the file names written."""
    import os

    os.makedirs(dirpath, exist_ok=True)
    names = []
    for i, rack in enumerate(racks):
        name = f"rack_{i:04d}.rack"
        with open(os.path.join(dirpath, name), "w", encoding="utf-8") as fh:
            fh.write(rack_to_text(rack))
        names.append(name)
    return names


def import_rack_set(dirpath) -> list[RackTable]:
    """Read every ``.rack`` file in a directory, validating each table."""
    import os

    names = sorted(f for f in os.listdir(dirpath) if f.endswith(".rack"))
    racks = []
    for name in names:
        with open(os.path.join(dirpath, name), encoding="utf-8") as fh:
            try:
                racks.append(rack_from_text(fh.read()))
            except RackError as exc:
                raise RackError(f"{name}: {exc}", axiom=exc.axiom,
                                witness=exc.witness) from exc
    return racks
