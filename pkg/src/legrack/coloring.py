"""Coloring counts of Legendrian fronts by finite 4-Legendrian racks.

``count_colorings`` is the generic backtracking counter over a fundamental
presentation.  For permutation racks the whole presentation collapses to a
single loop relation; ``reduce_cusp_word`` performs the cancellation of
up/down cusp pairs against powers of the rack's defining permutation, and
``perm_fast_count`` counts fixed points of the reduced loop map directly
from the classical invariants.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fourleg import FourLegRack, FourLegStructure
from .perms import (
    Perm,
    compose,
    cycle_string,
    identity,
    inverse,
    power,
    validate_perm,
)
from .racks import permutation_rack, rack_flags
from .front import FrontCode, Presentation, classical_invariants, fundamental_presentation

U_LETTERS = ("ul", "ur")
D_LETTERS = ("dl", "dr")
LEFT_LETTERS = ("ul", "dl")


def _maps(rack: FourLegRack) -> dict[str, Perm]:
    s = rack.structure
    return {"ul": s.ul, "ur": s.ur, "dl": s.dl, "dr": s.dr}


def apply_word(word, maps, x: int) -> int:
    """Apply a cusp word in traversal order (earliest letter first)."""
    for letter in word:
        x = maps[letter][x]
    return x


def _relation_output(rel, maps, rack, a: int, o: int) -> int:
    v = apply_word(rel.word, maps, a)
    return rack.op(v, o) if rel.sign == 1 else rack.inv_op(v, o)


def count_colorings(pres: Presentation, fl: FourLegRack) -> int:
    """Number of homomorphisms from the presented fundamental rack to ``fl``.

    Backtracking over generator values with forward propagation: a relation
    whose input and over-strand are colored forces its output.
    """
    rack = fl.rack
    maps = _maps(fl)
    n = rack.n
    m = pres.generators
    if not pres.relations:
        return sum(1 for x in range(n)
                   if apply_word(pres.closure_word, maps, x) == x)
    values = [-1] * m

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for rel in pres.relations:
                a, o, b = values[rel.in_arc], values[rel.over_arc], values[rel.out_arc]
                if a == -1 or o == -1:
                    continue
                out = _relation_output(rel, maps, rack, a, o)
                if b == -1:
                    values[rel.out_arc] = out
                    trail.append(rel.out_arc)
                    changed = True
                elif b != out:
                    return False
        return True

    def extend() -> int:
        for g in range(m):
            if values[g] == -1:
                break
        else:
            return 1
        total = 0
        for x in range(n):
            trail = [g]
            values[g] = x
            if propagate(trail):
                total += extend()
            for i in trail:
                values[i] = -1
        return total

    return extend()


def brute_force_colorings(pres: Presentation, fl: FourLegRack) -> int:
    """Independent oracle: scan all |X|^generators assignments."""
    rack = fl.rack
    maps = _maps(fl)
    if not pres.relations:
        return sum(1 for x in range(rack.n)
                   if apply_word(pres.closure_word, maps, x) == x)
    count = 0
    for values in itertools.product(range(rack.n), repeat=pres.generators):
        if all(values[rel.out_arc] == _relation_output(
                rel, maps, rack, values[rel.in_arc], values[rel.over_arc])
               for rel in pres.relations):
            count += 1
    return count


# --- word reduction (permutation racks) ---------------------------------------

@dataclass(frozen=True)
class ReducedLoop:
    """Canonical loop form: a signed number of alternating down-cusp pairs
    (negative means inverse pairs, arising when up cusps outnumber down
    cusps) composed with sigma^(rot+tb)."""

    pair_count: int
    leading_letter: str | None
    sigma_exponent: int


def reduce_cusp_word(word, writhe: int, up: int, down: int) -> ReducedLoop:
    """Cancel adjacent opposite-vertical cusp pairs against sigma powers.

    Each cancellation consumes one sigma; min(U, D) cancellations leave
    |D - U| same-vertical letters.  A surviving up-pair equals
    sigma^-2 (down-pair)^-1, so the exponent lands at rot+tb either way.
    """
    letters = list(word)
    for letter in letters:
        if letter not in U_LETTERS + D_LETTERS:
            raise ValueError(f"unknown cusp letter {letter!r}")
    if sum(1 for l in letters if l in U_LETTERS) != up:
        raise ValueError("word has wrong number of up-cusp letters")
    if sum(1 for l in letters if l in D_LETTERS) != down:
        raise ValueError("word has wrong number of down-cusp letters")
    for a, b in zip(letters, letters[1:]):
        if (a in LEFT_LETTERS) == (b in LEFT_LETTERS):
            raise ValueError("word does not alternate between left and right letters")

    exponent = writhe
    reduced = letters[:]
    while True:
        for i in range(len(reduced) - 1):
            if (reduced[i] in U_LETTERS) != (reduced[i + 1] in U_LETTERS):
                del reduced[i:i + 2]
                exponent -= 1
                break
        else:
            break
    assert len(reduced) == abs(down - up)
    pair_count = (down - up) // 2
    leading = reduced[0] if reduced else None
    if pair_count < 0:
        # u-pairs: convert exponent to the canonical rot+tb form
        exponent -= 2 * abs(pair_count)
    return ReducedLoop(pair_count, leading, exponent)


def loop_permutation_reduced(red: ReducedLoop, sigma: Perm,
                             ul: Perm, ur: Perm) -> Perm:
    """The loop map (d-pair)^pair_count o sigma^sigma_exponent.

    A surviving up-pair led by ul (resp. ur) corresponds to the inverse
    down-pair led by dl (resp. dr).
    """
    sigma_inv = inverse(sigma)
    dl = compose(inverse(ur), sigma_inv)
    dr = compose(inverse(ul), sigma_inv)
    base = power(sigma, red.sigma_exponent)
    if red.pair_count == 0:
        return base
    lead = {"dl": "dl", "ul": "dl", "dr": "dr", "ur": "dr"}[red.leading_letter]
    pair = compose(dr, dl) if lead == "dl" else compose(dl, dr)
    return compose(power(pair, red.pair_count), base)


def unreduced_loop_permutation(pres: Presentation, sigma: Perm,
                               ul: Perm, ur: Perm) -> Perm:
    """Loop map assembled letter by letter in traversal order: cusp maps and
    one sigma^sign per crossing relation."""
    fl = permutation_fourleg(sigma, ul, ur)
    maps = _maps(fl)
    loop = identity(len(sigma))
    for letter in pres.closure_word:
        loop = compose(maps[letter], loop)
    for rel in pres.relations:
        for letter in rel.word:
            loop = compose(maps[letter], loop)
        loop = compose(power(sigma, rel.sign), loop)
    return loop


def permutation_fourleg(sigma, ul, ur) -> FourLegRack:
    """4-Legendrian permutation rack; ul and ur must commute with sigma.

    For a permutation rack U_X is exactly the centralizer of sigma, so the
    commutation check replaces the generic gl_center membership test.
    """
    sigma = validate_perm(sigma)
    ul = validate_perm(ul)
    ur = validate_perm(ur)
    if compose(ul, sigma) != compose(sigma, ul) \
            or compose(ur, sigma) != compose(sigma, ur):
        raise ValueError("ul and ur must commute with the defining permutation")
    sigma_inv = inverse(sigma)
    structure = FourLegStructure(
        ul, ur,
        compose(inverse(ur), sigma_inv),
        compose(inverse(ul), sigma_inv),
    )
    return FourLegRack(permutation_rack(sigma), structure)


def _permutation_base(fl: FourLegRack) -> Perm:
    sigma = rack_flags(fl.rack).kink
    if fl.rack.rows != permutation_rack(sigma).rows:
        raise ValueError("not a permutation rack")
    return sigma


def fixed_points(p: Perm) -> int:
    return sum(1 for i, v in enumerate(p) if i == v)


def perm_fast_count(fl: FourLegRack, inv) -> int:
    """Coloring count of any front with classical invariants ``inv`` by the
    permutation 4-Legendrian rack ``fl``; depends only on (tb, rot)."""
    sigma = _permutation_base(fl)
    rot, tb = inv.rot, inv.tb
    red = ReducedLoop(
        pair_count=rot,
        leading_letter=None if rot == 0 else ("dl" if rot > 0 else "ul"),
        sigma_exponent=rot + tb,
    )
    loop = loop_permutation_reduced(red, sigma, fl.structure.ul, fl.structure.ur)
    return fixed_points(loop)


# --- indistinguishability verification -------------------------------------------

@dataclass(frozen=True)
class ColoringRow:
    code_name: str
    tb: int
    rot: int
    rack_id: str
    ul: str
    ur: str
    count: int


@dataclass(frozen=True)
class VerifyReport:
    groups: dict[tuple[int, int], tuple[str, ...]]
    rows: tuple[ColoringRow, ...]
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def permutation_structures(max_order: int, conjugacy_reps_only: bool = True):
    """Yield (rack_id, FourLegRack) over permutation racks of order 1..max_order
    and all 4-Legendrian structures (pairs commuting with sigma) on each."""
    from .perms import centralizer, symmetric_group, cycle_type

    for n in range(1, max_order + 1):
        sym = symmetric_group(n)
        seen_types = set()
        for sigma in sym.sorted_elements():
            if conjugacy_reps_only:
                t = cycle_type(sigma)
                if t in seen_types:
                    continue
                seen_types.add(t)
            commuting = centralizer(sym, [sigma]).sorted_elements()
            for ul in commuting:
                for ur in commuting:
                    rack_id = f"perm{n}:{cycle_string(sigma)}"
                    yield rack_id, permutation_fourleg(sigma, ul, ur)


def verify_indistinguishability(codes, max_order: int) -> VerifyReport:
    """Group fronts by (tb, rot) and check that every 4-Legendrian permutation
    rack of order <= max_order gives equal coloring counts within each group.

    ``codes`` maps names to FrontCode values.  Coloring counts by permutation
    racks depend only on (tb, rot), so any violation indicates an
    implementation bug and is reported with a witness.
    """
    named = list(codes.items()) if isinstance(codes, dict) else list(codes)
    groups: dict[tuple[int, int], list[str]] = {}
    pres = {}
    invs = {}
    for name, code in named:
        inv = classical_invariants(code)
        invs[name] = inv
        groups.setdefault((inv.tb, inv.rot), []).append(name)
        pres[name] = fundamental_presentation(code)

    rows = []
    violations = []
    for rack_id, fl in permutation_structures(max_order):
        ul_str = cycle_string(fl.structure.ul)
        ur_str = cycle_string(fl.structure.ur)
        counts = {}
        for name, _ in named:
            counts[name] = count_colorings(pres[name], fl)
            inv = invs[name]
            rows.append(ColoringRow(name, inv.tb, inv.rot, rack_id,
                                    ul_str, ur_str, counts[name]))
        for key, members in groups.items():
            vals = {counts[name] for name in members}
            if len(vals) > 1:
                detail = ", ".join(f"{m}={counts[m]}" for m in members)
                violations.append(
                    f"(tb,rot)={key} rack={rack_id} ul={ul_str} ur={ur_str}: {detail}")
    return VerifyReport(
        groups={k: tuple(v) for k, v in groups.items()},
        rows=tuple(rows),
        violations=tuple(violations),
    )
