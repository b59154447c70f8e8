"""Combinatorial front-projection codes for oriented Legendrian knots.

A front code is a cyclic sequence of events read along the orientation:
cusps (side L/R, vertical U/D) and crossing passes (id, sign, over/under).
From it we compute the classical invariants and the finitely presented
fundamental 4-Legendrian rack: arcs break at under-passes, cusp operators
accumulate along each arc, and every crossing contributes one relation

    color(out) = W(color(in)) >^sign color(over)

with W the arc's accumulated cusp word (earliest operator applied first).
"""
from __future__ import annotations

from dataclasses import dataclass


class FrontError(ValueError):
    """Front-code validation or parse failure."""


@dataclass(frozen=True)
class Cusp:
    side: str       # 'L' or 'R'
    vertical: str   # 'U' or 'D'


@dataclass(frozen=True)
class CrossingPass:
    crossing: int
    sign: int       # +1 or -1
    role: str       # 'O' (over) or 'U' (under)


FrontEvent = Cusp | CrossingPass


@dataclass(frozen=True)
class FrontCode:
    events: tuple[FrontEvent, ...]


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rot: int
    writhe: int
    up_cusps: int
    down_cusps: int


# Cusp-to-operator convention, isolated so a mirrored convention is a
# one-line change: side and vertical pick the matching structure map.
_CUSP_OPERATOR = {
    ("L", "U"): "ul",
    ("R", "U"): "ur",
    ("L", "D"): "dl",
    ("R", "D"): "dr",
}


def cusp_operator(side: str, vertical: str) -> str:
    return _CUSP_OPERATOR[(side, vertical)]


def validate_front(events) -> FrontCode:
    """Validate the cyclic event sequence; raise FrontError with the reason."""
    events = tuple(events)
    roles: dict[int, set[str]] = {}
    signs: dict[int, int] = {}
    cusp_sides = []
    up = down = 0
    for i, ev in enumerate(events):
        if isinstance(ev, Cusp):
            if ev.side not in ("L", "R") or ev.vertical not in ("U", "D"):
                raise FrontError(f"event {i}: malformed cusp {ev!r}")
            cusp_sides.append(ev.side)
            if ev.vertical == "U":
                up += 1
            else:
                down += 1
        elif isinstance(ev, CrossingPass):
            if ev.sign not in (1, -1) or ev.role not in ("O", "U"):
                raise FrontError(f"event {i}: malformed crossing pass {ev!r}")
            if ev.crossing in signs and signs[ev.crossing] != ev.sign:
                raise FrontError(
                    f"crossing {ev.crossing}: inconsistent sign between passes")
            signs[ev.crossing] = ev.sign
            had = roles.setdefault(ev.crossing, set())
            if ev.role in had:
                raise FrontError(
                    f"crossing {ev.crossing}: repeated {ev.role!r} pass")
            had.add(ev.role)
        else:
            raise FrontError(f"event {i}: unknown event {ev!r}")
    for cid, had in roles.items():
        if had != {"O", "U"}:
            raise FrontError(f"crossing {cid}: needs one over and one under pass")
    if up == 0 or down == 0:
        raise FrontError("front must have at least one up and one down cusp")
    if (up + down) % 2 != 0:
        raise FrontError("total cusp count must be even")
    for a, b in zip(cusp_sides, cusp_sides[1:] + cusp_sides[:1]):
        if a == b:
            raise FrontError(
                f"adjacent cusps on the same side ({a}) violate alternation")
    return FrontCode(events)


def classical_invariants(code: FrontCode) -> ClassicalInvariants:
    """tb = w - (D+U)/2 and rot = (D-U)/2."""
    signs: dict[int, int] = {}
    up = down = 0
    for ev in code.events:
        if isinstance(ev, Cusp):
            if ev.vertical == "U":
                up += 1
            else:
                down += 1
        else:
            signs[ev.crossing] = ev.sign
    writhe = sum(signs.values())
    return ClassicalInvariants(
        tb=writhe - (down + up) // 2,
        rot=(down - up) // 2,
        writhe=writhe,
        up_cusps=up,
        down_cusps=down,
    )


def rotate_basepoint(code: FrontCode, k: int) -> FrontCode:
    k %= len(code.events)
    return FrontCode(code.events[k:] + code.events[:k])


def stabilize(code: FrontCode, sign: int, position: int | None = None) -> FrontCode:
    """Insert a zig-zag at ``position``: two down cusps for sign=+1 (tb-1,
    rot+1), two up cusps for sign=-1 (tb-1, rot-1)."""
    if sign not in (1, -1):
        raise FrontError("stabilization sign must be +1 or -1")
    if position is None:
        position = len(code.events)
    if not 0 <= position <= len(code.events):
        raise FrontError(f"insertion position {position} out of range")
    vertical = "D" if sign == 1 else "U"
    for sides in (("L", "R"), ("R", "L")):
        events = (code.events[:position]
                  + (Cusp(sides[0], vertical), Cusp(sides[1], vertical))
                  + code.events[position:])
        try:
            return validate_front(events)
        except FrontError:
            continue
    raise FrontError(
        f"no cusp-side order keeps alternation at position {position}")


# --- fundamental presentation -------------------------------------------------

@dataclass(frozen=True)
class Relation:
    in_arc: int
    out_arc: int
    over_arc: int
    word: tuple[str, ...]   # cusp operators in traversal order
    sign: int
    crossing: int


@dataclass(frozen=True)
class Presentation:
    generators: int
    relations: tuple[Relation, ...]
    # Cusp word of the single closed arc when there are no crossings.
    closure_word: tuple[str, ...] = ()


def fundamental_presentation(code: FrontCode) -> Presentation:
    code = validate_front(code.events)
    events = code.events
    under_positions = [i for i, ev in enumerate(events)
                       if isinstance(ev, CrossingPass) and ev.role == "U"]
    if not under_positions:
        word = tuple(cusp_operator(ev.side, ev.vertical) for ev in events
                     if isinstance(ev, Cusp))
        return Presentation(generators=1, relations=(), closure_word=word)

    # Rotate so traversal starts just after the first under-pass; arcs are
    # then numbered 0..m-1 in traversal order.
    start = under_positions[0] + 1
    order = [events[(start + k) % len(events)] for k in range(len(events))]
    arc_of_position = []
    arc = 0
    for ev in order:
        arc_of_position.append(arc)
        if isinstance(ev, CrossingPass) and ev.role == "U":
            arc += 1
    m = arc  # number of arcs == number of under-passes
    over_arc = {}
    for pos, ev in enumerate(order):
        if isinstance(ev, CrossingPass) and ev.role == "O":
            over_arc[ev.crossing] = arc_of_position[pos]

    relations = []
    word: list[str] = []
    current = 0
    for ev in order:
        if isinstance(ev, Cusp):
            word.append(cusp_operator(ev.side, ev.vertical))
        elif ev.role == "U":
            relations.append(Relation(
                in_arc=current,
                out_arc=(current + 1) % m,
                over_arc=over_arc[ev.crossing],
                word=tuple(word),
                sign=ev.sign,
                crossing=ev.crossing,
            ))
            word = []
            current += 1
    return Presentation(generators=m, relations=tuple(relations))


# --- fixtures ----------------------------------------------------------------

def standard_unknot() -> FrontCode:
    return validate_front((Cusp("R", "U"), Cusp("L", "D")))


def left_trefoil() -> FrontCode:
    """The left-handed trefoil front with (tb, rot) = (-6, -1): three negative
    crossings, U=4, D=2, arc cusp words (ur dl), (ur ul), (dr ul)."""
    return validate_front((
        Cusp("R", "U"), Cusp("L", "D"),
        CrossingPass(3, -1, "O"), CrossingPass(1, -1, "U"),
        Cusp("R", "U"), Cusp("L", "U"),
        CrossingPass(2, -1, "O"), CrossingPass(3, -1, "U"),
        Cusp("R", "D"), Cusp("L", "U"),
        CrossingPass(1, -1, "O"), CrossingPass(2, -1, "U"),
    ))


def stabilized_unknot(positive: int, negative: int,
                      alternate: bool = False) -> FrontCode:
    """S+^a S-^b of the standard unknot; ``alternate`` interleaves the signs
    (and varies positions) to produce a different event sequence with the
    same classical invariants."""
    code = standard_unknot()
    if alternate:
        signs = []
        a, b = positive, negative
        while a or b:
            if b:
                signs.append(-1)
                b -= 1
            if a:
                signs.append(1)
                a -= 1
        for i, sign in enumerate(signs):
            code = stabilize(code, sign, position=0 if i % 2 else None)
    else:
        for _ in range(positive):
            code = stabilize(code, 1)
        for _ in range(negative):
            code = stabilize(code, -1)
    return code


def kinked_unknot(signs=(-1,)) -> FrontCode:
    """Unknot with one Reidemeister-1 style kink per sign."""
    events: list[FrontEvent] = [Cusp("R", "U"), Cusp("L", "D")]
    for i, sign in enumerate(signs, start=1):
        events.extend((CrossingPass(i, sign, "O"), CrossingPass(i, sign, "U")))
    return validate_front(events)


def trefoil_with_kinks() -> FrontCode:
    """Left trefoil plus one positive and one negative kink: same (tb, rot)."""
    base = left_trefoil()
    extra = (CrossingPass(4, 1, "O"), CrossingPass(4, 1, "U"),
             CrossingPass(5, -1, "O"), CrossingPass(5, -1, "U"))
    return validate_front(base.events + extra)


def builtin_fixtures() -> dict[str, FrontCode]:
    """Named front codes used throughout the test and verification suites."""
    return {
        "unknot": standard_unknot(),
        "trefoil": left_trefoil(),
        "unknot_s1p": stabilized_unknot(1, 0),
        "unknot_s1m": stabilized_unknot(0, 1),
        "unknot_s1p1m": stabilized_unknot(1, 1),
        "unknot_s1m1p": stabilized_unknot(1, 1, alternate=True),
        "unknot_kinks_mm": kinked_unknot((-1, -1)),
        "unknot_kinks_pm": kinked_unknot((1, -1)),
        "unknot_s2p3m": stabilized_unknot(2, 3),
        "unknot_s2p3m_alt": stabilized_unknot(2, 3, alternate=True),
        "unknot_s3p2m": stabilized_unknot(3, 2),
        "trefoil_kinks_pm": trefoil_with_kinks(),
    }


# --- text format ---------------------------------------------------------------

def front_to_text(code: FrontCode) -> str:
    lines = []
    for ev in code.events:
        if isinstance(ev, Cusp):
            lines.append(f"CUSP {ev.side} {ev.vertical}")
        else:
            sign = "+" if ev.sign == 1 else "-"
            lines.append(f"X {ev.crossing} {sign} {ev.role}")
    return "\n".join(lines) + "\n"


def front_from_text(text: str) -> FrontCode:
    events: list[FrontEvent] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "CUSP" and len(parts) == 3:
            events.append(Cusp(parts[1], parts[2]))
        elif parts[0] == "X" and len(parts) == 4 and parts[2] in ("+", "-"):
            try:
                cid = int(parts[1])
            except ValueError:
                raise FrontError(f"line {lineno}: bad crossing id {parts[1]!r}")
            events.append(CrossingPass(cid, 1 if parts[2] == "+" else -1, parts[3]))
        else:
            raise FrontError(f"line {lineno}: unrecognized event {raw!r}")
    return validate_front(events)


def load_front(path) -> FrontCode:
    with open(path, encoding="utf-8") as fh:
        return front_from_text(fh.read())


def save_front(code: FrontCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(front_to_text(code))
