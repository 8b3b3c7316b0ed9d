"""Combing words between special vertices, and their local recognition.

A word is a sequence of steps drawn from the catalog of edge germs.  The
combing of an ordered pair (x, y) lists Weyl images of the fundamental
coweights in ascending type order; which words arise this way is decided
edge-locally by two rules on consecutive steps, packaged both as a pair
predicate and as a finite state automaton over the edge classes.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import CapExceeded, RatVec, inner
from .complexes import SpecialVertex, _catalog_by_direction, special_vertex, step_catalog
from .rootsystem import RootSystem, coweight_coords
from .weyl import dominant_representative


@dataclass(frozen=True)
class EdgeClass:
    """A germ of the special graph at any vertex: direction plus type."""

    direction: RatVec
    etype: int


@dataclass(frozen=True)
class CombingWord:
    start: SpecialVertex
    letters: tuple[RatVec, ...]

    def __len__(self) -> int:
        return len(self.letters)


def edge_class(rs: RootSystem, direction: RatVec) -> EdgeClass:
    step = _catalog_by_direction(rs).get(direction)
    if step is None:
        raise ValueError(f"{direction} is not an edge direction")
    return EdgeClass(step.direction, step.etype)


def combing_word(rs: RootSystem, x: SpecialVertex, y: SpecialVertex) -> CombingWord:
    """The distinguished word from x to y.

    Move the difference to the dominant cone by a Weyl element w, read off
    its coweight coordinates k_1..k_n, then emit k_i copies of the image
    of coweight i under w, in ascending i.  The resulting letter sequence
    does not depend on the choice of w: whenever k_i > 0, every element of
    the stabilizer of the dominant difference fixes coweight i.
    """
    v_dom, w = dominant_representative(rs, y.position - x.position)
    k = coweight_coords(rs, v_dom)
    letters: list[RatVec] = []
    for i, (ki, cw) in enumerate(zip(k, rs.coweights), start=1):
        if ki.denominator != 1 or ki < 0:
            raise ValueError(f"difference is not a lattice vector (k_{i} = {ki})")
        letters.extend([w.apply(cw)] * int(ki))
    return CombingWord(x, tuple(letters))


def word_vertices(rs: RootSystem, word: CombingWord) -> tuple[SpecialVertex, ...]:
    """All vertices visited by a word, start and endpoint included."""
    out = [word.start]
    coords = word.start.coords
    pos = word.start.position
    for d in word.letters:
        step = _catalog_by_direction(rs)[d]
        coords = tuple(a + b for a, b in zip(coords, step.coords))
        pos = pos + d
        out.append(SpecialVertex(coords, pos))
    return tuple(out)


def word_endpoint(rs: RootSystem, word: CombingWord) -> SpecialVertex:
    return word_vertices(rs, word)[-1]


def _is_positive_multiple(u: RatVec, v: RatVec) -> bool:
    """True when v = t*u for some rational t > 0."""
    t: Fraction | None = None
    for a, b in zip(u.coords, v.coords):
        if a == 0:
            if b != 0:
                return False
            continue
        s = Fraction(b, a)
        if t is None:
            t = s
        elif s != t:
            return False
    return t is not None and t > 0


@lru_cache(maxsize=None)
def _coweight_pairing(rs: RootSystem) -> dict[tuple[int, int], Fraction]:
    n = rs.rank
    return {
        (i, j): inner(rs.coweights[i - 1], rs.coweights[j - 1])
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }


def is_transition(rs: RootSystem, d1: RatVec, d2: RatVec) -> bool:
    """The two-step local rule.

    Consecutive steps d1 (type i) then d2 (type j) are allowed when the
    word keeps straight (d2 a positive multiple of d1) or turns upward:
    i < j and <d1, d2> equals the pairing of coweights i and j.
    """
    e1 = edge_class(rs, d1)
    e2 = edge_class(rs, d2)
    if _is_positive_multiple(d1, d2):
        return True
    if e1.etype < e2.etype and inner(d1, d2) == _coweight_pairing(rs)[(e1.etype, e2.etype)]:
        return True
    return False


def is_local_path(rs: RootSystem, letters: Sequence[RatVec]) -> bool:
    """Whether every consecutive pair of steps satisfies the local rule.

    Raises ValueError when a letter is not an edge direction at all.
    """
    classes = [edge_class(rs, d) for d in letters]
    for a, b in zip(classes, classes[1:]):
        if not is_transition(rs, a.direction, b.direction):
            return False
    return True


class Automaton:
    """Edge classes as states; every state is initial and accepting.

    A word over the directions is in the language exactly when every
    consecutive pair is a transition, which the subset construction in
    `accepts` checks without special cases.
    """

    def __init__(self, states: tuple[EdgeClass, ...], transitions: frozenset[tuple[EdgeClass, EdgeClass]]):
        self.states = states
        self.transitions = transitions
        succ: dict[EdgeClass, list[EdgeClass]] = {s: [] for s in states}
        for a, b in sorted(transitions, key=_transition_key):
            succ[a].append(b)
        self.successors = {a: tuple(bs) for a, bs in succ.items()}
        self._by_direction = {s.direction: s for s in states}

    def accepts(self, letters: Sequence[RatVec]) -> bool:
        live = set(self.states)
        for d in letters:
            state = self._by_direction.get(d)
            if state is None or state not in live:
                return False
            live = set(self.successors[state])
        return True


def _state_key(s: EdgeClass) -> tuple:
    return (s.etype, s.direction.coords)


def _transition_key(t: tuple[EdgeClass, EdgeClass]) -> tuple:
    return (_state_key(t[0]), _state_key(t[1]))


@lru_cache(maxsize=None)
def build_fsa(rs: RootSystem) -> Automaton:
    states = tuple(
        sorted((EdgeClass(s.direction, s.etype) for s in step_catalog(rs)), key=_state_key)
    )
    transitions = frozenset(
        (a, b) for a in states for b in states if is_transition(rs, a.direction, b.direction)
    )
    return Automaton(states, transitions)


def accepted_words(fsa: Automaton, max_len: int, cap: int = 10**7) -> Iterator[tuple[RatVec, ...]]:
    """Every word in the automaton's language with at most max_len letters."""
    yield ()
    count = 1
    stack: list[tuple[tuple[RatVec, ...], EdgeClass]] = []
    for s in fsa.states:
        stack.append(((s.direction,), s))
    while stack:
        word, last = stack.pop()
        count += 1
        if count > cap:
            raise CapExceeded(f"word cap {cap} hit")
        yield word
        if len(word) < max_len:
            for nxt in fsa.successors[last]:
                stack.append((word + (nxt.direction,), nxt))


def enumerate_local_paths(
    rs: RootSystem, max_len: int, cap: int = 10**7
) -> Iterator[tuple[RatVec, ...]]:
    """Every letter sequence of length <= max_len obeying the local rule.

    Generated directly from the transition relation, so this agrees with
    the automaton's language by construction of both from `is_transition`;
    the two are still compared in tests as independent traversals.
    """
    catalog = step_catalog(rs)
    succ: dict[RatVec, list[RatVec]] = {}
    for a in catalog:
        succ[a.direction] = [
            b.direction for b in catalog if is_transition(rs, a.direction, b.direction)
        ]
    yield ()
    count = 1
    work = [(s.direction,) for s in reversed(catalog)]
    while work:
        word = work.pop()
        count += 1
        if count > cap:
            raise CapExceeded(f"path cap {cap} hit")
        yield word
        if len(word) < max_len:
            work.extend(word + (d,) for d in succ[word[-1]])


def path_endpoint_coords(rs: RootSystem, letters: Sequence[RatVec]) -> tuple[int, ...]:
    coords = [0] * rs.rank
    for d in letters:
        step = _catalog_by_direction(rs)[d]
        for t, c in enumerate(step.coords):
            coords[t] += c
    return tuple(coords)


def local_path_word(rs: RootSystem, start: SpecialVertex, letters: Sequence[RatVec]) -> CombingWord:
    if not is_local_path(rs, letters):
        raise ValueError("letters violate the local rule")
    return CombingWord(start, tuple(letters))


def fsa_to_dot(rs: RootSystem, fsa: Automaton) -> str:
    """Graphviz rendering; states named by type and direction."""
    lines = ["digraph combing {", "  rankdir=LR;"]
    names = {s: f"t{s.etype}_{k}" for k, s in enumerate(fsa.states)}
    for s in fsa.states:
        lines.append(f'  {names[s]} [label="{s.etype}: {s.direction}" shape=circle];')
    for a, b in sorted(fsa.transitions, key=_transition_key):
        lines.append(f"  {names[a]} -> {names[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def word_as_dict(rs: RootSystem, word: CombingWord) -> dict:
    """JSON-ready description of a word."""
    delta = path_endpoint_coords(rs, word.letters)
    return {
        "start": [str(c) for c in word.start.coords],
        "letters": [
            {"direction": str(d), "type": edge_class(rs, d).etype} for d in word.letters
        ],
        "length": len(word.letters),
        "end": [str(a + b) for a, b in zip(word.start.coords, delta)],
    }
