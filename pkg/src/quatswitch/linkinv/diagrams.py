"""Signed Gauss codes and virtual braid words.

A Gauss code is the cyclic sequence of classical crossing passages met while
travelling once around a knot, written ``O1+ U2- ...``: role (Over/Under),
crossing id, crossing sign. A braid word is a sequence of ``s<i>``
(sigma_i), ``S<i>`` (sigma_i^-1) and ``v<i>`` (virtual tau_i) tokens.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..errors import BadPosition, BraidIndexError, DiagramSyntaxError, DiagramValidationError

_PASSAGE = re.compile(r"([OU])(\d+)([+-])")


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int  # +1 or -1

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    passages: Tuple[Passage, ...] = ()

    def __post_init__(self):
        validate_gauss(self.passages)

    def __str__(self):
        return "".join(str(p) for p in self.passages)

    def __len__(self):
        return len(self.passages)

    @property
    def crossings(self) -> List[int]:
        return sorted({p.crossing for p in self.passages})

    def relabel(self) -> "GaussCode":
        """Renumber crossings 1, 2, ... in order of first appearance."""
        mapping = {}
        for p in self.passages:
            mapping.setdefault(p.crossing, len(mapping) + 1)
        return GaussCode(tuple(Passage(mapping[p.crossing], p.over, p.sign) for p in self.passages))

    def rotate(self, k: int) -> "GaussCode":
        n = len(self.passages)
        if n == 0:
            return self
        k %= n
        return GaussCode(self.passages[k:] + self.passages[:k])

    def canonical(self) -> str:
        """Smallest relabelled rotation, for comparing codes up to relabelling."""
        if not self.passages:
            return ""
        return min(str(self.rotate(k).relabel()) for k in range(len(self.passages)))


def validate_gauss(passages: Iterable[Passage]) -> None:
    seen = {}
    for p in passages:
        if p.sign not in (1, -1):
            raise DiagramValidationError(f"crossing {p.crossing}: sign must be +1 or -1")
        seen.setdefault(p.crossing, []).append(p)
    for cid, ps in seen.items():
        if len(ps) != 2:
            raise DiagramValidationError(f"crossing {cid} appears {len(ps)} times, expected 2")
        if ps[0].over == ps[1].over:
            role = "over" if ps[0].over else "under"
            raise DiagramValidationError(f"crossing {cid} is {role} on both passages")
        if ps[0].sign != ps[1].sign:
            raise DiagramValidationError(f"crossing {cid} has mismatched signs")


def parse_gauss(text: str) -> GaussCode:
    """Parse ``O1+U1+`` style codes; tokens may be separated by whitespace or commas."""
    cleaned = text.strip()
    passages = []
    pos = 0
    index = 0
    while pos < len(cleaned):
        if cleaned[pos] in " ,\t":
            pos += 1
            continue
        m = _PASSAGE.match(cleaned, pos)
        if not m:
            raise DiagramSyntaxError(f"bad Gauss token at {cleaned[pos:pos + 6]!r}", index)
        role, cid, sign = m.groups()
        if int(cid) < 1:
            raise DiagramSyntaxError("crossing ids must be positive", index)
        passages.append(Passage(int(cid), role == "O", 1 if sign == "+" else -1))
        pos = m.end()
        index += 1
    return GaussCode(tuple(passages))


# ---------------------------------------------------------------------------
# Braid words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Letter:
    kind: str  # "s" (sigma), "S" (sigma inverse) or "v" (virtual)
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"

    def inverse(self) -> "Letter":
        return Letter({"s": "S", "S": "s", "v": "v"}[self.kind], self.index)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidIndexError("a braid needs at least one strand")
        for pos, letter in enumerate(self.letters):
            if not 1 <= letter.index < self.strands:
                raise BraidIndexError(
                    f"generator {letter} at position {pos} out of range for {self.strands} strands")

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    for pos, tok in enumerate(t for t in re.split(r"[\s,]+", text.strip()) if t):
        m = re.fullmatch(r"([sSv])(\d+)", tok)
        if not m:
            raise DiagramSyntaxError(f"bad braid token {tok!r}", pos)
        letters.append(Letter(m.group(1), int(m.group(2))))
    return BraidWord(strands, tuple(letters))


def braid_closure_gauss(word: BraidWord) -> GaussCode:
    """Gauss code of the closure of a one-component braid.

    The rightmost letter sits at the bottom of the braid; strands run
    upwards. At sigma_i the strand entering at position i crosses over the
    one entering at i + 1 (a positive crossing); sigma_i^-1 is its mirror.
    """
    n = word.strands
    order = list(reversed(word.letters))
    # for each level, which crossing (if any) and the passage each position makes
    events = []
    for level, letter in enumerate(order):
        events.append((level + 1, letter))
    visited = set()
    passages = []
    pos = 0
    start = 0
    while True:
        for cid, letter in events:
            i = letter.index - 1
            if pos not in (i, i + 1):
                continue
            if letter.kind == "v":
                pos = i + 1 if pos == i else i
                continue
            left = pos == i
            over = left if letter.kind == "s" else not left
            passages.append(Passage(cid, over, 1 if letter.kind == "s" else -1))
            pos = i + 1 if left else i
        visited.add(start)
        start = pos
        if pos in visited:
            break
    if len(visited) != n:
        raise DiagramValidationError("braid closure has more than one component")
    used = Counter(p.crossing for p in passages)
    if any(c != 2 for c in used.values()):
        raise AssertionError("closure traversal missed a passage")
    return GaussCode(tuple(passages)).relabel()


# ---------------------------------------------------------------------------
# Reidemeister move fixtures
# ---------------------------------------------------------------------------


def _fresh(code: GaussCode) -> int:
    return max((p.crossing for p in code.passages), default=0) + 1


def r1(code: GaussCode, position: int = 0, sign: int = 1, over_first: bool = True) -> GaussCode:
    """Insert a kink ``O k U k`` (or ``U k O k``) before passage ``position``."""
    if not 0 <= position <= len(code):
        raise BadPosition(f"position {position} outside 0..{len(code)}")
    k = _fresh(code)
    pair = [Passage(k, over_first, sign), Passage(k, not over_first, sign)]
    ps = list(code.passages)
    return GaussCode(tuple(ps[:position] + pair + ps[position:]))


def r2(code: GaussCode, first: int = 0, second: int = None, sign: int = 1,
       nested: bool = True, over_first: bool = True) -> GaussCode:
    """Push one segment across another, creating two crossings of opposite sign.

    Segments are named by insertion positions ``first <= second`` in the
    passage list. The segment at ``first`` gets two passages of one role
    (Over when ``over_first``), the segment at ``second`` the other role, in
    reversed order when ``nested`` (antiparallel strands) or the same order
    otherwise. With ``first == second`` only the nested form is a move.
    """
    if second is None:
        second = first
    n = len(code)
    if not (0 <= first <= second <= n):
        raise BadPosition(f"positions {first}, {second} outside 0..{n}")
    if first == second and not nested:
        raise BadPosition("a same-segment second move must be nested")
    a = _fresh(code)
    b = a + 1
    role = over_first
    head = [Passage(a, role, sign), Passage(b, role, -sign)]
    tail_ids = (b, a) if nested else (a, b)
    tail = [Passage(c, not role, sign if c == a else -sign) for c in tail_ids]
    ps = list(code.passages)
    return GaussCode(tuple(ps[:first] + head + ps[first:second] + tail + ps[second:]))


def r1_variants(code: GaussCode, position: int = 0) -> List[GaussCode]:
    return [r1(code, position, sign, over_first) for sign in (1, -1) for over_first in (True, False)]


def r2_variants(code: GaussCode) -> List[GaussCode]:
    out = []
    n = len(code)
    for first in range(n + 1):
        for second in range(first, n + 1):
            for nested in (True, False):
                if first == second and not nested:
                    continue
                for over_first in (True, False):
                    for sign in (1, -1):
                        out.append(r2(code, first, second, sign, nested, over_first))
    return out


def move_fixtures(kind: str, base: GaussCode, position: int = 0, **kwargs) -> GaussCode:
    if kind.upper() == "R1":
        return r1(base, position, **kwargs)
    if kind.upper() == "R2":
        return r2(base, position, **kwargs)
    raise ValueError(f"unknown move {kind!r}; expected R1 or R2")


UNKNOT = GaussCode()
VIRTUAL_TREFOIL = parse_gauss("O1+O2+U1+U2+")
