"""Classical Weyl groups as (signed) permutations, plus dihedral groups.

Every group is fully enumerated on construction (the library targets desk
scale, |W| up to a few thousand) and elements are interned: an element is
an integer id, stable for the lifetime of the group object, with id 0 the
identity.  All downstream tables (Kazhdan-Lusztig, cells) key on id pairs.

One-line notation: ``w = (w(1), ..., w(n))`` with signed values.  Right
multiplication by ``s_i`` (i < n) swaps positions i, i+1; in type B the
extra generator negates position n; in type D it maps the last two entries
``(a, b)`` to ``(-b, -a)``.  Lengths come from the standard inversion
statistics: ``inv`` for A, ``inv + neg + nsp`` for B, ``inv + nsp`` for D,
where ``neg`` counts negative entries and ``nsp`` the pairs i < j with
``w(i) + w(j) < 0``.

Type D reuses the type B machinery: it is enumerated as the even-sign
subgroup, with its own length statistic and generator set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError


class CoxeterGroup:
    """Base class: enumeration, multiplication tables, Bruhat order.

    Subclasses provide ``num_gens``, ``_identity_elem``, a right
    multiplication ``_rmult_elem`` and a length function ``_length_elem``
    on raw element representations; everything else is generic.
    """

    name: str = "?"
    num_gens: int = 0

    def __init__(self):
        self._build()

    # -- subclass surface ------------------------------------------------
    def _identity_elem(self):
        raise NotImplementedError

    def _rmult_elem(self, elem, s: int):
        raise NotImplementedError

    def _length_elem(self, elem) -> int:
        raise NotImplementedError

    def _inverse_elem(self, elem):
        raise NotImplementedError

    # -- enumeration and tables ------------------------------------------
    def _build(self):
        ident = self._identity_elem()
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for s in range(self.num_gens):
                    ws = self._rmult_elem(w, s)
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        elems = sorted(seen, key=lambda w: (self._length_elem(w), w))
        self.elements: list = elems
        self.index: dict = {w: i for i, w in enumerate(elems)}
        self.size = len(elems)
        self.length = [self._length_elem(w) for w in elems]
        self.rmult = [
            [self.index[self._rmult_elem(w, s)] for s in range(self.num_gens)]
            for w in elems
        ]
        self.inverse = [self.index[self._inverse_elem(w)] for w in elems]
        # s * w == (w^-1 * s)^-1
        self.lmult = [
            [self.inverse[self.rmult[self.inverse[i]][s]] for s in range(self.num_gens)]
            for i in range(self.size)
        ]
        self.right_descents = [
            frozenset(s for s in range(self.num_gens) if self.length[self.rmult[i][s]] < self.length[i])
            for i in range(self.size)
        ]
        self.left_descents = [
            frozenset(s for s in range(self.num_gens) if self.length[self.lmult[i][s]] < self.length[i])
            for i in range(self.size)
        ]
        self.identity = self.index[ident]
        self.longest = max(range(self.size), key=lambda i: self.length[i])
        if self.length.count(self.length[self.longest]) != 1:
            raise DomainError("no unique longest element; group build is broken")
        self._downsets: list[frozenset[int]] | None = None

    # -- generic group operations ----------------------------------------
    def mult(self, x: int, y: int) -> int:
        """Product x*y via the reduced word of y."""
        for s in self._word_of(y):
            x = self.rmult[x][s]
        return x

    def _word_of(self, w: int) -> list[int]:
        """A reduced word, read off right descents."""
        word: list[int] = []
        while self.length[w] > 0:
            s = min(self.right_descents[w])
            word.append(s)
            w = self.rmult[w][s]
        word.reverse()
        return word

    def reduced_word(self, w: int) -> list[int]:
        return self._word_of(w)

    def downset(self, w: int) -> frozenset[int]:
        """All x with x <= w in Bruhat order."""
        if self._downsets is None:
            sets: list[frozenset[int]] = [frozenset()] * self.size
            for i in sorted(range(self.size), key=lambda i: self.length[i]):
                if self.length[i] == 0:
                    sets[i] = frozenset([i])
                    continue
                s = min(self.left_descents[i])
                below = sets[self.lmult[i][s]]
                sets[i] = below | frozenset(self.lmult[y][s] for y in below)
            self._downsets = sets
        return self._downsets[w]

    def bruhat_leq(self, x: int, w: int) -> bool:
        return x in self.downset(w)

    def coset_min_reps(self, J: Iterable[int], side: str = "right") -> list[int]:
        """Minimal length representatives of W/W_J (right) or W_J\\W (left).

        ``side="right"`` returns the elements with no right descent in J.
        """
        Jset = frozenset(J)
        if not Jset <= set(range(self.num_gens)):
            raise DomainError(f"invalid generator subset {sorted(Jset)}")
        desc = self.right_descents if side == "right" else self.left_descents
        return [w for w in range(self.size) if not (desc[w] & Jset)]

    def parabolic_subgroup(self, J: Iterable[int]) -> list[int]:
        """Element ids of the standard parabolic W_J."""
        Jset = sorted(set(J))
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in Jset:
                    ws = self.rmult[w][s]
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        return sorted(seen, key=lambda i: (self.length[i], i))


class WeylGroup(CoxeterGroup):
    """Weyl group of a classical family at the given rank.

    B and C share the hyperoctahedral group; the family letter is kept for
    root-data conventions used elsewhere.
    """

    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family not in ("A", "B", "C", "D"):
            raise DomainError(f"unknown family {family!r}")
        if rank < 1 or (family == "D" and rank < 2):
            raise DomainError(f"bad rank {rank} for family {family}")
        self.family = family
        self.rank = rank
        self.n = rank + 1 if family == "A" else rank  # number of one-line slots
        self.num_gens = rank
        self.name = f"{family}{rank}"
        super().__init__()

    def _identity_elem(self):
        return tuple(range(1, self.n + 1))

    def _rmult_elem(self, w, s: int):
        n = self.n
        if self.family in ("B", "C") and s == self.num_gens - 1:
            return w[: n - 1] + (-w[n - 1],)
        if self.family == "D" and s == self.num_gens - 1:
            return w[: n - 2] + (-w[n - 1], -w[n - 2])
        i = s  # swap positions s+1, s+2 (0-based s)
        return w[:i] + (w[i + 1], w[i]) + w[i + 2 :]

    def _length_elem(self, w) -> int:
        inv = sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])
        if self.family == "A":
            return inv
        nsp = sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] + w[j] < 0)
        if self.family == "D":
            return inv + nsp
        neg = sum(1 for v in w if v < 0)
        return inv + neg + nsp

    def _inverse_elem(self, w):
        out = [0] * self.n
        for i, v in enumerate(w, start=1):
            if v > 0:
                out[v - 1] = i
            else:
                out[-v - 1] = -i
        return tuple(out)

    # -- one-line parsing / printing --------------------------------------
    def parse_element(self, text: str) -> int:
        """Parse one-line notation like ``[2,-1,3]`` (or ``2,-1,3``) to an id.

        The identity and generator words ``s1 s2 ...``/``e`` are accepted too.
        """
        text = text.strip()
        if text in ("e", "id", "1") and self.n > 1:
            return self.identity
        if text == "w0":
            return self.longest
        if text and text[0] == "s" or " " in text and text.lstrip("-").split()[0].startswith("s"):
            w = self.identity
            for tok in text.split():
                if not tok.startswith("s"):
                    raise ValueError(f"bad generator token {tok!r}")
                k = int(tok[1:])
                if not 1 <= k <= self.num_gens:
                    raise DomainError(f"generator s{k} out of range for {self.name}")
                w = self.rmult[w][k - 1]
            return w
        vals = tuple(int(v) for v in text.strip("[]()").split(","))
        if sorted(abs(v) for v in vals) != list(range(1, self.n + 1)):
            raise DomainError(f"{vals} is not a signed permutation of 1..{self.n}")
        if self.family == "A" and any(v < 0 for v in vals):
            raise DomainError("type A elements have no signs")
        if self.family == "D" and sum(1 for v in vals if v < 0) % 2 != 0:
            raise DomainError("type D elements carry an even number of signs")
        return self.index[vals]

    def one_line(self, w: int) -> str:
        return "[" + ",".join(str(v) for v in self.elements[w]) + "]"

    def act_on_weight(self, w: int, coords: Sequence) -> tuple:
        """Natural action on epsilon coordinates: entry j moves to slot |w(j)|."""
        out = list(coords)
        elem = self.elements[w]
        for j, v in enumerate(elem):
            if v > 0:
                out[v - 1] = coords[j]
            else:
                out[-v - 1] = -coords[j]
        return tuple(out)


class DihedralGroup(CoxeterGroup):
    """The Coxeter group I2(m) with two generators whose product has order m.

    m = 2, 3, 4, 6 give the Weyl groups A1 x A1, A2, B2 and G2.  Elements
    are alternating words, stored as (length, first letter).
    """

    def __init__(self, m: int):
        if m < 2:
            raise DomainError("dihedral order parameter must be >= 2")
        self.m = m
        self.num_gens = 2
        self.name = f"I2({m})"
        super().__init__()

    def _identity_elem(self):
        return (0, 0)

    def _canon(self, k: int, first: int):
        if k == 0:
            return (0, 0)
        if k == self.m:
            return (self.m, 0)
        return (k, first)

    def _rmult_elem(self, elem, s: int):
        k, first = elem
        if k == self.m:  # longest element: both right descents
            return self._canon(self.m - 1, s if self.m % 2 == 1 else 1 - s)
        last = first if k % 2 == 1 else 1 - first
        if k == 0:
            return (1, s)
        if s == last:
            return self._canon(k - 1, first)
        return self._canon(k + 1, first)

    def _length_elem(self, elem) -> int:
        return elem[0]

    def _inverse_elem(self, elem):
        k, first = elem
        if k == 0 or k == self.m:
            return elem
        last = first if k % 2 == 1 else 1 - first
        return (k, last)

    def parse_element(self, text: str) -> int:
        w = self.identity
        text = text.strip()
        if text in ("e", "id", "1"):
            return w
        if text == "w0":
            return self.longest
        for tok in text.split():
            k = int(tok[1:]) if tok.startswith("s") else int(tok)
            w = self.rmult[w][k - 1]
        return w

    def one_line(self, w: int) -> str:
        word = self.reduced_word(w)
        return " ".join(f"s{s + 1}" for s in word) if word else "e"


def make_group(descriptor: str) -> CoxeterGroup:
    """Build a group from ``"B3"``-style text or ``"I2(6)"`` for dihedral."""
    descriptor = descriptor.strip()
    if descriptor.upper().startswith("I2"):
        m = int(descriptor.rstrip(")").split("(")[1])
        return DihedralGroup(m)
    if descriptor.upper().startswith("G2"):
        return DihedralGroup(6)
    return WeylGroup(descriptor[0], int(descriptor[1:]))


@dataclass(frozen=True)
class WeylElement:
    """A group element as carried across the API boundary."""

    group: CoxeterGroup
    eid: int

    @property
    def length(self) -> int:
        return self.group.length[self.eid]

    @property
    def one_line(self) -> str:
        return self.group.one_line(self.eid)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.group is not self.group:
            raise DomainError("elements of different groups")
        return WeylElement(self.group, self.group.mult(self.eid, other.eid))
