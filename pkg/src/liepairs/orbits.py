"""Nilpotent-orbit combinatorics for so_{p+2} and its real form so(p,2).

Complex nilpotent orbits are Young diagrams of p+2 where even rows come
in pairs (P1) and an all-even diagram carries a numeral I or II (P2).
Real orbits are signed Young diagrams of signature (p,2): signs
alternate across rows, even rows start with + (P3), an all-even diagram
carries two numerals (P4), and a diagram with odd rows carries one
numeral exactly when all odd rows agree on having an even number of +
boxes, or all agree on an even number of - boxes (P5).

The characteristic of an orbit is the row-data recipe on the multiset
of weights d_i-1, d_i-3, ..., 1-d_i; an orbit is even iff every
characteristic entry is 0 or 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple                 # weakly decreasing positive ints
    numeral: str | None = None  # "I" / "II" when all rows are even

    @property
    def size(self):
        return sum(self.rows)

    def __repr__(self):
        tag = f", {self.numeral}" if self.numeral else ""
        return f"YD({self.rows}{tag})"


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: tuple                 # ((length, leading_sign), ...) canonical
    numerals: tuple = ()        # 0, 1 or 2 entries in {"I", "II"}

    @property
    def shape(self):
        return tuple(l for l, _ in self.rows)

    def sign_string(self):
        out = []
        for length, lead in self.rows:
            other = "-" if lead == "+" else "+"
            out.append("".join(lead if i % 2 == 0 else other
                               for i in range(length)))
        return "/".join(out)

    def plus_count(self):
        return sum(_count_signs(l, s)[0] for l, s in self.rows)

    def minus_count(self):
        return sum(_count_signs(l, s)[1] for l, s in self.rows)

    def __repr__(self):
        tag = "".join("," + n for n in self.numerals)
        return f"SYD({self.sign_string()}{tag})"


def _count_signs(length, lead):
    """(#plus, #minus) in a row of given length and leading sign."""
    lead_count = (length + 1) // 2
    other = length // 2
    if lead == "+":
        return lead_count, other
    return other, lead_count


def _partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def enumerate_yd(n):
    """All complex nilpotent orbits of so_n as decorated diagrams."""
    out = []
    for rows in _partitions(n):
        counts = {}
        for r in rows:
            counts[r] = counts.get(r, 0) + 1
        if any(r % 2 == 0 and c % 2 for r, c in counts.items()):
            continue
        if rows and all(r % 2 == 0 for r in rows):
            out.append(YoungDiagram(rows, "I"))
            out.append(YoungDiagram(rows, "II"))
        else:
            out.append(YoungDiagram(rows))
    return out


def _canonical_rows(rows):
    # + sorts before - within a length block
    return tuple(sorted(rows, key=lambda t: (-t[0], t[1] != "+")))


def enumerate_dyo(p):
    """All real nilpotent orbits of so(p,2) as signed diagrams."""
    if p < 2:
        raise ValueError("signature (p,2) requires p >= 2")
    n = p + 2
    out = []
    for shape in _partitions(n):
        counts = {}
        for r in shape:
            counts[r] = counts.get(r, 0) + 1
        if any(r % 2 == 0 and c % 2 for r, c in counts.items()):
            continue
        odd_positions = [i for i, r in enumerate(shape) if r % 2]
        seen = set()
        for leads in product("+-", repeat=len(odd_positions)):
            rows = []
            it = iter(leads)
            for r in shape:
                rows.append((r, "+" if r % 2 == 0 else next(it)))
            minus = sum(_count_signs(l, s)[1] for l, s in rows)
            if minus != 2:
                continue
            canon = _canonical_rows(rows)
            if canon in seen:
                continue
            seen.add(canon)
            out.extend(_numeral_variants(canon))
    return out


def _numeral_variants(rows):
    shape = [l for l, _ in rows]
    if all(l % 2 == 0 for l in shape):
        # P4: two numerals, four orbits
        return [SignedYoungDiagram(rows, (a, b))
                for a in ("I", "II") for b in ("I", "II")]
    odd = [(l, s) for l, s in rows if l % 2]
    plus_even = all(_count_signs(l, s)[0] % 2 == 0 for l, s in odd)
    minus_even = all(_count_signs(l, s)[1] % 2 == 0 for l, s in odd)
    if plus_even or minus_even:
        # P5: one numeral
        return [SignedYoungDiagram(rows, (n,)) for n in ("I", "II")]
    return [SignedYoungDiagram(rows)]


def forget_signs(d: SignedYoungDiagram) -> YoungDiagram:
    """Underlying complex orbit diagram.

    The numeral decorations are dropped: which real numeral corresponds
    to which complex numeral I/II is a convention the combinatorics
    alone does not determine, so no numeral is guessed here.
    """
    return YoungDiagram(tuple(sorted(d.shape, reverse=True)))


# ---------------------------------------------------------------------------
# characteristics


def _weight_terms(rows):
    out = []
    for d in rows:
        out.extend(range(d - 1, -d, -2))
    return out


def characteristic(d: YoungDiagram):
    """Characteristic(s) of the orbit with the given diagram.

    Returns a single tuple over {0,1,2}, except for an all-even diagram
    of so_{2r} without a fixed numeral, where the (C^I, C^II) pair is
    returned; with the numeral set, the matching single tuple.
    """
    rows = d.rows
    n = sum(rows)
    r = n // 2
    terms = _weight_terms(rows)
    if n % 2 == 1:
        # sequence rearranges to (0, h_1..h_r, -h_1..-h_r): one zero leads,
        # the remaining zeros split evenly between the h's and the -h's
        pos = sorted((t for t in terms if t > 0), reverse=True)
        zeros = terms.count(0)
        h = pos + [0] * ((zeros - 1) // 2)
        assert len(h) == r
        return tuple(h[i] - h[i + 1] for i in range(r - 1)) + (h[r - 1],)
    pos = sorted((t for t in terms if t > 0), reverse=True)
    zeros = terms.count(0)
    h = pos + [0] * (zeros // 2)
    assert len(h) == r
    if not all(x % 2 == 0 for x in rows):
        head = tuple(h[i] - h[i + 1] for i in range(r - 1))
        return head + (h[r - 2] + h[r - 1],)
    a = 0 if r % 4 == 0 else 2
    head = tuple(h[i] - h[i + 1] for i in range(r - 2))
    c1 = head + (a, 2 - a)
    c2 = head + (2 - a, a)
    if d.numeral == "I":
        return c1
    if d.numeral == "II":
        return c2
    return (c1, c2)


def is_even(entries) -> bool:
    """True iff every characteristic entry is 0 or 2."""
    return all(x in (0, 2) for x in entries)
