"""Certified exact rank and span computations over the integers.

Rank is computed by division-free row elimination with gcd normalization:
every pivot step replaces a row r by (r * pivot_lead - pivot_row * r_lead)
divided by the gcd of its entries, which keeps all arithmetic in Z and is
exact over Q.  An optional single-prime modular pass can pre-screen rows,
but it may only skip rows whose dependence the exact elimination confirms;
the exact method is authoritative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .poly import Monomial, Polynomial, apply_diff, mono_key, monomial_from_orders

_PRESCREEN_PRIME_BITS = 31


@dataclass
class SparseIntMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    col_monomials: dict[int, Monomial] | None = None

    def row(self, r: int) -> dict[int, int]:
        return {c: v for (rr, c), v in self.entries.items() if rr == r}

    @classmethod
    def from_rows(cls, rows: list[dict[int, int]], cols: int,
                  col_monomials: dict[int, Monomial] | None = None) -> "SparseIntMatrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                if v:
                    entries[(r, c)] = v
        return cls(rows=len(rows), cols=cols, entries=entries, col_monomials=col_monomials)


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    method: str  # "fraction-free-exact" or "modular-prescreen-then-exact"
    pivot_trail: tuple[tuple[int, int], ...]  # (row index, pivot column)
    seed: int | None = None


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: dict[int, int], pivots: dict[int, dict[int, int]]) -> dict[int, int]:
    """Reduce row against the pivot rows; exact integer arithmetic.

    Pivot rows have their lead at their minimum column, so elimination only
    fills in columns to the right of the one it clears; scanning for the
    smallest eliminable column until none remains gives a full reduction.
    """
    row = dict(row)
    while True:
        col = min((c for c in row if c in pivots), default=None)
        if col is None:
            return row
        piv = pivots[col]
        lead = piv[col]
        mine = row[col]
        scaled = {c: v * lead for c, v in row.items()}
        for c, v in piv.items():
            new = scaled.get(c, 0) - v * mine
            if new:
                scaled[c] = new
            else:
                scaled.pop(c, None)
        row = _normalize(scaled)


class Eliminator:
    """Incremental exact row-echelon state."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}
        self.trail: list[tuple[int, int]] = []
        self._count = 0

    def add(self, row: dict[int, int], tag: int | None = None) -> bool:
        """Insert a row; True iff it enlarged the row space."""
        reduced = _eliminate(row, self.pivots)
        index = tag if tag is not None else self._count
        self._count += 1
        if not reduced:
            return False
        lead = min(reduced)
        self.pivots[lead] = reduced
        self.trail.append((index, lead))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(matrix: SparseIntMatrix, prescreen: bool = False,
         seed: int = 0) -> RankCertificate:
    """Exact rank over Q.

    With prescreen=True a random prime (> 2^30, drawn from seed) orders the
    rows by modular independence first; rows the modular pass marks dependent
    are still confirmed dependent by the exact elimination before being
    discarded, so the result never relies on the prime.
    """
    rows: list[dict[int, int]] = [dict() for _ in range(matrix.rows)]
    for (r, c), v in matrix.entries.items():
        rows[r][c] = v

    order = list(range(matrix.rows))
    method = "fraction-free-exact"
    if prescreen:
        method = "modular-prescreen-then-exact"
        rng = random.Random(seed)
        prime = _draw_prime(rng)
        independent, dependent = _modular_split(rows, prime)
        order = independent + dependent

    elim = Eliminator()
    for r in order:
        elim.add(rows[r], tag=r)
    return RankCertificate(rank=elim.rank, method=method,
                           pivot_trail=tuple(elim.trail),
                           seed=seed if prescreen else None)


def _draw_prime(rng: random.Random) -> int:
    while True:
        candidate = rng.getrandbits(_PRESCREEN_PRIME_BITS) | (1 << (_PRESCREEN_PRIME_BITS - 1)) | 1
        if _is_prime(candidate):
            return candidate


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _modular_split(rows: list[dict[int, int]], prime: int) -> tuple[list[int], list[int]]:
    pivots: dict[int, dict[int, int]] = {}
    independent, dependent = [], []
    for r, row in enumerate(rows):
        reduced = {c: v % prime for c, v in row.items() if v % prime}
        while True:
            col = min((c for c in reduced if c in pivots), default=None)
            if col is None:
                break
            piv = pivots[col]
            factor = reduced[col] * pow(piv[col], -1, prime) % prime
            for c, v in piv.items():
                new = (reduced.get(c, 0) - factor * v) % prime
                if new:
                    reduced[c] = new
                else:
                    reduced.pop(c, None)
        if reduced:
            pivots[min(reduced)] = reduced
            independent.append(r)
        else:
            dependent.append(r)
    return independent, dependent


# ---------------------------------------------------------------------------
# polynomial families
# ---------------------------------------------------------------------------

def _column_index(polys: list[Polynomial]) -> dict[Monomial, int]:
    monomials = set()
    for p in polys:
        monomials.update(p.terms)
    ordered = sorted(monomials, key=mono_key)
    return {m: i for i, m in enumerate(ordered)}

def polys_to_matrix(polys: list[Polynomial]) -> SparseIntMatrix:
    index = _column_index(polys)
    rows = [{index[m]: c for m, c in p.terms.items()} for p in polys]
    col_monomials = {i: m for m, i in index.items()}
    return SparseIntMatrix.from_rows(rows, cols=len(index), col_monomials=col_monomials)


def poly_rank(polys: list[Polynomial], prescreen: bool = False, seed: int = 0) -> int:
    return rank(polys_to_matrix(polys), prescreen=prescreen, seed=seed).rank


def homogeneous_family_rank(polys: list[Polynomial]) -> int:
    """Rank of a family of bihomogeneous polynomials, block by bidegree.

    Distinct bidegrees are independent outright, so the rank is the sum of
    the per-bidegree ranks; zero polynomials contribute nothing.
    """
    blocks: dict[tuple[int, int], list[Polynomial]] = {}
    for p in polys:
        if p.is_zero():
            continue
        m = next(iter(p.terms))
        blocks.setdefault(m.bidegree(), []).append(p)
    total = 0
    for bideg in sorted(blocks):
        total += poly_rank(blocks[bideg])
    return total


def in_span(vectors: list[Polynomial], target: Polynomial) -> list[Fraction] | None:
    """Exact rational coefficients with sum(c_i v_i) = target, or None.

    Gaussian elimination over Q with bookkeeping of the expressing
    combination; sizes here are small (families of derivative images).
    """
    if target.is_zero():
        return [Fraction(0)] * len(vectors)
    index = _column_index(vectors + [target])
    basis: dict[int, tuple[dict[int, Fraction], list[Fraction]]] = {}
    for i, v in enumerate(vectors):
        row = {index[m]: Fraction(c) for m, c in v.terms.items()}
        combo = [Fraction(0)] * len(vectors)
        combo[i] = Fraction(1)
        row, combo = _reduce_fraction_row(row, combo, basis)
        if row:
            basis[min(row)] = (row, combo)
    row = {index[m]: Fraction(c) for m, c in target.terms.items()}
    combo = [Fraction(0)] * len(vectors)
    row, combo = _reduce_fraction_row(row, combo, basis)
    if row:
        return None
    return [-c for c in combo]


def _reduce_fraction_row(row, combo, basis):
    while True:
        col = min((c for c in row if c in basis), default=None)
        if col is None:
            return row, combo
        brow, bcombo = basis[col]
        factor = row[col] / brow[col]
        for c, v in brow.items():
            new = row.get(c, Fraction(0)) - factor * v
            if new:
                row[c] = new
            else:
                row.pop(c, None)
        combo = [a - factor * b for a, b in zip(combo, bcombo)]


def derivative_closure(delta) -> tuple[int, dict[tuple[int, int], int]]:
    """(dim M_mu, graded dimensions by bidegree) via breadth-first closure.

    Starts from Delta and repeatedly applies the 2n single-variable
    derivatives, inserting only rank-increasing images; bidegrees never
    collide across blocks, so each block keeps its own elimination state.
    """
    start = delta.value
    n = start.n
    index: dict[Monomial, int] = {}

    def key_of(m: Monomial) -> int:
        if m not in index:
            index[m] = len(index)
        return index[m]

    blocks: dict[tuple[int, int], Eliminator] = {}
    table: dict[tuple[int, int], int] = {}
    queue: list[Polynomial] = []

    def insert(p: Polynomial) -> bool:
        if p.is_zero():
            return False
        bideg = next(iter(p.terms)).bidegree()
        elim = blocks.setdefault(bideg, Eliminator())
        row = {key_of(m): c for m, c in p.terms.items()}
        if elim.add(row):
            table[bideg] = table.get(bideg, 0) + 1
            queue.append(p)
            return True
        return False

    insert(start)
    ops = [("x", i) for i in range(1, n + 1)] + [("y", i) for i in range(1, n + 1)]
    head = 0
    while head < len(queue):
        current = queue[head]
        head += 1
        for alphabet, i in ops:
            xo = {i: 1} if alphabet == "x" else None
            yo = {i: 1} if alphabet == "y" else None
            op = monomial_from_orders(n, xo, yo)
            insert(apply_diff(op, current))
    dim = sum(table.values())
    return dim, table
