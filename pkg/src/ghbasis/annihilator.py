"""The annihilator ideal of Delta_mu for hooks and the spanning rewriting.

For mu = (K+1, 1^L) the ideal of operators killing Delta_mu is generated by

    h_i(x_1..x_n), h_i(y_1..y_n)   for 1 <= i <= n,
    x_i y_i                        for 1 <= i <= n,
    squarefree x-products of size L+1 and y-products of size K+1,

and four relation schemas (P == Q means (P-Q)(d) kills Delta_mu):

    1. h_k(Y) == 0 when k > 0 and k + |Y| > n;
    2. Ybar h_k(Y') == 0 when k > 0, k + |Y| > K and Y inside Y';
    3. h_k(Y) h_l(X) == 0 when k, l > 0, k + l + |Y| + |X| >= 2n and the
       index sets are nested;
    4. h_k(Y) h_l(X) == 0 when k, l > 0 and (Y inside X with k+l+|Y| > n,
       or X inside Y with k+l+|X| > n).

The rewriting expresses any monomial operator modulo the ideal as an
integer combination of drawing operators.  A non-drawing diagram is
classified at its rightmost guilty place and rewritten through the schema
that applies there; every emitted monomial is strictly smaller in the block
descent order of :func:`ghbasis.poly.descent_key` (scan x_1..x_n, y_1..y_n;
larger exponent at the first difference = smaller), which bounds the
rewriting by the finite set of monomials of the fixed bidegree.  The public
mono_less order of :mod:`ghbasis.poly` interleaves the alphabets instead
(that is what minimal-monomial triangularity requires); single rewrite
steps need not descend under it, though completed normal forms do.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .delta import DeltaPolynomial, build_delta
from .errors import RewriteDefectError, SizeLimitError
from .hooks import HookDrawing, enumerate_drawings, s_monomial
from .linalg import Eliminator
from .partitions import hook_partition
from .poly import (
    Monomial,
    Polynomial,
    apply_diff,
    apply_diff_poly,
    descent_key,
    monomial_from_orders,
)

CASE_VALID = "valid-drawing"
CASE_NULL = "null-operator"          # some place carries both x- and y-orders
CASE_CROSS_OVERFLOW_Y = "crossed-y-overflow"   # too many crosses among crossed y-places
CASE_CROSS_OVERFLOW_X = "crossed-x-overflow"
CASE_TAIL_Y = "y-tail-overflow"      # order too high given the places up to here
CASE_TAIL_X = "x-tail-overflow"
CASE_PAIR_BLOCKED_Y = "full-y-blocked"   # full y-place against a crossed x-place to its right
CASE_PAIR_BLOCKED_X = "full-x-blocked"

ANOMALY_CASES = (
    CASE_CROSS_OVERFLOW_Y, CASE_CROSS_OVERFLOW_X,
    CASE_TAIL_Y, CASE_TAIL_X,
    CASE_PAIR_BLOCKED_Y, CASE_PAIR_BLOCKED_X,
)


@dataclass(frozen=True)
class AnomalyClass:
    case: str
    place: int | None  # guilty place (1-based); None for a valid drawing

    @property
    def is_anomaly(self) -> bool:
        return self.case in ANOMALY_CASES


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def h_poly(degree: int, indices: tuple[int, ...], alphabet: str, n: int) -> Polynomial:
    """Complete homogeneous symmetric polynomial of the given degree in the
    chosen variables, by direct monomial enumeration."""
    if degree == 0:
        return Polynomial.constant(n, 1)
    terms: dict[Monomial, int] = {}
    for combo in combinations_with_replacement(indices, degree):
        orders: dict[int, int] = {}
        for i in combo:
            orders[i] = orders.get(i, 0) + 1
        if alphabet == "x":
            m = monomial_from_orders(n, orders, None)
        else:
            m = monomial_from_orders(n, None, orders)
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(n, terms)


def squarefree_product(indices: tuple[int, ...], alphabet: str, n: int) -> Polynomial:
    orders = {i: 1 for i in indices}
    if alphabet == "x":
        return Polynomial.monomial(monomial_from_orders(n, orders, None))
    return Polynomial.monomial(monomial_from_orders(n, None, orders))


@dataclass(frozen=True)
class GeneratorSet:
    K: int
    L: int
    entries: tuple[tuple[str, Polynomial], ...]  # (family tag, polynomial)

    @property
    def polynomials(self) -> list[Polynomial]:
        return [p for _, p in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def generators(K: int, L: int) -> GeneratorSet:
    """The explicit generator list; 3n + C(n, L+1) + C(n, K+1) polynomials."""
    n = K + L + 1
    everything = tuple(range(1, n + 1))
    entries: list[tuple[str, Polynomial]] = []
    for i in range(1, n + 1):
        entries.append((f"h_X({i})", h_poly(i, everything, "x", n)))
    for i in range(1, n + 1):
        entries.append((f"h_Y({i})", h_poly(i, everything, "y", n)))
    for i in range(1, n + 1):
        entries.append((f"xy({i})", Polynomial.monomial(
            monomial_from_orders(n, {i: 1}, {i: 1}))))
    for combo in combinations(everything, L + 1):
        entries.append((f"xbar{combo}", squarefree_product(combo, "x", n)))
    for combo in combinations(everything, K + 1):
        entries.append((f"ybar{combo}", squarefree_product(combo, "y", n)))
    expected = 3 * n + comb(n, L + 1) + comb(n, K + 1)
    assert len(entries) == expected
    return GeneratorSet(K=K, L=L, entries=tuple(entries))


def annihilates(P: Polynomial, delta: DeltaPolynomial) -> bool:
    """True iff P(d) Delta_mu = 0 exactly.

    Delta is bihomogeneous of bidegree (n(mu), n(mu')), so a term whose
    x-degree exceeds n(mu) or whose y-degree exceeds n(mu') kills every
    Delta term outright; when all of P is of that kind no expansion is
    needed.
    """
    bx, by = delta.bidegree
    if all(m.xdeg() > bx or m.ydeg() > by for m in P.terms):
        return True
    return apply_diff_poly(P, delta.value).is_zero()


# ---------------------------------------------------------------------------
# relation-schema instances
# ---------------------------------------------------------------------------

def proposition_instances(n: int, K: int, L: int, which: int):
    """Every instance of the chosen relation schema's hypothesis.

    Degrees are capped one past the relevant degree of Delta_mu (y-degree
    K(K+1)/2 for the y-alphabet, x-degree L(L+1)/2 for x); larger degrees
    annihilate for trivial degree reasons.
    """
    if which not in (1, 2, 3, 4):
        raise ValueError("which must be 1, 2, 3 or 4")
    ky_max = K * (K + 1) // 2 + 1
    lx_max = L * (L + 1) // 2 + 1
    everything = tuple(range(1, n + 1))

    if which == 1:
        for k in range(1, ky_max + 1):
            for size in range(max(0, n - k + 1), n + 1):
                for Y in combinations(everything, size):
                    yield h_poly(k, Y, "y", n)
        return

    if which == 2:
        for yp_size in range(0, n + 1):
            for Yp in combinations(everything, yp_size):
                for y_size in range(0, yp_size + 1):
                    for Y in combinations(Yp, y_size):
                        for k in range(1, ky_max + 1):
                            if k + len(Y) > K:
                                yield squarefree_product(Y, "y", n) * h_poly(k, Yp, "y", n)
        return

    for y_size in range(0, n + 1):
        for Y in combinations(everything, y_size):
            for x_size in range(0, n + 1):
                for X in combinations(everything, x_size):
                    nested_yx = set(Y) <= set(X)
                    nested_xy = set(X) <= set(Y)
                    if not (nested_yx or nested_xy):
                        continue
                    for k in range(1, ky_max + 1):
                        for l in range(1, lx_max + 1):
                            if which == 3:
                                hit = k + l + len(Y) + len(X) >= 2 * n
                            else:
                                hit = (nested_yx and k + l + len(Y) > n) or (
                                    nested_xy and k + l + len(X) > n)
                            if hit:
                                yield h_poly(k, Y, "y", n) * h_poly(l, X, "x", n)


# ---------------------------------------------------------------------------
# anomaly classification
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _s_index(K: int, L: int) -> dict[Monomial, HookDrawing]:
    n = K + L + 1
    return {s_monomial(d, n): d for d in enumerate_drawings(K, L, limit=max(n, 7))}


def classify_diagram(op: Monomial, K: int, L: int) -> AnomalyClass:
    """Total classification of a monomial operator's cross diagram.

    A place carrying both x- and y-orders makes the operator act as zero
    (x_i y_i is in the ideal): the distinguished null outcome.  Otherwise
    the diagram either is the cross half of a drawing, or it is classified
    at its rightmost guilty place: the rightmost place whose crosses admit
    one of the three rewriting schemas, tried in the order crossed-column
    overflow, tail overflow, blocked pair.  A non-drawing diagram with no
    such place would contradict the spanning argument and is reported as a
    defect rather than patched.
    """
    n = K + L + 1
    if op.n != n:
        raise ValueError(f"operator ambient {op.n} != n = {n}")
    for i in range(n):
        if op.xexp[i] and op.yexp[i]:
            return AnomalyClass(case=CASE_NULL, place=i + 1)
    if op in _s_index(K, L):
        return AnomalyClass(case=CASE_VALID, place=None)
    for g in range(n, 0, -1):
        case = _case_at(op, K, L, g)
        if case is not None:
            return AnomalyClass(case=case, place=g)
    raise RewriteDefectError(
        f"no rewriting schema applies anywhere in {op}; "
        f"this contradicts the spanning argument")


def _case_at(op: Monomial, K: int, L: int, g: int) -> str | None:
    n = K + L + 1
    xo = op.xexp[g - 1]
    yo = op.yexp[g - 1]
    if yo:
        # h-th crossed y-place holding yo = k+1 crosses: a y-column of
        # height at most K - h + 1 cannot carry them once k + h > K.
        h = sum(1 for p in range(g) if op.yexp[p])
        if (yo - 1) + h > K:
            return CASE_CROSS_OVERFLOW_Y
        if yo + g > n:
            return CASE_TAIL_Y
        if _pair_partner(op, g, "y", n) is not None:
            return CASE_PAIR_BLOCKED_Y
    elif xo:
        m = sum(1 for p in range(g) if op.xexp[p])
        if (xo - 1) + m > L:
            return CASE_CROSS_OVERFLOW_X
        if xo + g > n:
            return CASE_TAIL_X
        if _pair_partner(op, g, "x", n) is not None:
            return CASE_PAIR_BLOCKED_X
    return None


def _pair_partner(op: Monomial, g: int, kind: str, n: int) -> int | None:
    """Smallest admissible partner place for the paired-schema rewrite.

    For a guilty y-place the relation is h_k(Y) h_l(X) with Y the places up
    to g plus the crossed x-places up to the partner (|Y| = g + between + 1,
    partner included); for a guilty x-place the x-side set stops at g
    (|X| = g + between), which is what keeps the replacement monomials below
    the guilty place in the descent order scanned x-block first.
    """
    own = op.yexp[g - 1] if kind == "y" else op.xexp[g - 1]
    partner_exps = op.xexp if kind == "y" else op.yexp
    bonus = 1 if kind == "y" else 0
    between = 0
    for q in range(g + 1, n + 1):
        e = partner_exps[q - 1]
        if not e:
            continue
        if own + e + g + between + bonus > n:
            return q
        between += 1
    return None


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

def _h_monomials(degree: int, indices: tuple[int, ...]):
    """Exponent maps of the monomials of h_degree over the given indices."""
    for combo in combinations_with_replacement(indices, degree):
        orders: dict[int, int] = {}
        for i in combo:
            orders[i] = orders.get(i, 0) + 1
        yield orders


def _shift(op: Monomial, dx: dict[int, int], dy: dict[int, int]) -> Monomial | None:
    """op with x-exponents shifted by dx and y by dy (1-based); None if mixed."""
    xe = list(op.xexp)
    ye = list(op.yexp)
    for i, e in dx.items():
        xe[i - 1] += e
    for i, e in dy.items():
        ye[i - 1] += e
    if any(a and b for a, b in zip(xe, ye)):
        return None  # multiple of some x_i y_i: in the ideal, dropped
    return Monomial(tuple(xe), tuple(ye))


def reduce_step(op: Monomial, K: int, L: int) -> list[tuple[int, Monomial]]:
    """One rewriting step: op == sum of the returned (coefficient, monomial)
    pairs modulo the ideal, every monomial strictly smaller in descent order.
    """
    cls = classify_diagram(op, K, L)
    if not cls.is_anomaly:
        raise ValueError(f"operator classifies as {cls.case}; nothing to reduce")
    n = K + L + 1
    g = cls.place
    out: list[tuple[int, Monomial]] = []

    if cls.case in (CASE_CROSS_OVERFLOW_Y, CASE_CROSS_OVERFLOW_X):
        alphabet = "y" if cls.case == CASE_CROSS_OVERFLOW_Y else "x"
        exps = op.yexp if alphabet == "y" else op.xexp
        crossed = tuple(p + 1 for p in range(g) if exps[p])
        k = exps[g - 1] - 1
        # op is a multiple of (product over crossed places) * v_g^k; the
        # degree-k replacement runs over the crossed places only.
        for orders in _h_monomials(k, crossed):
            if orders.get(g, 0) == k:
                continue
            delta_orders = {i: e for i, e in orders.items()}
            delta_orders[g] = delta_orders.get(g, 0) - k
            shifted = _shift(op,
                             delta_orders if alphabet == "x" else {},
                             delta_orders if alphabet == "y" else {})
            if shifted is not None:
                out.append((-1, shifted))
    elif cls.case in (CASE_TAIL_Y, CASE_TAIL_X):
        alphabet = "y" if cls.case == CASE_TAIL_Y else "x"
        exps = op.yexp if alphabet == "y" else op.xexp
        c = exps[g - 1]
        window = tuple(range(1, g + 1))
        for orders in _h_monomials(c, window):
            if orders.get(g, 0) == c:
                continue
            delta_orders = {i: e for i, e in orders.items()}
            delta_orders[g] = delta_orders.get(g, 0) - c
            shifted = _shift(op,
                             delta_orders if alphabet == "x" else {},
                             delta_orders if alphabet == "y" else {})
            if shifted is not None:
                out.append((-1, shifted))
    else:
        # Guilty y-place: h_k(Y) h_l(X) with Y up to g plus the partner and
        # X up to the partner; the partner's full x-power masks every upward
        # y-move behind an earlier x-difference.  Guilty x-place: the x-side
        # set stops at g (terms reaching the partner's place would ascend),
        # and the y-side runs up to the partner.
        alphabet = "y" if cls.case == CASE_PAIR_BLOCKED_Y else "x"
        partner = _pair_partner(op, g, alphabet, n)
        if partner is None:
            raise RewriteDefectError(f"paired schema lost its partner for {op}")
        own_exps = op.yexp if alphabet == "y" else op.xexp
        other_exps = op.xexp if alphabet == "y" else op.yexp
        k = own_exps[g - 1]
        l = other_exps[partner - 1]
        if alphabet == "y":
            own_set = tuple(range(1, g + 1)) + (partner,)
        else:
            own_set = tuple(range(1, g + 1))
        other_set = tuple(range(1, partner + 1))
        for own_orders in _h_monomials(k, own_set):
            for other_orders in _h_monomials(l, other_set):
                if own_orders.get(g, 0) == k and other_orders.get(partner, 0) == l:
                    continue
                d_own = {i: e for i, e in own_orders.items()}
                d_own[g] = d_own.get(g, 0) - k
                d_other = {i: e for i, e in other_orders.items()}
                d_other[partner] = d_other.get(partner, 0) - l
                if alphabet == "y":
                    shifted = _shift(op, d_other, d_own)
                else:
                    shifted = _shift(op, d_own, d_other)
                if shifted is not None:
                    out.append((-1, shifted))

    key = descent_key(op)
    for _, m in out:
        if not descent_key(m) < key:
            raise RewriteDefectError(
                f"rewrite of {op} emitted non-descending monomial {m}")
    return out


class _HookRewriter:
    """Memoized normal forms over the drawing-operator family of one hook."""

    def __init__(self, K: int, L: int):
        self.K = K
        self.L = L
        self.n = K + L + 1
        self.s_index = _s_index(K, L)
        self.memo: dict[Monomial, dict[Monomial, int]] = {}
        self.steps = 0

    def budget(self, op: Monomial) -> int:
        bx = self.L * (self.L + 1) // 2
        by = self.K * (self.K + 1) // 2
        universe = comb(max(bx, op.xdeg()) + self.n, self.n) * comb(
            max(by, op.ydeg()) + self.n, self.n)
        return 10 * universe

    def normal_form(self, op: Monomial) -> dict[Monomial, int]:
        budget = self.budget(op)
        start_steps = self.steps
        rewrites: dict[Monomial, list[tuple[int, Monomial]]] = {}
        stack = [op]
        while stack:
            m = stack[-1]
            if m in self.memo:
                stack.pop()
                continue
            if any(a and b for a, b in zip(m.xexp, m.yexp)):
                self.memo[m] = {}
                stack.pop()
                continue
            if m in self.s_index:
                self.memo[m] = {m: 1}
                stack.pop()
                continue
            if m not in rewrites:
                rewrites[m] = reduce_step(m, self.K, self.L)
                self.steps += 1
                if self.steps - start_steps > budget:
                    raise RewriteDefectError(
                        f"rewriting budget {budget} exhausted; non-termination defect")
            pending = [mm for _, mm in rewrites[m] if mm not in self.memo]
            if pending:
                stack.extend(pending)
                continue
            combined: dict[Monomial, int] = {}
            for coeff, mm in rewrites[m]:
                for sm, c in self.memo[mm].items():
                    s = combined.get(sm, 0) + coeff * c
                    if s:
                        combined[sm] = s
                    else:
                        combined.pop(sm, None)
            self.memo[m] = combined
            stack.pop()
        return self.memo[op]


@lru_cache(maxsize=None)
def _rewriter(K: int, L: int) -> _HookRewriter:
    return _HookRewriter(K, L)


def normal_form(op: Monomial, K: int, L: int,
                delta: DeltaPolynomial | None = None,
                validate: bool = False) -> dict[HookDrawing, int]:
    """Express op(d) Delta = sum c_D dD Delta over drawings, exactly.

    With validate=True (requires delta) the identity is checked by applying
    both sides to Delta; a mismatch raises RewriteDefectError.
    """
    rewriter = _rewriter(K, L)
    nf = rewriter.normal_form(op)
    if validate:
        if delta is None:
            delta = build_delta(hook_partition(K, L))
        lhs = apply_diff(op, delta.value)
        rhs = Polynomial.zero(delta.n)
        for sm, c in nf.items():
            rhs = rhs + apply_diff(sm, delta.value).scale(c)
        if lhs != rhs:
            raise RewriteDefectError(f"normal form of {op} fails the oracle")
    index = rewriter.s_index
    return {index[sm]: c for sm, c in nf.items()}


# ---------------------------------------------------------------------------
# graded quotient dimensions
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _bidegree_monomials(a: int, b: int, n: int):
    for xe in _compositions(a, n):
        for ye in _compositions(b, n):
            yield Monomial(xe, ye)


@dataclass(frozen=True)
class QuotientTable:
    K: int
    L: int
    table: dict[tuple[int, int], int]
    total: int
    shell_zero: bool  # all spot-checked dimensions just outside the grid are 0


def quotient_hilbert(K: int, L: int, limit: int = 7) -> QuotientTable:
    """Graded dimensions of the polynomial ring modulo the generator ideal.

    For each bidegree (a, b) inside the grid a <= L(L+1)/2, b <= K(K+1)/2,
    the dimension of monomials of that bidegree modulo the span of all
    generator multiples landing there; the grid total must be n! and the
    shell just outside the grid must vanish.
    """
    n = K + L + 1
    if n > limit:
        raise SizeLimitError(f"n = {n} exceeds the quotient size limit {limit}")
    gens = generators(K, L)
    amax = L * (L + 1) // 2
    bmax = K * (K + 1) // 2
    table = {}
    for a in range(amax + 1):
        for b in range(bmax + 1):
            table[(a, b)] = _graded_quotient_dim(gens, a, b, n)
    shell = []
    for b in range(bmax + 1):
        shell.append(_graded_quotient_dim(gens, amax + 1, b, n))
    for a in range(amax + 2):
        shell.append(_graded_quotient_dim(gens, a, bmax + 1, n))
    return QuotientTable(K=K, L=L, table=table, total=sum(table.values()),
                         shell_zero=all(v == 0 for v in shell))


def _graded_quotient_dim(gens: GeneratorSet, a: int, b: int, n: int) -> int:
    cols: dict[Monomial, int] = {}
    for m in _bidegree_monomials(a, b, n):
        cols[m] = len(cols)
    rows: list[dict[int, int]] = []
    for _, g in gens.entries:
        gm = next(iter(g.terms))
        ga, gb = gm.bidegree()
        if ga > a or gb > b:
            continue
        for m in _bidegree_monomials(a - ga, b - gb, n):
            shifted = g * Polynomial.monomial(m)
            rows.append({cols[t]: c for t, c in shifted.terms.items()})
    rows.sort(key=len)  # monomial rows first: they clear columns cheaply
    elim = Eliminator()
    for row in rows:
        elim.add(row)
    return len(cols) - elim.rank
