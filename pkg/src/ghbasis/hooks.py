"""Cross drawings for hook partitions mu = (K+1, 1^L).

A shape has K+L places on a horizontal axis; K of them carry y-columns of
heights K, K-1, ..., 1 (left to right) above the axis and L carry x-columns
of depths L, L-1, ..., 1 below it.  A drawing puts crosses in the columns:

* x-columns take any number of crosses up to their depth;
* a y-column with no x-column to its right is unconstrained; otherwise the
  first plain x-column to its right (all crossed or all white; the depth-1
  column guarantees one exists) decides: all white forces at least one
  cross, all crossed forces at least one white cell.

Places are numbered 1..n-1 left to right and bound to variable indices, so
a drawing D encodes the operator dD = prod dx_i^(x-crosses) dy_i^(y-crosses).
There are exactly n! drawings, they are closed under the cross/white flip,
and either half of the cross/white split determines the drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb, factorial

from .delta import DeltaPolynomial
from .errors import NoPreimageError, SizeLimitError
from .poly import Monomial, apply_diff

DEFAULT_LIMIT = 7


@dataclass(frozen=True)
class HookShape:
    kinds: tuple[str, ...]  # 'y' or 'x' per place, left to right
    sizes: tuple[int, ...]  # height (y) or depth (x) per place

    @property
    def places(self) -> int:
        return len(self.kinds)


@dataclass(frozen=True)
class HookDrawing:
    shape: HookShape
    crosses: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "places": [
                {"kind": k, "size": s, "crosses": c}
                for k, s, c in zip(self.shape.kinds, self.shape.sizes, self.crosses)
            ]
        }


@dataclass(frozen=True)
class CrossDiagram:
    """Per-place (x_order, y_order) pairs; the S or T half of a drawing."""

    orders: tuple[tuple[int, int], ...]

    @property
    def places(self) -> int:
        return len(self.orders)


def _shape_from_y_places(y_places, K: int, L: int) -> HookShape:
    kinds = []
    sizes = []
    ny = nx = 0
    for place in range(1, K + L + 1):
        if place in y_places:
            kinds.append("y")
            sizes.append(K - ny)
            ny += 1
        else:
            kinds.append("x")
            sizes.append(L - nx)
            nx += 1
    return HookShape(kinds=tuple(kinds), sizes=tuple(sizes))


def _first_plain_right(shape: HookShape, crosses, place: int) -> int | None:
    """Index of the first plain x-column right of place; None if no x-column there.

    A plain column is all white or all crossed.  When any x-column lies to
    the right, the depth-1 column is among them and is always plain, so the
    scan is asserted to succeed.
    """
    seen_x = False
    for q in range(place + 1, shape.places):
        if shape.kinds[q] == "x":
            seen_x = True
            if crosses[q] == 0 or crosses[q] == shape.sizes[q]:
                return q
    if not seen_x:
        return None
    raise AssertionError("no plain x-column right of a y-column; depth-1 must be plain")


def _y_choices(shape: HookShape, crosses, place: int) -> range:
    """Allowed cross counts for the y-column at place, given the x-crosses."""
    height = shape.sizes[place]
    plain = _first_plain_right(shape, crosses, place)
    if plain is None:
        return range(0, height + 1)
    if crosses[plain] == 0:
        return range(1, height + 1)
    return range(0, height)


def is_valid_drawing(d: HookDrawing) -> bool:
    shape, crosses = d.shape, d.crosses
    for place in range(shape.places):
        if not 0 <= crosses[place] <= shape.sizes[place]:
            return False
    for place in range(shape.places):
        if shape.kinds[place] == "y" and crosses[place] not in _y_choices(shape, crosses, place):
            return False
    return True


def enumerate_drawings(K: int, L: int, limit: int = DEFAULT_LIMIT) -> list[HookDrawing]:
    """Every valid drawing exactly once; (K+L+1)! of them in total.

    Deterministic order: shapes by their kind word, then cross vectors
    lexicographically.
    """
    n = K + L + 1
    if n > limit:
        raise SizeLimitError(f"n = {n} exceeds the drawing size limit {limit}")
    out = []
    places = K + L
    for y_combo in combinations(range(1, places + 1), K):
        shape = _shape_from_y_places(set(y_combo), K, L)
        x_places = [p for p in range(places) if shape.kinds[p] == "x"]
        y_places = [p for p in range(places) if shape.kinds[p] == "y"]
        for x_fill in product(*(range(shape.sizes[p] + 1) for p in x_places)):
            crosses = [0] * places
            for p, c in zip(x_places, x_fill):
                crosses[p] = c
            # y-choices depend only on the x-crosses
            for y_fill in product(*(_y_choices(shape, crosses, p) for p in y_places)):
                full = list(crosses)
                for p, c in zip(y_places, y_fill):
                    full[p] = c
                out.append(HookDrawing(shape=shape, crosses=tuple(full)))
    out.sort(key=lambda d: (d.shape.kinds, d.crosses))
    return out


def closed_form_count(K: int, L: int) -> int:
    """The summation-by-shape count; equals (K+L+1)! by Chu-Vandermonde.

    Summand over k1 + k2 = K, with k1 the number of y-columns right of the
    last x-column: [2*3*...*(k1+1)] * [(k1+1)*...*(k1+k2)] * (L+1)! * C(k2+L-1, k2).
    """
    total = 0
    for k1 in range(K + 1):
        k2 = K - k1
        first = 1
        for t in range(2, k1 + 2):
            first *= t
        second = 1
        for t in range(k1 + 1, k1 + k2 + 1):
            second *= t
        binom = 1 if k2 == 0 else (comb(k2 + L - 1, k2) if k2 + L - 1 >= 0 else 0)
        total += first * second * factorial(L + 1) * binom
    return total


def flip(d: HookDrawing) -> HookDrawing:
    """Invert white cells and crosses; an involution preserving the family."""
    return HookDrawing(
        shape=d.shape,
        crosses=tuple(s - c for s, c in zip(d.shape.sizes, d.crosses)),
    )


def split(d: HookDrawing) -> tuple[CrossDiagram, CrossDiagram]:
    """(S, T): the cross half and the white half of the drawing."""
    s_orders = []
    t_orders = []
    for kind, size, c in zip(d.shape.kinds, d.shape.sizes, d.crosses):
        if kind == "x":
            s_orders.append((c, 0))
            t_orders.append((size - c, 0))
        else:
            s_orders.append((0, c))
            t_orders.append((0, size - c))
    return CrossDiagram(tuple(s_orders)), CrossDiagram(tuple(t_orders))


def diff_op_of(s: CrossDiagram, n: int) -> Monomial:
    """The monomial operator of a diagram: orders at place i act on x_i / y_i."""
    if s.places > n:
        raise ValueError(f"diagram has {s.places} places but ambient n is {n}")
    xe = [0] * n
    ye = [0] * n
    for place, (xo, yo) in enumerate(s.orders, start=1):
        xe[place - 1] = xo
        ye[place - 1] = yo
    return Monomial(tuple(xe), tuple(ye))


def diagram_of_monomial(m: Monomial, places: int) -> CrossDiagram:
    if any(m.xexp[places:]) or any(m.yexp[places:]):
        raise ValueError(f"monomial touches variables beyond place {places}")
    return CrossDiagram(tuple((m.xexp[i], m.yexp[i]) for i in range(places)))


def s_monomial(d: HookDrawing, n: int) -> Monomial:
    return diff_op_of(split(d)[0], n)


def t_monomial(d: HookDrawing, n: int) -> Monomial:
    return diff_op_of(split(d)[1], n)


def reconstruct(part: CrossDiagram, from_s: bool, K: int, L: int) -> HookDrawing:
    """The unique drawing whose S (resp. T) half equals part.

    Left-to-right completion: a place holding crosses becomes the next
    column of that kind; an empty place becomes an x-column exactly when the
    x-crosses to its right still fit with one x-column consumed here, else a
    y-column.  The completed drawing is validated against the rules and the
    requested half; reconstruction from T uses the flip symmetry.
    """
    if part.places != K + L:
        raise NoPreimageError(f"diagram has {part.places} places, expected {K + L}")
    if not from_s:
        flipped = reconstruct(part, True, K, L)
        d = flip(flipped)
        if split(d)[1] != part:
            raise NoPreimageError("white half mismatch after flip reconstruction")
        return d

    places = K + L
    kinds: list[str] = []
    ny = nx = 0
    for place in range(places):
        xo, yo = part.orders[place]
        if xo and yo:
            raise NoPreimageError("a drawing place holds crosses of one kind only")
        if yo:
            kind = "y"
        elif xo:
            kind = "x"
        else:
            # Empty place: x-column iff the x-crossed places to the right can
            # still fit into the remaining depths with one consumed here.
            rem = L - nx
            right = [part.orders[q][0] for q in range(place + 1, places) if part.orders[q][0]]
            fits = rem >= 1 and len(right) <= rem - 1 and all(
                c <= rem - 1 - j for j, c in enumerate(right)
            )
            kind = "x" if fits else "y"
        if kind == "y":
            if ny >= K:
                raise NoPreimageError("more y-columns than the shape allows")
            ny += 1
        else:
            if nx >= L:
                raise NoPreimageError("more x-columns than the shape allows")
            nx += 1
        kinds.append(kind)

    shape = _shape_from_y_places({p + 1 for p, k in enumerate(kinds) if k == "y"}, K, L)
    crosses = tuple(xo if k == "x" else yo
                    for (xo, yo), k in zip(part.orders, shape.kinds))
    for place in range(places):
        if crosses[place] > shape.sizes[place]:
            raise NoPreimageError(f"cross count exceeds the column size at place {place + 1}")
    d = HookDrawing(shape=shape, crosses=crosses)
    if not is_valid_drawing(d):
        raise NoPreimageError("completed diagram violates the drawing rules")
    if split(d)[0] != part:
        raise NoPreimageError("completed drawing does not reproduce the diagram")
    return d


def is_son(parent: HookDrawing, candidate: HookDrawing, delta: DeltaPolynomial) -> bool:
    """True iff applying the candidate's crosses then the parent's whites to
    Delta leaves a nonzero constant."""
    if parent == candidate:
        raise ValueError("son relation requires two different drawings")
    n = delta.n
    image = apply_diff(s_monomial(candidate, n), delta.value)
    image = apply_diff(t_monomial(parent, n), image)
    return image.is_constant() and not image.is_zero()


def descendant_graph(K: int, L: int, delta: DeltaPolynomial,
                     limit: int = DEFAULT_LIMIT) -> tuple[list[HookDrawing], dict[int, list[int]], bool]:
    """(drawings, son edges by index, acyclic flag)."""
    drawings = enumerate_drawings(K, L, limit=limit)
    n = delta.n
    s_images = [apply_diff(s_monomial(d, n), delta.value) for d in drawings]
    t_monos = [t_monomial(d, n) for d in drawings]
    edges: dict[int, list[int]] = {i: [] for i in range(len(drawings))}
    for i in range(len(drawings)):
        for j in range(len(drawings)):
            if i == j:
                continue
            image = apply_diff(t_monos[i], s_images[j])
            if image.is_constant() and not image.is_zero():
                edges[i].append(j)
    return drawings, edges, _is_acyclic(edges)


def _is_acyclic(edges: dict[int, list[int]]) -> bool:
    state = {v: 0 for v in edges}  # 0 new, 1 active, 2 done

    def dfs(v: int) -> bool:
        state[v] = 1
        for w in edges[v]:
            if state[w] == 1:
                return False
            if state[w] == 0 and not dfs(w):
                return False
        state[v] = 2
        return True

    return all(state[v] == 2 or dfs(v) for v in state)
