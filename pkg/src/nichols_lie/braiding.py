"""Braiding matrices of diagonal type and their Weyl-groupoid reflections.

Vertices are numbered from 1, as in the usual notation x_1, x_2.
Degree vectors are tuples of non-negative (or arbitrary) integers.
"""

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import (
    Cyclotomic,
    literal_orders,
    parse_literal,
    session_conductor,
)
from .errors import CartanUndefinedError, DomainError, LiteralParseError

__all__ = [
    "BraidingMatrix",
    "DynkinDiagram",
    "bilinear_form",
    "cartan_entry",
    "cartan_matrix",
    "is_cartan_vertex",
    "reflect",
    "reflection",
    "diagram",
    "from_diagram",
    "parse_matrix_text",
    "braiding_from_json",
]


@dataclass(frozen=True)
class BraidingMatrix:
    """A theta x theta matrix of nonzero cyclotomic scalars q_ij."""

    entries: tuple
    _pow_cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0 or any(len(row) != n for row in entries):
            raise DomainError("braiding matrix must be square and non-empty")
        F = entries[0][0].field
        for row in entries:
            for x in row:
                if not isinstance(x, Cyclotomic) or x.field is not F:
                    raise DomainError("entries must be Cyclotomic values of one conductor")
                if x.is_zero():
                    raise DomainError("braiding entries must be nonzero")

    @property
    def theta(self):
        return len(self.entries)

    @property
    def field(self):
        return self.entries[0][0].field

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def qpow(self, i, j, n):
        """q_ij ** n, cached."""
        key = (i, j, n)
        val = self._pow_cache.get(key)
        if val is None:
            val = self[i, j] ** n
            self._pow_cache[key] = val
        return val

    def literals(self):
        return [[x.literal() for x in row] for row in self.entries]

    def __repr__(self):
        rows = "; ".join(", ".join(r) for r in self.literals())
        return f"BraidingMatrix([{rows}])"


def bilinear_form(q, a, b):
    """q(a, b) = prod q_ij^(a_i b_j) for integer vectors a, b."""
    result = q.field.one
    for i, ai in enumerate(a, 1):
        if not ai:
            continue
        for j, bj in enumerate(b, 1):
            if bj:
                result = result * q.qpow(i, j, ai * bj)
    return result


def _q_number_vanishes(x, m):
    """Is (m)_x = 1 + x + ... + x^(m-1) zero?"""
    if x == 1:
        return False
    return x ** m == 1


@lru_cache(maxsize=4096)
def cartan_entry(q, i, j):
    """Generalized Cartan integer c_ij of the braiding matrix q."""
    if i == j:
        return 2
    qii = q[i, i]
    prod = q[i, j] * q[j, i]
    oi, op = qii.order(), prod.order()
    if oi is not None and op is not None:
        bound = oi * op + 1
    else:
        bound = 2 * q.field.conductor + 2
    power = q.field.one  # qii^n
    for n in range(bound + 1):
        if _q_number_vanishes(qii, n + 1) or power * prod == 1:
            return -n
        power = power * qii
    raise CartanUndefinedError(i, j)


def cartan_matrix(q):
    t = q.theta
    return [[cartan_entry(q, i, j) for j in range(1, t + 1)] for i in range(1, t + 1)]


def is_cartan_vertex(q, i):
    """Does q_ij q_ji == q_ii^(c_ij) hold for every j != i?"""
    for j in range(1, q.theta + 1):
        if j != i and q[i, j] * q[j, i] != q[i, i] ** cartan_entry(q, i, j):
            return False
    return True


def reflection(q, i):
    """The reflection s_i^q as a list of images of the simple roots."""
    t = q.theta
    images = []
    for j in range(1, t + 1):
        v = [0] * t
        v[j - 1] = 1
        v[i - 1] -= cartan_entry(q, i, j)
        images.append(tuple(v))
    return images


def apply_reflection(q, i, vec):
    """s_i^q applied to an integer vector."""
    c = sum(cartan_entry(q, i, j) * vec[j - 1] for j in range(1, q.theta + 1))
    out = list(vec)
    out[i - 1] -= c
    return tuple(out)


@lru_cache(maxsize=4096)
def reflect(q, i):
    """rho_i(q): the braiding matrix q(s_i(alpha_j), s_i(alpha_k))."""
    images = reflection(q, i)
    return BraidingMatrix(
        tuple(tuple(bilinear_form(q, a, b) for b in images) for a in images)
    )


@dataclass(frozen=True)
class DynkinDiagram:
    """Rank-2 generalized Dynkin diagram: labels q_11, q_22 and edge q_12 q_21."""

    vertex_labels: tuple
    edge_label: Cyclotomic

    @property
    def connected(self):
        return self.edge_label != 1

    def key(self):
        """Canonical key, equal for a diagram and its vertex swap."""
        a, b = self.vertex_labels
        e = self.edge_label.key()
        return min((a.key(), e, b.key()), (b.key(), e, a.key()))

    def same_up_to_swap(self, other):
        return self.key() == other.key()

    def swapped(self):
        a, b = self.vertex_labels
        return DynkinDiagram((b, a), self.edge_label)

    def literals(self):
        a, b = self.vertex_labels
        return (a.literal(), self.edge_label.literal(), b.literal())

    def __str__(self):
        a, e, b = self.literals()
        return f"({a}) --[{e}]-- ({b})"


def diagram(q):
    if q.theta != 2:
        raise DomainError("diagram() is implemented for rank 2 only")
    return DynkinDiagram((q[1, 1], q[2, 2]), q[1, 2] * q[2, 1])


def from_diagram(q11, edge, q22):
    """Braiding matrix with the default splitting q_12 = edge, q_21 = 1."""
    F = q11.field
    return BraidingMatrix(((q11, edge), (F.one, q22)))


def _conductor_for(literals, extra_orders=()):
    orders = list(extra_orders)
    for lit in literals:
        orders.extend(literal_orders(lit))
    return session_conductor(orders)


def parse_matrix_text(text, conductor=None):
    """Parse ``"z3,z3^2;1,z3"`` (rows split by ';', entries by ',')."""
    rows = [r.split(",") for r in text.split(";")]
    offset = 0
    lits = []
    for r in rows:
        lits.append([])
        for cell in r:
            lits[-1].append((cell, offset))
            offset += len(cell) + 1
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise LiteralParseError("matrix must be square", text, 0)

    def located(fn, cell, off):
        try:
            return fn(cell)
        except LiteralParseError as exc:
            raise LiteralParseError(
                str(exc).split(" at position")[0], text, off + exc.position
            ) from None

    if conductor is None:
        orders = [n for r in lits for cell, off in r for n in located(literal_orders, cell, off)]
        conductor = session_conductor(orders)
    entries = tuple(
        tuple(located(lambda c: parse_literal(c, conductor), cell, off) for cell, off in r)
        for r in lits
    )
    return BraidingMatrix(entries)


def braiding_from_json(data, conductor=None):
    """Accept ``{"matrix": [[...]]}`` or ``{"diagram": {"q11", "edge", "q22"}}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if "matrix" in data:
        cells = [str(c) for row in data["matrix"] for c in row]
        if conductor is None:
            conductor = _conductor_for(cells)
        rows = tuple(
            tuple(parse_literal(str(c), conductor) for c in row) for row in data["matrix"]
        )
        return BraidingMatrix(rows)
    if "diagram" in data:
        d = data["diagram"]
        cells = [str(d["q11"]), str(d["edge"]), str(d["q22"])]
        if conductor is None:
            conductor = _conductor_for(cells)
        q11, edge, q22 = (parse_literal(c, conductor) for c in cells)
        return from_diagram(q11, edge, q22)
    raise DomainError('expected a "matrix" or "diagram" key')
