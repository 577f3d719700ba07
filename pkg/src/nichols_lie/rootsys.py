"""Generalized positive roots, Cartan roots, Weyl-groupoid orbits and
Hilbert series of a rank-2 braiding matrix."""

from collections import deque
from dataclasses import dataclass, field

from .braiding import (
    apply_reflection,
    bilinear_form,
    diagram,
    is_cartan_vertex,
    reflect,
)
from .errors import DomainError, RootSystemNotFiniteError
from .lyndon import is_convex_order, root_words, word_str

__all__ = [
    "ROOT_CAP",
    "RootSystemData",
    "HilbertSeries",
    "positive_roots",
    "cartan_roots",
    "check_condition_11",
    "hilbert_series_B",
    "hilbert_series_L",
    "hilbert_series_A",
    "weyl_orbit",
]

ROOT_CAP = 64


@dataclass
class RootSystemData:
    roots: list
    cartan_flags: list
    orders: list
    reduced_word: tuple
    matrices_along_walk: list = field(repr=False)
    root_words: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.roots)

    def order_of(self, beta):
        return self.orders[self.roots.index(tuple(beta))]

    def is_cartan(self, beta):
        return self.cartan_flags[self.roots.index(tuple(beta))]

    def to_json(self):
        return [
            {
                "vec": list(r),
                "cartan": c,
                "order": n,
                "word": word_str(self.root_words[r]),
            }
            for r, c, n in zip(self.roots, self.cartan_flags, self.orders)
        ]


def positive_roots(q, start=1, cap=ROOT_CAP):
    """Walk the alternating word start, other, start, ... through the groupoid.

    beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}), each reflection taken at
    the matrix reached so far; beta_k is a Cartan root when i_k is a Cartan
    vertex of rho_{i_{k-1}} ... rho_{i_1}(q).  The walk stops at the first
    candidate with a negative coordinate.
    """
    if q.theta != 2:
        raise DomainError("root-system walks are implemented for rank 2 only")
    if start not in (1, 2):
        raise DomainError("start vertex must be 1 or 2")
    current = q
    # images of alpha_1, alpha_2 under the composite reflection so far
    images = [(1, 0), (0, 1)]
    roots, flags, orders, word, mats = [], [], [], [], [q]
    i = start
    while True:
        beta = images[i - 1]
        if min(beta) < 0:
            break
        if len(roots) >= cap:
            raise RootSystemNotFiniteError(cap)
        if beta in roots:  # pragma: no cover - cannot happen for a reduced walk
            raise RootSystemNotFiniteError(cap)
        roots.append(beta)
        flags.append(is_cartan_vertex(current, i))
        orders.append(_order_or_raise(bilinear_form(q, beta, beta), beta))
        word.append(i)
        # W <- W o s_i^{current}
        s_alpha = [apply_reflection(current, i, e) for e in ((1, 0), (0, 1))]
        images = [
            tuple(s[0] * images[0][k] + s[1] * images[1][k] for k in range(2))
            for s in s_alpha
        ]
        current = reflect(current, i)
        mats.append(current)
        i = 3 - i
    rs = RootSystemData(roots, flags, orders, tuple(word), mats)
    rs.root_words = root_words(roots)
    return rs


def _order_or_raise(x, beta):
    n = x.order()
    if n is None:
        raise DomainError(f"q_(beta,beta) is not a root of unity for beta={beta}")
    return n


def cartan_roots(rs):
    return [r for r, c in zip(rs.roots, rs.cartan_flags) if c]


def check_condition_11(q, rs):
    """q(alpha, beta)^(N_beta) == 1 for all Cartan roots alpha, beta.

    Returns (ok, failing_pairs).
    """
    O = cartan_roots(rs)
    bad = []
    for a in O:
        for b in O:
            if bilinear_form(q, a, b) ** rs.order_of(b) != 1:
                bad.append((a, b))
    return not bad, bad


# -- Hilbert series -------------------------------------------------------------

@dataclass
class HilbertSeries:
    """Bivariate series truncated at total degree ``truncation``."""

    truncation: int
    coefficients: dict

    @classmethod
    def one(cls, D):
        return cls(D, {(0, 0): 1})

    def __getitem__(self, d):
        return self.coefficients.get(tuple(d), 0)

    def __mul__(self, other):
        D = min(self.truncation, other.truncation)
        out = {}
        for (a, b), x in self.coefficients.items():
            for (c, d), y in other.coefficients.items():
                if a + b + c + d <= D:
                    k = (a + c, b + d)
                    out[k] = out.get(k, 0) + x * y
        return HilbertSeries(D, {k: v for k, v in out.items() if v})

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.truncation == other.truncation
            and self.coefficients == other.coefficients
        )

    def total(self):
        return sum(self.coefficients.values())


def _geometric(v, D, terms=None):
    """sum_{k < terms} T^(k v), truncated (terms=None means infinite)."""
    out = {}
    k = 0
    step = sum(v)
    while (terms is None or k < terms) and k * step <= D:
        out[(k * v[0], k * v[1])] = 1
        k += 1
    return HilbertSeries(D, out)


def _product(factors, D):
    res = HilbertSeries.one(D)
    for f in factors:
        res = res * f
    return res


def hilbert_series_B(rs, D):
    """prod over all roots of (1 - T^(N b)) / (1 - T^b)."""
    return _product((_geometric(b, D, n) for b, n in zip(rs.roots, rs.orders)), D)


def hilbert_series_L(rs, D):
    """Cartan roots contribute 1 / (1 - T^b); the others as for B."""
    return _product(
        (
            _geometric(b, D, None if c else n)
            for b, c, n in zip(rs.roots, rs.cartan_flags, rs.orders)
        ),
        D,
    )


def hilbert_series_A(rs, D):
    """prod over Cartan roots of 1 / (1 - T^(N b))."""
    return _product(
        (
            _geometric(tuple(n * x for x in b), D, None)
            for b, c, n in zip(rs.roots, rs.cartan_flags, rs.orders)
            if c
        ),
        D,
    )


def nichols_dimension(rs):
    """Total dimension prod N_beta, read off the Hilbert series."""
    top = sum((n - 1) * sum(b) for b, n in zip(rs.roots, rs.orders))
    return hilbert_series_B(rs, top).total()


# -- Weyl groupoid orbit ------------------------------------------------------------

def weyl_orbit(q, cap=ROOT_CAP):
    """Diagrams reachable from q by reflections, up to vertex swap.

    Returns a list of DynkinDiagram in discovery (breadth-first) order.
    """
    seen = {diagram(q).key(): diagram(q)}
    queue = deque([q])
    while queue:
        cur = queue.popleft()
        for i in (1, 2):
            nxt = reflect(cur, i)
            k = diagram(nxt).key()
            if k not in seen:
                if len(seen) >= cap:
                    raise RootSystemNotFiniteError(cap)
                seen[k] = diagram(nxt)
                queue.append(nxt)
    return list(seen.values())


def is_convex(rs):
    return is_convex_order(rs.roots)
