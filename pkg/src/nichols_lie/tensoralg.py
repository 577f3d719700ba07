"""The free braided Hopf algebra T(V) of a diagonal braiding.

Elements are sparse maps word -> Cyclotomic.  The coproduct is the braided
algebra map with Delta(x_i) = x_i (x) 1 + 1 (x) x_i, where the tensor square
multiplies as

    (a (x) b)(c (x) d) = q(deg b, deg c) ac (x) bd.

Consequently, for a single word the term in which the positions of a set S
go to the left factor carries the scalar prod q_{w_i, w_k} over pairs
i < k with i going right and k going left.

The quotient by the radical of the quantum-shuffle pairing is the Nichols
algebra; graded dimensions and root heights are computed from it by exact
elimination.
"""

from collections import defaultdict
from itertools import combinations
from math import factorial

from .braiding import bilinear_form
from .cyclo import CyclotomicField, parse_literal
from .errors import BudgetExceededError, DomainError
from .linalg import rank
from .lyndon import degree, is_lyndon, lyndon_factorize, shirshov_split, word, word_str

__all__ = [
    "TensorElement",
    "TensorSquareElement",
    "multiply",
    "power",
    "braided_bracket",
    "hyperletter",
    "coproduct",
    "coproduct_component",
    "shuffle_pairing",
    "gram_matrix",
    "words_of_degree",
    "nichols_graded_dim",
    "nichols_radical_member",
    "nichols_root_height",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 5_000_000


class TensorElement:
    """Sparse element of T(V); zero coefficients are never stored."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        if terms:
            for w, c in terms.items():
                c = field(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, field, terms):
        self = object.__new__(cls)
        self.field = field
        self.terms = terms
        return self

    @classmethod
    def from_word(cls, field, w, coeff=1):
        return cls(field, {word(w): coeff})

    @classmethod
    def one(cls, field):
        return cls(field, {(): 1})

    @classmethod
    def letter(cls, field, i):
        return cls(field, {(i,): 1})

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, w):
        return self.terms.get(word(w), self.field.zero)

    def is_zero(self):
        return not self.terms

    def degrees(self, theta=2):
        return {degree(w, theta) for w in self.terms}

    def is_homogeneous(self, theta=2):
        return len(self.degrees(theta)) <= 1

    def homogeneous_components(self, theta=2):
        comps = defaultdict(dict)
        for w, c in self.terms.items():
            comps[degree(w, theta)][w] = c
        return {d: TensorElement._trusted(self.field, t) for d, t in comps.items()}

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return TensorElement._trusted(self.field, out)

    def __neg__(self):
        return TensorElement._trusted(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.field(s)
        if not s:
            return TensorElement(self.field)
        return TensorElement._trusted(self.field, {w: s * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"TensorElement({self.to_text()})"

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            parts.append(f"({self.terms[w].literal()})*[{word_str(w) or '1'}]")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"word": word_str(w), "coeff": self.terms[w].literal()}
            for w in sorted(self.terms, key=lambda w: (len(w), w))
        ]

    @classmethod
    def from_json(cls, data, conductor):
        F = CyclotomicField(conductor)
        return cls(F, {word(t["word"]): parse_literal(t["coeff"], conductor) for t in data})


class TensorSquareElement:
    """Sparse element of T(V) (x) T(V), keyed by (left word, right word)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for (l, r), c in terms.items():
                c = field(c)
                if c:
                    self.terms[(tuple(l), tuple(r))] = c

    @classmethod
    def _trusted(cls, field, terms):
        self = object.__new__(cls)
        self.field = field
        self.terms = terms
        return self

    def __len__(self):
        return len(self.terms)

    def coeff(self, left, right):
        return self.terms.get((word(left), word(right)), self.field.zero)

    def component(self, left_degree, theta=2):
        left_degree = tuple(left_degree)
        return TensorSquareElement._trusted(
            self.field,
            {k: c for k, c in self.terms.items() if degree(k[0], theta) == left_degree},
        )

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorSquareElement._trusted(self.field, out)

    def __sub__(self, other):
        return self + TensorSquareElement._trusted(
            self.field, {k: -c for k, c in other.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, TensorSquareElement):
            return NotImplemented
        return self.terms == other.terms

    def multiply(self, other, q):
        """Braided product (a (x) b)(c (x) d) = q(deg b, deg c) ac (x) bd."""
        theta = q.theta
        out = defaultdict(lambda: self.field.zero)
        for (a, b), x in self.terms.items():
            db = degree(b, theta)
            for (c, d), y in other.terms.items():
                out[(a + c, b + d)] += bilinear_form(q, db, degree(c, theta)) * x * y
        return TensorSquareElement._trusted(self.field, {k: v for k, v in out.items() if v})

    def to_json(self):
        keys = sorted(self.terms, key=lambda k: (len(k[0]), k[0], len(k[1]), k[1]))
        return [
            {"left": word_str(l), "right": word_str(r), "coeff": self.terms[(l, r)].literal()}
            for l, r in keys
        ]

    @classmethod
    def from_json(cls, data, conductor):
        F = CyclotomicField(conductor)
        return cls(
            F,
            {(word(t["left"]), word(t["right"])): parse_literal(t["coeff"], conductor) for t in data},
        )

    def __repr__(self):
        return f"TensorSquareElement({len(self.terms)} terms)"


# -- products ---------------------------------------------------------------

def multiply(a, b):
    """Concatenation product in the free algebra."""
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            c = cu * cv
            s = out.get(w)
            out[w] = c if s is None else s + c
    return TensorElement._trusted(a.field, {w: c for w, c in out.items() if c})


def power(a, n, budget=None):
    """a ** n by repeated multiplication; ``budget`` bounds the expanded size."""
    if n < 0:
        raise DomainError("negative powers do not exist in T(V)")
    if budget is not None and len(a) ** n > budget:
        raise BudgetExceededError(len(a) ** n, budget, "expanded terms")
    result = TensorElement.one(a.field)
    for _ in range(n):
        result = multiply(result, a)
    return result


def braided_bracket(a, b, q):
    """[a, b]_c = ab - (braided) ba, term by homogeneous term."""
    theta = q.theta
    out = multiply(a, b)
    for da, ca in a.homogeneous_components(theta).items():
        for db, cb in b.homogeneous_components(theta).items():
            out = out - multiply(cb, ca).scale(bilinear_form(q, da, db))
    return out


_hyper_cache = {}


def hyperletter(u, q):
    """[u]_c: letters, nested brackets along Shirshov splits, or products."""
    u = word(u)
    key = (q, u)
    hit = _hyper_cache.get(key)
    if hit is not None:
        return hit
    F = q.field
    if len(u) <= 1:
        res = TensorElement(F, {u: 1})
    elif is_lyndon(u):
        v, w = shirshov_split(u)
        res = braided_bracket(hyperletter(v, q), hyperletter(w, q), q)
    else:
        res = TensorElement.one(F)
        for f in lyndon_factorize(u):
            res = multiply(res, hyperletter(f, q))
    _hyper_cache[key] = res
    return res


# -- coproduct ----------------------------------------------------------------

def _word_splits(w, theta, left_target=None):
    """Enumerate position splits of one word with their braiding exponents.

    Returns {(left word, right word, counts): multiplicity} where counts[t]
    with t = (b-1)*theta + (a-1) is the number of pairs "b goes right, then a
    later letter a goes left".  With ``left_target`` only splits whose left
    factor has that degree are produced; letters of each kind are chosen by
    combinations, so the cost is the number of admissible subsets.
    """
    n = len(w)
    if left_target is None:
        chosen_sets = []
        for mask in range(1 << n):
            chosen_sets.append([p for p in range(n) if mask >> p & 1])
    else:
        positions = [[p for p in range(n) if w[p] == a] for a in range(1, theta + 1)]
        if any(t > len(ps) or t < 0 for t, ps in zip(left_target, positions)):
            return {}
        chosen_sets = [[]]
        for ps, t in zip(positions, left_target):
            chosen_sets = [c + list(extra) for c in chosen_sets for extra in combinations(ps, t)]
    out = defaultdict(int)
    for chosen in chosen_sets:
        left_set = set(chosen)
        right_seen = [0] * theta
        counts = [0] * (theta * theta)
        lw, rw = [], []
        for p, a in enumerate(w):
            if p in left_set:
                lw.append(a)
                for b in range(theta):
                    if right_seen[b]:
                        counts[b * theta + a - 1] += right_seen[b]
            else:
                rw.append(a)
                right_seen[a - 1] += 1
        out[(tuple(lw), tuple(rw), tuple(counts))] += 1
    return out


def _collect(a, q, left_target):
    theta = q.theta
    F = a.field
    grouped = defaultdict(lambda: defaultdict(lambda: F.zero))
    for w, c in a.terms.items():
        for (lw, rw, counts), mult in _word_splits(w, theta, left_target).items():
            grouped[(lw, rw)][counts] += c * mult
    scalars = {}
    out = {}
    for key, by_counts in grouped.items():
        total = F.zero
        for counts, s in by_counts.items():
            if not s:
                continue
            sc = scalars.get(counts)
            if sc is None:
                sc = F.one
                for t, e in enumerate(counts):
                    if e:
                        sc = sc * q.qpow(t // theta + 1, t % theta + 1, e)
                scalars[counts] = sc
            total = total + s * sc
        if total:
            out[key] = total
    return TensorSquareElement._trusted(F, out)


def coproduct(a, q):
    """Full braided coproduct Delta(a) in T(V) (x) T(V)."""
    return _collect(a, q, None)


def coproduct_component(a, left_degree, q):
    """The part of Delta(a) whose left factor has degree ``left_degree``."""
    return _collect(a, q, tuple(left_degree))


def coproduct_on_left(t, q):
    """(Delta (x) id) applied to a tensor square; returns {(w1, w2, w3): coeff}."""
    out = defaultdict(lambda: t.field.zero)
    for (l, r), c in t.terms.items():
        for (l1, l2), d in coproduct(TensorElement._trusted(t.field, {l: c}), q).terms.items():
            out[(l1, l2, r)] += d
    return {k: v for k, v in out.items() if v}


def coproduct_on_right(t, q):
    """(id (x) Delta) applied to a tensor square; returns {(w1, w2, w3): coeff}."""
    out = defaultdict(lambda: t.field.zero)
    for (l, r), c in t.terms.items():
        for (r1, r2), d in coproduct(TensorElement._trusted(t.field, {r: c}), q).terms.items():
            out[(l, r1, r2)] += d
    return {k: v for k, v in out.items() if v}


# -- pairing and Nichols quotient --------------------------------------------

_omega_cache = {}


def _omega(u, q):
    """Row of the pairing: {v: <u, v>} for all words v of the degree of u.

    From <y, x_j x'> = <y^(2), x_j><y^(1), x'>: only splits sending a single
    letter u_p = j to the right contribute, with scalar prod_{k>p} q_{j, u_k}.
    """
    key = (q, u)
    hit = _omega_cache.get(key)
    if hit is not None:
        return hit
    F = q.field
    if not u:
        res = {(): F.one}
    else:
        theta = q.theta
        by_rest = {}
        after = [0] * theta
        for p in range(len(u) - 1, -1, -1):
            j = u[p]
            sc = F.one
            for b, e in enumerate(after):
                if e:
                    sc = sc * q.qpow(j, b + 1, e)
            rest = u[:p] + u[p + 1:]
            k = (j, rest)
            by_rest[k] = by_rest[k] + sc if k in by_rest else sc
            after[j - 1] += 1
        acc = {}
        for (j, rest), sc in by_rest.items():
            if not sc:
                continue
            for v, c in _omega(rest, q).items():
                w = (j,) + v
                s = acc.get(w)
                acc[w] = sc * c if s is None else s + sc * c
        res = {w: c for w, c in acc.items() if c}
    _omega_cache[key] = res
    return res


def shuffle_pairing(u, v, q):
    """<u, v> for words or TensorElements (bilinear extension)."""
    if isinstance(u, TensorElement) or isinstance(v, TensorElement):
        F = q.field
        us = u.terms if isinstance(u, TensorElement) else {word(u): F.one}
        vs = v.terms if isinstance(v, TensorElement) else {word(v): F.one}
        total = F.zero
        for w1, c1 in us.items():
            row = _omega(w1, q)
            for w2, c2 in vs.items():
                x = row.get(w2)
                if x is not None:
                    total = total + c1 * c2 * x
        return total
    u, v = word(u), word(v)
    return _omega(u, q).get(v, q.field.zero)


def _word_count(d):
    n = factorial(sum(d))
    for x in d:
        n //= factorial(x)
    return n


def words_of_degree(d):
    """All words with letter counts d, in lexicographic order."""
    d = tuple(d)
    out = []

    def rec(prefix, rem):
        if not any(rem):
            out.append(tuple(prefix))
            return
        for a, r in enumerate(rem):
            if r:
                rem2 = list(rem)
                rem2[a] -= 1
                prefix.append(a + 1)
                rec(prefix, rem2)
                prefix.pop()

    rec([], list(d))
    return out


def _check_budget(d, budget):
    count = _word_count(d)
    if count > budget:
        raise BudgetExceededError(count, budget)
    return count


def gram_matrix(q, d, budget=DEFAULT_BUDGET):
    _check_budget(d, budget)
    ws = words_of_degree(d)
    F = q.field
    rows = []
    for u in ws:
        row = _omega(u, q)
        rows.append([row.get(v, F.zero) for v in ws])
    return ws, rows


def nichols_graded_dim(q, d, budget=DEFAULT_BUDGET):
    """dim of the degree-d component of the Nichols algebra (Gram rank)."""
    _, rows = gram_matrix(q, d, budget)
    return rank(rows)


def nichols_radical_member(a, q, budget=DEFAULT_BUDGET):
    """Does a pair to zero with every word of its degree(s)?"""
    theta = q.theta
    F = q.field
    for d, comp in a.homogeneous_components(theta).items():
        _check_budget(d, budget)
        acc = defaultdict(lambda: F.zero)
        for u, c in comp.terms.items():
            for v, x in _omega(u, q).items():
                acc[v] += c * x
        if any(acc.values()):
            return False
    return True


def nichols_root_height(q, rs, beta, budget=DEFAULT_BUDGET, max_height=None):
    """Least t with [l_beta]_c ** t in the Nichols ideal."""
    from .lyndon import root_word

    beta = tuple(beta)
    x = hyperletter(root_word(rs, beta), q)
    if max_height is None:
        max_height = 2 * q.field.conductor
    el = TensorElement.one(q.field)
    for t in range(1, max_height + 1):
        _check_budget(tuple(t * b for b in beta), budget)
        el = multiply(el, x)
        if nichols_radical_member(el, q, budget):
            return t
    raise DomainError(f"no height found for {beta} up to {max_height}")
