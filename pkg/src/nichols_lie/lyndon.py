"""Words over the alphabet 1 < 2 < ... and Lyndon combinatorics.

Words are plain tuples of positive ints; ``(1, 1, 2)`` stands for
x_1 x_1 x_2 and is serialized as the digit string ``"112"``.
Python's tuple comparison is exactly the lexicographic order in which a
proper prefix is smaller, which is the order used throughout.
"""

from .errors import DomainError

__all__ = [
    "word",
    "word_str",
    "degree",
    "lex_less",
    "deglex_less",
    "is_lyndon",
    "lyndon_factorize",
    "shirshov_split",
    "hyperletter",
    "root_word",
    "root_words",
    "is_convex_order",
]


def word(s):
    """Coerce a digit string, iterable of ints, or tuple into a word tuple."""
    if isinstance(s, str):
        return tuple(int(ch) for ch in s)
    return tuple(int(x) for x in s)


def word_str(w):
    return "".join(str(x) for x in w)


def degree(w, theta=2):
    d = [0] * theta
    for x in w:
        d[x - 1] += 1
    return tuple(d)


def lex_less(u, v):
    return tuple(u) < tuple(v)


def deglex_less(u, v):
    """u < v in the deg-lex order: longer words are smaller, the empty word is maximal."""
    if len(u) != len(v):
        return len(u) > len(v)
    return tuple(u) < tuple(v)


def is_lyndon(u):
    """u is strictly smaller than each of its proper suffixes."""
    u = tuple(u)
    if not u:
        raise DomainError("the empty word is not a Lyndon candidate")
    return all(u < u[k:] for k in range(1, len(u)))


def lyndon_factorize(u):
    """Duval's algorithm: the unique non-increasing Lyndon factorization."""
    u = tuple(u)
    n = len(u)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and u[k] <= u[j]:
            k = i if u[k] < u[j] else k + 1
            j += 1
        while i <= k:
            factors.append(u[i:i + j - k])
            i += j - k
    return factors


def shirshov_split(u):
    """Split a Lyndon word u = u1 u2 with u2 the smallest Lyndon end."""
    u = tuple(u)
    if len(u) < 2 or not is_lyndon(u):
        raise DomainError(f"Shirshov split needs a Lyndon word of length >= 2, got {word_str(u)}")
    best = None
    for k in range(1, len(u)):
        v, w = u[:k], u[k:]
        if is_lyndon(v) and is_lyndon(w) and (best is None or w < best[1]):
            best = (v, w)
    return best


def hyperletter(u, q):
    """[u]_c as an element of the free algebra (see :mod:`tensoralg`)."""
    from .tensoralg import hyperletter as _hyperletter

    return _hyperletter(word(u), q)


def root_words(roots):
    """Map every root to its Lyndon word l_beta.

    l_{alpha_i} = x_i; otherwise l_beta is the lexicographic maximum of
    l_{d1} l_{d2} over root pairs d1 + d2 = beta with l_{d1} < l_{d2}.
    """
    roots = [tuple(r) for r in roots]
    rootset = set(roots)
    memo = {}

    def lw(beta):
        if beta in memo:
            return memo[beta]
        if sum(beta) == 1:
            res = (beta.index(1) + 1,)
        else:
            cands = []
            for d1 in rootset:
                d2 = tuple(b - a for a, b in zip(d1, beta))
                if d2 in rootset and min(d2) >= 0:
                    l1, l2 = lw(d1), lw(d2)
                    if l1 < l2:
                        cands.append(l1 + l2)
            if not cands:
                raise DomainError(f"no root decomposition for {beta}")
            res = max(cands)
            assert cands.count(res) == 1
        memo[beta] = res
        return res

    for r in sorted(roots, key=sum):
        lw(r)
    return {r: memo[r] for r in roots}


def root_word(rs, beta, q=None):
    """Lyndon word attached to the root beta of a root system."""
    beta = tuple(beta)
    if beta not in set(map(tuple, rs.roots)):
        raise DomainError(f"{beta} is not a positive root")
    return root_words(rs.roots)[beta]


def is_convex_order(roots):
    """Is alpha < alpha+beta < beta for every alpha < beta whose sum is listed?"""
    roots = [tuple(r) for r in roots]
    pos = {r: k for k, r in enumerate(roots)}
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if s in pos and not a < pos[s] < b:
                return False
    return True
