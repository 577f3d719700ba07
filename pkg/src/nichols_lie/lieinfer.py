"""Identification of the Lie algebra n_q spanned by xi_beta, beta a Cartan root.

n_q is graded with one-dimensional components in the degrees N_beta * beta.
Its type is read off from the geometry of these degrees: the two minimal
degrees u, v generate, and the set of exponents (a, b) with
degree = a u + b v must be the positive-root set of A2, B2 or G2.
Non-primitivity of the remaining root-vector powers is certified by
coefficients of pure-power components of the coproduct.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceededError, InconsistencyError, UnrecognizedDegreePatternError
from .rootsys import cartan_roots, check_condition_11, positive_roots
from .tensoralg import coproduct_component, hyperletter, power

__all__ = [
    "LieReport",
    "Witness",
    "LIE_POSITIVE_ROOTS",
    "degree_lattice",
    "identify_type",
    "serre_degree_check",
    "primitivity_witnesses",
    "build_report",
    "WITNESS_BUDGET",
]

WITNESS_BUDGET = 20_000

# positive roots of each type in the basis of simple roots (e_1, e_2)
LIE_POSITIVE_ROOTS = {
    "0": [],
    "A1": [(1,)],
    "A1+A1": [(1, 0), (0, 1)],
    "A2": [(1, 0), (0, 1), (1, 1)],
    "B2": [(1, 0), (0, 1), (1, 1), (1, 2)],
    "G2": [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)],
}

def _pattern_cartan(exps):
    """Cartan matrix a_ij = -max{k : k e_i + e_j is a root}."""
    exps = set(exps)
    units = [(1, 0), (0, 1)]
    A = [[2, 0], [0, 2]]
    for i in range(2):
        for j in range(2):
            if i == j:
                continue
            k = 0
            while tuple((k + 1) * units[i][t] + units[j][t] for t in range(2)) in exps:
                k += 1
            A[i][j] = -k
    return A


def degree_lattice(rs):
    """Degrees N_beta * beta of the basis xi_beta, in root order."""
    degs = [
        tuple(n * x for x in r)
        for r, c, n in zip(rs.roots, rs.cartan_flags, rs.orders)
        if c
    ]
    if len(set(degs)) != len(degs):
        raise InconsistencyError(f"duplicate Lie degrees {degs}")
    return degs


def _nonempty_combination(d, members):
    """Is d a sum of one or more members (repetition allowed)?"""
    members = tuple(sorted(members))

    @lru_cache(maxsize=None)
    def rep(v):
        for m in members:
            rest = tuple(a - b for a, b in zip(v, m))
            if min(rest) < 0:
                continue
            if not any(rest) or rep(rest):
                return True
        return False

    return rep(tuple(d))


def minimal_degrees(degrees):
    """Degrees that are not sums of two or more lattice members."""
    out = []
    for d in degrees:
        decomposable = False
        for m in degrees:
            rest = tuple(a - b for a, b in zip(d, m))
            if any(rest) and min(rest) >= 0 and _nonempty_combination(rest, degrees):
                decomposable = True
                break
        if not decomposable:
            out.append(d)
    return out


def _coords(d, u, v):
    """(a, b) with d = a u + b v, or None if not a non-negative integer pair."""
    det = u[0] * v[1] - u[1] * v[0]
    if det == 0:
        return None
    an = d[0] * v[1] - d[1] * v[0]
    bn = u[0] * d[1] - u[1] * d[0]
    if an % det or bn % det:
        return None
    a, b = an // det, bn // det
    if a < 0 or b < 0:
        return None
    return (a, b)


@dataclass
class TypeMatch:
    lie_type: str
    generators: list
    coordinates: dict
    cartan_matrix: list


def identify_type(degrees):
    """Match the degree set against the positive roots of a rank <= 2 type."""
    degrees = [tuple(d) for d in degrees]
    if len(set(degrees)) != len(degrees):
        raise InconsistencyError("degrees must be distinct")
    if not degrees:
        return TypeMatch("0", [], {}, [])
    if len(degrees) == 1:
        return TypeMatch("A1", list(degrees), {degrees[0]: (1,)}, [[2]])
    if len(degrees) == 2:
        u, v = degrees
        return TypeMatch("A1+A1", [u, v], {u: (1, 0), v: (0, 1)}, [[2, 0], [0, 2]])
    gens = minimal_degrees(degrees)
    if len(gens) != 2:
        raise UnrecognizedDegreePatternError(
            f"expected two minimal degrees, found {len(gens)} in {degrees}"
        )
    u, v = gens
    coords = {}
    for d in degrees:
        c = _coords(d, u, v)
        if c is None:
            raise UnrecognizedDegreePatternError(f"{d} is not in N0*{u} + N0*{v}")
        coords[d] = c
    exps = set(coords.values())
    swapped = {(b, a) for a, b in exps}
    for name in ("A2", "B2", "G2"):
        pat = set(LIE_POSITIVE_ROOTS[name])
        if exps == pat or swapped == pat:
            return TypeMatch(name, [u, v], coords, _pattern_cartan(exps))
    raise UnrecognizedDegreePatternError(f"degree pattern {sorted(exps)} matches no type")


def serre_degree_check(rs, match, degrees):
    """Degree-vanishing statements behind the Serre relations and brackets.

    For generators u_i, u_j: (1 - a_ij) u_i + u_j must not be a degree of
    n_q, so (ad xi_i)^(1 - a_ij) xi_j = 0.  For every pair of basis
    degrees whose sum is not a degree, the bracket vanishes.
    """
    lattice = set(map(tuple, degrees))
    statements = []
    if len(match.generators) == 2:
        A = match.cartan_matrix
        g = match.generators
        for i in range(2):
            j = 1 - i
            k = 1 - A[i][j]
            deg = tuple(k * a + b for a, b in zip(g[i], g[j]))
            if deg in lattice:
                raise InconsistencyError(f"Serre degree {deg} lies in the lattice")
            statements.append(
                f"(ad xi{list(g[i])})^{k} xi{list(g[j])} = 0: degree {list(deg)} absent"
            )
    for x in range(len(degrees)):
        for y in range(x + 1, len(degrees)):
            s = tuple(a + b for a, b in zip(degrees[x], degrees[y]))
            if s not in lattice:
                statements.append(
                    f"[xi{list(degrees[x])}, xi{list(degrees[y])}] = 0: degree {list(s)} absent"
                )
    return statements


@dataclass
class Witness:
    root: tuple
    left_degree: tuple
    right_degree: tuple
    coefficient: object = None
    status: str = "found"  # found | no-cross-component | not-pure | over-budget | zero

    def to_json(self):
        return {
            "root": list(self.root),
            "left": list(self.left_degree),
            "right": list(self.right_degree),
            "coeff": None if self.coefficient is None else self.coefficient.literal(),
            "status": self.status,
        }


def _pure_power_valid(rs, simple, exponent):
    """x_i^exponent survives in the pre-Nichols algebra (Cartan or below height)."""
    if exponent == 0:
        return True
    return rs.is_cartan(simple) or exponent < rs.order_of(simple)


def primitivity_witnesses(q, rs, budget=WITNESS_BUDGET):
    """One entry per Cartan root: the x_1^A (x) x_2^B coefficient of
    Delta(x_beta^N), where (A, B) = N beta.

    A nonzero coefficient certifies that x_beta^N is not primitive; every
    other status is inconclusive.
    """
    out = []
    for beta in cartan_roots(rs):
        n = rs.order_of(beta)
        A, B = (n * beta[0], n * beta[1])
        w = Witness(beta, (A, 0), (0, B), status="found")
        if A == 0 or B == 0:
            w.status = "no-cross-component"
        elif not (_pure_power_valid(rs, (1, 0), A) and _pure_power_valid(rs, (0, 1), B)):
            w.status = "not-pure"
        else:
            x = hyperletter(rs.root_words[beta], q)
            try:
                xn = power(x, n, budget=budget)
            except BudgetExceededError:
                w.status = "over-budget"
            else:
                comp = coproduct_component(xn, (A, 0), q)
                c = comp.coeff((1,) * A, (2,) * B)
                w.coefficient = c
                if not c:
                    w.status = "zero"
        out.append(w)
    return out


@dataclass
class LieReport:
    cartan_degrees: list
    generators: list
    lie_type: str
    cartan_matrix: list
    witnesses: list
    serre_checks: list
    condition11: bool
    generation: str = "n/a"
    warnings: list = field(default_factory=list)
    roots: list = field(default_factory=list)

    def to_json(self):
        return {
            "type": self.lie_type,
            "cartan": self.cartan_matrix,
            "degrees": [
                {"root": list(b), "order": n, "degree": list(d)} for b, n, d in self.cartan_degrees
            ],
            "generators": [list(g) for g in self.generators],
            "witnesses": [w.to_json() for w in self.witnesses],
            "serre": self.serre_checks,
            "condition11": self.condition11,
            "generation": self.generation,
            "warnings": self.warnings,
        }


def build_report(q, budget=WITNESS_BUDGET, rs=None):
    """Run the whole pipeline for one braiding matrix."""
    if rs is None:
        rs = positive_roots(q)
    ok11, bad = check_condition_11(q, rs)
    warnings = []
    if not ok11:
        warnings.append(
            "compatibility q(a,b)^N_b = 1 fails for pairs "
            + ", ".join(f"({list(a)}, {list(b)})" for a, b in bad)
        )
    degs = degree_lattice(rs)
    O = cartan_roots(rs)
    cartan_degrees = [(b, rs.order_of(b), d) for b, d in zip(O, degs)]
    match = identify_type(degs)
    serre = serre_degree_check(rs, match, degs)
    witnesses = primitivity_witnesses(q, rs, budget)
    gen_roots = [b for b, d in zip(O, degs) if d in match.generators]
    generation = "n/a"
    if len(O) > 2:
        others = [w for w in witnesses if w.root not in gen_roots]
        if all(w.status == "found" for w in others):
            generation = "verified"
        else:
            generation = "assumed per paper"
    return LieReport(
        cartan_degrees=cartan_degrees,
        generators=gen_roots,
        lie_type=match.lie_type,
        cartan_matrix=match.cartan_matrix,
        witnesses=witnesses,
        serre_checks=serre,
        condition11=ok11,
        generation=generation,
        warnings=warnings,
        roots=rs.to_json(),
    )
