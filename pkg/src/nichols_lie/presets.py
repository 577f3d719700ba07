"""The sixteen rank-2 rows of the classification table as braiding presets.

A label is written as ``(sign, a, b)`` meaning ``sign * q^a * zeta^b``:
``q`` is the free parameter of rows 1-5 and 10, ``zeta`` is the fixed-order
root of unity of the remaining rows (and the cube root of unity of row 5).
"""

from dataclasses import dataclass
from math import gcd

from .braiding import from_diagram
from .cyclo import CyclotomicField, session_conductor
from .errors import ConstraintError

__all__ = [
    "RowPreset",
    "ROWS",
    "QUOTED_CARTAN_ROOTS",
    "preset_matrix",
    "default_preset",
    "row_diagram_count",
]


def _d(*labels):
    return tuple(labels)


P, M = 1, -1

# row number -> labels, expected type and parameter range
ROWS = {
    1: dict(kind="q", lie="A2", diagrams=[_d((P, 1, 0), (P, -1, 0), (P, 1, 0))],
            constraint="q != 1", default=3),
    2: dict(kind="q", lie="A1", diagrams=[_d((P, 1, 0), (P, -1, 0), (M, 0, 0)),
                                          _d((M, 0, 0), (P, 1, 0), (M, 0, 0))],
            constraint="q != +-1", default=3),
    3: dict(kind="q", lie="B2", diagrams=[_d((P, 1, 0), (P, -2, 0), (P, 2, 0))],
            constraint="q != +-1", default=3),
    4: dict(kind="q", lie="A1+A1", diagrams=[_d((P, 1, 0), (P, -2, 0), (M, 0, 0)),
                                             _d((M, -1, 0), (P, 2, 0), (M, 0, 0))],
            constraint="q not in G_4", default=3),
    5: dict(kind="q", lie="A1+A1", zeta_order=3,
            diagrams=[_d((P, 0, 1), (P, -1, 0), (P, 1, 0)),
                      _d((P, 0, 1), (P, 1, -1), (P, -1, 1))],
            constraint="q not in G_3", default=2),
    6: dict(kind="zeta", order=3, lie="0",
            diagrams=[_d((P, 0, 1), (M, 0, 1), (M, 0, 0)),
                      _d((P, 0, -1), (M, 0, -1), (M, 0, 0))]),
    7: dict(kind="zeta", order=12, lie="0",
            diagrams=[_d((M, 0, -2), (M, 0, 3), (M, 0, 2)),
                      _d((M, 0, -2), (P, 0, -1), (M, 0, 0)),
                      _d((M, 0, 2), (M, 0, 1), (M, 0, 0)),
                      _d((M, 0, 3), (P, 0, 1), (M, 0, 0)),
                      _d((M, 0, 3), (M, 0, -1), (M, 0, 0))]),
    8: dict(kind="zeta", order=12, lie="A1",
            diagrams=[_d((M, 0, 2), (P, 0, 1), (M, 0, 2)),
                      _d((M, 0, 2), (P, 0, 3), (M, 0, 0)),
                      _d((M, 0, -1), (M, 0, 3), (M, 0, 0))]),
    9: dict(kind="zeta", order=9, lie="A1+A1",
            diagrams=[_d((M, 0, 1), (P, 0, -2), (P, 0, 3)),
                      _d((P, 0, 3), (P, 0, -1), (M, 0, 0)),
                      _d((M, 0, 2), (P, 0, 1), (M, 0, 0))]),
    10: dict(kind="q", lie="G2", diagrams=[_d((P, 1, 0), (P, -3, 0), (P, 3, 0))],
             constraint="q not in G_2 or G_3", default=4),
    11: dict(kind="zeta", order=8, lie="A1+A1",
             diagrams=[_d((P, 0, 2), (P, 0, 1), (P, 0, -1)),
                       _d((P, 0, 2), (M, 0, -1), (M, 0, 0)),
                       _d((P, 0, 1), (M, 0, 1), (M, 0, 0))]),
    12: dict(kind="zeta", order=24, lie="A1+A1",
             diagrams=[_d((P, 0, 6), (M, 0, -1), (M, 0, -4)),
                       _d((P, 0, 6), (P, 0, 1), (P, 0, -1)),
                       _d((M, 0, -4), (P, 0, 5), (M, 0, 0)),
                       _d((P, 0, 1), (P, 0, -5), (M, 0, 0))]),
    13: dict(kind="zeta", order=5, lie="B2",
             diagrams=[_d((P, 0, 1), (P, 0, 2), (M, 0, 0)),
                       _d((M, 0, -2), (P, 0, -2), (M, 0, 0))]),
    14: dict(kind="zeta", order=20, lie="A1+A1",
             diagrams=[_d((P, 0, 1), (P, 0, -3), (M, 0, 0)),
                       _d((M, 0, 1), (M, 0, -3), (M, 0, 0)),
                       _d((M, 0, -2), (P, 0, 3), (M, 0, 0)),
                       _d((M, 0, -2), (M, 0, 3), (M, 0, 0))]),
    15: dict(kind="zeta", order=15, lie="A1+A1",
             diagrams=[_d((M, 0, 1), (M, 0, -3), (P, 0, 5)),
                       _d((P, 0, 3), (M, 0, 4), (M, 0, -4)),
                       _d((P, 0, 5), (M, 0, -2), (M, 0, 0)),
                       _d((P, 0, 3), (M, 0, 2), (M, 0, 0))]),
    16: dict(kind="zeta", order=7, lie="G2",
             diagrams=[_d((M, 0, 1), (M, 0, -3), (M, 0, 0)),
                       _d((M, 0, -2), (M, 0, 3), (M, 0, 0))]),
}

# Cartan-root sets as stated in the row descriptions, keyed by
# (row, diagram).  Only entries that are worth cross-checking are listed;
# the row 13 text names 3a1+a2 while assigning N to 3a1+2a2.
QUOTED_CARTAN_ROOTS = {
    (1, 1): ((1, 0), (1, 1), (0, 1)),
    (8, 1): ((1, 1),),
    (9, 1): ((1, 0), (1, 1)),
    (12, 1): ((3, 1), (1, 1)),
    (13, 1): ((1, 0), (1, 1), (2, 1), (3, 1)),
    (16, 2): ((1, 0), (4, 1), (3, 1), (5, 2), (2, 1), (1, 1)),
}

_Q_CONSTRAINTS = {
    1: lambda n: n != 1,
    2: lambda n: n not in (1, 2),
    3: lambda n: n not in (1, 2),
    4: lambda n: 4 % n != 0,
    5: lambda n: 3 % n != 0,
    10: lambda n: n not in (1, 2, 3),
}


def row_diagram_count(row):
    return len(ROWS[row]["diagrams"])


@dataclass(frozen=True)
class RowPreset:
    """A table instance: row, diagram within the cell, parameter q or zeta."""

    row: int
    diagram_index: int = 1
    order: int = None
    exponent: int = 1

    def __post_init__(self):
        if self.row not in ROWS:
            raise ConstraintError(f"row must be in 1..16, got {self.row}")
        entry = ROWS[self.row]
        if not 1 <= self.diagram_index <= len(entry["diagrams"]):
            raise ConstraintError(
                f"row {self.row} has {len(entry['diagrams'])} diagrams, "
                f"got diagram {self.diagram_index}"
            )
        order = self.order
        if order is None:
            order = entry["default"] if entry["kind"] == "q" else entry["order"]
            object.__setattr__(self, "order", order)
        if order < 1:
            raise ConstraintError("parameter order must be positive")
        if gcd(self.exponent, order) != 1:
            raise ConstraintError(
                f"exponent {self.exponent} does not give a primitive {order}-th root"
            )
        if entry["kind"] == "q":
            if not _Q_CONSTRAINTS[self.row](order):
                raise ConstraintError(
                    f"row {self.row} requires {entry['constraint']}; "
                    f"q of order {order} violates it"
                )
        elif order != entry["order"]:
            raise ConstraintError(
                f"row {self.row} requires zeta in G'_{entry['order']}, got order {order}"
            )

    @property
    def lie_type(self):
        """Expected Lie type from the last column of the table."""
        return ROWS[self.row]["lie"]

    def conductor(self):
        entry = ROWS[self.row]
        orders = [self.order]
        if "zeta_order" in entry:
            orders.append(entry["zeta_order"])
        return session_conductor(orders)

    def labels(self):
        """The three diagram labels (q_11, q_12 q_21, q_22) as Cyclotomic."""
        entry = ROWS[self.row]
        F = CyclotomicField(self.conductor())
        if entry["kind"] == "q":
            qv = F.root(self.order, self.exponent)
            zv = F.root(entry["zeta_order"], 1) if "zeta_order" in entry else F.one
        else:
            qv = F.one
            zv = F.root(self.order, self.exponent)
        out = []
        for sign, a, b in entry["diagrams"][self.diagram_index - 1]:
            out.append(F(sign) * qv ** a * zv ** b)
        return tuple(out)

    def matrix(self):
        q11, edge, q22 = self.labels()
        return from_diagram(q11, edge, q22)

    def quoted_cartan_roots(self):
        return QUOTED_CARTAN_ROOTS.get((self.row, self.diagram_index))

    def describe(self):
        name = "q" if ROWS[self.row]["kind"] == "q" else "zeta"
        return (
            f"row {self.row} diagram {self.diagram_index} "
            f"{name}=z{self.order}^{self.exponent}"
        )


def preset_matrix(row, diagram_index=1, order=None, exponent=1):
    return RowPreset(row, diagram_index, order, exponent).matrix()


def default_preset(row):
    return RowPreset(row)
