import random

import pytest

from nichols_lie.braiding import (
    BraidingMatrix,
    bilinear_form,
    braiding_from_json,
    cartan_entry,
    cartan_matrix,
    diagram,
    from_diagram,
    is_cartan_vertex,
    parse_matrix_text,
    reflect,
)
from nichols_lie.cyclo import CyclotomicField
from nichols_lie.errors import CartanUndefinedError, DomainError, LiteralParseError
from nichols_lie.presets import ROWS, RowPreset
from nichols_lie.rootsys import weyl_orbit


def all_instances():
    for row, entry in ROWS.items():
        for d in range(1, len(entry["diagrams"]) + 1):
            yield row, d


def _row1(order=3):
    return RowPreset(1, 1, order).matrix()


def test_bilinear_form_on_basis_vectors():
    q = _row1()
    assert bilinear_form(q, (1, 0), (0, 1)) == q[1, 2]
    assert bilinear_form(q, (0, 0), (3, 5)) == 1
    F = q.field
    w = F.root(3, 1)
    # q11 q12 q21 q22 = w * w^2 * 1 * w
    assert bilinear_form(q, (1, 1), (1, 1)) == w


def test_bilinear_form_is_multiplicative():
    rng = random.Random(3)
    F = CyclotomicField(24)
    for _ in range(30):
        q = BraidingMatrix(
            tuple(tuple(F.zeta_power(rng.randrange(24)) for _ in range(2)) for _ in range(2))
        )
        a, a2, b = ((rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(3))
        s = (a[0] + a2[0], a[1] + a2[1])
        assert bilinear_form(q, s, b) == bilinear_form(q, a, b) * bilinear_form(q, a2, b)
        assert bilinear_form(q, b, s) == bilinear_form(q, b, a) * bilinear_form(q, b, a2)


def _direct_cartan(q, i, j, limit=200):
    """Evaluate -min{n : (n+1)_{q_ii} (1 - q_ii^n q_ij q_ji) = 0} by brute force."""
    qii = q[i, i]
    prod = q[i, j] * q[j, i]
    for n in range(limit):
        qnum = sum((qii ** k for k in range(n + 1)), q.field.zero)
        if qnum * (1 - qii ** n * prod) == 0:
            return -n
    return None


def test_row3_cartan_entries_at_order_5():
    q = RowPreset(3, 1, 5).matrix()
    assert cartan_entry(q, 1, 2) == -2
    assert cartan_entry(q, 2, 1) == -1
    assert cartan_entry(q, 1, 1) == cartan_entry(q, 2, 2) == 2


@pytest.mark.parametrize("row, d", list(all_instances()))
def test_cartan_entries_against_direct_definition(row, d):
    q = RowPreset(row, d).matrix()
    for i in (1, 2):
        for j in (1, 2):
            if i != j:
                c = cartan_entry(q, i, j)
                assert c == _direct_cartan(q, i, j)
                assert c <= 0


def test_cartan_entry_undefined_when_q11_is_one():
    F = CyclotomicField(6)
    q = from_diagram(F.one, F.root(3, 1), F.root(3, 1))
    with pytest.raises(CartanUndefinedError):
        cartan_entry(q, 1, 2)


def test_cartan_vertex_examples():
    q2 = RowPreset(2, 1, 5).matrix()
    assert is_cartan_vertex(q2, 1) and not is_cartan_vertex(q2, 2)
    q1 = _row1(5)
    assert is_cartan_vertex(q1, 1) and is_cartan_vertex(q1, 2)
    q6 = RowPreset(6).matrix()
    assert not is_cartan_vertex(q6, 1) and not is_cartan_vertex(q6, 2)


def test_reflection_examples():
    q1 = _row1()
    assert diagram(reflect(q1, 1)).key() == diagram(q1).key()
    q2 = RowPreset(2, 1, 5).matrix()
    second = RowPreset(2, 2, 5).matrix()
    assert diagram(reflect(q2, 2)).same_up_to_swap(diagram(second))


@pytest.mark.parametrize("row, d", list(all_instances()))
def test_reflection_is_an_involution_on_diagrams(row, d):
    q = RowPreset(row, d).matrix()
    for i in (1, 2):
        assert diagram(reflect(reflect(q, i), i)).key() == diagram(q).key()


@pytest.mark.parametrize("row, d", list(all_instances()))
def test_reflections_stay_inside_the_row_cell(row, d):
    q = RowPreset(row, d).matrix()
    cell = {diagram(RowPreset(row, k).matrix()).key() for k in range(1, len(ROWS[row]["diagrams"]) + 1)}
    for i in (1, 2):
        assert diagram(reflect(q, i)).key() in cell


@pytest.mark.parametrize("row", sorted(ROWS))
def test_orbit_equals_row_cell(row):
    n = len(ROWS[row]["diagrams"])
    cell = {diagram(RowPreset(row, k).matrix()).key() for k in range(1, n + 1)}
    orbit = {d.key() for d in weyl_orbit(RowPreset(row).matrix())}
    assert orbit == cell


def test_diagram_labels():
    F = CyclotomicField(6)
    z = F.root(3, 1)
    q = BraidingMatrix(((z, z ** 2), (F.one, z)))
    assert diagram(q).edge_label == z ** 2
    q10 = RowPreset(10, 1, 4).matrix()
    G = q10.field
    i = G.root(4, 1)
    d = diagram(q10)
    assert d.vertex_labels == (i, i ** 3)
    assert d.edge_label == i ** -3 == i
    flat = from_diagram(z, F.one, z)
    assert not diagram(flat).connected


def test_parse_matrix_text_and_json_agree_with_preset():
    a = parse_matrix_text("z3,z3^2;1,z3")
    b = braiding_from_json({"matrix": [["z3", "z3^2"], ["1", "z3"]]})
    c = braiding_from_json('{"diagram": {"q11": "z3", "edge": "z3^2", "q22": "z3"}}')
    assert a == b == c == _row1()


def test_parse_matrix_errors():
    with pytest.raises(LiteralParseError) as exc:
        parse_matrix_text("z3,z3^;1,z3")
    assert exc.value.position == 6
    with pytest.raises(LiteralParseError):
        parse_matrix_text("z3,z3;1")
    with pytest.raises(DomainError):
        parse_matrix_text("0,1;1,z3")
    with pytest.raises(DomainError):
        braiding_from_json({"nothing": 1})


def test_cartan_matrix_row10_is_g2():
    assert cartan_matrix(RowPreset(10).matrix()) == [[2, -3], [-1, 2]]
