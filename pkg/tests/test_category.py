import pytest

from arcorder.category import (
    TypeMismatch,
    decompose,
    delta_matrices,
    dim_end,
    dim_end_operator,
    hom_dim,
    hom_dim_obj,
    mesh_defect,
    orbit_dim_embed,
    orbit_dim_tableau,
    tableau_of_decomposition,
)
from arcorder.partitions import conjugate, partitions_of
from arcorder.summands import B2, P0, P1, P2, Decomposition, Indecomposable, bipicket
from arcorder.tableaux import iter_klein_tableaux, klein_by_type

from conftest import same_type_pairs


def D(*items):
    return Decomposition(tuple(items))


def all_tableaux(max_size):
    for size in range(1, max_size + 1):
        for beta in partitions_of(size):
            yield from iter_klein_tableaux(beta)


def indecomposables(top):
    for m in range(1, top + 1):
        yield P0(m)
        yield P1(m)
        if m >= 2:
            yield P2(m)
        for r in range(1, m - 1):
            yield B2(m, r)


# ------------------------------------------------------ summands


def test_indecomposable_constraints():
    with pytest.raises(ValueError):
        Indecomposable("B2", 5, 4)
    with pytest.raises(ValueError):
        Indecomposable("P1", 0)
    with pytest.raises(ValueError):
        Indecomposable("Q", 3)
    assert bipicket(5, 4) == [P2(5), P0(4)]
    assert bipicket(5, 2) == [B2(5, 2)]


def test_decompose_bottom_refinement(pis):
    assert decompose(pis[1]) == D(B2(5, 3), P2(4), P0(3), P1(2), P1(1))


def test_decompose_top_refinement(pis):
    assert decompose(pis[7]) == D(B2(5, 2), B2(4, 1), P1(3), P1(3))


def test_decompose_worked_pair(pair):
    y, z = pair
    assert decompose(z) == D(B2(7, 2), B2(6, 3), B2(5, 1), P1(4))
    assert decompose(y) == D(B2(7, 3), B2(6, 2), P2(5), P0(4), P1(1))


def test_middle_refinement_from_summands(pis):
    assert tableau_of_decomposition(D(B2(5, 3), B2(4, 2), P1(3), P1(1))) == pis[3]


def test_empty_tableau():
    pi = tableau_of_decomposition(D(P0(4)))
    assert pi.arcs == () and pi.poles == () and tuple(pi.beta) == (4,) and tuple(pi.gamma) == (4,)
    pi = tableau_of_decomposition(D(P0(3), P0(1)))
    assert decompose(pi) == D(P0(3), P0(1))


def test_type_counts_match():
    for pi in all_tableaux(8):
        d = decompose(pi)
        alpha, beta, _ = pi.type()
        assert d.beta == beta and d.alpha == alpha
        rows = conjugate(alpha)
        k = d.counts()
        n_b2 = sum(v for x, v in k.items() if x.kind in ("B2", "P2"))
        n_p1 = sum(v for x, v in k.items() if x.kind == "P1")
        assert n_b2 == (rows[1] if len(rows) > 1 else 0)
        assert n_b2 + n_p1 == (rows[0] if rows else 0)


def test_bijection_exhaustive():
    n = 0
    for pi in all_tableaux(10):
        assert tableau_of_decomposition(decompose(pi)) == pi
        n += 1
    assert n > 3000


# ------------------------------------------------------ hom table


@pytest.mark.parametrize(
    "x, y, dim",
    [
        (P0(2), P0(3), 2),
        (B2(6, 1), B2(5, 1), 7),
        (B2(6, 3), B2(7, 2), 12),
        (P1(1), P1(4), 1),
        (P2(3), P0(1), 1),
    ],
)
def test_hom_table_values(x, y, dim):
    assert hom_dim(x, y) == dim


def test_hom_into_objects(pair):
    y, z = (decompose(t) for t in pair)
    assert hom_dim_obj(B2(6, 3), z) == 43
    assert hom_dim_obj(B2(6, 3), y) == 42
    assert hom_dim_obj(B2(6, 3), D()) == 0


def _formal_hom(x_parts, y_parts):
    return sum(hom_dim(a, b) for a in x_parts for b in y_parts)


def test_alias_consistency():
    """The B-formulas read at t = l - 1 agree with P2(l) + P0(l - 1)."""
    from arcorder import category

    for l in range(2, 9):
        fake = Indecomposable.__new__(Indecomposable)
        object.__setattr__(fake, "kind", "B2")
        object.__setattr__(fake, "m", l)
        object.__setattr__(fake, "r", l - 1)
        for y in indecomposables(9):
            assert category.hom_dim(fake, y) == hom_dim(P2(l), y) + hom_dim(P0(l - 1), y)
            assert category.hom_dim(y, fake) == hom_dim(y, P2(l)) + hom_dim(y, P0(l - 1))


def test_closed_forms_depend_on_type_only():
    for pi in all_tableaux(10):
        a, b, g = (conjugate(p) for p in pi.type())
        M = decompose(pi)

        def row(lam, j):
            return lam[j - 1] if j <= len(lam) else 0

        assert hom_dim_obj(P1(1), M) == row(a, 1)
        for m in range(1, pi.lr.height + 2):
            assert hom_dim_obj(P0(m), M) == sum(row(b, j) for j in range(1, m + 1))
            if m >= 2:
                want = row(a, 1) + row(a, 2) + sum(row(g, j) for j in range(1, m - 1))
                assert hom_dim_obj(P2(m), M) == want


# ------------------------------------------------------ band matrices


def test_delta_worked_pair(pair):
    dH, _ = delta_matrices(*pair)
    assert dH.at(6, 2) == 1 and dH.at(6, 3) == 1
    assert dH.at(7, 3) == 0 and dH.at(5, 2) == 0 and dH.at(7, 4) == 1


def test_delta_self_is_zero(pair):
    dH, dM = delta_matrices(pair[0], pair[0])
    assert not dH.nonzero() and not dM.nonzero()


def test_delta_type_mismatch(pair, pis):
    with pytest.raises(TypeMismatch):
        delta_matrices(pair[0], pis[1])


def test_mesh_defect_worked(pair):
    dH, dM = delta_matrices(*pair)
    assert mesh_defect(dH, ("B", 6, 3)) == 1 == dM.at(6, 3)
    assert mesh_defect(dH, ("B", 5, 1)) == 1 == dM.at(5, 1)


def test_band_zeros_and_defect():
    checked = 0
    for y, z in same_type_pairs(8):
        dH, dM = delta_matrices(y, z)
        assert dH.p1(1) == 0
        assert all(v == 0 for v in dH.pair.values())
        for l in range(3, dH.N + 1):
            for t in range(1, l - 1):
                assert mesh_defect(dH, ("B", l, t)) == dM.at(l, t)
                checked += 1
    assert checked > 1000


def test_json_shape(pair):
    dH, _ = delta_matrices(*pair)
    js = dH.to_json()
    assert js["N"] == 7 and js["B"]["6,3"] == 1 and set(js["P1"]) == {str(t) for t in range(1, 8)}


# ------------------------------------------------------ dimensions


def test_dim_end_values(pis):
    assert dim_end(decompose(pis[7])) == 79
    assert dim_end(decompose(pis[1])) == 74
    assert dim_end_operator((2, 2, 1, 1)) == 20
    assert dim_end_operator((5, 4, 3, 3, 2, 1)) == 82


def test_orbit_dims(pis):
    assert [orbit_dim_embed(pis[i]) for i in (1, 7)] == [28, 23]
    assert [orbit_dim_tableau(pis[i]) for i in (1, 7)] == [8, 3]
    assert sorted(orbit_dim_embed(p) for p in pis[1:]) == [23, 24, 25, 26, 26, 27, 28]


def test_embed_plus_crossings_constant():
    for size in range(1, 9):
        for beta in partitions_of(size):
            for lst in klein_by_type(beta).values():
                assert len({orbit_dim_embed(p) + p.crossings for p in lst}) == 1
