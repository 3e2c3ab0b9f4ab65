import pytest

from liecensus import fpoly, linalg
from liecensus.matgroup import (
    GroupSpec,
    build_group,
    central_fixed_classes,
    classify_class,
    conjugacy_classes,
    label_of_element,
    oracle_report,
)
from liecensus.polyspace import CapExceeded, InadmissibleError


@pytest.mark.parametrize(
    "family,n,q,order",
    [("GL", 2, 2, 6), ("GU", 2, 2, 18), ("SL", 2, 3, 24), ("GL", 2, 3, 48), ("SU", 2, 3, 24),
     ("GU", 2, 3, 96), ("GL", 1, 5, 4), ("GU", 1, 3, 4)],
)
def test_group_orders(family, n, q, order):
    spec = GroupSpec(family, n, q)
    assert spec.order_formula() == order
    assert len(build_group(spec)) == order


def test_bad_specs():
    with pytest.raises(ValueError):
        GroupSpec("SP", 2, 3)
    with pytest.raises(ValueError):
        GroupSpec("GL", 0, 3)
    with pytest.raises(ValueError):
        GroupSpec("GL", 2, 6)


def test_cap_raises():
    with pytest.raises(CapExceeded):
        build_group(GroupSpec("GL", 3, 3), max_order=1000)


@pytest.mark.parametrize("family,n,q", [("GU", 2, 2), ("GU", 2, 3), ("SU", 2, 3), ("SL", 2, 5)])
def test_membership(family, n, q):
    G = build_group(GroupSpec(family, n, q))
    F = G.field
    I = linalg.identity(n)
    for g in G.elements:
        if family in ("GU", "SU"):
            assert G.mul(g, G.conj_transpose(g)) == I
        if family in ("SL", "SU"):
            assert linalg.det(F, g, n) == 1


@pytest.mark.parametrize(
    "family,n,q,classes",
    [("GL", 2, 2, 3), ("GL", 2, 3, 8), ("GU", 2, 2, 9), ("SL", 2, 3, 7), ("SL", 2, 5, 9),
     ("SU", 2, 3, 7), ("SU", 3, 2, 16), ("GU", 3, 2, 24)],
)
def test_class_counts(class_table, family, n, q, classes):
    assert len(class_table(family, n, q)) == classes


@pytest.mark.parametrize("family,n,q", [("GL", 2, 3), ("GU", 2, 2), ("SL", 2, 3), ("GL", 3, 2), ("GU", 3, 2)])
def test_orbit_stabilizer(class_table, family, n, q):
    table = class_table(family, n, q)
    G = table.group
    assert sum(c.size for c in table.classes) == len(G)
    for c in table.classes:
        assert c.size * len(G.centralizer(c.rep)) == len(G)


@pytest.mark.parametrize("family,n,q", [("GL", 2, 3), ("GU", 2, 2), ("SU", 2, 3)])
def test_generators_agree_with_all(class_table, family, n, q):
    fast = class_table(family, n, q)
    slow = conjugacy_classes(fast.group, by="all", classify=False)
    assert [(c.rep, c.size) for c in fast.classes] == [(c.rep, c.size) for c in slow.classes]


def test_generators_generate():
    G = build_group(GroupSpec("GU", 2, 3))
    assert G.closure(G.gens) == set(G.elements)


def test_classify_examples():
    G = build_group(GroupSpec("GL", 2, 3))
    table = conjugacy_classes(G)
    identity = (1, 0, 0, 1)
    assert classify_class(G, identity) == (True, False, False, False)
    diag = (1, 0, 0, 2)
    # -diag(1, 2) = diag(2, 1) is conjugate to diag(1, 2)
    assert classify_class(G, diag, table.class_of) == (True, True, True, False)
    unipotent = (1, 1, 0, 1)
    assert classify_class(G, unipotent) == (False, False, False, False)
    cyclic = (0, 1, 1, 1)  # companion matrix of X^2 - X - 1, order 8
    assert G.order_of(cyclic) == 8
    assert classify_class(G, cyclic) == (True, True, True, True)


@pytest.mark.parametrize("family,n,q", [("GL", 2, 3), ("GL", 3, 2), ("GU", 2, 3), ("SL", 2, 5)])
def test_semisimple_tests_agree(class_table, family, n, q):
    table = class_table(family, n, q)
    G = table.group
    for g in G.elements:
        by_min = fpoly.is_squarefree(G.field, linalg.minpoly(G.field, g, n))
        assert by_min == (G.order_of(g) % G.sq.p != 0)


def test_label_examples():
    G = build_group(GroupSpec("GL", 2, 3))
    lab = label_of_element(G, (1, 0, 0, 1))
    assert [(g.coeffs, tuple(p)) for g, p in lab.items] == [((2, 1), (1, 1))]
    lab = label_of_element(G, (1, 1, 0, 1))
    assert [(g.coeffs, tuple(p)) for g, p in lab.items] == [((2, 1), (2,))]
    lab = label_of_element(G, (0, 1, 2, 0))  # X^2 + 1
    assert [(g.coeffs, tuple(p)) for g, p in lab.items] == [((1, 0, 1), (1,))]
    with pytest.raises(ValueError):
        label_of_element(build_group(GroupSpec("SL", 2, 3)), (1, 0, 0, 1))


def test_central_fixed_classes(class_table):
    t = class_table("GL", 2, 3)
    assert central_fixed_classes(t, 1) == len(t)
    assert central_fixed_classes(t, 2) == 2
    assert central_fixed_classes(class_table("GU", 2, 3), 2) == 4
    assert central_fixed_classes(class_table("GU", 3, 2), 3) == 3
    with pytest.raises(InadmissibleError):
        central_fixed_classes(t, 3)


def test_oracle_report(class_table):
    spec = GroupSpec("GL", 2, 3)
    rep = oracle_report(spec, table=class_table("GL", 2, 3))
    assert rep["order"] == 48 and rep["classes"] == 8
    assert (rep["semisimple"], rep["regular_semisimple"], rep["strongly_regular"], rep["srs0"]) == (6, 4, 4, 2)
    assert rep["fixed_classes"] == {"1": 8, "2": 2}
    rep = oracle_report(GroupSpec("GU", 2, 2))
    assert rep["classes"] == 9 and rep["fixed_classes"] == {"1": 9, "3": 0}


def test_central_perm_is_permutation(class_table):
    t = class_table("GU", 2, 3)
    assert sorted(t.central_perm) == list(range(len(t)))
