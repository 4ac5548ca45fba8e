import random

import pytest
import sympy

import symcert._kernels as kernels
from symcert.cyclotomic import _residue_table, weight_set
from symcert.groebner import IdealSpec, groebner_basis
from symcert.lefschetz import slp_check
from symcert.polycore import PolyRingContext
from symcert.symmetric import complete_homogeneous, power_sum

BACKENDS = kernels.backends()
IDS = [b.BACKEND for b in BACKENDS]


def test_selected_backend_is_importable():
    assert kernels.BACKEND in IDS


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
def test_bareiss_rank_matches_sympy(backend):
    rng = random.Random(5)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rank_hint = rng.randint(1, min(r, c))
        left = [[rng.randint(-4, 4) for _ in range(rank_hint)] for _ in range(r)]
        right = [[rng.randint(-4, 4) for _ in range(c)] for _ in range(rank_hint)]
        rows = [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]
        assert backend.bareiss_rank(rows) == sympy.Matrix(rows).rank()


@pytest.mark.parametrize("m,n", [(6, 3), (10, 5), (12, 7), (15, 8), (9, 4), (7, 7), (7, 6)])
def test_vanishing_search_parity(m, n):
    table = _residue_table(m)
    results = [b.vanishing_search(m, n, table, len(table[0]), 10**7) for b in BACKENDS]
    witnesses = [r[0] for r in results]
    assert all(w == witnesses[0] for w in witnesses)


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
def test_vanishing_search_budget(backend):
    table = _residue_table(49)
    with pytest.raises(kernels.KernelLimit):
        backend.vanishing_search(49, 6, table, len(table[0]), 50)


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
def test_groebner_and_slp_under_each_backend(backend, monkeypatch):
    for name in ("nf_reduce", "bareiss_rank", "vanishing_search"):
        monkeypatch.setattr(kernels, name, getattr(backend, name))
    ctx = PolyRingContext.standard(4)
    I = IdealSpec(ctx, (power_sum(ctx, 2), power_sum(ctx, 5), complete_homogeneous(ctx, 3)))
    G = groebner_basis(I)
    assert len(G.basis) > 0
    h = IdealSpec(PolyRingContext.standard(3), tuple(complete_homogeneous(3, a) for a in (2, 3, 4)))
    assert not slp_check(h).verdict
    assert sorted(weight_set(6, 1, 6).weights_bruteforce) == [0, 2, 3, 4, 5, 6]


def test_backends_give_identical_bases(monkeypatch):
    ctx = PolyRingContext.standard(4)
    I = IdealSpec(ctx, (power_sum(ctx, 1), complete_homogeneous(ctx, 4)))
    bases = []
    for backend in BACKENDS:
        monkeypatch.setattr(kernels, "nf_reduce", backend.nf_reduce)
        bases.append(groebner_basis(I).basis)
    assert all(b == bases[0] for b in bases)
