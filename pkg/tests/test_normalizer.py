"""Normalizer assembly: brute-force oracles on small cases, exact orders elsewhere."""

import numpy as np
import pytest

from regorb.gfp import field
from regorb.groups import CosetQuotient, MatGroup, in_sorted
from regorb.normalizer import (
    assemble_full,
    expected_normalizer_order,
    gl_generators,
    gl_order,
)


def full_gl(p):
    F = field(p)
    return MatGroup.from_generators(F, gl_generators(F, 2))


def brute_normalizer_order(p, etype):
    """Count elements of GL(2,p) normalizing the core image, by direct check."""
    from regorb.extraspecial import build_extraspecial, all_vectors

    F = field(p)
    rep = build_extraspecial(2, 1, etype, F)
    core = set()
    for v in all_vectors(2, 2):
        L = rep.canonical_lift(v)
        core.add(L.tobytes())
        core.add(F.mat_neg(L).tobytes())
    G = full_gl(p)
    gens = list(rep.xs) + list(rep.zs)
    count = 0
    for i in range(G.order):
        M = G.mats[i].astype(np.int64)
        Mi = F.mat_inv(M)
        if all(F.mat_mul(F.mat_mul(Mi, g), M).tobytes() in core for g in gens):
            count += 1
    return count


def test_gl_generator_closure_orders():
    assert full_gl(3).order == 48
    assert full_gl(2).order == 6
    F2 = field(2)
    assert MatGroup.from_generators(F2, gl_generators(F2, 3)).order == 168
    # GL(2,4) checked through its blow-up into GL(4,2)
    F4 = field(2, 2)
    gens = [F4.blow_up(g) for g in gl_generators(F4, 2)]
    assert MatGroup.from_generators(field(2), gens).order == gl_order(2, 4) == 180


def test_gl_order_values():
    assert gl_order(1, 5) == 4
    assert gl_order(2, 3) == 48
    assert gl_order(2, 9) == 80 * 72
    assert gl_order(3, 2) == 168


def test_expected_order_frozen():
    # (r, m, p, a, b, form_order) -> order
    assert expected_normalizer_order(2, 1, 3, 1, 1, 6) == 48
    assert expected_normalizer_order(2, 1, 3, 1, 1, 2) == 16
    assert expected_normalizer_order(2, 1, 5, 1, 1, 6) == 96
    assert expected_normalizer_order(2, 2, 3, 1, 1, 72) == 2304
    assert expected_normalizer_order(2, 2, 3, 1, 1, 120) == 3840
    assert expected_normalizer_order(3, 1, 7, 1, 1, 24) == 1296
    assert expected_normalizer_order(2, 1, 3, 2, 1, 6) == 384
    assert expected_normalizer_order(3, 1, 2, 2, 1, 24) == 1296
    assert expected_normalizer_order(2, 1, 3, 1, 2, 2) == 384
    assert expected_normalizer_order(2, 1, 3, 1, 2, 6) == 1152
    assert expected_normalizer_order(2, 2, 3, 1, 2, 120) == 92160


def test_brute_force_oracle_p3():
    assert brute_normalizer_order(3, "minus") == 48
    assert brute_normalizer_order(3, "plus") == 16


def test_brute_force_oracle_p5():
    assert brute_normalizer_order(5, "minus") == 96
    assert brute_normalizer_order(5, "plus") == 32


@pytest.mark.parametrize(
    "r,m,p,a,b,etype,order",
    [
        (2, 1, 3, 1, 1, "minus", 48),
        (2, 1, 3, 1, 1, "plus", 16),
        (2, 1, 5, 1, 1, "minus", 96),
        (2, 1, 5, 1, 1, "plus", 32),
        (2, 1, 5, 1, 1, "symplectic", 96),
        (2, 1, 7, 1, 1, "minus", 144),
        (2, 1, 7, 1, 1, "plus", 48),
        (2, 1, 11, 1, 1, "minus", 240),
        (2, 1, 13, 1, 1, "minus", 288),
        (2, 1, 13, 1, 1, "symplectic", 288),
        (2, 1, 17, 1, 1, "minus", 384),
        (2, 1, 19, 1, 1, "minus", 432),
        (2, 2, 3, 1, 1, "plus", 2304),
        (2, 2, 3, 1, 1, "minus", 3840),
        (3, 1, 7, 1, 1, "odd", 1296),
        (3, 1, 13, 1, 1, "odd", 2592),
        (2, 1, 3, 2, 1, "symplectic", 384),
        (3, 1, 2, 2, 1, "odd", 1296),
        (2, 1, 3, 1, 2, "plus", 384),
        (2, 1, 3, 1, 2, "minus", 1152),
    ],
)
def test_closure_matches_expected(r, m, p, a, b, etype, order):
    res = assemble_full(r, m, p, a, b, etype)
    assert res.group.order == order == res.expected_order
    assert res.d == res.e * a * b
    assert res.group.dim == res.d


def test_core_sizes():
    assert len(assemble_full(2, 1, 3, 1, 1, "minus").core_ids) == 8
    assert len(assemble_full(2, 1, 5, 1, 1, "symplectic").core_ids) == 16
    assert len(assemble_full(3, 1, 7, 1, 1, "odd").core_ids) == 27
    assert len(assemble_full(2, 2, 3, 1, 1, "plus").core_ids) == 32


def test_generators_normalize_core():
    for args in [(2, 1, 3, 1, 1, "minus"), (3, 1, 7, 1, 1, "odd"), (2, 1, 3, 2, 1, "symplectic")]:
        res = assemble_full(*args)
        G = res.group
        for gid in G.generator_ids:
            conj = G.conj_ids(res.core_ids, np.full(len(res.core_ids), gid, dtype=np.int32))
            assert in_sorted(conj, res.core_ids).all()


def test_plus_p3_is_semidihedral():
    res = assemble_full(2, 1, 3, 1, 1, "plus")
    orders = res.group.el_orders()
    counts = {k: int((orders == k).sum()) for k in (1, 2, 4, 8)}
    assert counts == {1: 1, 2: 5, 4: 6, 8: 4}


def test_quotient_by_core():
    res = assemble_full(2, 1, 3, 1, 1, "minus")
    cq = CosetQuotient(res.group, res.core_ids)
    Q = cq.quotient
    assert Q.order == 6
    assert sorted(Q.el_orders().tolist()) == [1, 2, 2, 2, 3, 3]

    res = assemble_full(2, 1, 3, 1, 1, "plus")
    assert CosetQuotient(res.group, res.core_ids).quotient.order == 2


def test_frobenius_block_in_group():
    # the plain Frobenius permutation block lies in N when the core is
    # fixed setwise by the field automorphism, which holds for these models
    F9 = field(3, 2)
    Fp = field(3)
    res = assemble_full(2, 1, 3, 2, 1, "symplectic")
    Phi = Fp.kron(Fp.identity(2), F9.frobenius_matrix())
    pid = res.group.id_of(Phi)
    assert not in_sorted(np.array([pid]), res.core_ids)[0]

    F4 = field(2, 2)
    res48 = assemble_full(3, 1, 2, 2, 1, "odd")
    Phi48 = field(2).kron(field(2).identity(3), F4.frobenius_matrix())
    res48.group.id_of(Phi48)


def test_blown_scalar_order():
    # GF(9) scalars survive the blow-up with their full multiplicative order
    res = assemble_full(2, 1, 3, 2, 1, "symplectic")
    F9 = field(3, 2)
    z = F9.blow_up(F9.scalar_mat(F9.primitive_element(), 2))
    zid = res.group.id_of(z)
    assert res.group.el_orders()[zid] == 8


def test_tensor_layer_contains_both_factors():
    res = assemble_full(2, 1, 3, 1, 2, "minus")
    F = field(3)
    # I_2 x GL(2,3) transvection and a core generator x I_2 are both present
    T = F.identity(2)
    T[0, 1] = 1
    res.group.id_of(F.kron(F.identity(2), T))
    res.group.id_of(F.kron(res.rep.xs[0], F.identity(2)))


def test_bad_parameters_rejected():
    with pytest.raises(ValueError):
        assemble_full(2, 1, 3, 1, 1, "symplectic")  # needs 4 | q - 1
    with pytest.raises(ValueError):
        assemble_full(3, 1, 3, 1, 1, "odd")  # needs r | q - 1
