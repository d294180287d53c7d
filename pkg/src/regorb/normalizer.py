"""Assembly of the full normalizer N of a core representation in GL(d, p).

The group is built in layers, starting from e x e matrices over GF(q) with
q = p^a:

  scalars     the full multiplicative group of GF(q), as one primitive
              scalar generator
  core        the generators of the extraspecial-type image itself
  form lifts  one matrix M_s per generator s of the form group on E/Z(E),
              found by solving the intertwiner equation between the core
              generators and their s-images (with order-4 scalar
              corrections in the symplectic case)
  tensor      for b > 1 everything moves to GL(eb, q) as g x I_b, joined
              by I_e x GL(b, q)
  Galois      for a > 1 everything is rewritten over GF(p) and a Frobenius
              permutation block Phi is appended (composed with a solved
              correction when the core image is not fixed setwise by the
              field automorphism)

The expected order is exact: (q-1) r^(2m) |Form|, times |GL(b,q)|/(q-1)
when b > 1, times a when a > 1.  Construction asserts the closure hits it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gfp import FieldSpec, field
from .groups import MatGroup
from .extraspecial import (
    ExtraspecialRep,
    all_vectors,
    build_extraspecial,
    form_group,
)


def gl_order(b: int, q: int) -> int:
    out = 1
    for i in range(b):
        out *= q**b - q**i
    return out


def gl_generators(F: FieldSpec, b: int) -> list[np.ndarray]:
    """Generators of GL(b, q): consecutive transvections plus a diagonal."""
    gamma = F.primitive_element()
    if b == 1:
        return [np.array([[gamma]], dtype=np.int64)]
    gens = []
    for i in range(b - 1):
        for (a, c) in ((i, i + 1), (i + 1, i)):
            T = F.identity(b)
            T[a, c] = 1
            gens.append(T)
    D = F.identity(b)
    D[0, 0] = gamma
    gens.append(D)
    return gens


def _core_element_bytes(rep: ExtraspecialRep) -> set[bytes]:
    """Byte keys of every matrix in the core image (used for stability checks)."""
    F = rep.F
    center_order = 4 if rep.etype == "symplectic" else rep.r
    out = set()
    for v in all_vectors(rep.r, 2 * rep.m):
        L = rep.canonical_lift(v)
        c = 1
        for _ in range(center_order):
            out.add(F._vscale(L, c).astype(np.int64).tobytes())
            c = F.el_mul(c, rep.scalar_code)
    return out


def _form_lift(rep: ExtraspecialRep, s: np.ndarray) -> np.ndarray:
    """Matrix conjugating the core generators to their s-twisted images."""
    F = rep.F
    n = 2 * rep.m
    source = list(rep.xs) + list(rep.zs)
    target = []
    for i in range(n):
        img = (np.eye(n, dtype=np.int64)[i] @ s) % rep.r
        T = rep.canonical_lift(img)
        if rep.etype == "symplectic":
            # align squares (both are +-I) with the order-4 central scalar
            s_sq = F.mat_pow(source[i], 2)
            t_sq = F.mat_pow(T, 2)
            if not np.array_equal(s_sq, t_sq):
                T = F._vscale(T, rep.scalar_code)
        target.append(T)
    M = F.solve_intertwiner(source, target)
    if M is None:
        raise RuntimeError("form generator does not lift to the normalizer")
    Mi = F.mat_inv(M)
    for A, B in zip(source, target):
        assert np.array_equal(F.mat_mul(F.mat_mul(Mi, A), M), B)
    return M


@dataclass
class NormalizerResult:
    group: MatGroup  # over GF(p), dimension d
    core_ids: np.ndarray  # sorted ids of the core image inside group
    rep: ExtraspecialRep
    r: int
    m: int
    e: int
    p: int
    a: int
    b: int
    d: int
    etype: str
    form_order: int
    expected_order: int


def expected_normalizer_order(r: int, m: int, p: int, a: int, b: int, form_order: int) -> int:
    q = p**a
    base = (q - 1) * r ** (2 * m) * form_order
    if b > 1:
        base = base * gl_order(b, q) // (q - 1)
    if a > 1:
        base *= a
    return base


def sp_order(m: int, r: int) -> int:
    """Order of the symplectic group Sp(2m, r)."""
    out = r ** (m * m)
    for i in range(1, m + 1):
        out *= r ** (2 * i) - 1
    return out


def go_order(m: int, sign: int) -> int:
    """Order of the full orthogonal group GO(2m, 2) of the given sign."""
    out = 2 * 2 ** (m * (m - 1)) * (2**m - sign)
    for i in range(1, m):
        out *= 2 ** (2 * i) - 1
    return out


def predicted_order(r: int, m: int, p: int, a: int, b: int, etype: str) -> int:
    """Closed-form |N| from the layer structure alone, no enumeration.

    Scalar layer (q - 1) and core r^(2m) overlap in the centre; the form
    group on the core quotient is Sp(2m, r) for odd r, Sp(2m, 2) in the
    fused symplectic case, and the sign's orthogonal group otherwise.  The
    tensor layer multiplies by |GL(b, q)| sharing scalars, the Galois layer
    by a.
    """
    if etype == "odd":
        form = sp_order(m, r)
    elif etype == "symplectic":
        form = sp_order(m, 2)
    elif etype == "plus":
        form = go_order(m, +1)
    elif etype == "minus":
        form = go_order(m, -1)
    else:
        raise ValueError(f"unknown core type {etype!r}")
    return expected_normalizer_order(r, m, p, a, b, form)


def assemble_full(
    r: int,
    m: int,
    p: int,
    a: int,
    b: int,
    etype: str,
    max_order: int = 2_000_000,
) -> NormalizerResult:
    F = field(p, a)
    Fp = field(p)
    rep = build_extraspecial(r, m, etype, F)
    e = rep.e
    d = e * b * a

    sp, form_ids = form_group(rep)
    from .groups import SubgroupView

    form_view = SubgroupView(sp, form_ids)
    form_gens = [sp.mats[int(i)].astype(np.int64) for i in form_view.generating_set()]
    form_order = len(form_ids)

    z0 = F.scalar_mat(F.primitive_element(), e)
    inner = [z0] + list(rep.xs) + list(rep.zs)
    if rep.etype == "symplectic":
        inner.append(F.scalar_mat(rep.scalar_code, e))
    inner += [_form_lift(rep, s) for s in form_gens]
    core_q = list(rep.xs) + list(rep.zs) + [F.scalar_mat(rep.scalar_code, e)]

    if b > 1:
        Ib = F.identity(b)
        gens_q = [F.kron(g, Ib) for g in inner]
        gens_q += [F.kron(F.identity(e), h) for h in gl_generators(F, b)]
        core_q = [F.kron(g, Ib) for g in core_q]
    else:
        gens_q = inner

    if a > 1:
        gens_p = [F.blow_up(g) for g in gens_q]
        core_p = [F.blow_up(g) for g in core_q]
        Phi = Fp.kron(Fp.identity(e * b), F.frobenius_matrix())
        core_set = _core_element_bytes(rep)
        stable = True
        for g in list(rep.xs) + list(rep.zs) + [F.scalar_mat(rep.scalar_code, e)]:
            img = g
            for _ in range(a - 1):
                img = F.mat_frob(img)
            if img.astype(np.int64).tobytes() not in core_set:
                stable = False
                break
        if not stable:
            # find W with W g^(sigma^-1) W^-1 = g, then prepend its blow-up
            src = []
            tgt = list(rep.xs) + list(rep.zs)
            for g in tgt:
                img = g
                for _ in range(a - 1):
                    img = F.mat_frob(img)
                src.append(img)
            M = F.solve_intertwiner(src, tgt)
            if M is None:
                raise RuntimeError("no Frobenius correction intertwiner")
            W = F.mat_inv(M)
            if b > 1:
                W = F.kron(W, F.identity(b))
            Phi = Fp.mat_mul(F.blow_up(W), Phi)
        gens_p.append(Phi)
    else:
        gens_p = [np.asarray(g, dtype=np.int64) for g in gens_q]
        core_p = [np.asarray(g, dtype=np.int64) for g in core_q]

    expected = expected_normalizer_order(r, m, p, a, b, form_order)
    G = MatGroup.from_generators(Fp, gens_p, max_order=max_order)
    assert G.order == expected, f"normalizer order {G.order} != expected {expected}"
    core_ids = G.generated(np.array([G.id_of(g) for g in core_p], dtype=np.int32))
    assert len(core_ids) == rep.group_order()
    return NormalizerResult(
        group=G,
        core_ids=core_ids,
        rep=rep,
        r=r,
        m=m,
        e=e,
        p=p,
        a=a,
        b=b,
        d=d,
        etype=etype,
        form_order=form_order,
        expected_order=expected,
    )
