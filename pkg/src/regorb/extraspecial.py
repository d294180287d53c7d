"""Irreducible representations of extraspecial-type r-groups.

The core group E comes in four flavours, each realized by explicit e x e
matrices over a field F = GF(q) chosen by the caller so that the needed
roots of unity exist (r | q-1, and 4 | q-1 for the symplectic type):

  odd         r odd, exponent r, order r^(1+2m), e = r^m
  plus        r = 2, central product of m dihedral factors
  minus       r = 2, m-1 dihedral factors and one quaternion factor
  symplectic  r = 2, a plus-type core extended by a central order-4 scalar,
              order 2^(2m+2)

Generators come in symplectic pairs (X_i, Z_i).  The quotient E/Z(E) is a
GF(r) symplectic space of dimension 2m with basis the images of
X_1..X_m, Z_1..Z_m; canonical_lift maps a coordinate vector back to the
product X^alpha Z^beta in ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gfp import FieldSpec, field
from .groups import MatGroup, SubgroupView


def all_vectors(r: int, k: int) -> np.ndarray:
    """All r^k vectors over GF(r), row c holding the base-r digits of c."""
    codes = np.arange(r**k, dtype=np.int64)
    out = np.zeros((r**k, k), dtype=np.int64)
    for i in range(k):
        out[:, i] = (codes // r**i) % r
    return out


@dataclass
class ExtraspecialRep:
    F: FieldSpec
    r: int
    m: int
    etype: str  # "odd" | "plus" | "minus" | "symplectic"
    xs: list[np.ndarray]
    zs: list[np.ndarray]
    scalar_code: int  # generator of Z(E) as a scalar
    form_scalar_code: int  # value of [X_i, Z_i], the commutator scalar

    @property
    def e(self) -> int:
        return self.r**self.m

    def group_order(self) -> int:
        if self.etype == "symplectic":
            return 2 ** (2 * self.m + 2)
        return self.r ** (1 + 2 * self.m)

    def generators(self) -> list[np.ndarray]:
        center = self.F.scalar_mat(self.scalar_code, self.e)
        return list(self.xs) + list(self.zs) + [center]

    def canonical_lift(self, vec) -> np.ndarray:
        """X_1^v1 .. X_m^vm Z_1^w1 .. Z_m^wm for vec = (v, w) over GF(r)."""
        vec = np.asarray(vec, dtype=np.int64) % self.r
        M = self.F.identity(self.e)
        for i in range(self.m):
            if vec[i]:
                M = self.F.mat_mul(M, self.F.mat_pow(self.xs[i], int(vec[i])))
        for j in range(self.m):
            if vec[self.m + j]:
                M = self.F.mat_mul(M, self.F.mat_pow(self.zs[j], int(vec[self.m + j])))
        return M

    def _scalar_log(self, M: np.ndarray) -> int:
        """k with M = form_scalar^k * I."""
        c = int(M[0, 0])
        acc = 1
        for k in range(self.r):
            if acc == c:
                if not np.array_equal(M, self.F.scalar_mat(acc, self.e)):
                    raise ValueError("matrix is not the expected scalar")
                return k
            acc = self.F.el_mul(acc, self.form_scalar_code)
        raise ValueError("matrix is not a power of the commutator scalar")

    @cached_property
    def gram(self) -> np.ndarray:
        """Gram matrix B over GF(r) with [lift(u), lift(v)] = w^B(u,v)."""
        n = 2 * self.m
        basis = [self.canonical_lift(v) for v in np.eye(n, dtype=np.int64)]
        B = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                Li, Lj = basis[i], basis[j]
                C = self.F.mat_mul(
                    self.F.mat_mul(Li, Lj),
                    self.F.mat_mul(self.F.mat_inv(Li), self.F.mat_inv(Lj)),
                )
                B[i, j] = self._scalar_log(C)
        return B

    @cached_property
    def quadratic_values(self) -> np.ndarray | None:
        """Q(v) over all of GF(2)^2m: 0 when lift(v)^2 = I, 1 when = -I.

        Only defined for the plus/minus types; for the symplectic type the
        squares vary by the order-4 center so no form is induced, and odd r
        has exponent r instead.
        """
        if self.etype not in ("plus", "minus"):
            return None
        vecs = all_vectors(2, 2 * self.m)
        out = np.zeros(len(vecs), dtype=np.int64)
        ident = self.F.identity(self.e)
        neg = self.F.scalar_mat(self.F.el_neg(1), self.e)
        for c, v in enumerate(vecs):
            S = self.F.mat_pow(self.canonical_lift(v), 2)
            if np.array_equal(S, ident):
                out[c] = 0
            elif np.array_equal(S, neg):
                out[c] = 1
            else:
                raise ValueError("lift square is not +-1")
        return out

    def arf_type(self) -> str:
        """"plus" or "minus" according to the zero count of the form."""
        q = self.quadratic_values
        if q is None:
            raise ValueError("no quadratic form for this type")
        zeros = int(np.sum(q == 0))
        m = self.m
        if zeros == 2 ** (2 * m - 1) + 2 ** (m - 1):
            return "plus"
        if zeros == 2 ** (2 * m - 1) - 2 ** (m - 1):
            return "minus"
        raise ValueError("zero count matches neither type")


def _odd_factor(F: FieldSpec, r: int) -> tuple[np.ndarray, np.ndarray]:
    # X shifts e_k -> e_(k+1) under the row action, Z = diag(w^k)
    w = F.root_of_unity(r)
    X = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        X[i, (i + 1) % r] = 1
    Z = np.zeros((r, r), dtype=np.int64)
    c = 1
    for i in range(r):
        Z[i, i] = c
        c = F.el_mul(c, w)
    return X, Z


def _dihedral_factor(F: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    X = np.array([[0, 1], [1, 0]], dtype=np.int64)
    Z = np.array([[1, 0], [0, F.el_neg(1)]], dtype=np.int64)
    return X, Z


def _quaternion_factor(F: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    A = np.array([[0, 1], [F.el_neg(1), 0]], dtype=np.int64)
    # least (a, b) with a^2 + b^2 = -1
    target = F.el_neg(1)
    for a in range(F.q):
        for b in range(F.q):
            if F.el_add(F.el_mul(a, a), F.el_mul(b, b)) == target:
                B = np.array([[a, b], [b, F.el_neg(a)]], dtype=np.int64)
                return A, B
    raise ValueError("no quaternion pair in this field")  # unreachable for odd q


def build_extraspecial(r: int, m: int, etype: str, F: FieldSpec) -> ExtraspecialRep:
    """Construct the e x e representation of the chosen core type over F."""
    if etype == "odd":
        if r == 2 or (F.q - 1) % r != 0:
            raise ValueError("odd type needs odd r with r | q-1")
        factors = [_odd_factor(F, r) for _ in range(m)]
        scalar = F.root_of_unity(r)
        form_scalar = scalar
    elif etype in ("plus", "minus", "symplectic"):
        if r != 2 or F.q % 2 == 0:
            raise ValueError("2-group types need r = 2 and odd q")
        if etype == "symplectic" and (F.q - 1) % 4 != 0:
            raise ValueError("symplectic type needs 4 | q-1")
        factors = [_dihedral_factor(F) for _ in range(m)]
        if etype == "minus":
            factors[-1] = _quaternion_factor(F)
        scalar = F.root_of_unity(4) if etype == "symplectic" else F.el_neg(1)
        form_scalar = F.el_neg(1)
    else:
        raise ValueError(f"unknown core type {etype!r}")

    xs, zs = [], []
    e = r**m
    for i in range(m):
        left = r**i
        right = r ** (m - 1 - i)
        Xi = F.kron(F.kron(F.identity(left), factors[i][0]), F.identity(right))
        Zi = F.kron(F.kron(F.identity(left), factors[i][1]), F.identity(right))
        xs.append(Xi)
        zs.append(Zi)
    assert xs[0].shape == (e, e)
    return ExtraspecialRep(F, r, m, etype, xs, zs, scalar, form_scalar)


# ---------------------------------------------------------------------------
# form groups on the central quotient


def symplectic_group(r: int, gram: np.ndarray) -> MatGroup:
    """Sp over GF(r) preserving the Gram matrix, from all transvections.

    T_v = I + outer(B v, v) is the transvection x -> x + B(x, v) v; powers
    of T_v supply every scaling, so v running over nonzero vectors mod +-
    already generates the full group.
    """
    Fr = field(r)
    n = gram.shape[0]
    gens = []
    seen = set()
    for v in all_vectors(r, n)[1:]:
        key = min(tuple(v), tuple((-v) % r))
        if key in seen:
            continue
        seen.add(key)
        Bv = (gram @ v) % r
        T = (np.eye(n, dtype=np.int64) + np.outer(Bv, v)) % r
        gens.append(T)
    return MatGroup.from_generators(Fr, gens)


def orthogonal_subgroup_ids(sp: MatGroup, qvals: np.ndarray) -> np.ndarray:
    """ids of the elements of sp preserving the quadratic form values."""
    n = sp.dim
    vecs = all_vectors(2, n)
    pvec = 2 ** np.arange(n, dtype=np.int64)
    mats = sp.mats.astype(np.int64)
    imgs = np.einsum("vk,nkj->nvj", vecs, mats) % 2
    codes = imgs @ pvec
    keep = np.all(qvals[codes] == qvals[None, :], axis=1)
    return np.arange(sp.order, dtype=np.int32)[keep]


def form_group(rep: ExtraspecialRep) -> tuple[MatGroup, np.ndarray]:
    """The automorphism-induced form group on E/Z(E).

    Returns (sp, ids) where sp is the full symplectic group on the quotient
    and ids select the subgroup that lifts to automorphisms fixing the
    center: everything for odd r and the symplectic type, the orthogonal
    subgroup of the squaring form for the plus/minus types.
    """
    sp = symplectic_group(rep.r, rep.gram)
    if rep.etype in ("plus", "minus"):
        ids = orthogonal_subgroup_ids(sp, rep.quadratic_values)
    else:
        ids = np.arange(sp.order, dtype=np.int32)
    return sp, ids


def form_generators(rep: ExtraspecialRep) -> list[np.ndarray]:
    """Matrices over GF(r) generating the form group of the core."""
    sp, ids = form_group(rep)
    view = SubgroupView(sp, ids)
    return [sp.mats[int(i)].astype(np.int64) for i in view.generating_set()]
