"""Module-theoretic tests for matrix groups acting on row vectors.

Everything here works with the right action v -> v @ M on GF(p)^d.  A
submodule is stored as an RREF basis (rows).  The irreducibility test is a
deterministic variant of the standard meataxe: pick an algebra element,
factor its characteristic polynomial, and for an irreducible factor f
examine the null space of f(theta) on both the module and its dual.  If a
null vector generates a proper submodule we return it; if every null
vector on both sides generates everything, the module is irreducible.
Completeness: a proper submodule W makes f(theta) singular on W or on the
quotient, so its null space meets W (caught on the primal side) or the
annihilator of W (caught on the dual side).

Homogeneity of a semisimple module is decided by counting: with W a
minimal submodule, s = dim End(W) and k = dim Hom(W, V) / s, the module is
homogeneous exactly when k * dim W = d.  Callers must only pass actions
that are semisimple (restrictions of irreducible groups to normal
subgroups are, by Clifford theory).
"""

from __future__ import annotations

import numpy as np

from .gfp import FieldSpec
from .groups import SubgroupView


def _rref_append(F, basis: list[np.ndarray], pivots: list[int], v: np.ndarray) -> bool:
    """Reduce v against the maintained RREF basis; append if independent."""
    p = F.p
    v = v.copy() % p
    for row, piv in zip(basis, pivots):
        c = v[piv]
        if c:
            v = (v - c * row) % p
    nz = np.flatnonzero(v)
    if len(nz) == 0:
        return False
    piv = int(nz[0])
    v = (v * F.el_inv(int(v[piv]))) % p
    for i, row in enumerate(basis):
        c = row[piv]
        if c:
            basis[i] = (row - c * v) % p
    basis.append(v)
    pivots.append(piv)
    return True


def spin_rows(F: FieldSpec, gens: list[np.ndarray], seeds: np.ndarray) -> np.ndarray:
    """Smallest subspace containing the seed rows and closed under v -> v @ g."""
    d = gens[0].shape[0] if gens else seeds.shape[1]
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    queue = [np.asarray(s, dtype=np.int64) for s in np.atleast_2d(seeds)]
    for s in queue:
        _rref_append(F, basis, pivots, s)
    head = 0
    work = list(basis)
    while head < len(work):
        v = work[head]
        head += 1
        for g in gens:
            w = F.vec_mat(v, g)
            if _rref_append(F, basis, pivots, w):
                work.append(basis[-1])
        if len(basis) == d:
            break
    order = np.argsort(pivots)
    return np.array([basis[i] for i in order], dtype=np.int64).reshape(len(basis), d)


def restrict_action(F: FieldSpec, gens: list[np.ndarray], basis: np.ndarray) -> list[np.ndarray]:
    """Matrices of the action on the invariant subspace, in RREF coordinates."""
    pivots = [int(np.flatnonzero(row)[0]) for row in basis]
    out = []
    for g in gens:
        img = (basis @ g) % F.p
        out.append(img[:, pivots] % F.p)
    for A, g in zip(out, gens):
        assert np.array_equal((A @ basis) % F.p, (basis @ g) % F.p)
    return out


def hom_space_dim(F: FieldSpec, a_gens: list[np.ndarray], b_gens: list[np.ndarray]) -> int:
    """dim of {X : A_i X = X B_i} over GF(p)."""
    k = a_gens[0].shape[0]
    d = b_gens[0].shape[0]
    rows = []
    Ik = np.eye(k, dtype=np.int64)
    Id = np.eye(d, dtype=np.int64)
    for A, B in zip(a_gens, b_gens):
        rows.append((np.kron(A, Id) - np.kron(Ik, B.T)) % F.p)
    system = np.concatenate(rows, axis=0)
    return k * d - F.mat_rank(system)


def _null_vectors(F: FieldSpec, basis: np.ndarray):
    """Every nonzero vector of the space spanned by the basis rows."""
    k = len(basis)
    if k == 0:
        return
    coeffs = np.zeros(k, dtype=np.int64)
    total = F.p**k
    for c in range(1, total):
        x = c
        for i in range(k):
            coeffs[i] = x % F.p
            x //= F.p
        yield (coeffs @ basis) % F.p


_NULL_ENUM_CAP = 1 << 16


def _algebra_candidates(F: FieldSpec, gens: list[np.ndarray]):
    d = gens[0].shape[0]
    I = np.eye(d, dtype=np.int64)
    for g in gens:
        yield g
    for i, g in enumerate(gens):
        for h in gens[i:]:
            yield (g @ h) % F.p
            yield (g + h) % F.p
    rng = np.random.default_rng(0xC0FFEE + F.p)
    words = list(gens)
    for _ in range(12):
        a = words[rng.integers(len(words))]
        b = gens[rng.integers(len(gens))]
        w = (a @ b + rng.integers(F.p) * I) % F.p
        words.append(w)
        yield w


def find_proper_submodule(F: FieldSpec, gens: list[np.ndarray]) -> np.ndarray | None:
    """RREF basis of a proper nonzero invariant subspace, or None if irreducible."""
    d = gens[0].shape[0] if gens else 1
    if d == 1:
        return None
    if not gens or all(np.array_equal(g % F.p, np.eye(d, dtype=np.int64)) for g in gens):
        return np.eye(d, dtype=np.int64)[:1]

    best = None  # (enum cost, theta_prime, factor degree)
    for theta in _algebra_candidates(F, gens):
        cp = F.charpoly(theta)
        factors = F.factor_poly(cp)
        if len(factors) == 1 and factors[0][1] == 1:
            # charpoly irreducible: V is already irreducible over F[theta]
            return None
        for f, _mult in factors:
            fp = F.poly_apply(np.array(f, dtype=np.int64), theta)
            null = F.row_kernel(fp)
            nu = len(null)
            if nu == 0:
                continue
            cost = F.p**nu
            if best is None or cost < best[0]:
                best = (cost, fp, null)
            if cost <= F.p:
                break
        if best is not None and best[0] <= F.p:
            break
    assert best is not None
    cost, fp, null = best

    if cost <= _NULL_ENUM_CAP:
        for v in _null_vectors(F, null):
            W = spin_rows(F, gens, v)
            if len(W) < d:
                return W
        gens_t = [g.T % F.p for g in gens]
        null_dual = F.mat_kernel(fp)
        for w in _null_vectors(F, null_dual):
            Wd = spin_rows(F, gens_t, w)
            if len(Wd) < d:
                return F.mat_kernel(Wd)
        return None

    # nullity too large to enumerate: spin every vector of the module instead
    total = F.p**d
    if total > _NULL_ENUM_CAP:
        raise RuntimeError(f"module too large for exhaustive spin: p^{d}")
    v = np.zeros(d, dtype=np.int64)
    for c in range(1, total):
        x = c
        for i in range(d):
            v[i] = x % F.p
            x //= F.p
        W = spin_rows(F, gens, v)
        if len(W) < d:
            return W
    return None


def is_irreducible(F: FieldSpec, gens: list[np.ndarray]) -> bool:
    return find_proper_submodule(F, gens) is None


def minimal_submodule(F: FieldSpec, gens: list[np.ndarray]) -> np.ndarray:
    """Basis of one irreducible submodule."""
    d = gens[0].shape[0] if gens else 1
    basis = np.eye(d, dtype=np.int64)
    cur = list(gens)
    while True:
        W = find_proper_submodule(F, cur)
        if W is None:
            return basis
        cur = restrict_action(F, cur, W)
        basis = F.mat_rref((W @ basis) % F.p)[0]


def is_homogeneous(F: FieldSpec, gens: list[np.ndarray]) -> bool:
    """Whether a semisimple module is a sum of pairwise isomorphic irreducibles."""
    d = gens[0].shape[0]
    W = minimal_submodule(F, gens)
    if len(W) == d:
        return True
    a_gens = restrict_action(F, gens, W)
    s = hom_space_dim(F, a_gens, a_gens)
    hom = hom_space_dim(F, a_gens, [g % F.p for g in gens])
    assert hom % s == 0
    k = hom // s
    return k * len(W) == d


def _is_scalar_set(F: FieldSpec, mats: list[np.ndarray]) -> bool:
    for M in mats:
        if not np.array_equal(M % F.p, F.scalar_mat(int(M[0, 0]) % F.p, M.shape[0])):
            return False
    return True


def is_quasiprimitive(
    view: SubgroupView,
    homog_cache: dict | None = None,
    normals: list | None = None,
) -> bool:
    """Irreducible with every normal subgroup acting homogeneously.

    Scalar normal subgroups are skipped (always homogeneous).  homog_cache
    maps normal-subgroup id bytes to previously computed answers; callers
    classifying many overlapping subgroups share one dict.  Pass normals to
    reuse an already computed view.normal_subgroups() list.
    """
    G = view.group
    F = G.F
    gens = [G.mats[int(i)].astype(np.int64) for i in view.generating_set()]
    if not gens:
        gens = [np.eye(G.dim, dtype=np.int64)]
    if not is_irreducible(F, gens):
        return False
    if normals is None:
        normals = view.normal_subgroups()
    for nid in normals:
        sub = SubgroupView(G, nid)
        n_gens = [G.mats[int(i)].astype(np.int64) for i in sub.generating_set()]
        if _is_scalar_set(F, n_gens):
            continue
        key = nid.tobytes()
        if homog_cache is not None and key in homog_cache:
            ok = homog_cache[key]
        else:
            ok = is_homogeneous(F, n_gens)
            if homog_cache is not None:
                homog_cache[key] = ok
        if not ok:
            return False
    return True
