"""Regular-orbit decisions on V = GF(p)^d under right matrix action.

A subgroup H has a regular orbit iff some vector is fixed by no prime-order
element of H: a nontrivial stabilizer contains an element of prime order,
and conversely any fixed vector kills regularity.  We mark the points of
every such fixed space in a boolean table indexed by the little-endian
point code sum(v_i p^i) and look for an unmarked point.  Groups larger
than the space are rejected immediately: a regular orbit has |H| points.

Witnesses are reported as the least unmarked code.
"""

from __future__ import annotations

import numpy as np

from .gfp import FieldSpec, is_prime
from .groups import SubgroupView
from .extraspecial import all_vectors


def point_codes(F: FieldSpec, vecs: np.ndarray) -> np.ndarray:
    vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64))
    pvec = F.p ** np.arange(vecs.shape[1], dtype=np.int64)
    return vecs @ pvec


def code_points(F: FieldSpec, codes: np.ndarray, d: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((len(codes), d), dtype=np.int64)
    x = codes.copy()
    for i in range(d):
        out[:, i] = x % F.p
        x //= F.p
    return out


def fixed_space_points(F: FieldSpec, g: np.ndarray) -> np.ndarray:
    """Codes of all points with v @ g = v."""
    d = g.shape[0]
    B = F.row_kernel((g - np.eye(d, dtype=np.int64)) % F.p)
    k = len(B)
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    coeffs = all_vectors(F.p, k)
    pts = (coeffs @ B) % F.p
    return point_codes(F, pts)


def covered_mask(view: SubgroupView) -> np.ndarray:
    """Boolean table over V marking points fixed by some prime-order element."""
    G = view.group
    F = G.F
    d = G.dim
    n = F.p**d
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    orders = view.element_orders()
    sel = view.ids[np.fromiter((is_prime(int(o)) for o in orders), dtype=bool, count=len(orders))]
    seen_spaces: set[bytes] = set()
    for i in sel:
        g = G.mats[int(i)].astype(np.int64)
        B = F.row_kernel((g - np.eye(d, dtype=np.int64)) % F.p)
        key = B.tobytes()
        if key in seen_spaces:
            continue
        seen_spaces.add(key)
        if len(B) == 0:
            continue
        pts = (all_vectors(F.p, len(B)) @ B) % F.p
        mask[point_codes(F, pts)] = True
    return mask


def has_regular_orbit(view: SubgroupView) -> tuple[bool, int | None]:
    """(exists, witness code).  The witness is the least totally unfixed point."""
    G = view.group
    F = G.F
    n = F.p**G.dim
    if view.order > n:
        return False, None
    mask = covered_mask(view)
    free = np.flatnonzero(~mask)
    if len(free) == 0:
        return False, None
    return True, int(free[0])


def covering_certificate(view: SubgroupView) -> tuple[list[tuple[int, np.ndarray]], int]:
    """Greedy cover of V by fixed spaces of prime-order elements.

    Returns (cover, covered) where cover lists (element id, fixed-space row
    basis) pairs and covered counts the points their union marks.  The cover
    proves no regular orbit exactly when covered = p^d; a group with a
    regular orbit gets a partial cover back, so callers must check.
    """
    G = view.group
    F = G.F
    d = G.dim
    n = F.p**d
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    orders = view.element_orders()
    sel = view.ids[np.fromiter((is_prime(int(o)) for o in orders), dtype=bool, count=len(orders))]
    spaces = []
    for i in sel:
        g = G.mats[int(i)].astype(np.int64)
        B = F.row_kernel((g - np.eye(d, dtype=np.int64)) % F.p)
        if len(B):
            spaces.append((len(B), int(i), B))
    spaces.sort(key=lambda t: (-t[0], t[1]))  # big spaces first, then det. order
    cover: list[tuple[int, np.ndarray]] = []
    for _, i, B in spaces:
        pts = point_codes(F, (all_vectors(F.p, len(B)) @ B) % F.p)
        if bool(mask[pts].all()):
            continue
        mask[pts] = True
        cover.append((i, B))
        if bool(mask.all()):
            break
    return cover, int(mask.sum())


def verify_witness(view: SubgroupView, code: int) -> bool:
    """Check the orbit of the witness point really has |H| elements."""
    G = view.group
    F = G.F
    v = code_points(F, np.array([code]), G.dim)[0]
    gens = [G.mats[int(i)].astype(np.int64) for i in view.generating_set()]
    seen = {int(point_codes(F, v)[0])}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = F.vec_mat(w, g)
                c = int(point_codes(F, u)[0])
                if c not in seen:
                    seen.add(c)
                    nxt.append(u)
        frontier = nxt
    return len(seen) == view.order


def orbit_census(F: FieldSpec, gens: list[np.ndarray], cap: int = 1 << 22) -> dict[int, int]:
    """Map orbit size -> number of orbits of that size on all of V."""
    d = gens[0].shape[0]
    n = F.p**d
    if n > cap:
        raise RuntimeError(f"point space too large: {F.p}^{d}")
    vecs = code_points(F, np.arange(n), d)
    perms = []
    for g in gens:
        imgs = (vecs @ (np.asarray(g, dtype=np.int64) % F.p)) % F.p
        perms.append(point_codes(F, imgs))
    visited = np.zeros(n, dtype=bool)
    census: dict[int, int] = {}
    for start in range(n):
        if visited[start]:
            continue
        frontier = np.array([start], dtype=np.int64)
        visited[start] = True
        size = 1
        while len(frontier):
            nxt = np.unique(np.concatenate([perm[frontier] for perm in perms]))
            nxt = nxt[~visited[nxt]]
            visited[nxt] = True
            size += len(nxt)
            frontier = nxt
        census[size] = census.get(size, 0) + 1
    return census
