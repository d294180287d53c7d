"""Finite matrix groups over GF(p) and generic subgroup machinery.

Two element backends share one id-based interface: MatGroup stores the full
element list as an (N, n, n) int8 array and multiplies through batched
einsum plus a sorted-bytes lookup, while TableGroup works from an explicit
Cayley table (used for normalizer quotients, where N is a few thousand).
Element ids are ints in range(N) with 0 always the identity.

All the structural algorithms (generated subgroups, centralizers, Fitting
subgroups, normal subgroup lattices, conjugacy of subgroups, enumeration of
subgroup classes) are written against the shared interface and operate on
sorted int32 id arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .gfp import FieldSpec, factorize, is_prime

_CHUNK = 1 << 17


class GroupTooLarge(RuntimeError):
    """Raised when a closure exceeds the configured element cap."""


def in_sorted(values: np.ndarray, sorted_set: np.ndarray) -> np.ndarray:
    """Boolean membership of values in a sorted 1d array."""
    if len(sorted_set) == 0:
        return np.zeros(np.shape(values), dtype=bool)
    idx = np.searchsorted(sorted_set, values)
    idx = np.minimum(idx, len(sorted_set) - 1)
    return sorted_set[idx] == values


def _union_sorted(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.union1d(a, b)


class FiniteGroup:
    """Shared id-level interface; subclasses supply mul_ids and inv_ids."""

    order: int
    generator_ids: np.ndarray

    def mul_ids(self, a, b) -> np.ndarray:
        raise NotImplementedError

    def inv_ids(self, a) -> np.ndarray:
        raise NotImplementedError

    def conj_ids(self, x, g) -> np.ndarray:
        """id of g^-1 x g, broadcasting."""
        return self.mul_ids(self.mul_ids(self.inv_ids(g), x), g)

    def power_ids(self, ids, k: int) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int32)
        if k < 0:
            ids, k = self.inv_ids(ids), -k
        acc = np.zeros(ids.shape, dtype=np.int32)  # identity everywhere
        base = ids
        while k > 0:
            if k & 1:
                acc = self.mul_ids(acc, base)
            k >>= 1
            if k:
                base = self.mul_ids(base, base)
        return acc

    def el_orders(self) -> np.ndarray:
        """Orders of all elements, cached."""
        cached = getattr(self, "_el_orders", None)
        if cached is not None:
            return cached
        n0 = self.order
        all_ids = np.arange(n0, dtype=np.int32)
        out = np.ones(n0, dtype=np.int64)
        for t, mult in factorize(n0).items():
            cur = self.power_ids(all_ids, n0 // t**mult)
            active = np.nonzero(cur != 0)[0]
            cur = cur[active]
            while len(active):
                out[active] *= t
                cur = self.power_ids(cur, t)
                keep = cur != 0
                active, cur = active[keep], cur[keep]
        self._el_orders = out
        return out

    def generated(self, gen_ids) -> np.ndarray:
        """Sorted ids of the subgroup generated by gen_ids."""
        gens = np.unique(np.asarray(gen_ids, dtype=np.int32))
        known = np.array([0], dtype=np.int32)
        frontier = np.setdiff1d(gens, known)
        known = _union_sorted(known, frontier)
        while len(frontier):
            prods = self.mul_ids(frontier[:, None], gens[None, :]).ravel()
            frontier = np.setdiff1d(np.unique(prods), known)
            known = _union_sorted(known, frontier)
        return known


class MatGroup(FiniteGroup):
    """A finite subgroup of GL(n, p) with a full element table."""

    def __init__(self, F: FieldSpec, mats: np.ndarray, generator_ids: np.ndarray):
        assert F.a == 1, "matrix groups are stored over prime fields"
        self.F = F
        self.p = F.p
        self.mats = mats  # (N, n, n) int8
        self.dim = mats.shape[1]
        self.order = mats.shape[0]
        self.generator_ids = generator_ids
        flat = np.ascontiguousarray(mats.reshape(self.order, -1))
        keys = flat.view(np.dtype((np.void, flat.shape[1]))).ravel()
        self._sort_perm = np.argsort(keys)
        self._keys_sorted = keys[self._sort_perm]
        self._inv: np.ndarray | None = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_generators(cls, F: FieldSpec, gens, max_order: int = 2_000_000) -> "MatGroup":
        n = np.asarray(gens[0]).shape[0]
        ident = np.eye(n, dtype=np.int8)
        seen: dict[bytes, int] = {ident.tobytes(): 0}
        elems: list[np.ndarray] = [ident]
        gen_ids: list[int] = []
        gmats = []
        for g in gens:
            g = (np.asarray(g, dtype=np.int64) % F.p).astype(np.int8)
            key = g.tobytes()
            if key not in seen:
                seen[key] = len(elems)
                elems.append(g)
            gen_ids.append(seen[key])
            gmats.append(g)
        gstack = np.stack(gmats).astype(np.int32) if gmats else np.zeros((0, n, n), np.int32)
        frontier = np.stack(elems)
        while len(frontier):
            fl = frontier.astype(np.int32)
            prods = np.einsum("fij,gjk->fgik", fl, gstack) % F.p
            prods = prods.reshape(-1, n, n).astype(np.int8)
            new = []
            for m in prods:
                key = m.tobytes()
                if key not in seen:
                    seen[key] = len(elems)
                    elems.append(m)
                    new.append(m)
            if len(elems) > max_order:
                raise GroupTooLarge(f"closure exceeded {max_order} elements")
            frontier = np.stack(new) if new else np.zeros((0, n, n), np.int8)
        mats = np.stack(elems)
        return cls(F, mats, np.unique(np.array(gen_ids, dtype=np.int32)))

    # -- lookups ----------------------------------------------------------

    def lookup(self, batch: np.ndarray) -> np.ndarray:
        """ids of a (k, n, n) batch of matrices known to lie in the group."""
        batch = np.ascontiguousarray(batch.astype(np.int8).reshape(batch.shape[0], -1))
        keys = batch.view(np.dtype((np.void, batch.shape[1]))).ravel()
        pos = np.searchsorted(self._keys_sorted, keys)
        pos = np.minimum(pos, self.order - 1)
        ids = self._sort_perm[pos]
        return ids.astype(np.int32)

    def contains_matrix(self, M: np.ndarray) -> bool:
        M = (np.asarray(M, dtype=np.int64) % self.p).astype(np.int8)
        i = int(self.lookup(M[None])[0])
        return np.array_equal(self.mats[i], M)

    def id_of(self, M: np.ndarray) -> int:
        M = (np.asarray(M, dtype=np.int64) % self.p).astype(np.int8)
        i = int(self.lookup(M[None])[0])
        if not np.array_equal(self.mats[i], M):
            raise KeyError("matrix not in group")
        return i

    def mul_ids(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, np.int32), np.asarray(b, np.int32))
        shape = a.shape
        af, bf = a.ravel(), b.ravel()
        out = np.empty(af.size, dtype=np.int32)
        for s in range(0, af.size, _CHUNK):
            e = min(s + _CHUNK, af.size)
            A = self.mats[af[s:e]].astype(np.int32)
            B = self.mats[bf[s:e]].astype(np.int32)
            P = np.einsum("nij,njk->nik", A, B) % self.p
            out[s:e] = self.lookup(P)
        return out.reshape(shape) if shape else out.reshape(())

    def inv_ids(self, a) -> np.ndarray:
        if self._inv is None:
            self._inv = self.power_ids(np.arange(self.order, dtype=np.int32), self.order - 1)
        a = np.asarray(a, dtype=np.int32)
        return self._inv[a]


class TableGroup(FiniteGroup):
    """Group given by an explicit Cayley table; identity has id 0."""

    def __init__(self, table: np.ndarray):
        self.table = table
        self.order = table.shape[0]
        rows, cols = np.nonzero(table == 0)
        inv = np.zeros(self.order, dtype=np.int32)
        inv[rows] = cols
        self._inv = inv
        self.generator_ids = self._greedy_generators()

    def mul_ids(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        return self.table[a, b].astype(np.int32)

    def inv_ids(self, a) -> np.ndarray:
        return self._inv[np.asarray(a, dtype=np.int32)]

    def _greedy_generators(self) -> np.ndarray:
        gens: list[int] = []
        known = np.array([0], dtype=np.int32)
        while len(known) < self.order:
            missing = np.setdiff1d(np.arange(self.order, dtype=np.int32), known)
            gens.append(int(missing[0]))
            known = self.generated(np.array(gens, dtype=np.int32))
        return np.array(gens, dtype=np.int32)


# ---------------------------------------------------------------------------
# subgroup views and structural algorithms


@dataclass
class SubgroupView:
    """A subgroup of a FiniteGroup given by its sorted element ids."""

    group: FiniteGroup
    ids: np.ndarray
    _gens: np.ndarray | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.ids = np.asarray(self.ids, dtype=np.int32)

    @property
    def order(self) -> int:
        return len(self.ids)

    def contains(self, other_ids) -> bool:
        return bool(np.all(in_sorted(np.asarray(other_ids, np.int32), self.ids)))

    def generating_set(self) -> np.ndarray:
        """A small generating set, grown greedily and deterministically."""
        if self._gens is None:
            gens: list[int] = []
            known = np.array([0], dtype=np.int32)
            while len(known) < self.order:
                missing = self.ids[~in_sorted(self.ids, known)]
                gens.append(int(missing[0]))
                known = self.group.generated(np.array(gens, dtype=np.int32))
            self._gens = np.array(gens, dtype=np.int32)
        return self._gens

    def element_orders(self) -> np.ndarray:
        return self.group.el_orders()[self.ids]

    # -- basic structure ------------------------------------------------

    def center(self) -> np.ndarray:
        gens = self.generating_set()
        mask = np.ones(self.order, dtype=bool)
        for g in gens:
            mask &= self.group.mul_ids(self.ids, int(g)) == self.group.mul_ids(int(g), self.ids)
        return self.ids[mask]

    def centralizer_of(self, target_gens) -> np.ndarray:
        """Elements of this subgroup commuting with every target generator."""
        mask = np.ones(self.order, dtype=bool)
        for s in np.asarray(target_gens, np.int32).ravel():
            mask &= self.group.mul_ids(self.ids, int(s)) == self.group.mul_ids(int(s), self.ids)
        return self.ids[mask]

    def conjugacy_classes(self) -> list[np.ndarray]:
        """Conjugacy classes of this subgroup acting on itself."""
        gens = self.generating_set()
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for start in range(self.order):
            if seen[start]:
                continue
            frontier = np.array([self.ids[start]], dtype=np.int32)
            members = frontier.copy()
            seen[np.searchsorted(self.ids, frontier)] = True
            while len(frontier):
                imgs = np.unique(self.group.conj_ids(frontier[:, None], gens[None, :]).ravel())
                new = imgs[~in_sorted(imgs, members)]
                members = _union_sorted(members, new)
                loc = np.searchsorted(self.ids, new)
                seen[loc] = True
                frontier = new
            classes.append(members)
        return classes

    def normal_closure(self, seed_ids) -> np.ndarray:
        """Smallest normal subgroup of this view containing seed_ids."""
        gens = self.generating_set()
        closure = self.group.generated(seed_ids)
        while True:
            cg = SubgroupView(self.group, closure).generating_set()
            imgs = np.unique(self.group.conj_ids(cg[:, None], gens[None, :]).ravel())
            new = imgs[~in_sorted(imgs, closure)]
            if len(new) == 0:
                return closure
            closure = self.group.generated(np.concatenate([cg, new]))

    def derived_subgroup(self) -> np.ndarray:
        gens = self.generating_set()
        comms = []
        for g in gens:
            for h in gens:
                gi, hi = self.group.inv_ids(int(g)), self.group.inv_ids(int(h))
                c = self.group.mul_ids(self.group.mul_ids(gi, hi), self.group.mul_ids(int(g), int(h)))
                comms.append(int(c))
        if not comms:
            return np.array([0], dtype=np.int32)
        return self.normal_closure(np.array(sorted(set(comms)), dtype=np.int32))

    def is_solvable(self) -> bool:
        cur = self
        while cur.order > 1:
            nxt = cur.derived_subgroup()
            if len(nxt) == cur.order:
                return False
            cur = SubgroupView(self.group, nxt)
        return True

    def is_normal_in(self, parent: "SubgroupView") -> bool:
        pgens = parent.generating_set()
        sgens = self.generating_set()
        imgs = self.group.conj_ids(sgens[:, None], pgens[None, :]).ravel()
        return bool(np.all(in_sorted(imgs, self.ids)))

    def o_t(self, t: int) -> np.ndarray:
        """Largest normal t-subgroup.

        A class of t-elements lies inside O_t exactly when the subgroup it
        generates (automatically normal) is itself a t-group, so O_t is the
        join of all such classes.
        """
        parts = []
        for cls in self.conjugacy_classes():
            o = int(self.group.el_orders()[cls[0]])
            if _is_power_of(o, t):
                gen = self.group.generated(cls)
                if _is_power_of(len(gen), t):
                    parts.append(cls)
        if not parts:
            return np.array([0], dtype=np.int32)
        return self.group.generated(np.concatenate(parts))

    def fitting_subgroup(self) -> np.ndarray:
        seeds = []
        for t in factorize(self.order):
            ot = self.o_t(t)
            if len(ot) > 1:
                seeds.append(ot)
        if not seeds:
            return np.array([0], dtype=np.int32)
        return self.group.generated(np.concatenate(seeds))

    def normal_subgroups(self, cap: int = 20000) -> list[np.ndarray]:
        """All normal subgroups, as joins of class-generated normals."""
        atoms = []
        seen: dict[bytes, np.ndarray] = {}
        for cls in self.conjugacy_classes():
            n = self.group.generated(cls)
            key = n.tobytes()
            if key not in seen:
                seen[key] = n
                atoms.append(n)
        out = dict(seen)
        frontier = list(seen.values())
        while frontier:
            nxt = []
            for n1 in frontier:
                for n2 in atoms:
                    if len(n2) > 1 and not bool(np.all(in_sorted(n2, n1))):
                        j = self.group.generated(np.concatenate([n1, n2]))
                        key = j.tobytes()
                        if key not in out:
                            out[key] = j
                            nxt.append(j)
                            if len(out) > cap:
                                raise RuntimeError("normal subgroup lattice too large")
            frontier = nxt
        trivial = np.array([0], dtype=np.int32)
        out.setdefault(trivial.tobytes(), trivial)
        return sorted(out.values(), key=lambda n: (len(n), n.tobytes()))

    def normalizer_in(self, parent: "SubgroupView") -> np.ndarray:
        """ids of {g in parent : g^-1 H g = H}."""
        H = self.ids
        target = H  # already sorted
        pids = parent.ids
        keep = np.zeros(len(pids), dtype=bool)
        chunk = max(1, _CHUNK // max(len(H), 1))
        for s in range(0, len(pids), chunk):
            g = pids[s : s + chunk]
            X = self.group.conj_ids(H[None, :], g[:, None])
            X = np.sort(X, axis=1)
            keep[s : s + chunk] = np.all(X == target[None, :], axis=1)
        return pids[keep]


def _is_power_of(n: int, t: int) -> bool:
    while n % t == 0:
        n //= t
    return n == 1


# ---------------------------------------------------------------------------
# conjugacy of subgroups and class enumeration


def conjugation_orbit(group: FiniteGroup, ids: np.ndarray, cap: int = 2_000_000) -> dict[bytes, np.ndarray]:
    """All distinct images of a subgroup under conjugation by the full group.

    Returns a dict keyed by the bytes of each sorted id array.
    """
    gens = group.generator_ids
    start = np.sort(np.asarray(ids, np.int32))
    orbit = {start.tobytes(): start}
    frontier = [start]
    total = len(start)
    while frontier:
        batch = np.stack(frontier)  # (k, |H|)
        nxt = []
        for g in gens:
            imgs = np.sort(group.conj_ids(batch, int(g)), axis=1)
            for row in imgs:
                key = row.tobytes()
                if key not in orbit:
                    orbit[key] = row
                    nxt.append(row)
                    total += len(row)
                    if total > cap:
                        raise GroupTooLarge("conjugation orbit too large")
        frontier = nxt
    return orbit


def are_conjugate_subgroups(group: FiniteGroup, a_ids: np.ndarray, b_ids: np.ndarray) -> bool:
    a = np.sort(np.asarray(a_ids, np.int32))
    b = np.sort(np.asarray(b_ids, np.int32))
    if len(a) != len(b):
        return False
    if np.array_equal(a, b):
        return True
    orders = group.el_orders()
    if not np.array_equal(np.sort(orders[a]), np.sort(orders[b])):
        return False
    target = b.tobytes()
    gens = group.generator_ids
    orbit = {a.tobytes()}
    frontier = [a]
    while frontier:
        batch = np.stack(frontier)
        nxt = []
        for g in gens:
            imgs = np.sort(group.conj_ids(batch, int(g)), axis=1)
            for row in imgs:
                key = row.tobytes()
                if key == target:
                    return True
                if key not in orbit:
                    orbit.add(key)
                    nxt.append(row)
        frontier = nxt
    return False


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups, with its extension parent."""

    index: int
    ids: np.ndarray
    parent: int | None  # index of the class this one extended


def subgroup_classes(group: FiniteGroup, only_solvable: bool = True, cap_classes: int = 200_000) -> list[SubgroupClass]:
    """Conjugacy class representatives of subgroups of the whole group.

    With only_solvable=True the enumeration walks prime cyclic extensions
    inside normalizers, which reaches exactly the solvable subgroups: every
    solvable S has a normal subgroup of prime index, so S arises from a
    smaller class, and every extension built this way stays solvable.  With
    only_solvable=False every single-element extension is closed instead,
    which reaches all subgroups but costs much more; only use it on small
    groups.
    """
    full = SubgroupView(group, np.arange(group.order, dtype=np.int32))
    trivial = np.array([0], dtype=np.int32)
    classes: list[SubgroupClass] = [SubgroupClass(0, trivial, None)]
    seen_sets: dict[bytes, int] = {trivial.tobytes(): 0}

    def register(cand: np.ndarray, parent: int) -> None:
        key = cand.tobytes()
        if key in seen_sets:
            return
        orbit = conjugation_orbit(group, cand)
        idx = len(classes)
        for k in orbit:
            seen_sets[k] = idx
        classes.append(SubgroupClass(idx, cand, parent))
        if len(classes) > cap_classes:
            raise GroupTooLarge("subgroup class enumeration exceeded cap")

    cursor = 0
    while cursor < len(classes):
        cls = classes[cursor]
        H = cls.ids
        if only_solvable:
            norm = SubgroupView(group, H).normalizer_in(full)
            outside = norm[~in_sorted(norm, H)]
            if len(outside):
                # order of each coset x*H in N/H: first k with x^k in H
                korder = np.zeros(len(outside), dtype=np.int64)
                cur = outside.copy()
                active = np.arange(len(outside))
                k = 1
                while len(active):
                    done = in_sorted(cur, H)
                    korder[active[done]] = k
                    active = active[~done]
                    cur = cur[~done]
                    if len(active):
                        cur = group.mul_ids(cur, outside[active])
                        k += 1
                primes = np.array([is_prime(int(k)) for k in korder], dtype=bool)
                for x, k in zip(outside[primes], korder[primes]):
                    # H' = H u Hx u ... u Hx^(k-1)
                    pows = [np.int32(0)]
                    for _ in range(int(k) - 1):
                        pows.append(group.mul_ids(pows[-1], int(x)))
                    pows = np.array(pows, dtype=np.int32)
                    cand = np.sort(group.mul_ids(H[:, None], pows[None, :]).ravel())
                    register(cand, cursor)
        else:
            rest = np.setdiff1d(np.arange(group.order, dtype=np.int32), H)
            for x in rest:
                cand = group.generated(np.concatenate([H, [x]]))
                register(cand, cursor)
        cursor += 1
    return classes


# ---------------------------------------------------------------------------
# quotients by a normal subgroup


class CosetQuotient:
    """Cosets of a normal subgroup of a MatGroup, with a Cayley table.

    Coset 0 is the core itself.  lift() maps a set of coset ids back to the
    sorted element ids of its full preimage.
    """

    def __init__(self, G: MatGroup, core_ids: np.ndarray):
        core_ids = np.sort(np.asarray(core_ids, np.int32))
        self.G = G
        self.core_ids = core_ids
        gens = G.generator_ids
        imgs = G.conj_ids(core_ids[:, None], gens[None, :]).ravel()
        if not np.all(in_sorted(imgs, core_ids)):
            raise ValueError("core is not normal in the group")
        n = G.order
        coset_of = np.full(n, -1, dtype=np.int32)
        reps = []
        while True:
            unassigned = np.nonzero(coset_of < 0)[0]
            if len(unassigned) == 0:
                break
            r = np.int32(unassigned[0])
            members = G.mul_ids(core_ids, r)
            coset_of[members] = len(reps)
            reps.append(int(r))
        self.coset_of = coset_of
        self.reps = np.array(reps, dtype=np.int32)
        self.size = len(reps)
        order = np.argsort(coset_of, kind="stable")
        self.members = order.astype(np.int32).reshape(self.size, len(core_ids))
        self.members.sort(axis=1)
        # Cayley table on coset reps
        q = self.size
        table = np.empty((q, q), dtype=np.int32)
        chunk = max(1, _CHUNK // q)
        for s in range(0, q, chunk):
            rows = self.reps[s : s + chunk]
            prods = G.mul_ids(rows[:, None], self.reps[None, :])
            table[s : s + chunk] = coset_of[prods]
        self.quotient = TableGroup(table)

    def image_of(self, element_ids) -> np.ndarray:
        return self.coset_of[np.asarray(element_ids, np.int32)]

    def lift(self, coset_ids) -> np.ndarray:
        coset_ids = np.asarray(coset_ids, np.int32)
        return np.sort(self.members[coset_ids].ravel())
