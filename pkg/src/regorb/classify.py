"""Census of solvable linear groups with no regular orbit on their module.

For a catalogue row the pipeline runs one pass per core type ("mode").  A
pass assembles the full normalizer N of a standard core image in GL(d, p)
and lifts the solvable subgroup classes of the quotient N / core, so every
surveyed class contains the standard core.  A lifted class H is counted
when

  * it has no regular orbit: every vector has a nontrivial stabilizer,
  * it is quasi-primitive: H acts irreducibly and every normal subgroup
    acts homogeneously,
  * its Fitting subgroup F(H) splits the module into exactly b homogeneous
    blocks, the row's multiplicity.  A class whose Fitting subgroup acts
    in fewer, larger blocks contains the core in a finer embedding than
    the row describes; it belongs to the row with that larger core and is
    counted there, and
  * O_r(H) is a central product E * C(E) with E normal in H and
    extraspecial of width at least 2.  A class failing this is semilinear:
    it embeds in the multiplicative normalizer of a field extension and
    belongs to the one-dimensional census over the bigger field, not
    here.  The standard core sits inside such an O_r as a non-factor
    (its centralizer is too small to complement it), so containing the
    core does not by itself guarantee the width.

The quotient enumeration reaches exactly the solvable core-containing
classes, whatever N itself looks like, because a lift is solvable iff its
quotient class is.

Rows with r = 2 and 4 not dividing q - 1 run separate passes for the two
sign types of the core.  The two normalizers overlap in GL(d, p): a group
whose own core has one sign can sit inside the normalizer of the other
sign without containing that pass's standard core.  The reference census
lists such a group on both sides, so after the core passes each sign adds
the non-core classes of its normalizer whose Fitting subgroup is
extraspecial of the opposite type with the row's parameters.  Each extra
is conjugate to a counted core class of the opposite pass; extras are
found by a direct survey of the normalizer's solvable classes and
deduplicated by a conjugation-invariant fingerprint.  When the opposite
pass counted nothing the scan is skipped: there are no groups of that
type at all, so none can hide in this normalizer either.

A non-core class whose Fitting subgroup has the pass's own sign, or a
symplectic or cyclic one, is never counted: conjugating its core to the
standard copy turns it into a core-containing class of this or another
row, where it is already counted.

The Fitting subgroup of a lift H is assembled without touching H's own
conjugacy classes: O_r(H) is the preimage of O_r(H/core), and for t != r
the subgroup O_t(H) equals O_t of the centralizer of the core in H, which
is far smaller.  F(H) is the (commuting) product of these pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .gfp import factorize, field, mult_order
from .groups import CosetQuotient, SubgroupView, in_sorted, subgroup_classes
from .catalogue import DESK_ROWS, ROWS, RowParams, census_matches
from .modtests import is_quasiprimitive, minimal_submodule
from .normalizer import NormalizerResult, assemble_full, predicted_order
from .orbits import has_regular_orbit, orbit_census

# Largest |N| still searched directly for cross-type extras.
DIRECT_CAP = 6000

# Default bounds separating desk-scale rows from paper-scale ones.
DEFAULT_MAX_GROUP_ORDER = 100_000
DEFAULT_MAX_QUOTIENT = 10_000
DEFAULT_MAX_SPACE = 30_000_000


def scope_refusal(params: RowParams,
                  max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
                  max_quotient: int = DEFAULT_MAX_QUOTIENT,
                  max_space: int = DEFAULT_MAX_SPACE,
                  desk_only: bool = False) -> str | None:
    """Why the row cannot run under these bounds, or None when it can.

    The checks are pure arithmetic on the row parameters: point space
    p^d, the closed-form normalizer order per mode, and the quotient size
    above the core.  With desk_only the row must additionally belong to
    DESK_ROWS; classification counts are only reported for rows whose
    census the suite verifies end to end.
    """
    if params.p**params.d > max_space:
        return (f"out of desk scope: point space {params.p}^{params.d} "
                f"exceeds {max_space}")
    for mode in params.modes():
        n = predicted_order(params.r, params.m, params.p, params.a, params.b, mode)
        if n > max_group_order:
            return (f"out of desk scope: normalizer order {n} ({mode}) "
                    f"exceeds {max_group_order}")
        core = params.r ** (2 * params.m + 1) * (2 if mode == "symplectic" else 1)
        if n // core > max_quotient:
            return (f"out of desk scope: quotient size {n // core} ({mode}) "
                    f"exceeds {max_quotient}")
    if desk_only and params.row not in DESK_ROWS:
        return f"out of desk scope: row {params.row} is not a verified desk row"
    return None


@dataclass
class Candidate:
    """One subgroup class examined by a pass, with everything decided about it."""

    mode: str
    class_index: int
    order: int
    has_regular: bool
    witness: int | None = None
    contains_core: bool = False
    profile: tuple[int, int, int, int] | None = None  # (u, a_G, e_G, b_G)
    label: str | None = None
    blocks: int | None = None  # homogeneous blocks of the Fitting action
    width: int | None = None  # extraspecial width of O_r, 1 when semilinear
    quasiprimitive: bool | None = None
    counted: bool = False
    cross: bool = False  # counted by the cross-type scan, not the core lift


@dataclass
class ModeResult:
    mode: str
    normalizer_order: int
    normalizer_solvable: bool
    quotient_order: int
    n_classes: int
    candidates: list[Candidate] = dc_field(default_factory=list)
    cross_scanned: bool = False

    @property
    def counted(self) -> list[Candidate]:
        return [c for c in self.candidates if c.counted]

    @property
    def count(self) -> int:
        return sum(1 for c in self.candidates if c.counted)

    @property
    def max_order(self) -> int:
        return max((c.order for c in self.candidates if c.counted), default=0)


@dataclass
class RowResult:
    row: int
    params: RowParams
    modes: dict[str, ModeResult]
    notes: list[str]
    num: int
    max_order: int

    @property
    def counted(self) -> list[Candidate]:
        return [c for m in self.modes.values() for c in m.counted]

    def census(self) -> dict[str, tuple[int, int]]:
        """Nonempty per-mode lines: mode name -> (count, largest group order)."""
        out = {}
        for name, m in self.modes.items():
            if m.count:
                out[name] = (m.count, m.max_order)
        return out

    def matches_reference(self) -> bool:
        """Compare the per-mode census lines against the reference counts."""
        return census_matches(self.row, self.census())


def _fitting_of_lift(res: NormalizerResult, cq: CosetQuotient, cls_ids: np.ndarray,
                     H: SubgroupView, core_gen_ids: np.ndarray
                     ) -> tuple[np.ndarray, np.ndarray]:
    """(F(H), O_r(H)) of a lifted class, both as sorted id arrays."""
    G = res.group
    Qv = SubgroupView(cq.quotient, cls_ids)
    P = np.asarray(cq.lift(Qv.o_t(res.r)), dtype=np.int32)
    C = SubgroupView(G, H.centralizer_of(core_gen_ids))
    out = P
    for t in factorize(C.order):
        if t == res.r:
            continue
        ot = C.o_t(t)
        if len(ot) > 1:
            out = np.unique(G.mul_ids(out[:, None], ot[None, :]).ravel())
    return out, P


def _core_width(G, normals: list[np.ndarray], o_r_ids: np.ndarray, r: int) -> int:
    """Extraspecial width of O_r as a central product E * C(E), 1 if it is none.

    Scans the normal subgroups n <= O_r for extraspecial ones (|Z(n)| = r,
    r-th powers central, order an odd power of r) that complement their own
    centralizer: |n| * |C(n)| = r * |O_r| forces n * C(n) = O_r since the two
    meet exactly in Z(n).  The largest width found is the group's; without
    any such factor the r-part is cyclic or of maximal class and the group
    acts semilinearly.
    """
    o_r = np.sort(np.asarray(o_r_ids, np.int32))
    Ov = SubgroupView(G, o_r)
    best = 1
    for n in normals:
        ln = len(n)
        if ln <= r * r or ln > len(o_r):
            continue
        k = 0
        m = ln
        while m % r == 0:
            m //= r
            k += 1
        if m != 1 or k % 2 == 0:
            continue  # order must be r^(1+2w)
        n = np.sort(np.asarray(n, np.int32))
        if not bool(in_sorted(n, o_r).all()):
            continue
        nv = SubgroupView(G, n)
        Z = np.sort(nv.center())
        if len(Z) != r:
            continue
        pw = n.astype(np.int32)
        for _ in range(r - 1):
            pw = G.mul_ids(pw, n)
        if not bool(in_sorted(pw, Z).all()):
            continue
        C = Ov.centralizer_of(nv.generating_set())
        if ln * len(C) != r * len(o_r):
            continue
        best = max(best, r ** ((k - 1) // 2))
    return best


def _profile_and_label(res: NormalizerResult, F_ids: np.ndarray):
    """(profile, label) of a candidate from its Fitting subgroup, or (None, None).

    The profile (u, a_G, e_G, b_G) exists when F is a central product of a
    cyclic group of order u coprime to p with a group of prime-power order
    e_G^2 * u-part whose r-th powers all land in the centre, and
    e_G * a_G divides d.  The label tells the core type apart: "odd" for odd
    r, "symplectic" when 4 divides u, and for u = 2 mod 4 the sign of the
    quadratic form counting involutions in the 2-part.
    """
    G = res.group
    d, p = res.d, res.p
    Fv = SubgroupView(G, F_ids)
    Z = np.sort(Fv.center())
    u = len(Z)
    orders = G.el_orders()
    if u > 1 and int(orders[Z].max()) != u:
        return None, None  # center not cyclic
    if u == 1:
        a_g = 1
    else:
        try:
            a_g = mult_order(p, u)
        except ValueError:
            return None, None  # p divides u
    fz = len(F_ids) // u
    if fz == 1:
        e_g, r_g = 1, None
    else:
        fac = factorize(fz)
        if len(fac) != 1:
            return None, None
        r_g, exp = next(iter(fac.items()))
        if exp % 2:
            return None, None
        e_g = r_g ** (exp // 2)
        # F / Z(F) must have exponent r: all r-th powers land in the centre
        pw = F_ids.astype(np.int32)
        for _ in range(r_g - 1):
            pw = G.mul_ids(pw, F_ids)
        if not bool(in_sorted(pw, Z).all()):
            return None, None
    if d % (e_g * a_g) != 0:
        return None, None
    b_g = d // (e_g * a_g)
    profile = (u, a_g, e_g, b_g)

    if r_g is None:
        return profile, ""
    if r_g != 2:
        return profile, "odd"
    o2_ids = F_ids[(orders[F_ids] & (orders[F_ids] - 1)) == 0]  # 2-power orders
    z2 = 1
    while u % (2 * z2) == 0:
        z2 *= 2
    if len(o2_ids) != z2 * e_g * e_g:
        return None, None
    if z2 >= 4:
        return profile, "symplectic"
    if z2 != 2:
        return None, None
    k = e_g.bit_length() - 1
    zeros = int((orders[o2_ids] <= 2).sum()) // 2
    if zeros == 2 ** (2 * k - 1) + 2 ** (k - 1):
        return profile, "plus"
    if zeros == 2 ** (2 * k - 1) - 2 ** (k - 1):
        return profile, "minus"
    return None, None


def _block_count(Fp, G, F_ids: np.ndarray, d: int) -> int:
    """Number of irreducible constituents of the Fitting action on the module.

    Assumes the action is homogeneous (true for normal subgroups of a
    quasi-primitive group), so the constituents share one dimension.
    """
    Fv = SubgroupView(G, F_ids)
    gens = [G.mats[int(g)].astype(np.int64) for g in Fv.generating_set()]
    if not gens:
        return d
    W = minimal_submodule(Fp, gens)
    return d // len(W)


def _fingerprint(view: SubgroupView, label: str, Fp) -> tuple:
    """Conjugation-invariant key used to merge duplicate classes."""
    orders = view.group.el_orders()[view.ids]
    vals, counts = np.unique(orders, return_counts=True)
    gens = [view.group.mats[int(g)].astype(np.int64) for g in view.generating_set()]
    census = orbit_census(Fp, gens)
    return (
        label,
        view.order,
        tuple(zip(vals.tolist(), counts.tolist())),
        len(view.derived_subgroup()),
        len(view.center()),
        tuple(sorted(census.items())),
    )


def _survey_core(params: RowParams, mode: str, max_order: int, max_classes: int,
                 log) -> tuple[ModeResult, NormalizerResult]:
    """Lift pass: count the core-containing classes of one normalizer."""
    res = assemble_full(params.r, params.m, params.p, params.a, params.b, mode,
                        max_order=max_order)
    G = res.group
    full = SubgroupView(G, np.arange(G.order, dtype=np.int32))
    n_solvable = full.is_solvable()
    cq = CosetQuotient(G, res.core_ids)
    classes = subgroup_classes(cq.quotient, only_solvable=True, cap_classes=max_classes)
    out = ModeResult(mode, G.order, n_solvable, cq.size, len(classes))
    if log:
        log(f"[{params.row}/{mode}] lift: |N|={G.order} |N/core|={cq.size} "
            f"classes={len(classes)}")

    core_view = SubgroupView(G, res.core_ids)
    core_gen_ids = core_view.generating_set()
    G.el_orders()  # warm the cache once
    Fp = field(params.p)
    status: dict[int, bool] = {}
    homog_cache: dict = {}

    for cls in classes:
        H_ids = cq.lift(cls.ids)
        H = SubgroupView(G, H_ids)
        if cls.parent is not None and status[cls.parent] is False:
            has_reg, wit = False, None  # supergroups of a covered group stay covered
        else:
            has_reg, wit = has_regular_orbit(H)
        status[cls.index] = has_reg
        cand = Candidate(mode, cls.index, H.order, has_reg, wit, contains_core=True)
        out.candidates.append(cand)
        if has_reg:
            continue
        F_ids, O_r = _fitting_of_lift(res, cq, cls.ids, H, core_gen_ids)
        cand.profile, cand.label = _profile_and_label(res, F_ids)
        normals = H.normal_subgroups()
        cand.quasiprimitive = is_quasiprimitive(H, homog_cache, normals=normals)
        if not cand.quasiprimitive:
            continue
        cand.blocks = _block_count(Fp, G, F_ids, params.d)
        if cand.blocks != params.b:
            continue
        cand.width = _core_width(G, normals, O_r, params.r)
        if cand.width < 2:
            continue
        cand.counted = True
        if log:
            log(f"[{params.row}/{mode}] counted class {cls.index}: |G|={H.order} "
                f"profile={cand.profile} label={cand.label}")
    return out, res


def _scan_cross_extras(params: RowParams, mode: str, opposite: str,
                       res: NormalizerResult, out: ModeResult,
                       max_classes: int, log) -> None:
    """Direct pass: add non-core classes whose core has the opposite sign."""
    G = res.group
    classes = subgroup_classes(G, only_solvable=True, cap_classes=max_classes)
    out.cross_scanned = True
    if log:
        log(f"[{params.row}/{mode}] cross scan: |N|={G.order} classes={len(classes)}")

    core_sorted = np.sort(res.core_ids)
    G.el_orders()
    Fp = field(params.p)
    status: dict[int, bool] = {}
    homog_cache: dict = {}
    keepers: list[tuple[Candidate, SubgroupView]] = []

    for cls in classes:
        H_ids = np.sort(np.asarray(cls.ids, np.int32))
        H = SubgroupView(G, H_ids)
        if cls.parent is not None and status[cls.parent] is False:
            has_reg = False
        else:
            has_reg, _ = has_regular_orbit(H)
        status[cls.index] = has_reg
        if has_reg:
            continue
        if len(core_sorted) <= len(H_ids) and bool(in_sorted(core_sorted, H_ids).all()):
            continue  # already counted by the lift pass
        F_ids = H.fitting_subgroup()
        profile, label = _profile_and_label(res, F_ids)
        if label != opposite or profile is None:
            continue
        u, a_g, e_g, b_g = profile
        if (a_g, e_g, b_g) != (params.a, params.e, params.b):
            continue
        cand = Candidate(mode, cls.index, H.order, False, None,
                         contains_core=False, profile=profile, label=label,
                         cross=True)
        normals = H.normal_subgroups()
        cand.quasiprimitive = is_quasiprimitive(H, homog_cache, normals=normals)
        out.candidates.append(cand)
        if cand.quasiprimitive:
            cand.blocks = _block_count(Fp, G, F_ids, params.d)
            cand.width = _core_width(G, normals, H.o_t(params.r), params.r)
            if cand.blocks == params.b and cand.width >= 2:
                keepers.append((cand, H))

    seen: set[tuple] = set()
    for cand, H in keepers:
        key = _fingerprint(H, cand.label, Fp)
        if key in seen:
            continue
        seen.add(key)
        cand.counted = True
        if log:
            log(f"[{params.row}/{mode}] counted class {cand.class_index} "
                f"(cross, {cand.label}): |G|={H.order}")


def classify_mode(params: RowParams, mode: str, max_order: int = 2_000_000,
                  max_classes: int = 200_000, log=None) -> ModeResult:
    """Run the core lift pass for one mode (no cross-type extras)."""
    out, _ = _survey_core(params, mode, max_order, max_classes, log)
    return out


def classify_row(row: int | RowParams, max_order: int = 2_000_000,
                 max_classes: int = 200_000, direct_cap: int = DIRECT_CAP,
                 only_mode: str | None = None, log=None) -> RowResult:
    """Run every pass of a row, then settle cross-type extras between passes.

    only_mode restricts the run to a single core type; the cross-type pass
    needs both sides, so a restricted run reports that side's core census
    alone.
    """
    params = ROWS[row] if isinstance(row, int) else row
    modes_to_run = params.modes()
    if only_mode is not None:
        if only_mode not in modes_to_run:
            raise ValueError(f"core type {only_mode!r} does not exist for row "
                             f"{params.row} (available: {modes_to_run})")
        modes_to_run = [only_mode]
    surveys: dict[str, tuple[ModeResult, NormalizerResult]] = {}
    for mode in modes_to_run:
        surveys[mode] = _survey_core(params, mode, max_order, max_classes, log)

    notes: list[str] = []
    if set(surveys) == {"plus", "minus"}:
        other = {"plus": "minus", "minus": "plus"}
        for name, (mres, res) in surveys.items():
            opposite = other[name]
            if surveys[opposite][0].count == 0:
                continue  # no groups of that type exist, so no extras here
            if res.group.order > direct_cap:
                notes.append(f"{name}: cross-type scan skipped, "
                             f"|N|={res.group.order} above direct cap")
                continue
            _scan_cross_extras(params, name, opposite, res, mres, max_classes, log)

    modes = {name: mres for name, (mres, _) in surveys.items()}
    counted = [c for m in modes.values() for c in m.counted]
    return RowResult(
        row=params.row,
        params=params,
        modes=modes,
        notes=notes,
        num=len(counted),
        max_order=max((c.order for c in counted), default=0),
    )
