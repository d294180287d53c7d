"""Arithmetic over small finite fields GF(p^a) plus the matrix utilities the
rest of the package leans on.

Field elements are integer codes in range(p**a): the element sum_i c_i x^i
(x the residue of the fixed modulus representation) gets code sum_i c_i p^i,
little endian in the coefficients.  For a == 1 codes coincide with residues
mod p, so plain numpy modular arithmetic applies; extension fields run
through precomputed addition/multiplication tables.

Matrices are numpy int64 arrays of codes.  Vectors are ROW vectors and act
on the right: v -> v @ M.  mat_kernel is the column kernel {v : M v = 0};
row_kernel(M) = mat_kernel(M.T).
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import numpy as np

# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def mult_order(base: int, modulus: int) -> int:
    """Multiplicative order of base modulo modulus (they must be coprime)."""
    if modulus == 1:
        return 1
    b = base % modulus
    if np.gcd(b, modulus) != 1:
        raise ValueError(f"{base} not invertible mod {modulus}")
    acc, k = b, 1
    while acc != 1:
        acc = acc * b % modulus
        k += 1
    return k


# ---------------------------------------------------------------------------
# dense polynomial arithmetic mod a prime, little-endian coefficient lists


def poly_trim(f: list[int]) -> list[int]:
    k = len(f)
    while k > 1 and f[k - 1] == 0:
        k -= 1
    return f[:k]


def poly_deg(f: list[int]) -> int:
    f = poly_trim(f)
    if f == [0]:
        return -1
    return len(f) - 1


def poly_add(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    return poly_trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    return poly_trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if poly_deg(f) < 0 or poly_deg(g) < 0:
        return [0]
    out = [0] * (len(f) + len(g) - 1)
    for i, ci in enumerate(f):
        if ci:
            for j, cj in enumerate(g):
                out[i + j] = (out[i + j] + ci * cj) % p
    return poly_trim(out)


def poly_scale(f: list[int], c: int, p: int) -> list[int]:
    return poly_trim([ci * c % p for ci in f])


def poly_monic(f: list[int], p: int) -> list[int]:
    f = poly_trim(f)
    lead = f[-1]
    if lead == 1:
        return f
    return poly_scale(f, pow(lead, p - 2, p), p)


def poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = poly_trim(list(f))
    g = poly_trim(list(g))
    if poly_deg(g) < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - len(g) + 1, 1)
    rem = list(f)
    while poly_deg(rem) >= poly_deg(g):
        shift = poly_deg(rem) - poly_deg(g)
        c = rem[-1] * inv_lead % p
        quot[shift] = c
        for i, gi in enumerate(g):
            rem[i + shift] = (rem[i + shift] - c * gi) % p
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    return poly_divmod(f, g, p)[1]


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while poly_deg(g) >= 0:
        f, g = g, poly_mod(f, g, p)
    if poly_deg(f) < 0:
        return [0]
    return poly_monic(f, p)


def poly_pow_mod(f: list[int], n: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(f, mod, p)
    while n > 0:
        if n & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        n >>= 1
    return result


def poly_eval(f: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def poly_derivative(f: list[int], p: int) -> list[int]:
    return poly_trim([f[i] * i % p for i in range(1, len(f))]) if len(f) > 1 else [0]


def _poly_is_irreducible(f: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree <= deg(f)/2
    d = poly_deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    for t in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=t):
            g = list(tail) + [1]
            if poly_deg(poly_mod(f, g, p)) < 0:
                return False
    return True


def _squarefree_split(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic f: list of (factor, multiplicity)."""
    out: list[tuple[list[int], int]] = []
    df = poly_derivative(f, p)
    if poly_deg(df) < 0:
        # f = g(x^p); p-th root has the same coefficients at stride p
        g = poly_trim([f[i] for i in range(0, len(f), p)])
        return [(h, m * p) for h, m in _squarefree_split(g, p)]
    c = poly_gcd(f, df, p)
    w = poly_divmod(f, c, p)[0]
    i = 1
    while poly_deg(w) > 0:
        y = poly_gcd(w, c, p)
        z = poly_divmod(w, y, p)[0]
        if poly_deg(z) > 0:
            out.append((z, i))
        w = y
        c = poly_divmod(c, y, p)[0]
        i += 1
    if poly_deg(c) > 0:
        # remaining c has zero derivative, so its recursive split goes
        # straight through the p-th root branch above
        out.extend(_squarefree_split(c, p))
    return out


def _distinct_degree_split(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split squarefree monic f into products of same-degree irreducibles."""
    out = []
    h = [0, 1]
    k = 1
    while poly_deg(f) >= 2 * k:
        h = poly_pow_mod(h, p, f, p)
        g = poly_gcd(poly_sub(h, [0, 1], p), f, p)
        if poly_deg(g) > 0:
            out.append((g, k))
            f = poly_divmod(f, g, p)[0]
            h = poly_mod(h, f, p)
        k += 1
    if poly_deg(f) > 0:
        out.append((f, poly_deg(f)))
    return out


def _equal_degree_split(f: list[int], k: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus: factor squarefree monic f, all factors of degree k."""
    n = poly_deg(f)
    if n == k:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        if poly_deg(r) < 1:
            continue
        g = poly_gcd(r, f, p)
        if 0 < poly_deg(g) < n:
            break
        if p > 2:
            s = poly_pow_mod(r, (p**k - 1) // 2, f, p)
            g = poly_gcd(poly_sub(s, [1], p), f, p)
        else:
            acc, t = list(r), list(r)
            for _ in range(k - 1):
                t = poly_pow_mod(t, 2, f, p)
                acc = poly_add(acc, t, p)
            g = poly_gcd(acc, f, p)
        if 0 < poly_deg(g) < n:
            break
    rest = poly_divmod(f, g, p)[0]
    return _equal_degree_split(g, k, p, rng) + _equal_degree_split(rest, k, p, rng)


def poly_factor(f: list[int], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Full factorization of f over GF(p) into monic irreducibles.

    Returns a sorted list of (coefficients, multiplicity) with coefficients
    little endian.  The leading unit of f is discarded.
    """
    f = poly_monic(f, p)
    if poly_deg(f) < 1:
        return []
    rng = random.Random(0x5EED + p * 1000 + len(f))
    out: list[tuple[tuple[int, ...], int]] = []
    for g, mult in _squarefree_split(f, p):
        for h, k in _distinct_degree_split(g, p):
            for irr in _equal_degree_split(h, k, p, rng):
                out.append((tuple(irr), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


# ---------------------------------------------------------------------------
# field objects


_TABLE_CAP = 1024  # largest q for which we build q x q code tables


class FieldSpec:
    """GF(p^a) with code tables and matrix routines.

    Use the module-level factory field(p, a); instances are cached there.
    The modulus is the first monic irreducible of degree a when coefficient
    tuples (c_{a-1}, ..., c_0) are compared lexicographically, so e.g. GF(4)
    uses x^2+x+1, GF(9) uses x^2+1 and GF(8) uses x^3+x+1.
    """

    def __init__(self, p: int, a: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if a < 1:
            raise ValueError("a must be >= 1")
        self.p = p
        self.a = a
        self.q = p**a
        self._prim: int | None = None
        if a == 1:
            self.modulus: tuple[int, ...] | None = None
            return
        if self.q > _TABLE_CAP:
            raise ValueError(f"GF({p}^{a}) too large for table construction")
        self.modulus = self._find_modulus()
        self._build_tables()

    # -- construction -------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        p, a = self.p, self.a
        for top in itertools.product(range(p), repeat=a):
            # top is (c_{a-1}, ..., c_0)
            f = list(reversed(top)) + [1]
            if _poly_is_irreducible(f, p):
                return tuple(f)
        raise RuntimeError("no irreducible modulus found")  # unreachable

    def _build_tables(self) -> None:
        p, a, q = self.p, self.a, self.q
        codes = np.arange(q, dtype=np.int64)
        digits = np.zeros((q, a), dtype=np.int64)
        for i in range(a):
            digits[:, i] = (codes // p**i) % p
        self._digits = digits
        self._pvec = p ** np.arange(a, dtype=np.int64)
        # tail of the reduction x^a = -(f_0 + ... + f_{a-1} x^{a-1})
        tail = np.array([(-c) % p for c in self.modulus[:a]], dtype=np.int64)

        def mulx(dig: np.ndarray) -> np.ndarray:
            new = np.zeros_like(dig)
            new[:, 1:] = dig[:, :-1]
            return (new + dig[:, a - 1 : a] * tail) % p

        # digit arrays of x^i * c for every code c
        shift_digits = [digits]
        for _ in range(a - 1):
            shift_digits.append(mulx(shift_digits[-1]))

        prod = np.zeros((q, q, a), dtype=np.int64)
        for i in range(a):
            prod += digits[:, i][:, None, None] * shift_digits[i][None, :, :]
        prod %= p
        self.mul = prod @ self._pvec
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ self._pvec
        self.neg = ((p - digits) % p) @ self._pvec
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(self.mul == 1)
        inv[rows] = cols
        self.inv = inv
        # Frobenius matrix P: row i holds the digits of x^(i*p) mod modulus
        x_to_p = self.el_pow(p % q if a > 1 else 1, p)  # code of x is p
        P = np.zeros((a, a), dtype=np.int64)
        c = 1
        for i in range(a):
            P[i] = digits[c]
            c = int(self.mul[c, x_to_p])
        self._frob_matrix = P
        self.frob = (digits @ P % p) @ self._pvec
        # blow-up blocks T_c with T_c[i, j] = digit_j(x^i * c)
        blocks = np.zeros((q, a, a), dtype=np.int64)
        for i in range(a):
            blocks[:, i, :] = shift_digits[i]
        self._blow_blocks = blocks

    # -- element ops ----------------------------------------------------

    def el_add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        return int(self.add[x, y])

    def el_sub(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x - y) % self.p
        return int(self.add[x, self.neg[y]])

    def el_neg(self, x: int) -> int:
        if self.a == 1:
            return (-x) % self.p
        return int(self.neg[x])

    def el_mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        return int(self.mul[x, y])

    def el_inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverting zero field element")
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        return int(self.inv[x])

    def el_pow(self, x: int, n: int) -> int:
        if self.a == 1:
            return pow(x, n, self.p) if n >= 0 else pow(self.el_inv(x), -n, self.p)
        if n < 0:
            x, n = self.el_inv(x), -n
        acc, base = 1, x
        while n > 0:
            if n & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            n >>= 1
        return acc

    def el_frob(self, x: int) -> int:
        if self.a == 1:
            return x
        return int(self.frob[x])

    def el_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for t in prime_factors(n):
            while n % t == 0 and self.el_pow(x, n // t) == 1:
                n //= t
        return n

    def digits(self, code: int) -> tuple[int, ...]:
        return tuple((code // self.p**i) % self.p for i in range(self.a))

    def encode(self, digs) -> int:
        return int(sum(int(d) % self.p * self.p**i for i, d in enumerate(digs)))

    def primitive_element(self) -> int:
        """Least code generating the multiplicative group."""
        if self._prim is None:
            for c in range(1, self.q):
                if self.el_order(c) == self.q - 1:
                    self._prim = c
                    break
        return self._prim

    def root_of_unity(self, r: int) -> int:
        """Least code of exact multiplicative order r."""
        if (self.q - 1) % r != 0:
            raise ValueError(f"no element of order {r} in GF({self.q})")
        for c in range(2, self.q):
            if self.el_pow(c, r) == 1 and self.el_order(c) == r:
                return c
        raise RuntimeError("unreachable")

    # -- vector helpers used by the elimination loops --------------------

    def _vscale(self, v: np.ndarray, c: int) -> np.ndarray:
        if self.a == 1:
            return v * c % self.p
        return self.mul[v, c]

    def _vsubmul(self, v: np.ndarray, w: np.ndarray, c: int) -> np.ndarray:
        # v - c*w elementwise
        if self.a == 1:
            return (v - w * c) % self.p
        return self.add[v, self.neg[self.mul[w, c]]]

    # -- matrices ---------------------------------------------------------

    def asmat(self, rows) -> np.ndarray:
        return np.asarray(rows, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def scalar_mat(self, c: int, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64) * int(c)

    def mat_add(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if self.a == 1:
            return (A + B) % self.p
        return self.add[A, B]

    def mat_sub(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if self.a == 1:
            return (A - B) % self.p
        return self.add[A, self.neg[B]]

    def mat_neg(self, A: np.ndarray) -> np.ndarray:
        if self.a == 1:
            return (-A) % self.p
        return self.neg[A]

    def mat_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.a == 1:
            return A @ B % self.p
        n, k = A.shape
        _, m = B.shape
        acc = np.zeros((n, m), dtype=np.int64)
        for t in range(k):
            acc = self.add[acc, self.mul[A[:, t][:, None], B[t, :][None, :]]]
        return acc

    def mat_pow(self, A: np.ndarray, n: int) -> np.ndarray:
        if n < 0:
            return self.mat_pow(self.mat_inv(A), -n)
        acc = self.identity(A.shape[0])
        base = np.asarray(A, dtype=np.int64)
        while n > 0:
            if n & 1:
                acc = self.mat_mul(acc, base)
            base = self.mat_mul(base, base)
            n >>= 1
        return acc

    def mat_frob(self, A: np.ndarray) -> np.ndarray:
        if self.a == 1:
            return np.array(A, dtype=np.int64)
        return self.frob[A]

    def vec_mat(self, v: np.ndarray, M: np.ndarray) -> np.ndarray:
        return self.mat_mul(np.asarray(v, dtype=np.int64)[None, :], M)[0]

    def mat_rref(self, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form; returns (R, pivot column list)."""
        R = np.array(A, dtype=np.int64)
        nrows, ncols = R.shape
        pivots: list[int] = []
        r = 0
        for col in range(ncols):
            if r == nrows:
                break
            piv = None
            for i in range(r, nrows):
                if R[i, col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                R[[r, piv]] = R[[piv, r]]
            R[r] = self._vscale(R[r], self.el_inv(int(R[r, col])))
            for i in range(nrows):
                if i != r and R[i, col] != 0:
                    R[i] = self._vsubmul(R[i], R[r], int(R[i, col]))
            pivots.append(col)
            r += 1
        return R, pivots

    def mat_rank(self, A: np.ndarray) -> int:
        return len(self.mat_rref(A)[1])

    def is_invertible(self, A: np.ndarray) -> bool:
        A = np.asarray(A)
        return A.shape[0] == A.shape[1] and self.mat_rank(A) == A.shape[0]

    def mat_inv(self, A: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        n = A.shape[0]
        aug = np.concatenate([A, self.identity(n)], axis=1)
        R, pivots = self.mat_rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix not invertible")
        return R[:, n:]

    def mat_kernel(self, M: np.ndarray) -> np.ndarray:
        """Basis (as rows) of the column kernel {v : M v = 0}."""
        M = np.asarray(M, dtype=np.int64)
        n = M.shape[1]
        R, pivots = self.mat_rref(M)
        free = [j for j in range(n) if j not in pivots]
        basis = np.zeros((len(free), n), dtype=np.int64)
        for row, j in enumerate(free):
            basis[row, j] = 1
            for r_idx, pc in enumerate(pivots):
                basis[row, pc] = self.el_neg(int(R[r_idx, j]))
        return basis

    def row_kernel(self, M: np.ndarray) -> np.ndarray:
        """Basis of {v : v @ M = 0}."""
        return self.mat_kernel(np.asarray(M, dtype=np.int64).T)

    def kron(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.a == 1:
            return np.kron(A, B) % self.p
        ra, ca = A.shape
        rb, cb = B.shape
        out = self.mul[A[:, None, :, None], B[None, :, None, :]]
        return out.reshape(ra * rb, ca * cb)

    def poly_apply(self, f: list[int], A: np.ndarray) -> np.ndarray:
        """Evaluate the polynomial f at the square matrix A."""
        n = A.shape[0]
        acc = np.zeros((n, n), dtype=np.int64)
        for c in reversed(list(f)):
            acc = self.mat_mul(acc, A)
            acc = self.mat_add(acc, self.scalar_mat(int(c) % self.p if self.a == 1 else int(c), n))
        return acc

    # -- subfield blow-up -------------------------------------------------

    def blow_up(self, M: np.ndarray) -> np.ndarray:
        """Rewrite an n x n matrix over GF(p^a) as na x na over GF(p).

        Each entry c becomes the a x a block T_c with T_c[i, j] the j-th
        digit of x^i * c, which makes the map a ring homomorphism for the
        row action once vectors are flattened coordinate-blockwise.
        """
        if self.a == 1:
            return np.array(M, dtype=np.int64)
        M = np.asarray(M, dtype=np.int64)
        n = M.shape[0]
        blocks = self._blow_blocks[M]  # (n, n, a, a)
        return blocks.transpose(0, 2, 1, 3).reshape(n * self.a, n * self.a)

    def frobenius_matrix(self) -> np.ndarray:
        """a x a matrix P over GF(p) with rowvec(u^p) = rowvec(u) @ P."""
        if self.a == 1:
            return np.eye(1, dtype=np.int64)
        return self._frob_matrix.copy()

    # -- characteristic polynomial and intertwiners -----------------------

    def charpoly(self, A: np.ndarray) -> list[int]:
        """Characteristic polynomial det(xI - A), little endian, monic.

        Prime fields only: the Hessenberg reduction below assumes codes are
        residues.
        """
        if self.a != 1:
            raise NotImplementedError("charpoly is implemented for prime fields")
        p = self.p
        H = np.array(A, dtype=np.int64) % p
        n = H.shape[0]
        for k in range(1, n):
            piv = None
            for i in range(k, n):
                if H[i, k - 1] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != k:
                H[[k, piv]] = H[[piv, k]]
                H[:, [k, piv]] = H[:, [piv, k]]
            ipiv = pow(int(H[k, k - 1]), p - 2, p)
            for i in range(k + 1, n):
                f = int(H[i, k - 1]) * ipiv % p
                if f:
                    H[i] = (H[i] - f * H[k]) % p
                    H[:, k] = (H[:, k] + f * H[:, i]) % p
        polys: list[list[int]] = [[1]]
        for m in range(1, n + 1):
            prev = polys[m - 1]
            pm = poly_sub([0] + prev, poly_scale(prev, int(H[m - 1, m - 1]), p), p)
            prod = 1
            for i in range(m - 1, 0, -1):
                prod = prod * int(H[i, i - 1]) % p
                c = int(H[i - 1, m - 1]) * prod % p
                if c:
                    pm = poly_sub(pm, poly_scale(polys[i - 1], c, p), p)
            polys.append(pm)
        out = polys[n]
        return out + [0] * (n + 1 - len(out))

    def factor_poly(self, f: list[int]) -> list[tuple[tuple[int, ...], int]]:
        if self.a != 1:
            raise NotImplementedError("factoring is implemented for prime fields")
        return poly_factor(list(f), self.p)

    def solve_intertwiner(self, gens_a: list[np.ndarray], gens_b: list[np.ndarray]) -> np.ndarray | None:
        """Invertible M with inv(M) @ A_i @ M = B_i for all i, or None.

        Solves the linear system A_i M = M B_i and hunts for an invertible
        point of the solution space (any nonzero one works when both tuples
        generate absolutely irreducible sets, which is how this is used).
        """
        n = gens_a[0].shape[0]
        rows = []
        for A, B in zip(gens_a, gens_b):
            A = np.asarray(A, dtype=np.int64)
            B = np.asarray(B, dtype=np.int64)
            S = np.zeros((n * n, n * n), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    eq = i * n + j
                    for u in range(n):
                        S[eq, u * n + j] = self.el_add(int(S[eq, u * n + j]), int(A[i, u]))
                    for v in range(n):
                        S[eq, i * n + v] = self.el_sub(int(S[eq, i * n + v]), int(B[v, j]))
            rows.append(S)
        system = np.concatenate(rows, axis=0)
        basis = self.mat_kernel(system)
        if basis.shape[0] == 0:
            return None
        mats = [b.reshape(n, n) for b in basis]
        for M in mats:
            if self.is_invertible(M):
                return M
        rng = random.Random(0xA11CE)
        for _ in range(200):
            acc = np.zeros((n, n), dtype=np.int64)
            for M in mats:
                c = rng.randrange(self.q)
                if c:
                    acc = self.mat_add(acc, self._vscale(M, c))
            if self.is_invertible(acc):
                return acc
        return None

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldSpec(p={self.p}, a={self.a})"


@lru_cache(maxsize=None)
def field(p: int, a: int = 1) -> FieldSpec:
    """Cached GF(p^a) factory."""
    return FieldSpec(p, a)
