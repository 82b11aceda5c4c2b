"""Modules over the artinian hypersurface ``k[x]/(x^n)``.

Everything here is finite: modules are direct sums ``R/(x^i)`` and the
extension-closure computations can be confirmed by exhaustive enumeration
of extension classes over a prime field.
"""
from dataclasses import dataclass
from itertools import product

from .algebra import Field, PolynomialRing
from .algebra.linalg import matmul, rank
from .rings import QuotientRing


@dataclass(frozen=True)
class ArtinianModule:
    """``R/(x^i_1) (+) ... (+) R/(x^i_r)`` over ``k[x]/(x^n)``; part ``n`` is a free summand."""

    n: int
    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted(self.parts))
        if any(i < 1 or i > self.n for i in parts):
            raise ValueError(f"parts must lie in [1, {self.n}]")
        object.__setattr__(self, "parts", parts)

    def dimension(self):
        return sum(self.parts)

    def is_free(self):
        return all(i == self.n for i in self.parts)

    def to_presentation(self, ring):
        from .modules import ModulePresentation
        x = ring.gens()[0]
        if not self.parts:
            return ModulePresentation.zero(ring)
        mods = [ModulePresentation.cyclic(ring, [x ** i], label=f"R/(x^{i})") for i in self.parts]
        if len(mods) == 1:
            return mods[0]
        return ModulePresentation.direct_sum(mods, label=str(self))

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join("R" if i == self.n else f"R/(x^{i})" for i in self.parts)


def artinian_ring(n, field=Field(5)):
    S = PolynomialRing(["x"], field)
    return QuotientRing(S, [S.gens()[0] ** n])


# -- Auslander-Reiten sequences -------------------------------------------------------

def _mult_x(dim):
    """Matrix of multiplication by x on k[x]/(x^dim) in the basis 1, x, ..."""
    return [[1 if r == c + 1 else 0 for c in range(dim)] for r in range(dim)]


def _block_diag(a, b):
    na, nb = len(a), len(b)
    ma = len(a[0]) if a else 0
    mb = len(b[0]) if b else 0
    out = [row + [0] * mb for row in a] + [[0] * ma + row for row in b]
    return out if out else []


@dataclass
class ARSequence:
    """``0 -> R/(x^i) -f-> R/(x^(i-1)) (+) R/(x^(i+1)) -g-> R/(x^i) -> 0`` as k-linear maps."""

    n: int
    i: int
    f: list
    g: list
    outer_dim: int
    middle_dims: tuple
    injective: bool
    surjective: bool
    composite_zero: bool
    middle_exact: bool
    r_linear: bool

    @property
    def exact(self):
        return self.injective and self.surjective and self.composite_zero and self.middle_exact

    @property
    def middle_parts(self):
        return tuple(j for j in (self.i - 1, self.i + 1) if j >= 1)


def ar_sequence(n, i, field=Field(5)):
    """The almost split sequence ending in ``R/(x^i)`` with ``f(a) = (a, ax)``, ``g(a, b) = ax - b``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got n={n}, i={i}")
    p = field.p
    lo, hi = i - 1, i + 1
    # f: basis x^t of R/(x^i) -> (x^t mod x^(i-1), x^(t+1) mod x^(i+1))
    f = [[0] * i for _ in range(lo + hi)]
    for t in range(i):
        if t < lo:
            f[t][t] = 1
        if t + 1 < hi:
            f[lo + t + 1][t] = 1
    # g: (x^t, 0) -> x^(t+1) mod x^i ; (0, x^t) -> -x^t mod x^i
    g = [[0] * (lo + hi) for _ in range(i)]
    for t in range(lo):
        if t + 1 < i:
            g[t + 1][t] = 1
    for t in range(hi):
        if t < i:
            g[t][lo + t] = field(-1)
    f = [[field(v) for v in row] for row in f]
    g = [[field(v) for v in row] for row in g]
    rf = rank([list(col) for col in zip(*f)], field) if f else 0
    rg = rank(g, field) if g and g[0] else 0
    gf = matmul(g, f, field)
    middle = lo + hi
    composite_zero = all(not v for row in gf for v in row)
    # R-linearity: f X_outer = X_mid f and g X_mid = X_outer g
    Xo = _mult_x(i)
    Xm = _block_diag(_mult_x(lo), _mult_x(hi)) if middle else []
    r_linear = (matmul(f, Xo, field) == matmul(Xm, f, field)
                and matmul(g, Xm, field) == matmul(Xo, g, field))
    return ARSequence(
        n=n, i=i, f=f, g=g, outer_dim=i, middle_dims=(lo, hi),
        injective=rf == i, surjective=rg == i, composite_zero=composite_zero,
        middle_exact=(middle - rg) == rf, r_linear=r_linear,
    )


# -- decomposition over k[x]/(x^n) -----------------------------------------------------

def _val(f, n):
    for k, c in enumerate(f):
        if c:
            return k
    return n


def _series_inv(u, n, p):
    """Inverse of a unit truncated power series modulo x^n."""
    inv0 = pow(u[0], p - 2, p)
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        s = sum(u[j] * out[k - j] for j in range(1, k + 1) if j < len(u)) % p
        out[k] = (-s * inv0) % p
    return out


def _series_mul(a, b, n, p):
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def decompose(matrix, n, p):
    """Parts of ``coker(matrix)`` over ``F_p[x]/(x^n)``.

    ``matrix[r][c]`` is a coefficient list (length n) in the basis 1, x, ...
    Unit-pivot reduction: repeatedly pivot on an entry of least valuation.
    """
    A = [[list(e) + [0] * (n - len(e)) for e in row] for row in matrix]
    rows = len(A)
    cols = len(A[0]) if A else 0
    parts = []
    active_r = list(range(rows))
    active_c = list(range(cols))
    while active_r and active_c:
        best = None
        for r in active_r:
            for c in active_c:
                v = _val(A[r][c], n)
                if best is None or v < best[0]:
                    best = (v, r, c)
        v, r0, c0 = best
        if v >= n:
            break
        unit = A[r0][c0][v:] + [0] * v
        uinv = _series_inv(unit, n, p)
        # clear column c0 using row r0, then row r0 using column c0
        for r in active_r:
            if r == r0:
                continue
            e = A[r][c0]
            if _val(e, n) >= n:
                continue
            q = _series_mul(e[v:] + [0] * v, uinv, n, p)  # e / x^v / u
            for c in active_c:
                prod = _series_mul(q, A[r0][c], n, p)
                A[r][c] = [(a - b) % p for a, b in zip(A[r][c], prod)]
        for c in active_c:
            if c == c0:
                continue
            e = A[r0][c]
            if _val(e, n) >= n:
                continue
            q = _series_mul(e[v:] + [0] * v, uinv, n, p)
            for r in active_r:
                prod = _series_mul(q, A[r][c0], n, p)
                A[r][c] = [(a - b) % p for a, b in zip(A[r][c], prod)]
        if v > 0:
            parts.append(v)
        active_r.remove(r0)
        active_c.remove(c0)
    parts.extend([n] * len(active_r))
    return tuple(sorted(parts))


def extension_middles(n, a, c, p):
    """Middle terms (as part tuples) of all extensions ``0 -> R/(x^a) -> E -> R/(x^c) -> 0``.

    Classes are represented by ``alpha`` in ``R/(x^a)`` with ``x^(n-c) alpha in (x^a)``;
    ``E = coker [[x^a, -alpha], [0, x^c]]``.
    """
    out = set()
    xa = [0] * n
    if a < n:
        xa[a] = 1
    xc = [0] * n
    if c < n:
        xc[c] = 1
    for coeffs in product(range(p), repeat=a):
        alpha = list(coeffs) + [0] * (n - a)
        shifted = [0] * (n - c) + alpha[: c]  # x^(n-c) * alpha mod x^n
        if any(shifted[:a]):
            continue
        neg = [(-v) % p for v in alpha]
        out.add(decompose([[xa, neg], [[0] * n, xc]], n, p))
    return out


def extension_sweep(n, parts, p):
    """Every indecomposable summand of a middle term of an extension between members."""
    found = set()
    for a in parts:
        for c in parts:
            for mid in extension_middles(n, a, c, p):
                found.update(mid)
    return found


def artinian_closure(n, seed, kind="ext", sweep_field=None):
    """Least summand-closed set of parts containing ``seed`` closed under the rules for ``kind``.

    ``ext``: AR rule ``i -> i-1, i+1`` (middle terms of almost split sequences).
    ``res``: additionally ``n`` and syzygies ``i -> n-i``.
    With ``sweep_field`` (a prime) every extension class between members is
    enumerated and its middle term's summands join the set as well.
    """
    if kind not in ("ext", "res"):
        raise ValueError("kind must be 'ext' or 'res'")
    S = set(seed)
    if any(i < 1 or i > n for i in S):
        raise ValueError(f"parts must lie in [1, {n}]")
    if kind == "res":
        S.add(n)
    while True:
        new = set(S)
        for i in S:
            if 1 <= i <= n - 1:
                new.update(j for j in (i - 1, i + 1) if 1 <= j <= n)
                if kind == "res":
                    new.add(n - i)
        if sweep_field is not None:
            new.update(extension_sweep(n, new, sweep_field))
        if new == S:
            return frozenset(S)
        S = new
