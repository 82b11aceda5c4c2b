"""Dense linear algebra over a :class:`Field` (row reduction, rank, kernel)."""


def row_reduce(rows, field):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    p = field.p
    A = [[field(v) for v in row] for row in rows]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [v * inv % p if p else v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                if p:
                    A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
                else:
                    A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, field):
    return len(row_reduce(rows, field)[1])


def nullspace(rows, ncols, field):
    """Basis of ``{v : rows * v = 0}``."""
    R, pivots = row_reduce(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    p = field.p
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, pc in zip(R, pivots):
            v[pc] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    return basis


def matmul(A, B, field):
    p = field.p
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(n):
            s = sum(a * B[k][j] for k, a in enumerate(row))
            new.append(s % p if p else s)
        out.append(new)
    return out
