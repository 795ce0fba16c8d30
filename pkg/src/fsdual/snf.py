"""Smith normal form over the integers, with the left transform.

Matrices are lists of lists of Python ints. Only the pieces needed for
quotients of finite abelian groups are provided.
"""
from fractions import Fraction


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(A):
    """Return ``(D, U)`` with ``U @ A @ V == D`` for some unimodular ``V``.

    ``D`` is the list of diagonal entries (length ``min(rows, cols)``),
    nonnegative and each dividing the next. ``U`` is the unimodular row
    transform. The column transform is not tracked.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(map(int, r)) for r in A]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]

    for t in range(min(rows, cols)):
        while True:
            # pivot: smallest nonzero |entry| in the trailing block
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = M[i][j]
                    if v and (best is None or abs(v) < abs(M[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _diag(M, rows, cols), U
            i, j = best
            if i != t:
                _swap_rows(M, i, t)
                _swap_rows(U, i, t)
            if j != t:
                _swap_cols(M, j, t)
            if M[t][t] < 0:
                M[t] = [-x for x in M[t]]
                U[t] = [-x for x in U[t]]
            p = M[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = M[i][t] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = M[t][j] // p
                if q:
                    for r in range(rows):
                        M[r][j] -= q * M[r][t]
                if M[t][j]:
                    dirty = True
            if dirty:
                continue
            # divisibility: fold an offending row into row t
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
    return _diag(M, rows, cols), U


def _diag(M, rows, cols):
    return [abs(M[i][i]) for i in range(min(rows, cols))]


def integer_inverse(U):
    """Inverse of a unimodular integer matrix, exactly."""
    n = len(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(U)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    out = []
    for row in aug:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in tail])
    return out


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]
