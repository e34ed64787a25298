"""Determinants of polynomial submatrices by memoized Laplace expansion."""

import itertools


def minor(M, rows, cols, memo=None):
    """det of M[rows][cols], expanding along the first row.

    ``memo`` maps (rows, cols) to a determinant and may be shared between
    calls on the same matrix.
    """
    if memo is None:
        memo = {}
    rows, cols = tuple(rows), tuple(cols)
    return _det(M, rows, cols, memo)


def _det(M, rows, cols, memo):
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        out = M[rows[0]][cols[0]]
    else:
        r0, rest = rows[0], rows[1:]
        out = None
        for k, c in enumerate(cols):
            a = M[r0][c]
            if not a:
                continue
            sub = _det(M, rest, cols[:k] + cols[k + 1:], memo)
            if not sub:
                continue
            term = a * sub
            if k % 2:
                term = -term
            out = term if out is None else out + term
        if out is None:
            out = M[r0][cols[0]] * 0
    memo[key] = out
    return out


def all_minors(M, size, nrows=None, ncols=None):
    """Nonzero size x size minors, rows then columns in lex order."""
    nrows = len(M) if nrows is None else nrows
    ncols = len(M[0]) if ncols is None else ncols
    memo = {}
    out = []
    for rows in itertools.combinations(range(nrows), size):
        for cols in itertools.combinations(range(ncols), size):
            d = _det(M, rows, cols, memo)
            if d:
                out.append(d)
    return out
