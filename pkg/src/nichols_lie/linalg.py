"""Fraction-free (Bareiss) elimination over a cyclotomic field."""


def rank(matrix):
    """Exact rank of a matrix given as a list of rows of Cyclotomic values.

    Every intermediate entry is a minor of the input, so the divisions by
    the previous pivot are exact and coefficients stay small.
    """
    M = [list(row) for row in matrix]
    if not M or not M[0]:
        return 0
    n, m = len(M), len(M[0])
    r = 0
    prev_inv = None
    for c in range(m):
        p = next((i for i in range(r, n) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r]
        pc = piv[c]
        for i in range(r + 1, n):
            row = M[i]
            f = row[c]
            if f:
                for j in range(c + 1, m):
                    val = pc * row[j] - f * piv[j]
                    row[j] = val * prev_inv if prev_inv is not None else val
            elif prev_inv is not None:
                scale = pc * prev_inv
                for j in range(c + 1, m):
                    if row[j]:
                        row[j] = scale * row[j]
            else:
                for j in range(c + 1, m):
                    if row[j]:
                        row[j] = pc * row[j]
            row[c] = pc.field.zero
        prev_inv = pc.inv()
        r += 1
        if r == n:
            break
    return r
