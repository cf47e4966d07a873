"""Exact linear solving over the rationals.

Small, possibly rectangular systems: Gaussian elimination with exact pivots.
No scaling tricks; degrees here are tiny and Fraction absorbs the growth.
"""

from fractions import Fraction

from ..errors import InconsistentSystem, SingularSystem


def solve_exact(rows, rhs):
    """Solve M x = rhs exactly, requiring a unique solution.

    rows: list of coefficient lists (each of equal length n); rhs: list of the
    same length as rows.  Overdetermined systems are fine as long as they are
    consistent.  Raises SingularSystem when rank < n (no unique solution) and
    InconsistentSystem when no solution exists at all.
    """
    if not rows:
        raise SingularSystem("empty system")
    n = len(rows[0])
    M = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][col]
        M[r] = [v / inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        piv_cols.append(col)
        r += 1
        if r == len(M):
            break
    for i in range(r, len(M)):
        if M[i][n] != 0:
            raise InconsistentSystem("overdetermined system has no solution")
    if len(piv_cols) < n:
        raise SingularSystem(f"rank {len(piv_cols)} < {n} unknowns")
    sol = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        sol[col] = M[i][n]
    return sol


def solve_2x2(a11, a12, a21, a22, b1, b2):
    """Cramer solve of a 2x2 system; SingularSystem carries the determinant."""
    a11, a12, a21, a22 = (Fraction(v) for v in (a11, a12, a21, a22))
    b1, b2 = Fraction(b1), Fraction(b2)
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise SingularSystem("2x2 system is singular", determinant=det)
    x1 = (b1 * a22 - a12 * b2) / det
    x2 = (a11 * b2 - b1 * a21) / det
    return x1, x2
