"""Dense two-phase simplex method for small linear programs.

Solves max c.x subject to A x <= b, x >= 0 on a full tableau. Bland's rule
(smallest eligible index enters; ratio ties leave by smallest basic index)
makes the pivot sequence deterministic and cycle-free. Intended for the
tiny, well-conditioned programs that arise here (tens of rows).
"""

import numpy as np

_RC_TOL = 1e-9  # reduced-cost optimality tolerance
_PIVOT_TOL = 1e-11  # smallest admissible pivot magnitude


class SimplexError(RuntimeError):
    """Infeasible, unbounded, or non-terminating linear program."""


def simplex_maximize(cost, a_ub, b_ub, max_iter: int = 20000):
    """Maximize ``cost @ x`` subject to ``a_ub @ x <= b_ub`` and ``x >= 0``.

    Returns ``(x, value)``. Rows with a negative right-hand side are negated
    and given artificial variables, so phase 1 only runs when the slack
    basis is infeasible.
    """
    a = np.asarray(a_ub, dtype=float)
    b = np.asarray(b_ub, dtype=float)
    c = np.asarray(cost, dtype=float)
    if a.ndim != 2:
        raise ValueError("constraint matrix must be two-dimensional")
    m, n = a.shape
    if b.shape != (m,) or c.shape != (n,):
        raise ValueError("inconsistent problem dimensions")

    neg = b < 0
    a = np.where(neg[:, None], -a, a)
    b = np.where(neg, -b, b)
    art_rows = np.flatnonzero(neg)
    n_art = len(art_rows)
    ncols = n + m + n_art

    tab = np.zeros((m, ncols + 1))
    tab[:, :n] = a
    tab[np.arange(m), n + np.arange(m)] = np.where(neg, -1.0, 1.0)
    basis = n + np.arange(m)
    for j, i in enumerate(art_rows):
        tab[i, n + m + j] = 1.0
        basis[i] = n + m + j
    tab[:, -1] = b

    def pivot(row: int, col: int) -> None:
        tab[row] /= tab[row, col]
        for r in range(m):
            if r != row and tab[r, col] != 0.0:
                tab[r] -= tab[r, col] * tab[row]
        basis[row] = col

    def optimize(costvec: np.ndarray, allowed: np.ndarray) -> None:
        for _ in range(max_iter):
            reduced = costvec[basis] @ tab[:, :ncols] - costvec
            enter = -1
            for j in range(ncols):
                if allowed[j] and reduced[j] < -_RC_TOL:
                    enter = j
                    break
            if enter < 0:
                return
            col = tab[:, enter]
            leave = -1
            best = np.inf
            for i in range(m):
                if col[i] > _PIVOT_TOL:
                    ratio = tab[i, -1] / col[i]
                    if ratio < best - 1e-12 or (
                        abs(ratio - best) <= 1e-12 and (leave < 0 or basis[i] < basis[leave])
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                raise SimplexError("linear program is unbounded")
            pivot(leave, enter)
        raise SimplexError(f"simplex did not terminate within {max_iter} pivots")

    allowed = np.ones(ncols, dtype=bool)
    if n_art:
        phase1 = np.zeros(ncols)
        phase1[n + m :] = -1.0
        optimize(phase1, allowed)
        if float(phase1[basis] @ tab[:, -1]) < -1e-8:
            raise SimplexError("linear program is infeasible")
        # drive any zero-valued artificial out of the basis when possible
        for i in range(m):
            if basis[i] >= n + m:
                for j in range(n + m):
                    if abs(tab[i, j]) > _PIVOT_TOL:
                        pivot(i, j)
                        break
        allowed[n + m :] = False

    full_cost = np.zeros(ncols)
    full_cost[:n] = c
    optimize(full_cost, allowed)

    x = np.zeros(ncols)
    x[basis] = tab[:, -1]
    x = x[:n]
    return x, float(c @ x)
