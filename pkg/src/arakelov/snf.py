"""Smith normal form over Z and presentations of finite abelian groups."""
from __future__ import annotations


def smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix (as positive ints)."""
    A = [list(r) for r in rows if any(r)]
    diag = []
    while A:
        _, i, j = min((abs(v), i, j) for i, r in enumerate(A) for j, v in enumerate(r) if v)
        A[0], A[i] = A[i], A[0]
        for r in A:
            r[0], r[j] = r[j], r[0]
        while True:
            p = A[0][0]
            for i in range(1, len(A)):
                q = A[i][0] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[0])]
            for j in range(1, ncols):
                q = A[0][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[0]
            rest = [(abs(A[i][0]), i, 0) for i in range(1, len(A)) if A[i][0]]
            rest += [(abs(A[0][j]), 0, j) for j in range(1, ncols) if A[0][j]]
            if rest:
                # a remainder smaller than the pivot: move it to the corner
                _, i, j = min(rest)
                A[0], A[i] = A[i], A[0]
                for r in A:
                    r[0], r[j] = r[j], r[0]
                continue
            bad = next((i for i in range(1, len(A)) if any(v % p for v in A[i][1:])), None)
            if bad is None:
                break
            A[0] = [a + b for a, b in zip(A[0], A[bad])]
        diag.append(abs(A[0][0]))
        A = [r[1:] for r in A[1:] if any(r[1:])]
        ncols -= 1
    return diag


def quotient_invariants(cyc: list[int], relations: list[list[int]]) -> list[int]:
    """Invariant factors (>1, each dividing the next) of (⊕ Z/cyc_i) / <relations>."""
    r = len(cyc)
    rows = [[c if i == j else 0 for j in range(r)] for i, c in enumerate(cyc)]
    for v in relations:
        if len(v) != r:
            raise ValueError(f"relation {v} has length {len(v)}, expected {r}")
        rows.append(list(v))
    diag = smith_diagonal(rows, r)
    if len(diag) < r:
        raise ValueError("presentation defines an infinite group")
    return [d for d in diag if d != 1]
