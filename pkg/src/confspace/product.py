"""Ordered product triangulation of a power X^n, as predicates.

X^n is never materialized: its vertices are n-tuples of vertex indices of
X, a set of tuples spans a face when it is a chain in the componentwise
order and each coordinate's value set is a face of X, and the fat diagonal
consists of faces whose assembled matrix repeats a row.  The global model
consumes exactly these predicates.
"""

from .complexes import Complex


def tuple_leq(a, b) -> bool:
    """Componentwise comparison in the vertex order."""
    if len(a) != len(b):
        raise ValueError(f"tuple length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def is_chain(tuples) -> bool:
    """True iff the tuples are pairwise comparable (sorting suffices)."""
    ordered = sorted(tuples)
    return all(tuple_leq(a, b) for a, b in zip(ordered, ordered[1:]))


def is_power_face(cx: Complex, tuples) -> bool:
    """Face predicate of X^n for a set of equal-length index tuples."""
    tuples = list(tuples)
    if not tuples:
        return False
    n = len(tuples[0])
    if any(len(t) != n for t in tuples):
        raise ValueError("tuples of unequal length")
    if not is_chain(tuples):
        return False
    return all(cx.has_face_indices({t[i] for t in tuples})
               for i in range(n))


def in_fat_diagonal(tuples) -> bool:
    """True iff the assembled matrix (rows = coordinates) repeats a row."""
    tuples = sorted(tuples)
    n = len(tuples[0])
    rows = {tuple(t[i] for t in tuples) for i in range(n)}
    return len(rows) < n


def power_complex(cx: Complex, n: int, in_diagonal=False) -> Complex:
    """Materialized X^n (or its fat diagonal) for small X; oracle use only.

    Vertex labels are index tuples; enumeration is by brute force over all
    chains, so keep ``cx.n_vertices ** n`` small.
    """
    from itertools import product as iproduct

    verts = [t for t in iproduct(range(cx.n_vertices), repeat=n)
             if is_power_face(cx, [t])]
    faces = []
    def grow(chain):
        if not in_diagonal or in_fat_diagonal(chain):
            faces.append(tuple(chain))
        last = chain[-1]
        for t in verts:
            if t > last and tuple_leq(last, t):
                chain.append(t)
                if is_power_face(cx, chain):
                    grow(chain)
                chain.pop()

    for t in verts:
        grow([t])
    if not faces:
        return Complex((), ())
    used = sorted({t for f in faces for t in f})
    facesets = {frozenset(f) for f in faces}
    maximal = [f for f in facesets if not any(f < g for g in facesets)]
    return Complex.validate(used, maximal)
