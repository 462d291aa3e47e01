"""Abstract simplicial complexes with a totally ordered vertex set.

A complex is stored by its facets.  The order of the vertex list is the
vertex order used everywhere else in this package (product triangulations,
boundary-matrix signs, canonical sorting); it restricts to a total order on
every face automatically.

Faces are handled internally as tuples of vertex *indices*, sorted
ascending.  The canonical order on faces is dimension-major, then
lexicographic, which makes every derived object (face lists, boundary
matrices, subdivisions) reproducible bit for bit.
"""

from __future__ import annotations

from itertools import combinations, permutations


class ComplexError(ValueError):
    """Raised for structurally invalid complexes or unknown vertices."""


class Complex:
    """Immutable abstract simplicial complex with ordered vertices.

    Construct through :func:`validate` or :meth:`from_faces`; the raw
    constructor trusts its arguments.
    """

    __slots__ = ("_labels", "_index", "_facets", "_facet_sets",
                 "truncated_at", "_faces", "_vertex_facets")

    def __init__(self, labels, facets, truncated_at=None):
        self._labels = tuple(labels)
        self._index = {v: i for i, v in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise ComplexError("duplicate vertex labels")
        self._facets = tuple(sorted(facets, key=lambda f: (len(f), f)))
        self._facet_sets = tuple(frozenset(f) for f in self._facets)
        self.truncated_at = truncated_at
        self._faces = []  # per-dim sorted face lists, filled lazily
        self._vertex_facets = None

    # -- construction ----------------------------------------------------

    @staticmethod
    def validate(vertices, facets, truncated_at=None) -> "Complex":
        """Canonicalize raw input: sort facets, drop dominated ones.

        Every vertex must occur in some facet (isolated vertices are given
        as singleton facets); facets must be nonempty sets of known
        vertices.
        """
        labels = tuple(vertices)
        index = {v: i for i, v in enumerate(labels)}
        if len(index) != len(labels):
            raise ComplexError("duplicate vertex labels")
        cleaned = set()
        for f in facets:
            fs = frozenset(f)
            if not fs:
                raise ComplexError("empty facet")
            for v in fs:
                if v not in index:
                    raise ComplexError(f"facet references unknown vertex {v!r}")
            cleaned.add(frozenset(index[v] for v in fs))
        maximal = [f for f in cleaned
                   if not any(f < g for g in cleaned)]
        covered = set().union(*maximal) if maximal else set()
        missing = [labels[i] for i in range(len(labels)) if i not in covered]
        if missing:
            raise ComplexError(
                f"vertices {missing!r} belong to no facet; list isolated "
                "vertices as singleton facets")
        return Complex(labels, [tuple(sorted(f)) for f in maximal],
                       truncated_at=truncated_at)

    @staticmethod
    def from_faces(labels, faces_by_dim, truncated_at=None) -> "Complex":
        """Build from a full downward-closed face list (index tuples).

        Facets are the faces not covered by a higher face; the face lists
        are kept so they are not recomputed later.
        """
        faces_by_dim = [sorted(level) for level in faces_by_dim]
        while faces_by_dim and not faces_by_dim[-1]:
            faces_by_dim.pop()
        facets = []
        for d, level in enumerate(faces_by_dim):
            if d + 1 < len(faces_by_dim):
                covered = set()
                for f in faces_by_dim[d + 1]:
                    covered.update(combinations(f, d + 1))
                facets.extend(f for f in level if f not in covered)
            else:
                facets.extend(level)
        cx = Complex(labels, facets, truncated_at=truncated_at)
        cx._faces = [list(level) for level in faces_by_dim]
        return cx

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self):
        return self._labels

    @property
    def facets(self):
        """Facets as tuples of labels, in canonical order."""
        return tuple(tuple(self._labels[i] for i in f) for f in self._facets)

    @property
    def facet_indices(self):
        return self._facets

    @property
    def n_vertices(self) -> int:
        return len(self._labels)

    @property
    def dim(self) -> int:
        """Dimension of the largest facet (-1 for the empty complex)."""
        return max((len(f) for f in self._facets), default=0) - 1

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ComplexError(f"unknown vertex {label!r}") from None

    def labels_of(self, face):
        return tuple(self._labels[i] for i in face)

    def _facets_of_vertex(self):
        if self._vertex_facets is None:
            table = [[] for _ in self._labels]
            for fi, fs in enumerate(self._facet_sets):
                for v in fs:
                    table[v].append(fi)
            self._vertex_facets = table
        return self._vertex_facets

    def has_face_indices(self, idxs) -> bool:
        s = frozenset(idxs)
        if not s:
            return False
        table = self._facets_of_vertex()
        probe = min(s, key=lambda v: len(table[v]))
        return any(s <= self._facet_sets[fi] for fi in table[probe])

    def is_face(self, vertex_set) -> bool:
        """True iff the label set is nonempty and contained in a facet."""
        try:
            idxs = [self._index[v] for v in vertex_set]
        except KeyError:
            return False
        return self.has_face_indices(idxs)

    # -- face enumeration -------------------------------------------------

    def faces_by_dim(self, max_dim=None):
        """Sorted faces per dimension, as ascending index tuples.

        Returns a list whose d-th entry lists the d-faces.  With
        ``max_dim=None`` the whole complex is enumerated.
        """
        top = self.dim if max_dim is None else min(max_dim, self.dim)
        if top < 0:
            return []
        while len(self._faces) <= top:
            d = len(self._faces)
            level = set()
            for f in self._facets:
                if len(f) >= d + 1:
                    level.update(combinations(f, d + 1))
            self._faces.append(sorted(level))
        return [self._faces[d] for d in range(top + 1)]

    def f_vector(self):
        return tuple(len(level) for level in self.faces_by_dim())

    # -- derived complexes --------------------------------------------------

    def link(self, vertex) -> "Complex":
        """Subcomplex of faces whose join with ``vertex`` is a face."""
        v = self.index(vertex)
        link_facets = []
        for f in self._facets:
            if v in f:
                rest = tuple(i for i in f if i != v)
                if rest:
                    link_facets.append(rest)
        used = sorted(set().union(*map(set, link_facets)) if link_facets else set())
        return Complex.validate(
            [self._labels[i] for i in used],
            [tuple(self._labels[i] for i in f) for f in link_facets])

    def barycentric_subdivision(self) -> "Complex":
        """Flag complex of the face poset.

        Vertices are the faces of this complex in canonical order, labelled
        by their label tuples; facets are the maximal chains.
        """
        levels = self.faces_by_dim()
        order = {}
        labels = []
        for level in levels:
            for f in level:
                order[f] = len(labels)
                labels.append(self.labels_of(f))
        facets = []
        for f in self._facets:
            for perm in permutations(f):
                chain = tuple(sorted(order[tuple(sorted(perm[:k]))]
                                     for k in range(1, len(f) + 1)))
                facets.append(chain)
        cx = Complex(labels, facets, truncated_at=self.truncated_at)
        return cx

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        labels = [v if isinstance(v, (str, int)) else _label_str(v)
                  for v in self._labels]
        if len(set(map(str, labels))) != len(labels):
            raise ComplexError("labels do not stringify uniquely")
        return {"vertices": labels,
                "facets": [[labels[i] for i in f] for f in self._facets]}

    @staticmethod
    def from_json_dict(data) -> "Complex":
        try:
            vertices = data["vertices"]
            facets = data["facets"]
        except (TypeError, KeyError) as exc:
            raise ComplexError(f"complex JSON needs 'vertices' and 'facets': {exc}")
        return Complex.validate(vertices, facets)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Complex)
                and self._labels == other._labels
                and self._facets == other._facets)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return (f"Complex({self.n_vertices} vertices, "
                f"{len(self._facets)} facets, dim {self.dim})")


def _label_str(label):
    if isinstance(label, tuple):
        return "-".join(str(x) for x in label)
    return str(label)


# -- built-in complexes ---------------------------------------------------

def _complete_bipartite(a, b):
    left = list(range(1, a + 1))
    right = list(range(a + 1, a + b + 1))
    return Complex.validate(left + right, [(u, v) for u in left for v in right])


def _octahedron():
    # poles 1 and 6, equatorial cycle 2-3-4-5
    tris = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5),
            (6, 2, 3), (6, 3, 4), (6, 4, 5), (6, 2, 5)]
    return Complex.validate([1, 2, 3, 4, 5, 6], tris)


def _nodal_cubic():
    # Sphere with two points identified: subdivide the octahedron once so
    # the poles have disjoint closed stars, then merge them.
    sd = _octahedron().barycentric_subdivision()
    rename = {v: _label_str(v) for v in sd.vertices}
    pole_a, pole_b = rename[(1,)], rename[(6,)]
    adj_a = {w for f in sd.facets for w in f if pole_a in map(rename.get, f)}
    adj_b = {w for f in sd.facets for w in f if pole_b in map(rename.get, f)}
    if adj_a & adj_b:
        raise ComplexError("pole stars intersect; identification not simplicial")

    def merged(v):
        s = rename[v]
        return pole_a if s == pole_b else s

    vertices = []
    for v in sd.vertices:
        m = merged(v)
        if m not in vertices:
            vertices.append(m)
    facets = [tuple(merged(v) for v in f) for f in sd.facets]
    return Complex.validate(vertices, facets)


def builtin(name: str) -> Complex:
    """Return one of the shipped example complexes by name."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ComplexError(
            f"unknown builtin complex {name!r}; choose from {sorted(_BUILTINS)}")
    return factory()


_BUILTINS = {
    "interval": lambda: Complex.validate([1, 2], [(1, 2)]),
    "triangle_boundary": lambda: Complex.validate(
        [1, 2, 3], [(1, 2), (1, 3), (2, 3)]),
    "k5": lambda: Complex.validate(
        [1, 2, 3, 4, 5],
        [(u, v) for u in range(1, 6) for v in range(u + 1, 6)]),
    "k33": lambda: _complete_bipartite(3, 3),
    "k42": lambda: _complete_bipartite(4, 2),
    "octahedron": _octahedron,
    "octahedron_plus_diameter": lambda: Complex.validate(
        [1, 2, 3, 4, 5, 6], list(_octahedron().facets) + [(1, 6)]),
    "two_circles": lambda: Complex.validate(
        [1, 2, 3, 4, 5, 6],
        [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]),
    "nodal_cubic": _nodal_cubic,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))
