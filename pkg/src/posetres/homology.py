"""Reduced simplicial chains, homology with explicit cycles, and the
Mayer-Vietoris connecting map.

Chains are augmented: the empty face sits in dimension -1 and the boundary
of a vertex is +1 times the empty face.  The empty complex (only the empty
face) therefore has one-dimensional homology in dimension -1, which is the
convention everything downstream relies on.
"""

from dataclasses import dataclass, field as dc_field

from .linalg import (LinearSolver, Matrix, NotInSpan, nullspace_basis,
                     pivot_columns)


class NotACycle(Exception):
    """The chain handed to class_of has a nonzero boundary."""


class SimplicialComplex:
    """Faces per dimension, each a tuple of vertices strictly increasing in
    vertex_order; always contains the empty face at dimension -1."""

    def __init__(self, vertex_order, faces, close=True):
        self.vertex_order = tuple(vertex_order)
        self._vpos = {v: i for i, v in enumerate(self.vertex_order)}
        if len(self._vpos) != len(self.vertex_order):
            raise ValueError("duplicate vertices in vertex_order")
        seen = set()
        for f in faces:
            t = self._normalize(f)
            seen.add(t)
            if close:
                # close under subsets
                stack = [t]
                while stack:
                    cur = stack.pop()
                    for j in range(len(cur)):
                        sub = cur[:j] + cur[j + 1:]
                        if sub not in seen:
                            seen.add(sub)
                            stack.append(sub)
        seen.add(())
        if not close:
            for f in list(seen):
                for j in range(len(f)):
                    if f[:j] + f[j + 1:] not in seen:
                        raise ValueError(f"faces not closed under subsets at {f}")
        by_dim = {}
        for f in seen:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self.faces = {d: tuple(sorted(fs, key=self._face_key))
                      for d, fs in sorted(by_dim.items())}
        self._face_sets = {d: frozenset(fs) for d, fs in self.faces.items()}
        self._index_cache = {}

    def _normalize(self, f):
        try:
            t = tuple(sorted(f, key=self._vpos.__getitem__))
        except KeyError as e:
            raise ValueError(f"face vertex {e.args[0]!r} not in vertex_order")
        if len(set(t)) != len(t):
            raise ValueError(f"repeated vertex in face {f!r}")
        return t

    def _face_key(self, f):
        return tuple(self._vpos[v] for v in f)

    @property
    def dim(self):
        return max(self.faces)

    def dims(self):
        return range(-1, self.dim + 1)

    def n_faces(self, d):
        return len(self.faces.get(d, ()))

    def has_face(self, f):
        return f in self._face_sets.get(len(f) - 1, frozenset())

    def face_index(self, d):
        if d not in self._index_cache:
            self._index_cache[d] = {f: i for i, f in enumerate(self.faces.get(d, ()))}
        return self._index_cache[d]

    def euler_reduced(self):
        return sum((-1) ** d * len(fs) for d, fs in self.faces.items())

    def is_empty(self):
        return self.dim == -1

    def __contains__(self, f):
        return self.has_face(tuple(f))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertex_order == other.vertex_order
                and self.faces == other.faces)

    def __repr__(self):
        counts = [self.n_faces(d) for d in self.dims()]
        return f"SimplicialComplex(f-vector {counts} from dim -1)"


def empty_complex():
    return SimplicialComplex((), [()])


@dataclass
class ChainVector:
    """Sparse chain: face tuple -> field scalar, all faces of one dimension."""

    dimension: int
    coefficients: dict

    def __post_init__(self):
        self.coefficients = {f: c for f, c in self.coefficients.items() if c}
        for f in self.coefficients:
            if len(f) - 1 != self.dimension:
                raise ValueError(f"face {f} is not {self.dimension}-dimensional")

    def is_zero(self):
        return not self.coefficients

    def support(self):
        return set(self.coefficients)

    def scale(self, s, fieldspec):
        return ChainVector(self.dimension,
                           {f: fieldspec.mul(s, c) for f, c in self.coefficients.items()})

    def add(self, other, fieldspec):
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        out = dict(self.coefficients)
        for f, c in other.coefficients.items():
            out[f] = fieldspec.add(out.get(f, fieldspec.zero), c)
        return ChainVector(self.dimension, out)

    def to_vector(self, complexK, fieldspec):
        idx = complexK.face_index(self.dimension)
        v = [fieldspec.zero] * len(idx)
        for f, c in self.coefficients.items():
            if f not in idx:
                raise ValueError(f"face {f} not in complex")
            v[idx[f]] = c
        return v


def chain_boundary(z, fieldspec):
    """Boundary with alternating signs; the boundary of a vertex is +(empty)."""
    out = {}
    zero = fieldspec.zero
    for f, c in z.coefficients.items():
        for j in range(len(f)):
            sub = f[:j] + f[j + 1:]
            s = c if j % 2 == 0 else fieldspec.neg(c)
            out[sub] = fieldspec.add(out.get(sub, zero), s)
    return ChainVector(z.dimension - 1, out)


def boundary_matrix(K, d, fieldspec):
    """Matrix of the boundary map C_d -> C_{d-1} (rows indexed by (d-1)-faces)."""
    cols = K.faces.get(d, ())
    rows_idx = K.face_index(d - 1)
    nrows = len(K.faces.get(d - 1, ()))
    one, zero = fieldspec.one, fieldspec.zero
    ent = [[zero] * len(cols) for _ in range(nrows)]
    for j, f in enumerate(cols):
        for pos in range(len(f)):
            sub = f[:pos] + f[pos + 1:]
            i = rows_idx[sub]
            ent[i][j] = one if pos % 2 == 0 else fieldspec.neg(one)
    return Matrix.from_rows(ent, fieldspec, cols=len(cols))


class HomologyData:
    """Per-dimension cycle bases together with the boundary columns needed to
    express an arbitrary cycle's class in that basis."""

    def __init__(self, complexK, fieldspec):
        self.complex = complexK
        self.field = fieldspec
        self.basis_cycles = {}
        self._boundary_cols = {}
        self._solvers = {}
        top = complexK.dim
        for d in complexK.dims():
            bd = boundary_matrix(complexK, d, fieldspec)
            cycles = nullspace_basis(bd)
            if d + 1 <= top:
                nxt = boundary_matrix(complexK, d + 1, fieldspec)
                bcols = [nxt.column(j) for j in range(nxt.cols)]
            else:
                bcols = []
            self._boundary_cols[d] = bcols
            n = complexK.n_faces(d)
            if cycles:
                combined = Matrix.from_rows(
                    [[col[i] for col in bcols] + [cyc[i] for cyc in cycles]
                     for i in range(n)],
                    fieldspec, cols=len(bcols) + len(cycles))
                chosen = pivot_columns(combined, block=(len(bcols), combined.cols))
                picked = [cycles[c - len(bcols)] for c in chosen]
            else:
                picked = []
            faces = complexK.faces.get(d, ())
            self.basis_cycles[d] = [
                ChainVector(d, {faces[i]: v[i] for i in range(n) if v[i]})
                for v in picked]

    def dim(self, d):
        return len(self.basis_cycles.get(d, ()))

    def dims_table(self):
        return {d: self.dim(d) for d in self.complex.dims() if self.dim(d)}

    def basis(self, d):
        return self.basis_cycles.get(d, [])

    def _solver(self, d):
        if d not in self._solvers:
            n = self.complex.n_faces(d)
            cols = ([z.to_vector(self.complex, self.field) for z in self.basis_cycles[d]]
                    + self._boundary_cols[d])
            self._solvers[d] = LinearSolver(cols, n, self.field)
        return self._solvers[d]

    def class_of(self, z):
        """Coefficients of [z] in the chosen basis, modulo boundaries."""
        if not chain_boundary(z, self.field).is_zero():
            raise NotACycle(f"chain in dimension {z.dimension} has nonzero boundary")
        d = z.dimension
        if d not in self.complex.faces:
            if z.is_zero():
                return []
            raise ValueError(f"complex has no faces in dimension {d}")
        v = z.to_vector(self.complex, self.field)
        try:
            coeffs = self._solver(d).solve(v)
        except NotInSpan as e:
            # a genuine cycle always lies in span(basis + boundaries)
            raise RuntimeError(f"homology basis incomplete in dimension {d}") from e
        return coeffs[:self.dim(d)]


def reduced_homology(K, fieldspec):
    return HomologyData(K, fieldspec)


def class_of(K, H, z):
    if H.complex is not K:
        raise ValueError("homology data belongs to a different complex")
    return H.class_of(z)


def mv_connect(big, part, rest, z, fieldspec=None, to_part=None):
    """Connecting map of the triple (part, rest, big = part u rest): split
    z = c' + c'' with c' supported in part, and return the boundary of c'.

    The canonical split sends a term to c' iff its face is a face of part.
    to_part optionally overrides the assignment for faces lying in both part
    and rest (any valid split gives the same homology class).  The result is
    checked to be supported in part n rest.

    fieldspec defaults to the rationals; GF(p) chains must pass theirs so
    the boundary coefficients reduce mod p.
    """
    from .linalg import QQ
    if fieldspec is None:
        fieldspec = QQ
    cprime = {}
    for face, coeff in z.coefficients.items():
        if not big.has_face(face):
            raise ValueError(f"face {face} not in the ambient complex")
        in_part = part.has_face(face)
        in_rest = rest.has_face(face)
        if not (in_part or in_rest):
            raise ValueError(f"face {face} lies in neither part: not a covering")
        assign_part = in_part
        if in_part and in_rest and to_part is not None:
            assign_part = bool(to_part.get(face, True))
        if assign_part and not in_part:
            raise ValueError(f"cannot assign {face} to part: not a face of it")
        if assign_part:
            cprime[face] = coeff
    if not cprime:
        return ChainVector(z.dimension - 1, {})
    w = chain_boundary(ChainVector(z.dimension, cprime), fieldspec)
    for face in w.support():
        if not (part.has_face(face) and rest.has_face(face)):
            raise RuntimeError(
                f"connecting chain leaked outside the intersection at face {face}")
    return w
