"""The poset-indexed sequence of homology vector spaces and its
homogenization into a multigraded complex of free modules.

For a poset P with bottom element, the sequence has C_0 the ground field,
C_{1,a} the (-1)-homology of the empty complex for each atom a, and
C_{i,alpha} the (i-2)-homology of the interval complex at alpha (the order
complex of the open interval in the delta variant, the union of atom
simplices below the covers in the gamma variant).  The component maps are
Mayer-Vietoris connecting maps followed by inclusion: the class of z splits
as c' + c'' with c' supported on the distinguished cover's piece, and the
image is the class of boundary(c') in the cover's own interval complex.

Given a monotone eta into N^n, the homogenization is the complex of free
modules with one generator of multidegree eta(alpha) per basis class, and
differential entries weighted by x^(eta(alpha) - eta(lambda)) on each cover
pair lambda < alpha.  Exponent vectors are recovered from the multidegrees,
so only the scalar parts are stored.
"""

import warnings
from dataclasses import dataclass

from .homology import (ChainVector, SimplicialComplex, mv_connect,
                       reduced_homology)
from .linalg import FieldSpec, Matrix, rank as matrix_rank
from .poset import (FinitePoset, PosetError, PosetMap, atom_simplex,
                    atoms_form_crosscut, crosscut_interval_complex,
                    half_interval_complex, open_interval_complex,
                    union_complex)


@dataclass
class PosetSequence:
    poset: FinitePoset
    variant: str
    field: FieldSpec
    dims: dict          # (i, element) -> positive dimension; (0, bottom) -> 1
    maps: dict          # (i, alpha, lam) -> Matrix into the lam component
    homologies: dict    # element -> HomologyData of its interval complex
    complexes: dict     # element -> the interval complex itself

    @property
    def max_degree(self):
        return max(i for i, _ in self.dims)

    def dim(self, i, alpha):
        return self.dims.get((i, alpha), 0)

    def total_dims(self):
        out = {}
        for (i, _), d in self.dims.items():
            out[i] = out.get(i, 0) + d
        return [out.get(i, 0) for i in range(self.max_degree + 1)]


def build_sequence(p, fieldspec, variant="delta"):
    """Compute every component and every cover map of the sequence."""
    if variant not in ("delta", "gamma"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "gamma" and not atoms_form_crosscut(p):
        warnings.warn("atoms do not form a crosscut; the gamma variant "
                      "may not be well defined on this poset")
    complexes = {}
    homologies = {}
    dims = {(0, p.bottom): 1}
    for alpha in p.elements():
        if alpha == p.bottom:
            continue
        K = (open_interval_complex(p, alpha) if variant == "delta"
             else crosscut_interval_complex(p, alpha))
        H = reduced_homology(K, fieldspec)
        complexes[alpha] = K
        homologies[alpha] = H
        for d in K.dims():
            h = H.dim(d)
            if h:
                dims[(d + 2, alpha)] = h
    maps = {}
    for a in p.atoms():
        maps[(1, a, p.bottom)] = Matrix.identity(1, fieldspec)
    # pieces: the subcomplex attached to each cover within alpha's complex
    if variant == "delta":
        piece = {lam: half_interval_complex(p, lam) for lam in p.elements()
                 if lam != p.bottom}
    else:
        atom_list = p.atoms()
        piece = {lam: atom_simplex(p, lam, atom_list) for lam in p.elements()
                 if lam != p.bottom}
    for alpha in p.elements():
        if alpha == p.bottom:
            continue
        lower = [lam for lam in p.lower_covers(alpha) if lam != p.bottom]
        K = complexes[alpha]
        H = homologies[alpha]
        for lam in lower:
            others = [piece[b] for b in lower if b != lam]
            rest = (union_complex(K.vertex_order, others) if others
                    else SimplicialComplex(K.vertex_order, [()]))
            for d in K.dims():
                i = d + 2
                if dims.get((i, alpha), 0) == 0 or dims.get((i - 1, lam), 0) == 0:
                    continue
                cols = []
                for z in H.basis(d):
                    w = mv_connect(K, piece[lam], rest, z, fieldspec)
                    cols.append(_class_in(homologies[lam], w, variant))
                h_to = dims[(i - 1, lam)]
                rows = [[cols[c][r] for c in range(len(cols))] for r in range(h_to)]
                maps[(i, alpha, lam)] = Matrix.from_rows(
                    rows, fieldspec, cols=len(cols))
    return PosetSequence(p, variant, fieldspec, dims, maps, homologies, complexes)


def _class_in(H, w, variant):
    try:
        return H.class_of(w)
    except ValueError as e:
        if variant == "gamma":
            raise PosetError(
                "gamma variant undefined here: a connecting chain left the "
                "cover's atom-simplex union (the poset is not a lattice)") from e
        raise


# --- comparison map between the two variants ------------------------------


def chain_comparison_map(p, sigma, atom_order=None):
    """Image of a chain of (bottom, alpha] under the simplicial comparison
    map into the atom-simplex family.

    Each chain element a is sent to its smallest atom s_a (in atom order);
    the image face is {s_a : a in sigma} with orientation sign
    (-1)^(k(k+1)/2) for a length-k chain, and the map is zero whenever two
    chain elements share their smallest atom.  Returns (sign, face) or None
    for zero; the empty chain maps to the empty face.
    """
    if atom_order is None:
        atom_order = p.atoms()
    pos = {a: i for i, a in enumerate(atom_order)}
    if len(sigma) == 0:
        return (1, ())
    mins = []
    for a in sigma:
        if a == p.bottom:
            raise PosetError("chains through the bottom are not in the family")
        below = [x for x in atom_order if p.leq(x, a)]
        if not below:
            raise PosetError(f"element {p.labels[a]!r} has no atom below it")
        mins.append(min(below, key=pos.__getitem__))
    for x, y in zip(mins, mins[1:]):
        # s is nonincreasing along a chain; any tie kills the face
        if pos[x] <= pos[y]:
            if pos[x] == pos[y]:
                return None
            raise PosetError("input is not an ascending chain")
    k = len(sigma) - 1
    sign = -1 if (k * (k + 1) // 2) % 2 else 1
    return (sign, tuple(reversed(mins)))


def comparison_homology_matrix(p, seq_delta, seq_gamma, alpha, i):
    """Matrix of the comparison map on homology, from the delta component
    C_{i,alpha} to the gamma component, in the two chosen bases."""
    fieldspec = seq_delta.field
    d = i - 2
    Hd = seq_delta.homologies[alpha]
    Hg = seq_gamma.homologies[alpha]
    cols = []
    for z in Hd.basis(d):
        out = {}
        for face, coeff in z.coefficients.items():
            res = chain_comparison_map(p, face)
            if res is None:
                continue
            sign, image = res
            s = coeff if sign == 1 else fieldspec.neg(coeff)
            out[image] = fieldspec.add(out.get(image, fieldspec.zero), s)
        w = ChainVector(d, out)
        cols.append(Hg.class_of(w))
    h_to = Hg.dim(d)
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(h_to)]
    return Matrix.from_rows(rows, fieldspec, cols=len(cols))


def comparison_squares_agree(p, seq_delta, seq_gamma):
    """Check that variant dimensions coincide and that the comparison map
    commutes with the cover maps of both variants, entry by entry."""
    if seq_delta.dims != seq_gamma.dims:
        return False
    fmat = {}
    for (i, alpha) in seq_delta.dims:
        if alpha == p.bottom:
            continue
        fmat[(i, alpha)] = comparison_homology_matrix(p, seq_delta, seq_gamma, alpha, i)
        # the comparison map must be an isomorphism on homology
        if matrix_rank(fmat[(i, alpha)]) != seq_delta.dims[(i, alpha)]:
            return False
    for (i, alpha, lam), mdelta in seq_delta.maps.items():
        if i < 2:
            continue
        mgamma = seq_gamma.maps.get((i, alpha, lam))
        if mgamma is None:
            return False
        left = mgamma.matmul(fmat[(i, alpha)])
        right = fmat[(i - 1, lam)].matmul(mdelta)
        if left != right:
            return False
    return set(k for k in seq_delta.maps if k[0] >= 2) == \
        set(k for k in seq_gamma.maps if k[0] >= 2)


# --- homogenization --------------------------------------------------------


@dataclass
class MultigradedComplex:
    """Complex of multigraded free modules; one basis row per generator.

    diff[i] holds the scalar part of the degree-i differential as a sparse
    (row, col) -> scalar dict; the monomial weight on an entry is recovered
    as x^(multidegree of column basis element - multidegree of row element),
    so equal multidegrees mean a unit entry.
    """

    field: FieldSpec
    labels: list
    multidegrees: list
    diff: list

    def __post_init__(self):
        if len(self.labels) != len(self.multidegrees) or \
                len(self.diff) != len(self.labels):
            raise ValueError("per-degree lists must align")
        for i in range(1, len(self.diff)):
            for (r, c), s in self.diff[i].items():
                if not s:
                    raise ValueError("stored zero entry")
                lo = self.multidegrees[i - 1][r]
                hi = self.multidegrees[i][c]
                if any(x > y for x, y in zip(lo, hi)):
                    raise ValueError(
                        f"entry ({i},{r},{c}) has a negative exponent vector")

    @property
    def length(self):
        return len(self.labels) - 1

    def ranks(self):
        return [len(l) for l in self.labels]

    def entry_exponent(self, i, r, c):
        lo = self.multidegrees[i - 1][r]
        hi = self.multidegrees[i][c]
        return tuple(y - x for x, y in zip(lo, hi))

    def rank_table(self):
        t = BettiTable({})
        for i, mdegs in enumerate(self.multidegrees):
            for m in mdegs:
                t.multigraded[(i, m)] = t.multigraded.get((i, m), 0) + 1
        return t


@dataclass
class BettiTable:
    """Counts keyed by (homological degree, multidegree)."""

    multigraded: dict

    def totals(self):
        out = {}
        for (i, m), c in self.multigraded.items():
            key = (i, sum(m))
            out[key] = out.get(key, 0) + c
        return out

    def total_by_degree(self):
        out = {}
        for (i, _), c in self.multigraded.items():
            out[i] = out.get(i, 0) + c
        top = max(out) if out else 0
        return [out.get(i, 0) for i in range(top + 1)]

    def max_degree(self):
        return max((i for i, _ in self.multigraded), default=0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        a = {k: v for k, v in self.multigraded.items() if v}
        b = {k: v for k, v in other.multigraded.items() if v}
        return a == b

    def pretty(self):
        """Triangular layout: rows are total degree minus homological degree."""
        totals = self.totals()
        if not totals:
            return "(empty)"
        imax = max(i for i, _ in totals)
        jvals = [t - i for (i, t) in totals]
        lines = []
        header = ["    "] + [f"{i:>6}" for i in range(imax + 1)]
        lines.append("".join(header))
        for j in range(min(jvals), max(jvals) + 1):
            row = [f"{j:>4}"]
            for i in range(imax + 1):
                c = totals.get((i, i + j), 0)
                row.append(f"{c:>6}" if c else "     .")
            lines.append("".join(row))
        return "\n".join(lines)


def sign_diagonal(a, b):
    """Per-degree sign vectors epsilon with a's differential equal to b's
    after rescaling b's basis by epsilon: a_i[(r,c)] =
    epsilon_{i-1}[r] * b_i[(r,c)] * epsilon_i[c].

    Requires equal ranks, multidegrees, and entry supports; degree-0 signs
    are fixed at +1 and the rest propagate column by column.  Raises
    ValueError when no such diagonal exists.
    """
    if a.ranks() != b.ranks() or a.multidegrees != b.multidegrees:
        raise ValueError("complexes differ in ranks or multidegrees")
    f = a.field
    one, neg = f.one, f.neg(f.one)
    eps = [[1] * a.ranks()[0]]
    for i in range(1, a.length + 1):
        if set(a.diff[i]) != set(b.diff[i]):
            raise ValueError(f"degree-{i} differentials have different supports")
        level = [None] * a.ranks()[i]
        for (r, c) in sorted(a.diff[i]):
            er = one if eps[i - 1][r] == 1 else neg
            want = f.mul(f.mul(er, b.diff[i][(r, c)]), f.inv(a.diff[i][(r, c)]))
            if want == one:
                s = 1
            elif want == neg:
                s = -1
            else:
                raise ValueError(f"entry ({i},{r},{c}) ratio is not a sign")
            if level[c] is None:
                level[c] = s
            elif level[c] != s:
                raise ValueError(f"column {c} of degree {i} needs two signs")
        eps.append([s if s is not None else 1 for s in level])
    return eps


def homogenize(seq, eta):
    """Weight the sequence into a complex of multigraded free modules."""
    p = seq.poset
    if eta.domain is not p and eta.domain.labels != p.labels:
        raise PosetError("eta is defined on a different poset")
    for a in p.atoms():
        if not any(eta.image(a)):
            raise PosetError(
                f"eta sends atom {p.labels[a]!r} to the origin; the "
                "homogenization would not present a proper ideal")
    n = seq.max_degree
    labels = [[] for _ in range(n + 1)]
    multidegrees = [[] for _ in range(n + 1)]
    index = {}
    labels[0].append(p.labels[p.bottom])
    multidegrees[0].append(tuple(eta.image(p.bottom)))
    index[(0, p.bottom, 0)] = 0
    for i in range(1, n + 1):
        for alpha in p.elements():
            h = seq.dim(i, alpha)
            for k in range(h):
                index[(i, alpha, k)] = len(labels[i])
                labels[i].append(p.labels[alpha])
                multidegrees[i].append(tuple(eta.image(alpha)))
    diff = [None] + [dict() for _ in range(n)]
    for (i, alpha, lam), m in seq.maps.items():
        for c in range(m.cols):
            col = index[(i, alpha, c)]
            for r in range(m.rows):
                s = m.entry(r, c)
                if s:
                    diff[i][(index[(i - 1, lam, r)], col)] = s
    return MultigradedComplex(seq.field, labels, multidegrees, diff)


def support_eta(p):
    """The canonical eta on an abstract poset: each element goes to the
    indicator vector of the atoms below it."""
    ats = p.atoms()
    images = tuple(tuple(1 if p.leq(a, x) else 0 for a in ats)
                   for x in p.elements())
    return PosetMap(p, images)


def sequence_dims_report(seq, eta=None):
    """Dimension table of the sequence: a BettiTable keyed by eta-images
    when eta is given, else a plain dict keyed by (degree, element label)."""
    if eta is None:
        return {(i, seq.poset.labels[alpha]): d
                for (i, alpha), d in sorted(seq.dims.items())}
    t = BettiTable({})
    for (i, alpha), d in seq.dims.items():
        key = (i, tuple(eta.image(alpha)))
        t.multigraded[key] = t.multigraded.get(key, 0) + d
    return t
