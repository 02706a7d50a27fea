"""Decision layer for multigraded complexes over a monomial ideal.

The resolution test works strand by strand: the strand of a multigraded
complex at a multidegree beta keeps exactly the basis elements whose
multidegree divides x^beta, with the monomial weights dropped.  Checking
beta over the lcm closure of the basis multidegrees together with the
generator degrees suffices: any other strand coincides with the strand at
the join of the closure elements dividing it, and membership of x^beta in
the ideal is decided by the generators alone.

The Betti-number oracle is independent of the poset construction: it
tensors the Taylor complex with the ground field, where the entry from I to
I minus its j-th element survives exactly when both subsets have the same
lcm, and takes homology one multidegree at a time.
"""

from dataclasses import dataclass

from .classical import scarf, subset_lcms
from .construction import BettiTable, build_sequence, homogenize
from .lcm_lattice import CapExceeded, LcmLattice, build as build_lattice
from .linalg import Matrix, rank as matrix_rank
from .monomials import minimize


@dataclass
class VerificationReport:
    is_complex: bool
    is_resolution: bool
    is_minimal: bool = None
    betti: BettiTable = None
    witness_complex: tuple = None      # (i, strand multidegree)
    witness_resolution: tuple = None   # (i, strand multidegree, homology dim)
    witness_minimal: tuple = None      # (i, row label, column label)

    def flags(self):
        return {"is_complex": self.is_complex,
                "is_resolution": self.is_resolution,
                "is_minimal": self.is_minimal}


@dataclass
class StrandComplex:
    """The vector-space complex of one multidegree: basis positions, their
    counts, and the scalar matrices between consecutive degrees."""

    field: object
    multidegree: tuple
    indices: list    # per degree, positions kept from the ambient complex
    maps: list       # maps[i]: dims[i-1] x dims[i] matrix; maps[0] is None

    @property
    def dims(self):
        return [len(ix) for ix in self.indices]

    def homology_dims(self):
        d = self.dims
        r = [0] * (len(d) + 1)
        for i in range(1, len(d)):
            r[i] = matrix_rank(self.maps[i])
        return [d[i] - r[i] - r[i + 1] for i in range(len(d))]


def _divides(m, beta):
    return all(a <= b for a, b in zip(m, beta))


def strand(complexC, beta):
    """Restrict to basis elements whose multidegree divides x^beta."""
    c = getattr(complexC, "complex", complexC)
    beta = tuple(beta)
    indices = [[k for k, m in enumerate(mds) if _divides(m, beta)]
               for mds in c.multidegrees]
    while len(indices) > 1 and not indices[-1]:
        indices.pop()
    maps = [None]
    for i in range(1, len(indices)):
        pos = {k: j for j, k in enumerate(indices[i - 1])}
        by_col = {}
        for (rk, ck), s in c.diff[i].items():
            by_col.setdefault(ck, []).append((rk, s))
        rows = [[c.field.zero] * len(indices[i])
                for _ in range(len(indices[i - 1]))]
        for col, k in enumerate(indices[i]):
            for rk, s in by_col.get(k, ()):
                if rk in pos:
                    rows[pos[rk]][col] = s
        maps.append(Matrix.from_rows(rows, c.field, cols=len(indices[i])))
    return StrandComplex(c.field, beta, indices, maps)


def complex_check(complexC):
    """(true, None) iff d о d = 0 entrywise; else (false, witness) with the
    witness strand given by the offending column's multidegree."""
    return _complex_check(getattr(complexC, "complex", complexC))


def _complex_check(c):
    """Blockwise d о d = 0; on failure, the witness strand is the
    multidegree of the offending column's basis element."""
    for i in range(2, c.length + 1):
        by_col = {}
        for (r, k), s in c.diff[i].items():
            by_col.setdefault(k, []).append((r, s))
        prev_by_col = {}
        for (r2, k2), s2 in c.diff[i - 1].items():
            prev_by_col.setdefault(k2, []).append((r2, s2))
        for k, terms in sorted(by_col.items()):
            acc = {}
            for r, s in terms:
                for r2, s2 in prev_by_col.get(r, ()):
                    acc[r2] = c.field.add(acc.get(r2, c.field.zero),
                                          c.field.mul(s2, s))
            if any(acc.values()):
                return False, (i, c.multidegrees[i][k])
    return True, None


def _lcm_closure(vectors, limit=1 << 14):
    seen = set(tuple(v) for v in vectors)
    frontier = list(seen)
    while frontier:
        fresh = []
        for a in list(seen):
            for b in frontier:
                j = tuple(max(x, y) for x, y in zip(a, b))
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
                    if len(seen) > limit:
                        raise CapExceeded(
                            f"strand check set exceeded {limit} multidegrees")
        frontier = fresh
    return sorted(seen, key=lambda v: (sum(v), v))


def verify_resolution(complexC, ideal):
    """Is the complex a free resolution of the quotient by the ideal?

    Requires rank 1 in degree 0.  Exactness is checked on every strand in
    the lcm closure of basis multidegrees and generator degrees: homology
    must vanish in degrees >= 1, and in degree 0 it must be 1 on strands
    whose monomial is outside the ideal and 0 on the rest.
    """
    c = getattr(complexC, "complex", complexC)
    if c.ranks()[0] != 1:
        raise ValueError("degree-0 module must have rank 1 to resolve R/N")
    ok, wit = _complex_check(c)
    if not ok:
        return VerificationReport(False, False, witness_complex=wit)
    gens = [g.exponents for g in ideal.generators]
    points = [m for mds in c.multidegrees for m in mds] + gens
    for beta in _lcm_closure(points):
        s = strand(c, beta)
        hs = s.homology_dims()
        expected0 = 0 if any(_divides(g, beta) for g in gens) else 1
        if hs[0] != expected0:
            return VerificationReport(True, False,
                                      witness_resolution=(0, beta, hs[0]))
        for i in range(1, len(hs)):
            if hs[i]:
                return VerificationReport(True, False,
                                          witness_resolution=(i, beta, hs[i]))
    return VerificationReport(True, True, betti=c.rank_table())


def verify_minimal(complexC):
    """(true, None) iff no differential entry is a unit, i.e. every entry's
    exponent vector is nonzero; else (false, (i, row label, col label))."""
    c = getattr(complexC, "complex", complexC)
    for i in range(1, c.length + 1):
        for (r, k) in sorted(c.diff[i]):
            if not any(c.entry_exponent(i, r, k)):
                return False, (i, c.labels[i - 1][r], c.labels[i][k])
    return True, None


def betti_oracle(ideal, fieldspec, cap=22):
    """Multigraded Betti numbers of the quotient, from the Taylor complex
    tensored with the field: one homology computation per distinct subset
    lcm, keeping the entry from I to I minus an element only when the two
    subsets have equal lcm."""
    ideal, _ = minimize(ideal)
    r = len(ideal.generators)
    if r > cap:
        raise CapExceeded(f"{r} generators exceed the cap of {cap}")
    lcms = subset_lcms(ideal)
    groups = {}
    for mask in range(1 << r):
        groups.setdefault(lcms[mask], []).append(mask)
    table = BettiTable({})
    one = fieldspec.one
    neg = fieldspec.neg(one)
    for alpha in sorted(groups, key=lambda v: (sum(v), v)):
        masks = set(groups[alpha])
        by_size = {}
        for mask in groups[alpha]:
            by_size.setdefault(bin(mask).count("1"), []).append(mask)
        sizes = sorted(by_size)
        index = {i: {m: j for j, m in enumerate(sorted(by_size[i]))}
                 for i in sizes}
        dims = {i: len(by_size[i]) for i in sizes}
        ranks = {}
        for i in sizes:
            if i - 1 not in dims:
                continue
            rows = [[fieldspec.zero] * dims[i] for _ in range(dims[i - 1])]
            for mask, col in index[i].items():
                bits = [b for b in range(r) if (mask >> b) & 1]
                for j, b in enumerate(bits):
                    sub = mask & ~(1 << b)
                    if sub in masks:
                        rows[index[i - 1][sub]][col] = one if j % 2 == 0 else neg
            ranks[i] = matrix_rank(Matrix.from_rows(rows, fieldspec, cols=dims[i]))
        for i in sizes:
            h = dims[i] - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if h:
                table.multigraded[(i, alpha)] = h
    return table


@dataclass
class LatticeLinearReport:
    ok: bool
    field: object
    variant: str
    lattice: LcmLattice
    sequence: object
    complex: object
    report: VerificationReport
    oracle: BettiTable = None

    def __bool__(self):
        return self.ok


def is_lattice_linear(ideal, fieldspec, variant="gamma", cap=22):
    """Decide lattice-linearity over the given field: build the lcm
    lattice, run the poset construction on it, homogenize with the degree
    map, and test resolution plus minimality.  On success the candidate's
    rank table must agree with the Betti oracle; disagreement means a bug,
    not a property of the input."""
    ideal, _ = minimize(ideal)
    L = build_lattice(ideal, cap=cap)
    seq = build_sequence(L.poset, fieldspec, variant=variant)
    hom = homogenize(seq, L.degree)
    _assert_cover_support(L, hom)
    report = verify_resolution(hom, ideal)
    minimal, wit = verify_minimal(hom)
    report.is_minimal = minimal
    report.witness_minimal = wit
    ok = report.is_resolution and minimal
    oracle = None
    if ok:
        oracle = betti_oracle(ideal, fieldspec, cap=cap)
        if oracle != hom.rank_table():
            raise RuntimeError(
                "construction ranks disagree with the Betti oracle on a "
                "verified minimal resolution")
    return LatticeLinearReport(ok, fieldspec, variant, L, seq, hom, report, oracle)


def _assert_cover_support(L, hom):
    """Every nonzero differential entry must connect a cover pair."""
    p = L.poset
    pos = {lab: i for i, lab in enumerate(p.labels)}
    cover_set = set(p.covers)
    for i in range(1, hom.length + 1):
        for (r, k) in hom.diff[i]:
            a = pos[hom.labels[i][k]]
            b = pos[hom.labels[i - 1][r]]
            if (b, a) not in cover_set:
                raise RuntimeError(
                    f"differential entry at degree {i} connects non-cover pair "
                    f"({hom.labels[i - 1][r]!r}, {hom.labels[i][k]!r})")


def is_scarf_ideal(ideal, fieldspec, cap=22):
    """True iff the Scarf complex resolves the quotient; minimality is
    automatic because no two distinct Scarf faces share an lcm."""
    sc = scarf(ideal, fieldspec, cap=cap)
    report = verify_resolution(sc.complex, ideal)
    if report.is_resolution:
        minimal, wit = verify_minimal(sc.complex)
        if not minimal:
            raise RuntimeError(f"unit entry on a Scarf complex at {wit}")
    return report.is_resolution
