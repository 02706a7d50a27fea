"""Taylor and Scarf complexes, built directly from subset lcms.

Both serve as independent cross-checks for the poset construction: the
Taylor complex is always a resolution, and the Scarf complex supports the
minimal resolution exactly when the strand checks say it resolves.  Basis
elements are labeled by ascending tuples of generator indices, and the
differential sends e_I to the alternating sum over j of
(m_I / m_(I minus its j-th smallest element)) e_(I minus that element),
with sign (-1)^(j+1) for the j-th position (1-based).
"""

from dataclasses import dataclass
from itertools import combinations

from .construction import MultigradedComplex
from .homology import SimplicialComplex
from .lcm_lattice import CapExceeded
from .linalg import FieldSpec, QQ
from .monomials import MonomialIdeal, lcm
from .poset import FinitePoset, PosetMap


@dataclass(frozen=True)
class TaylorComplex:
    ideal: MonomialIdeal
    complex: MultigradedComplex

    def ranks(self):
        return self.complex.ranks()


@dataclass(frozen=True)
class ScarfComplex:
    ideal: MonomialIdeal
    faces: SimplicialComplex    # vertices are generator indices
    complex: MultigradedComplex

    def ranks(self):
        return self.complex.ranks()


def subset_lcms(ideal):
    """Exponent vector of m_I for every subset, indexed by bitmask."""
    r = len(ideal.generators)
    n = len(ideal.variables)
    out = [None] * (1 << r)
    out[0] = tuple([0] * n)
    for mask in range(1, 1 << r):
        low = (mask & -mask).bit_length() - 1
        rest = out[mask & (mask - 1)]
        g = ideal.generators[low].exponents
        out[mask] = tuple(max(a, b) for a, b in zip(rest, g))
    return out


def _mask_of(subset):
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def _signed_faces(I):
    """(sign, subface) pairs of the Taylor differential on e_I."""
    for j, _ in enumerate(I):
        yield (1 if j % 2 == 0 else -1), I[:j] + I[j + 1:]


def _subset_complex(ideal, subsets, fieldspec):
    """Assemble the multigraded complex on a downward-closed family of
    generator subsets, with the signed lcm-quotient differential."""
    lcms = subset_lcms(ideal)
    by_size = {}
    for I in subsets:
        by_size.setdefault(len(I), []).append(tuple(sorted(I)))
    top = max(by_size) if by_size else 0
    labels = []
    multidegrees = []
    index = []
    for i in range(top + 1):
        level = sorted(by_size.get(i, []))
        labels.append(level)
        multidegrees.append([lcms[_mask_of(I)] for I in level])
        index.append({I: k for k, I in enumerate(level)})
    diff = [None] + [dict() for _ in range(top)]
    one = fieldspec.one
    neg = fieldspec.neg(one)
    for i in range(1, top + 1):
        for I in labels[i]:
            c = index[i][I]
            for sign, J in _signed_faces(I):
                if J not in index[i - 1]:
                    raise ValueError(f"family is not closed under subsets at {I}")
                diff[i][(index[i - 1][J], c)] = one if sign == 1 else neg
    return MultigradedComplex(fieldspec, labels, multidegrees, diff)


def taylor(ideal, fieldspec=QQ, cap=22):
    """The Taylor complex on the full Boolean family of generator subsets.

    Defined for the generators as given (a non-minimal generating set yields
    unit entries, which is exactly what the minimality check should see).
    """
    r = len(ideal.generators)
    if r > cap:
        raise CapExceeded(f"{r} generators exceed the cap of {cap}")
    subsets = [I for k in range(r + 1) for I in combinations(range(r), k)]
    return TaylorComplex(ideal, _subset_complex(ideal, subsets, fieldspec))


def scarf(ideal, fieldspec=QQ, cap=22):
    """The Scarf complex: subsets whose lcm is unique among all 2^r subset
    lcms, with the same signed differential restricted to those faces."""
    r = len(ideal.generators)
    if r > cap:
        raise CapExceeded(f"{r} generators exceed the cap of {cap}")
    lcms = subset_lcms(ideal)
    count = {}
    for v in lcms:
        count[v] = count.get(v, 0) + 1
    faces = [tuple(i for i in range(r) if (mask >> i) & 1)
             for mask in range(1 << r) if count[lcms[mask]] == 1]
    # uniqueness of the lcm forces closure under subsets; trust but verify
    face_set = set(faces)
    for I in faces:
        for _, J in _signed_faces(I):
            if J not in face_set:
                raise RuntimeError(f"Scarf family not closed under subsets at {I}")
        if I and set(I) != {i for i in range(r)
                            if all(e <= f for e, f in
                                   zip(ideal.generators[i].exponents,
                                       lcms[_mask_of(I)]))}:
            raise RuntimeError(f"face {I} is not recovered from its lcm")
    K = SimplicialComplex(tuple(range(r)), faces, close=False)
    return ScarfComplex(ideal, K, _subset_complex(ideal, faces, fieldspec))


def is_strongly_generic(ideal):
    """No variable occurs with the same nonzero exponent in two distinct
    generators.  Meaningful for a minimal generating set."""
    n = len(ideal.variables)
    for v in range(n):
        seen = set()
        for g in ideal.generators:
            e = g.exponents[v]
            if e == 0:
                continue
            if e in seen:
                return False
            seen.add(e)
    return True


# --- the Boolean lattice as a poset, for the equivalence with taylor -------


def boolean_poset(r):
    """The lattice of subsets of {0..r-1}, labeled by ascending tuples."""
    labels = sorted((I for k in range(r + 1)
                     for I in combinations(range(r), k)),
                    key=lambda I: (len(I), I))
    pos = {I: i for i, I in enumerate(labels)}
    covers = []
    for I in labels:
        for _, J in _signed_faces(I):
            covers.append((pos[J], pos[I]))
    return FinitePoset(labels, covers, _presorted=True)


def subset_lcm_map(ideal, p=None):
    """The map I -> deg(m_I) on the Boolean lattice of generator subsets."""
    if p is None:
        p = boolean_poset(len(ideal.generators))
    lcms = subset_lcms(ideal)
    images = tuple(lcms[_mask_of(I)] for I in p.labels)
    return PosetMap(p, images)
