"""The lattice of least common multiples of a monomial ideal's generators,
ordered by divisibility with 1 at the bottom."""

from dataclasses import dataclass

from .monomials import Monomial, divides, lcm, minimize
from .poset import FinitePoset, PosetMap


class CapExceeded(ValueError):
    """Generator count above the configured cap; the subset enumeration is
    2^r and the caller asked us not to go there."""


@dataclass(frozen=True)
class LcmLattice:
    poset: FinitePoset          # labels are exponent tuples; bottom is 1
    degree: PosetMap            # element -> its exponent vector
    variables: tuple
    atom_generators: dict       # atom index in poset -> generator index

    def monomial(self, i):
        return Monomial(self.poset.labels[i])

    def render(self, i):
        return self.monomial(i).render(self.variables)


def build(ideal, cap=22, method="closure"):
    """Build L_N for a (minimized) ideal.

    method "closure" iterates pairwise lcms to a fixed point; "subsets"
    enumerates all 2^r subsets literally.  Both give the same element set;
    the closure method is the default because it touches far fewer lcms.
    """
    ideal, _removed = minimize(ideal)
    r = ideal.ngens
    if r > cap:
        raise CapExceeded(
            f"{r} generators exceed the cap {cap}; the subset-lcm enumeration "
            f"is 2^{r} and was refused")
    gens = [g.exponents for g in ideal.generators]
    one = Monomial.one(ideal.nvars).exponents
    if method == "closure":
        elems = set(gens)
        frontier = set(gens)
        while frontier:
            new = set()
            for a in frontier:
                for b in elems:
                    m = tuple(max(x, y) for x, y in zip(a, b))
                    if m not in elems and m not in new:
                        new.add(m)
            elems |= new
            frontier = new
    elif method == "subsets":
        elems = set()
        for mask in range(1, 1 << r):
            m = one
            i = mask
            while i:
                k = (i & -i).bit_length() - 1
                m = tuple(max(x, y) for x, y in zip(m, gens[k]))
                i &= i - 1
            elems.add(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    labels = sorted(elems | {one}, key=lambda t: (sum(t), t))
    n = len(labels)
    # divisibility bitmasks: down[b] = divisors of labels[b] within the set
    down = [0] * n
    up = [0] * n
    for b in range(n):
        for a in range(n):
            if all(x <= y for x, y in zip(labels[a], labels[b])):
                down[b] |= 1 << a
                up[a] |= 1 << b
    covers = []
    for b in range(n):
        for a in range(n):
            if a != b and (down[b] >> a) & 1:
                between = down[b] & up[a] & ~(1 << a) & ~(1 << b)
                if not between:
                    covers.append((a, b))
    poset = FinitePoset(labels, covers, _presorted=True)
    degree = PosetMap(poset, tuple(labels))
    atom_generators = {}
    for a in poset.atoms():
        atom_generators[a] = gens.index(labels[a])
    if set(atom_generators.values()) != set(range(r)):
        raise RuntimeError("atoms of the lcm lattice are not the generators")
    return LcmLattice(poset, degree, ideal.variables, atom_generators)
