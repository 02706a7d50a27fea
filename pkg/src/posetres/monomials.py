"""Monomials as exponent vectors and monomial ideals.

A monomial is just its exponent vector in a fixed ambient variable list;
the all-zeros vector is the monomial 1.  Ideals carry the variable names
for rendering and keep generators in input order.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        if any(e < 0 or not isinstance(e, int) for e in self.exponents):
            raise ValueError("exponents must be nonnegative integers")

    @staticmethod
    def one(nvars):
        return Monomial((0,) * nvars)

    @property
    def nvars(self):
        return len(self.exponents)

    @property
    def total_degree(self):
        return sum(self.exponents)

    def is_one(self):
        return all(e == 0 for e in self.exponents)

    def render(self, variables):
        if len(variables) != self.nvars:
            raise ValueError("variable list length mismatch")
        parts = []
        for name, e in zip(variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def lcm(a, b):
    """Componentwise maximum."""
    if a.nvars != b.nvars:
        raise ValueError("monomials live in different variable counts")
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def divides(a, b):
    """True iff a | b, i.e. exponents of a <= those of b componentwise."""
    if a.nvars != b.nvars:
        raise ValueError("monomials live in different variable counts")
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def quotient(a, b):
    """a / b for b | a (used for differential coefficients)."""
    if not divides(b, a):
        raise ValueError("not divisible")
    return Monomial(tuple(x - y for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple
    generators: tuple

    def __post_init__(self):
        n = len(self.variables)
        for g in self.generators:
            if g.nvars != n:
                raise ValueError("generator arity does not match variable list")

    @staticmethod
    def from_exponents(variables, vectors):
        return MonomialIdeal(tuple(variables), tuple(Monomial(tuple(v)) for v in vectors))

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def ngens(self):
        return len(self.generators)

    def contains(self, m):
        """Monomial membership: divisible by some generator."""
        return any(divides(g, m) for g in self.generators)

    def is_minimal(self):
        gens = self.generators
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and divides(h, g) and (h != g or j < i):
                    return False
        return True

    def render(self):
        return ", ".join(g.render(self.variables) for g in self.generators)


def minimize(ideal):
    """Drop duplicate and divisible generators; returns (ideal, removed).

    Keeps the first occurrence of each survivor, in input order.
    """
    kept = []
    removed = []
    gens = list(ideal.generators)
    for i, g in enumerate(gens):
        redundant = False
        for j, h in enumerate(gens):
            if i == j:
                continue
            if h == g:
                if j < i:
                    redundant = True
                    break
            elif divides(h, g):
                redundant = True
                break
        (removed if redundant else kept).append(g)
    return MonomialIdeal(ideal.variables, tuple(kept)), removed


def subset_lcm(ideal, index_set):
    """lcm of the selected generators; the empty set gives 1."""
    m = Monomial.one(ideal.nvars)
    for i in index_set:
        if not 0 <= i < ideal.ngens:
            raise IndexError(f"generator index {i} out of range")
        m = lcm(m, ideal.generators[i])
    return m
