"""Seeded random generators for property tests and the self-test command.

Everything takes an explicit random.Random so identical seeds reproduce
identical objects; nothing touches the global generator.
"""

from .homology import SimplicialComplex
from .monomials import MonomialIdeal, minimize
from .poset import FinitePoset


def random_ideal(rng, max_vars=4, max_gens=6, max_exp=4):
    """A nonzero monomial ideal with distinct nonzero generators."""
    n = rng.randint(1, max_vars)
    r = min(rng.randint(1, max_gens), (max_exp + 1) ** n - 1)
    seen = set()
    while len(seen) < r:
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(e):
            seen.add(e)
    variables = tuple(f"x{i}" for i in range(n)) if n > 3 else ("x", "y", "z")[:n]
    return MonomialIdeal.from_exponents(variables, sorted(seen))


def random_strongly_generic_ideal(rng, max_vars=4, max_gens=6):
    """No variable repeats a nonzero exponent across generators: per
    variable, draw distinct values and zero some of them out."""
    n = rng.randint(2, max_vars)
    r = rng.randint(1, max_gens)
    while True:
        cols = []
        for _ in range(n):
            vals = rng.sample(range(1, 2 * r + 2), r)
            cols.append([v if rng.random() > 0.3 else 0 for v in vals])
        gens = [tuple(cols[v][g] for v in range(n)) for g in range(r)]
        gens = sorted(set(g for g in gens if any(g)))
        if not gens:
            continue
        variables = tuple(f"x{i}" for i in range(n))
        ideal, _ = minimize(MonomialIdeal.from_exponents(variables, gens))
        return ideal


def random_ranked_poset(rng, max_elements=25):
    """Random ranked poset with a unique bottom: levels of random width,
    each element covering at least one element one level down."""
    n_levels = rng.randint(1, 4)
    widths = [1] + [rng.randint(1, max(1, (max_elements - 1) // n_levels))
                    for _ in range(n_levels)]
    while sum(widths) > max_elements:
        widths[1 + rng.randrange(n_levels)] = max(
            1, widths[1 + rng.randrange(n_levels)] - 1)
    levels = []
    start = 0
    for w in widths:
        levels.append(list(range(start, start + w)))
        start += w
    covers = []
    for i in range(1, len(levels)):
        for v in levels[i]:
            below = rng.sample(levels[i - 1],
                               rng.randint(1, min(3, len(levels[i - 1]))))
            covers.extend((u, v) for u in below)
    labels = [f"e{k}" for k in range(start)]
    p = FinitePoset(labels, sorted(set(covers)))
    if not p.is_ranked():
        raise RuntimeError("level construction must be ranked")
    return p


def random_nonranked_poset(rng, max_elements=25, tries=200):
    """A non-ranked poset, made by adding a rank-jumping relation to a
    ranked one and recomputing the covers."""
    for _ in range(tries):
        p = random_ranked_poset(rng, max_elements=max_elements - 2)
        if max(p.ranks) < 2:
            continue
        low = [i for i in p.elements() if p.ranks[i] <= max(p.ranks) - 2]
        if not low:
            continue
        a = rng.choice(low)
        high = [j for j in p.elements()
                if p.ranks[j] >= p.ranks[a] + 2
                and not p.leq(a, j) and not p.leq(j, a)]
        if not high:
            continue
        b = rng.choice(high)
        relations = [(i, j) for i in p.elements() for j in p.elements()
                     if p.lt(i, j)] + [(a, b)]
        q = FinitePoset.from_relations(p.labels, relations)
        if not q.is_ranked():
            return q
    raise RuntimeError("failed to generate a non-ranked poset")


def random_lattice_ideal(rng, max_vars=4, max_gens=5, max_exp=3):
    """An ideal whose lcm lattice stays small; lattices for comparison runs."""
    return random_ideal(rng, max_vars=max_vars, max_gens=max_gens,
                        max_exp=max_exp)


def random_complex(rng, max_verts=7, n_faces=8, max_face=4):
    """Random simplicial complex: the downward closure of random subsets."""
    n = rng.randint(1, max_verts)
    verts = list(range(n))
    faces = [()]
    for _ in range(rng.randint(0, n_faces)):
        k = rng.randint(1, min(max_face, n))
        faces.append(tuple(sorted(rng.sample(verts, k))))
    return SimplicialComplex(verts, faces, close=True)


def random_chain_vector(rng, H, d, n_boundary=2):
    """A random cycle: an integer combination of the chosen homology basis
    plus the boundary of a random chain one dimension up."""
    from .homology import ChainVector, chain_boundary
    f = H.field
    z = ChainVector(d, {})
    for b in H.basis(d):
        z = z.add(b.scale(f.of_int(rng.randint(-2, 2)), f), f)
    up = H.complex.faces.get(d + 1, ())
    if up:
        picks = rng.sample(up, min(n_boundary, len(up)))
        w = ChainVector(d + 1, {g: f.of_int(rng.randint(-2, 2)) for g in picks})
        z = z.add(chain_boundary(w, f), f)
    return z
