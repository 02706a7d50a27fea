"""Finite posets with a least element: covers, ranks, joins/meets, rank
completion, and the simplicial families built from intervals.

Elements are stored in a fixed topological order of the Hasse diagram, so
the index order itself is the linear extension that all vertex orders and
simplicial orientations are read from.  Order relations are kept as bitmask
rows, which keeps interval and cover queries cheap.
"""

from dataclasses import dataclass
from itertools import combinations

from .homology import SimplicialComplex


class PosetError(ValueError):
    pass


class FinitePoset:
    def __init__(self, labels, covers, _presorted=False):
        """labels: displayable element labels; covers: (lower, upper) index
        pairs forming the Hasse diagram of a poset with a unique bottom."""
        labels = list(labels)
        covers = [(int(a), int(b)) for a, b in covers]
        n = len(labels)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise PosetError(f"bad cover pair ({a}, {b})")
        if not _presorted:
            order = self._topo_order(n, covers)
            pos = {old: new for new, old in enumerate(order)}
            labels = [labels[i] for i in order]
            covers = [(pos[a], pos[b]) for a, b in covers]
        self.labels = tuple(labels)
        self.n = n
        # up[i] = bitmask of {j : i <= j}; DP down the reversed topological order
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for a, b in covers:
            succ[a].append(b)
            pred[b].append(a)
        up = [0] * n
        for i in reversed(range(n)):
            m = 1 << i
            for j in succ[i]:
                if j <= i:
                    raise PosetError("covers do not respect the element order")
                m |= up[j]
            up[i] = m
        down = [0] * n
        for j in range(n):
            m = 1 << j
            for i in pred[j]:
                m |= down[i]
            down[j] = m
        self.up = tuple(up)
        self.down = tuple(down)
        # genuine covers only: nothing strictly between the endpoints
        for a, b in covers:
            between = self.up[a] & self.down[b] & ~((1 << a) | (1 << b))
            if between:
                raise PosetError(
                    f"({self.labels[a]!r}, {self.labels[b]!r}) is not a cover")
        self.covers = tuple(sorted(set(covers)))
        self._succ = tuple(tuple(sorted(j for a, j in self.covers if a == i))
                           for i in range(n))
        self._pred = tuple(tuple(sorted(a for a, j in self.covers if j == i))
                           for i in range(n))
        if n == 0:
            raise PosetError("poset must be nonempty")
        bottoms = [i for i in range(n) if self.up[i] == (1 << n) - 1]
        if not bottoms:
            raise PosetError("no least element")
        self.bottom = bottoms[0]
        # ranks: longest chain from the bottom
        ranks = [0] * n
        for i in range(n):
            if i != self.bottom:
                lows = self._pred[i]
                if not lows:
                    raise PosetError(
                        f"element {self.labels[i]!r} is unreachable from the bottom")
                ranks[i] = 1 + max(ranks[a] for a in lows)
        self.ranks = tuple(ranks)

    @staticmethod
    def _topo_order(n, covers):
        # stable Kahn: smallest original index first
        import heapq
        indeg = [0] * n
        succ = [[] for _ in range(n)]
        for a, b in covers:
            indeg[b] += 1
            succ[a].append(b)
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            i = heapq.heappop(heap)
            order.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
        if len(order) != n:
            raise PosetError("cover relation has a cycle")
        return order

    @staticmethod
    def from_relations(labels, pairs):
        """Build from arbitrary order relations (a <= b index pairs); the
        Hasse diagram is recovered from the transitive closure."""
        labels = list(labels)
        n = len(labels)
        leq = [1 << i for i in range(n)]
        for a, b in pairs:
            leq[a] |= 1 << b
        # transitive closure (iterate to fixpoint; n is small here)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                m = leq[i]
                acc = m
                j = m
                while j:
                    k = (j & -j).bit_length() - 1
                    acc |= leq[k]
                    j &= j - 1
                if acc != m:
                    leq[i] = acc
                    changed = True
        for i in range(n):
            for j in range(n):
                if i != j and (leq[i] >> j) & 1 and (leq[j] >> i) & 1:
                    raise PosetError("relation is not antisymmetric")
        covers = []
        for a in range(n):
            for b in range(n):
                if a != b and (leq[a] >> b) & 1:
                    between = leq[a] & ~(1 << a) & ~(1 << b)
                    if not any((between >> c) & 1 and (leq[c] >> b) & 1
                               for c in range(n) if c != b):
                        covers.append((a, b))
        return FinitePoset(labels, covers)

    # --- queries -----------------------------------------------------------

    @property
    def linear_extension(self):
        return tuple(range(self.n))

    def index(self, label):
        return self.labels.index(label)

    def leq(self, i, j):
        return bool((self.up[i] >> j) & 1)

    def lt(self, i, j):
        return i != j and self.leq(i, j)

    def upper_covers(self, i):
        return self._succ[i]

    def lower_covers(self, i):
        return self._pred[i]

    def rank(self, i):
        return self.ranks[i]

    def atoms(self):
        return self._succ[self.bottom]

    def is_ranked(self):
        return all(self.ranks[b] == self.ranks[a] + 1 for a, b in self.covers)

    def elements(self):
        return range(self.n)

    def down_set(self, i):
        """Indices j with j <= i, ascending."""
        return _mask_indices(self.down[i])

    def up_set(self, i):
        return _mask_indices(self.up[i])

    def open_interval(self, alpha):
        """Indices strictly between the bottom and alpha."""
        m = self.down[alpha] & ~(1 << self.bottom) & ~(1 << alpha)
        return _mask_indices(m)

    def join(self, elems):
        elems = list(elems)
        if not elems:
            raise PosetError("join of the empty set is not defined here")
        ub = (1 << self.n) - 1
        for e in elems:
            ub &= self.up[e]
        for c in _mask_indices(ub):
            # first upper bound below all others is the least one
            if all((self.up[c] >> d) & 1 for d in _mask_indices(ub)):
                return c
        return None

    def meet(self, elems):
        elems = list(elems)
        if not elems:
            raise PosetError("meet of the empty set is not defined here")
        lb = (1 << self.n) - 1
        for e in elems:
            lb &= self.down[e]
        for c in _mask_indices(lb):
            if all((self.down[c] >> d) & 1 for d in _mask_indices(lb)):
                return c
        return None

    def is_lattice(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.join([i, j]) is None or self.meet([i, j]) is None:
                    return False
        return True

    def maximal_chains(self):
        """All maximal chains, as index tuples ascending from the bottom."""
        out = []
        stack = [(self.bottom, (self.bottom,))]
        while stack:
            v, chain = stack.pop()
            ups = self._succ[v]
            if not ups:
                out.append(chain)
            else:
                for u in ups:
                    stack.append((u, chain + (u,)))
        return sorted(out)

    def chains_within(self, elems):
        """Every chain (as an ascending index tuple) inside the given set,
        the empty chain included."""
        elems = sorted(elems)
        out = [()]
        stack = [(e,) for e in elems]
        idx = 0
        while idx < len(stack):
            chain = stack[idx]
            idx += 1
            out.append(chain)
            last = chain[-1]
            for e in elems:
                if e > last and self.lt(last, e):
                    stack.append(chain + (e,))
        return out

    def relabel(self, fn):
        return FinitePoset([fn(l) for l in self.labels], self.covers, _presorted=True)

    def __repr__(self):
        return f"FinitePoset({self.n} elements, {len(self.covers)} covers)"


def _mask_indices(m):
    out = []
    while m:
        out.append((m & -m).bit_length() - 1)
        m &= m - 1
    return out


@dataclass(frozen=True)
class PosetMap:
    """Monotone map into N^n with the bottom sent to the origin."""

    domain: FinitePoset
    images: tuple

    def __post_init__(self):
        p = self.domain
        if len(self.images) != p.n:
            raise PosetError("one image vector per element required")
        nvar = len(self.images[0]) if self.images else 0
        for v in self.images:
            if len(v) != nvar or any(e < 0 for e in v):
                raise PosetError("images must be equal-length vectors over N")
        if any(e != 0 for e in self.images[p.bottom]):
            raise PosetError("the bottom must map to the origin")
        for a, b in p.covers:
            if not all(x <= y for x, y in zip(self.images[a], self.images[b])):
                raise PosetError(
                    f"map is not monotone on cover ({p.labels[a]!r}, {p.labels[b]!r})")

    @property
    def nvars(self):
        return len(self.images[0]) if self.images else 0

    def image(self, i):
        return self.images[i]


def rank(p, x):
    return p.rank(x)


def atoms(p):
    return p.atoms()


def is_ranked(p):
    return p.is_ranked()


def join(p, elems):
    return p.join(elems)


def meet(p, elems):
    return p.meet(elems)


def is_lattice(p):
    return p.is_lattice()


def rank_completion(p):
    """Subdivide every cover with rank gap >= 2 into a private chain so the
    result is ranked; original elements keep their labels and their ranks.

    Returns (completed poset, map from old index to new index).
    """
    labels = list(p.labels)
    covers = []
    for a, b in p.covers:
        gap = p.ranks[b] - p.ranks[a]
        if gap <= 1:
            covers.append((a, b))
        else:
            chain = []
            for t in range(1, gap):
                labels.append(("^", p.labels[a], p.labels[b], t))
                chain.append(len(labels) - 1)
            path = [a] + chain + [b]
            covers.extend(zip(path, path[1:]))
    q = FinitePoset(labels, covers)
    embedding = {i: q.labels.index(p.labels[i]) for i in range(p.n)}
    if not q.is_ranked():
        raise RuntimeError("rank completion failed to produce a ranked poset")
    for i, j in embedding.items():
        if p.ranks[i] != q.ranks[j]:
            raise RuntimeError("rank completion changed the rank of an element")
    return q, embedding


# --- the two simplicial families -----------------------------------------


def open_interval_complex(p, alpha):
    """Delta_alpha: the order complex of the open interval (bottom, alpha).

    Every element strictly below alpha sits under some lower cover of alpha,
    so this equals the union of the order complexes of the half-open
    intervals (bottom, lambda] over the covers lambda of alpha.  For an atom
    the interval is empty and the complex is the empty complex, whose
    (-1)-homology is the ground field.
    """
    elems = p.open_interval(alpha)
    return SimplicialComplex(elems, p.chains_within(elems), close=False)


def half_interval_complex(p, lam):
    """D_lambda: the order complex of the half-open interval (bottom, lambda]."""
    elems = p.open_interval(lam) + [lam]
    return SimplicialComplex(sorted(elems), p.chains_within(elems), close=False)


def union_complex(vertex_order, complexes):
    faces = set()
    for K in complexes:
        for fs in K.faces.values():
            faces.update(fs)
    return SimplicialComplex(vertex_order, faces, close=False)


def atom_simplex(p, lam, atom_list=None):
    """G_lambda: the full simplex on the atoms below lambda."""
    if atom_list is None:
        atom_list = p.atoms()
    verts = [a for a in atom_list if p.leq(a, lam)]
    if len(verts) > 20:
        raise PosetError("atom simplex too large to enumerate")
    faces = [()]
    for k in range(1, len(verts) + 1):
        faces.extend(combinations(verts, k))
    return SimplicialComplex(atom_list, faces, close=False)


def crosscut_interval_complex(p, alpha):
    """Gamma_alpha: union of the simplices G_lambda over covers lambda of
    alpha, i.e. atom subsets lying below a single lower cover of alpha."""
    atom_list = p.atoms()
    parts = [atom_simplex(p, lam, atom_list) for lam in p.lower_covers(alpha)]
    if not parts:
        return SimplicialComplex(atom_list, [()])
    return union_complex(atom_list, parts)


def crosscut_check(p, C):
    """The three crosscut properties for a subset C of the poset:
    antichain; every maximal chain has an element of C comparable to all of
    it; every bounded subset of C has a join or a meet.

    Brute force — it enumerates maximal chains and subsets of C — so it is
    only for small posets; for the atom set use atoms_form_crosscut, which
    decides the same three properties through their structural reductions.
    """
    C = sorted(set(C))
    for a, b in combinations(C, 2):
        if p.leq(a, b) or p.leq(b, a):
            return False
    # maximal chains suffice: comparability with a chain passes to subchains
    for chain in p.maximal_chains():
        if not any(all(p.leq(c, x) or p.leq(x, c) for x in chain) for c in C):
            return False
    if len(C) > 20:
        raise PosetError("crosscut bounded-subset check too large to enumerate")
    full = (1 << p.n) - 1
    for k in range(1, len(C) + 1):
        for A in combinations(C, k):
            ub = full
            lb = full
            for e in A:
                ub &= p.up[e]
                lb &= p.down[e]
            if ub or lb:  # bounded above or below
                if p.join(A) is None and p.meet(A) is None:
                    return False
    return True


def atoms_form_crosscut(p):
    """Decide the three crosscut properties for the atom set without
    enumerating chains or subsets.

    Antichain: distinct atoms are incomparable (anything below an atom is
    the bottom or the atom itself).  Chain property: a maximal chain starts
    at the bottom, so its second element is an atom, and an atom is
    comparable to every element of a chain through it.  Join-or-meet: a
    single atom is its own join; two or more distinct atoms have meet equal
    to the bottom as soon as each pair's common lower set is exactly the
    bottom.  Each reduction is checked directly on the down-sets.
    """
    ats = p.atoms()
    if not ats:
        # the one-element poset: a maximal chain exists but C is empty,
        # so the chain-comparability property fails vacuously
        return False
    bottom_mask = 1 << p.bottom
    for a in ats:
        if p.down[a] != bottom_mask | (1 << a):
            return False
    for a, b in combinations(ats, 2):
        if p.down[a] & p.down[b] != bottom_mask:
            return False
    # every maximal chain passes through the bottom's cover set by
    # construction of FinitePoset (unique bottom), so the chain property
    # needs no search; it can only fail if some non-bottom element misses
    # an atom below it, which the down-set scan above already rules out for
    # chains — record it explicitly for elements:
    for x in p.elements():
        if x != p.bottom and not any(p.leq(a, x) for a in ats):
            return False
    return True
