"""Gradings of polynomial rings by Z^r x Z/m_1 x ... x Z/m_s, homogeneous
components, and the largest homogeneous subideal.

Every monomial is homogeneous, so the grading data is just one group
element per variable.  The field plays no role in what "homogeneous"
means, which is why the same code serves Q and GF(p) even when p divides
a torsion modulus.
"""

from __future__ import annotations

from typing import NamedTuple

from .groebner import GroebnerBasis, Ideal, eliminate
from .poly import GREVLEX, Polynomial, fresh_names


class Hdeg(NamedTuple):
    """Element of the grading group: free part over Z, torsion residues."""

    free: tuple
    torsion: tuple

    def __str__(self):
        return f"[{list(self.free)}, {list(self.torsion)}]"


class GradingGroup:
    """Z^free_rank plus cyclic factors of the given moduli (each >= 2)."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        moduli = tuple(int(m) for m in torsion)
        if any(m < 2 for m in moduli):
            raise ValueError("torsion moduli must be >= 2")
        self.free_rank = free_rank
        self.torsion = moduli

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def degree(self, free=(), torsion=()):
        free = tuple(int(a) for a in free)
        tors = tuple(int(b) for b in torsion)
        if len(free) != self.free_rank or len(tors) != len(self.torsion):
            raise ValueError("degree has wrong shape for this group")
        return Hdeg(free, tuple(b % m for b, m in zip(tors, self.torsion)))

    @property
    def zero(self):
        return Hdeg((0,) * self.free_rank, (0,) * len(self.torsion))

    def add(self, a, b):
        return Hdeg(tuple(x + y for x, y in zip(a.free, b.free)),
                    tuple((x + y) % m for x, y, m in
                          zip(a.torsion, b.torsion, self.torsion)))

    def neg(self, a):
        return Hdeg(tuple(-x for x in a.free),
                    tuple((-x) % m for x, m in zip(a.torsion, self.torsion)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, n):
        return Hdeg(tuple(n * x for x in a.free),
                    tuple((n * x) % m for x, m in
                          zip(a.torsion, self.torsion)))

    def __eq__(self, other):
        return (isinstance(other, GradingGroup)
                and other.free_rank == self.free_rank
                and other.torsion == self.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{m}" for m in self.torsion]
        return " x ".join(parts) if parts else "0"


class GradedRing:
    """A polynomial ring together with a degree for each variable."""

    __slots__ = ("ring", "group", "degrees")

    def __init__(self, ring, group, degrees):
        degrees = tuple(
            d if isinstance(d, Hdeg) else group.degree(*d) for d in degrees)
        if len(degrees) != ring.nvars:
            raise ValueError("need exactly one degree per variable")
        self.ring = ring
        self.group = group
        self.degrees = tuple(group.degree(d.free, d.torsion)
                             for d in degrees)

    def degree_of_monomial(self, exps):
        d = self.group.zero
        for e, dv in zip(exps, self.degrees):
            if e:
                d = self.group.add(d, self.group.scale(dv, e))
        return d

    def __repr__(self):
        return f"GradedRing({self.ring!r}, {self.group!r})"


def homogeneous_components(f, graded):
    """Split f by degree; returns {Hdeg: component}, insertion-ordered by
    descending grevlex leading term so iteration is reproducible."""
    buckets = {}
    for m in sorted(f.terms, key=GREVLEX.key, reverse=True):
        d = graded.degree_of_monomial(m)
        buckets.setdefault(d, {})[m] = f.terms[m]
    return {d: Polynomial(f.ring, t, _clean=True)
            for d, t in buckets.items()}


def degree_of(f, graded):
    """Degree of a nonzero homogeneous polynomial, else None."""
    comps = homogeneous_components(f, graded)
    if len(comps) != 1:
        return None
    return next(iter(comps))


def is_homogeneous(f, graded):
    return len(homogeneous_components(f, graded)) <= 1


def is_g_ideal(I, graded):
    """True when every homogeneous component of every generator lies in I
    (equivalently, I is generated by homogeneous elements)."""
    if I.ring != graded.ring:
        raise ValueError("ideal and grading live on different rings")
    for g in I.generators:
        comps = homogeneous_components(g, graded)
        if len(comps) <= 1:
            continue
        if not all(I.contains(c) for c in comps.values()):
            return False
    return True


def component_filter(I, graded):
    """Ideal generated by the generator components already inside I: a
    cheap under-approximation of the largest homogeneous subideal."""
    kept = []
    for g in I.generators:
        for c in homogeneous_components(g, graded).values():
            if I.contains(c):
                kept.append(c)
    return Ideal(I.ring, kept)


def _primed(ring, reduced_elements):
    """Ideal whose grevlex basis is already known; avoids re-running
    Buchberger on every published result."""
    ascending = sorted(
        reduced_elements,
        key=lambda g: GREVLEX.key(g.leading_monomial(GREVLEX)))
    canonical = sorted(ascending,
                       key=lambda g: g.leading_monomial(GREVLEX),
                       reverse=True)
    out = Ideal(ring, canonical)
    out._bases[GREVLEX] = GroebnerBasis(ring, GREVLEX, ascending)
    return out


def star(I, graded):
    """Largest homogeneous ideal contained in I.

    An element lies in the result iff all its components do, i.e. iff its
    image under x_i -> x_i * chi(d_i) falls in the extension of I to
    R tensor k[H].  Model k[H] with one invertible u_j per used free
    coordinate (a single Rabinowitsch variable z inverts their product)
    and one s_k per used torsion coordinate subject to s_k^{m_k} = 1;
    substitute, then eliminate the auxiliaries.
    """
    ring = I.ring
    if ring != graded.ring:
        raise ValueError("ideal and grading live on different rings")
    if I.is_zero:
        return Ideal(ring)
    gens = I.canonical_generators()
    if graded.group.is_trivial:
        return _primed(ring, gens)

    # Already generated by homogeneous elements: the ideal is its own star.
    split = [list(homogeneous_components(g, graded).values()) for g in gens]
    mixed = [c for comps in split if len(comps) > 1 for c in comps]
    if not mixed:
        return _primed(ring, gens)
    if all(I.contains(c) for c in mixed):
        flat = [c for comps in split for c in comps]
        return _primed(ring, Ideal(ring, flat).canonical_generators())

    r = graded.group.free_rank
    moduli = graded.group.torsion
    free_used = [j for j in range(r)
                 if any(d.free[j] for d in graded.degrees)]
    tors_used = [k for k in range(len(moduli))
                 if any(d.torsion[k] for d in graded.degrees)]
    if not free_used and not tors_used:
        return _primed(ring, gens)

    taken = set(ring.variables)
    u_names = fresh_names("u", len(free_used), taken)
    taken.update(u_names)
    s_names = fresh_names("s", len(tors_used), taken)
    taken.update(s_names)
    z_names = fresh_names("z", 1, taken) if free_used else []
    big = ring.extend(u_names + s_names + list(z_names))

    n = ring.nvars
    u_at = {j: n + pos for pos, j in enumerate(free_used)}
    s_at = {k: n + len(free_used) + pos for pos, k in enumerate(tors_used)}
    z_at = n + len(free_used) + len(tors_used) if free_used else None
    aux = list(range(n, big.nvars))

    lifted = []
    for g in gens:
        term_data = []
        for m, c in g.terms.items():
            d = graded.degree_of_monomial(m)
            term_data.append((m, c, d))
        shift = {j: max(d.free[j] for _, _, d in term_data)
                 for j in free_used}
        terms = {}
        for m, c, d in term_data:
            e = list(m) + [0] * (big.nvars - n)
            for j in free_used:
                e[u_at[j]] = shift[j] - d.free[j]
            for k in tors_used:
                e[s_at[k]] = d.torsion[k]
            terms[tuple(e)] = c
        lifted.append(Polynomial(big, terms))

    relations = []
    for k in tors_used:
        s = big.gen(s_at[k])
        relations.append(s ** moduli[k] - big.one())
    if free_used:
        prod = big.one()
        for j in free_used:
            prod = prod * big.gen(u_at[j])
        relations.append(big.one() - big.gen(z_at) * prod)

    upstairs = eliminate(Ideal(big, lifted + relations), aux)
    back = {i: i for i in range(n)}
    # The aux-free slice of the reduced elimination basis is a reduced
    # grevlex basis downstairs (the block order restricts to grevlex).
    down = [f.map_to(ring, back) for f in upstairs.generators]
    return _primed(ring, down)
