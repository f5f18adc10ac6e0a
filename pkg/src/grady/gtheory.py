"""Primary decomposition relative to a grading.

A homogeneous ideal is G-primary when, among homogeneous elements, the
usual primary condition holds; the G-radical of a homogeneous ideal is
the star of its radical.  Everything here reduces those notions to
classical decompositions in the supported classes plus the star
operator, with optional caller-supplied classical decompositions as
certificates (results are then labelled assumed, not verified).
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (ASSUMED, VERIFIED, Decomposition,
                            PrimaryComponent, UnsupportedClassError,
                            associated_primes, classical_decomposition,
                            is_monomial_ideal, minimal_primes, radical_ideal)
from .grading import is_g_ideal, star
from .groebner import (GREVLEX, Ideal, colon, ideal_power, ideal_product,
                       intersect_all, saturate_ideal)


def _canon_key(I):
    return tuple(str(g) for g in I.canonical_generators())


def _require_homogeneous(I, graded, what):
    if not is_g_ideal(I, graded):
        raise ValueError(f"{what} needs a homogeneous ideal")


def _classical_for(I, classical):
    if classical is None:
        return classical_decomposition(I)
    if classical.intersection() != I:
        raise ValueError("certificate decomposition does not intersect "
                         "to the ideal")
    return classical


@dataclass(frozen=True)
class GPrimaryComponent:
    component: Ideal
    g_radical: Ideal
    status: str = VERIFIED


@dataclass(frozen=True)
class GDecomposition:
    target: Ideal
    components: tuple
    minimal: bool = True

    def intersection(self):
        return intersect_all([c.component for c in self.components],
                             self.target.ring)

    def radical_index(self, P):
        for i, c in enumerate(self.components):
            if c.g_radical == P:
                return i
        raise ValueError("not a G-radical of this decomposition")

    def check(self):
        if self.intersection() != self.target:
            raise AssertionError("components do not intersect to the target")
        comps = self.components
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if comps[i].g_radical == comps[j].g_radical:
                    raise AssertionError("G-radicals not pairwise distinct")
        for i in range(len(comps)):
            rest = [c.component for k, c in enumerate(comps) if k != i]
            if rest and intersect_all(rest, self.target.ring) == self.target:
                raise AssertionError("a component is redundant")
        return True


def g_radical(I, graded, classical=None):
    """star of the radical; the largest G-radical ideal inside sqrt(I)."""
    _require_homogeneous(I, graded, "g_radical")
    if classical is None:
        rad = radical_ideal(I)
    else:
        dec = _classical_for(I, classical)
        rad = intersect_all([c.radical for c in dec.components], I.ring)
    return star(rad, graded)


def is_g_radical(I, graded, classical=None):
    return g_radical(I, graded, classical) == I


def is_g_prime(P, graded, minimal=None):
    """A proper homogeneous P is G-prime iff it is the star of one of its
    own minimal primes."""
    if P.is_unit:
        return False
    _require_homogeneous(P, graded, "is_g_prime")
    primes = minimal if minimal is not None else minimal_primes(P)
    return any(star(p, graded) == P for p in primes)


def is_g_primary(Q, graded, classical=None):
    """A proper homogeneous Q is G-primary iff some component of its
    minimal classical decomposition stars to Q itself."""
    if Q.is_unit:
        return False
    _require_homogeneous(Q, graded, "is_g_primary")
    dec = _classical_for(Q, classical)
    return any(star(c.component, graded) == Q for c in dec.components)


def g_primary_decomposition(N, graded, classical=None):
    """Minimal G-primary decomposition of a homogeneous ideal.

    Stars each classical component, drops redundant ones, then merges
    components sharing a G-radical; intersections of G-primary ideals
    with equal G-radical stay G-primary, so merging is sound and the
    result is minimal.
    """
    _require_homogeneous(N, graded, "g_primary_decomposition")
    ring = N.ring
    if N.is_unit:
        raise ValueError("unit ideal has no primary decomposition")
    dec = _classical_for(N, classical)

    starred = []
    for c in dec.components:
        S = star(c.component, graded)
        P = star(c.radical, graded)
        starred.append(GPrimaryComponent(S, P, c.status))
    starred.sort(key=lambda g: (_canon_key(g.g_radical),
                                _canon_key(g.component)))

    kept = list(starred)
    i = 0
    while i < len(kept):
        trial = [g.component for k, g in enumerate(kept) if k != i]
        if trial and intersect_all(trial, ring) == N:
            kept.pop(i)
        else:
            i += 1

    by_radical = []
    for g in kept:
        for slot in by_radical:
            if slot[0] == g.g_radical:
                slot[1].append(g)
                break
        else:
            by_radical.append([g.g_radical, [g]])

    components = []
    for P, group in by_radical:
        comp = intersect_all([g.component for g in group], ring)
        status = VERIFIED if all(g.status == VERIFIED for g in group) \
            else ASSUMED
        components.append(GPrimaryComponent(comp, P, status))
    components.sort(key=lambda g: _canon_key(g.g_radical))
    return GDecomposition(N, tuple(components))


def g_associated_primes(N, graded, classical=None, gdec=None):
    """Stars of the classical associated primes, deduplicated.

    Cross-checked against the G-radicals of the G-primary decomposition;
    a mismatch would be an internal error.
    """
    _require_homogeneous(N, graded, "g_associated_primes")
    if classical is not None:
        ass = [c.radical for c in _classical_for(N, classical).components]
    else:
        ass = associated_primes(N)
    out = []
    for p in ass:
        P = star(p, graded)
        if not any(P == q for q in out):
            out.append(P)
    out.sort(key=_canon_key)

    if gdec is None:
        gdec = g_primary_decomposition(N, graded, classical)
    radicals = [c.g_radical for c in gdec.components]
    if len(radicals) != len(out) or \
            any(not any(P == Q for Q in radicals) for P in out):
        raise AssertionError("G-associated primes disagree with the "
                             "G-primary decomposition")
    return out


def g_minimal_primes(N, graded, classical=None):
    """Stars of the classical minimal primes, deduplicated."""
    _require_homogeneous(N, graded, "g_minimal_primes")
    if classical is not None:
        dec = _classical_for(N, classical)
        cands = [c.radical for c in dec.components]
        keep = []
        for i, p in enumerate(cands):
            if not any(j != i and cands[j] <= p and not (p <= cands[j])
                       for j in range(len(cands))):
                keep.append(p)
    else:
        keep = minimal_primes(N)
    out = []
    for p in keep:
        P = star(p, graded)
        if not any(P == q for q in out):
            out.append(P)
    out.sort(key=_canon_key)

    ass = g_associated_primes(N, graded, classical)
    for P in ass:
        if not any(Q <= P for Q in out):
            raise AssertionError("a G-associated prime contains no "
                                 "G-minimal prime")
    return out


def poset_component(gdec, omega):
    """Intersection of the components whose G-radicals lie in omega.

    omega must be downward closed in the inclusion order on the
    decomposition's G-radicals; the result is then independent of the
    decomposition.  Computed twice, directly and as a saturation, and
    the two answers are required to agree.
    """
    comps = gdec.components
    ring = gdec.target.ring
    idx = sorted({gdec.radical_index(P) for P in omega})
    chosen = set(idx)
    for i in chosen:
        for j in range(len(comps)):
            if j in chosen:
                continue
            if comps[i].g_radical >= comps[j].g_radical:
                raise ValueError("omega is not downward closed")

    direct = intersect_all([comps[i].component for i in idx], ring)
    J = intersect_all([c.g_radical for j, c in enumerate(comps)
                       if j not in chosen], ring)
    sat = saturate_ideal(gdec.target, J)
    if sat != direct:
        raise AssertionError("saturation route disagrees with direct "
                             "intersection")
    return direct


def g_associated_witness(N, graded, gdec, index, cap=64):
    """A homogeneous f with N : (f) equal to the index-th G-radical.

    Realizes the G-associated prime as an honest colon; existence is
    part of the theory, so failing to find one is an internal error.
    """
    comps = gdec.components
    P = comps[index].g_radical
    ring = N.ring
    others = [c.component for j, c in enumerate(comps) if j != index]
    M = intersect_all(others, ring)
    C = colon(N, M)
    n = 1
    power = P
    while not all(C.contains(g) for g in power.generators):
        n += 1
        if n > cap:
            raise ArithmeticError("no power of the G-radical fits the colon")
        power = ideal_product(power, P)
    L = ideal_product(ideal_power(P, n - 1), M)
    for f in L.canonical_generators():
        if colon(N, f) == P:
            return f
    raise AssertionError("no generator realizes the G-associated prime")


def _dimension_of_prime(P):
    ring = P.ring
    if P.is_zero:
        return ring.nvars
    if is_monomial_ideal(P):
        return ring.nvars - len(P.monomial_generators())
    if ring.nvars == 1:
        return 0
    raise UnsupportedClassError("dimension outside supported classes")


def verify_theorem_suite(I, graded, classical=None):
    """Structural consequences of the decomposition theory, checked on a
    concrete ideal.  Returns a report dict; statuses are pass, fail,
    assumed (certificate-dependent) or unsupported (class dispatch
    failed), and nothing is ever silently skipped.
    """
    ring = I.ring
    checks = []

    def add(name, status, detail=""):
        checks.append({"name": name, "status": status, "detail": detail})

    gdec = g_primary_decomposition(I, graded, classical)
    certified = all(c.status == VERIFIED for c in gdec.components)

    # (a) concatenating classical decompositions of the G-components
    # yields a minimal classical decomposition of the target.
    try:
        pieces = []
        for c in gdec.components:
            pieces.extend(classical_decomposition(c.component).components)
        ok = intersect_all([p.component for p in pieces], ring) == I
        if ok:
            rads = [p.radical for p in pieces]
            ok = all(rads[i] != rads[j]
                     for i in range(len(rads))
                     for j in range(i + 1, len(rads)))
        if ok and len(pieces) > 1:
            for i in range(len(pieces)):
                rest = [p.component for k, p in enumerate(pieces) if k != i]
                if intersect_all(rest, ring) == I:
                    ok = False
                    break
        status = "pass" if ok else "fail"
        if ok and not (certified and
                       all(p.status == VERIFIED for p in pieces)):
            status = "assumed"
        add("concatenated-classical-minimal", status,
            f"{len(pieces)} classical components")
    except UnsupportedClassError as exc:
        add("concatenated-classical-minimal", "unsupported", str(exc))

    # (b) G-primary components have no embedded primes.
    try:
        ok = True
        for c in gdec.components:
            ass = associated_primes(c.component)
            mins = minimal_primes(c.component)
            if len(ass) != len(mins) or \
                    any(not any(p == q for q in mins) for p in ass):
                ok = False
                break
        add("components-have-no-embedded-primes",
            "pass" if ok else "fail", f"{len(gdec.components)} components")
    except UnsupportedClassError as exc:
        add("components-have-no-embedded-primes", "unsupported", str(exc))

    # (c) Ass_G equals Min_G exactly when Ass equals Min.
    try:
        ass = associated_primes(I)
        mins = minimal_primes(I)
        classical_flat = len(ass) == len(mins)
        gass = g_associated_primes(I, graded, classical, gdec=gdec)
        gmin = g_minimal_primes(I, graded, classical)
        g_flat = len(gass) == len(gmin)
        add("g-ass-equals-g-min-iff-classical",
            "pass" if classical_flat == g_flat else "fail",
            f"classical {len(ass)}/{len(mins)}, graded "
            f"{len(gass)}/{len(gmin)}")
    except UnsupportedClassError as exc:
        add("g-ass-equals-g-min-iff-classical", "unsupported", str(exc))

    # (d) a G-radical ideal has no embedded primes.
    try:
        if is_g_radical(I, graded, classical):
            ass = associated_primes(I)
            mins = minimal_primes(I)
            ok = len(ass) == len(mins)
            add("g-radical-has-no-embedded-primes",
                "pass" if ok else "fail", f"{len(ass)} associated primes")
        else:
            add("g-radical-has-no-embedded-primes", "pass",
                "vacuous: ideal is not G-radical")
    except UnsupportedClassError as exc:
        add("g-radical-has-no-embedded-primes", "unsupported", str(exc))

    # (e) a G-primary ideal is equidimensional.
    try:
        if is_g_primary(I, graded, classical):
            dims = {_dimension_of_prime(p) for p in minimal_primes(I)}
            add("g-primary-is-equidimensional",
                "pass" if len(dims) == 1 else "fail",
                f"dimensions {sorted(dims)}")
        else:
            add("g-primary-is-equidimensional", "pass",
                "vacuous: ideal is not G-primary")
    except UnsupportedClassError as exc:
        add("g-primary-is-equidimensional", "unsupported", str(exc))

    if any(c["status"] == "fail" for c in checks):
        overall = "fail"
    elif any(c["status"] == "unsupported" for c in checks):
        overall = "unsupported"
    elif any(c["status"] == "assumed" for c in checks) or not certified:
        overall = "assumed"
    else:
        overall = "pass"
    return {"status": overall, "checks": checks}
