"""Genus-0 correlator reconstruction for even intersections of two quadrics.

Every correlator is reduced to the known 3- and 4-point data through four
rewriting moves, applied in a fixed order:

  1. dimension and monodromy vanishing (degree not a nonnegative integer, or
     primitive exponents of mixed parity);
  2. fundamental-class and Euler-field elimination of slot-0 / slot-1
     insertions;
  3. WDVV coefficient extraction against the pair (slot 1, slot i-1) to
     remove an ambient insertion of index i >= 2;
  4. WDVV coefficient extraction among primitive slots to shorten a purely
     primitive correlator.

The one value the moves cannot determine, the length-(n+3) correlator with
one insertion on every primitive slot, stays symbolic: results are
polynomials in that unknown x.  All arithmetic is exact.

Values are memoized per canonical key (ambient exponents verbatim, primitive
exponents sorted descending); primitive-slot permutation invariance makes the
sort harmless.  The memo behaves as a write-once map, so concurrent queries
are safe under CPython and always agree.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from math import comb

from .model import ModelParams, ambient_3pt_tau
from .polynomials import UniPoly
from .scalars import GaussianRational

# ---------------------------------------------------------------------------
# sparse polynomials in the unknown x, as plain coefficient tuples

PZERO = ()
PONE = (Fraction(1),)
PX = (Fraction(0), Fraction(1))


def padd(p, q):
    if not p:
        return q
    if not q:
        return p
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def pscale(c, p):
    if not c or not p:
        return PZERO
    return tuple(c * a for a in p)


def pmul(p, q):
    if not p or not q:
        return PZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def peval(p, v):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * v + c
    return acc


class DivisionGuardError(ArithmeticError):
    """A recursion step hit a zero leading coefficient; this is a bug signal."""


class RecursionCycleError(RuntimeError):
    """A correlator's reduction required itself; this is a bug signal."""


def _bump(t, pos, k=1):
    out = list(t)
    out[pos] += k
    return tuple(out)


def index_triple(exponents):
    """Slots used by the generic primitive reduction step.

    Returns (a, b, c): a, b carry the two largest components, c the smallest
    component among the remaining slots; ties break to the lowest slot.
    Requires at least two nonzero components and not the all-ones vector.
    """
    exps = tuple(exponents)
    nonzero = sum(1 for v in exps if v)
    if nonzero <= 1:
        raise ValueError("index_triple: single nonzero component")
    if all(v == 1 for v in exps):
        raise ValueError("index_triple: all-ones vector is the special correlator")
    order = sorted(range(len(exps)), key=lambda s: (-exps[s], s))
    a, b = order[0], order[1]
    rest = [s for s in range(len(exps)) if s not in (a, b)]
    c = min(rest, key=lambda s: (exps[s], s))
    return a, b, c


class CorrelatorEngine:
    """Memoized correlator evaluator for a fixed even dimension n >= 4."""

    def __init__(self, n: int):
        self.params = ModelParams(n)
        self.n = n
        self.memo = {}
        self._local = threading.local()

    # -- canonical memoized entry ------------------------------------------

    def _T(self, amb, prim):
        key = (amb, tuple(sorted(prim, reverse=True)))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        active = getattr(self._local, "active", None)
        if active is None:
            active = self._local.active = set()
        if key in active:
            raise RecursionCycleError("correlator %r requires itself" % (key,))
        active.add(key)
        try:
            val = self._compute(key[0], key[1])
        finally:
            active.discard(key)
        return self.memo.setdefault(key, val)

    # -- the reduction ------------------------------------------------------

    def _compute(self, amb, prim):
        n = self.n
        length = sum(amb) + sum(prim)
        # dimension constraint: the degree axiom forces an integral,
        # nonnegative curve degree
        weighted = sum(k * v for k, v in enumerate(amb)) + (n // 2) * sum(prim)
        beta, rem = divmod(weighted - (n - 3 + length), n - 1)
        if rem or beta < 0:
            return PZERO
        # monodromy: all primitive exponents share one parity
        if any(prim):
            par = prim[0] & 1
            if any((v & 1) != par for v in prim):
                return PZERO
        if length == 3:
            return self._three_point(amb, prim)
        if amb[0]:
            return PZERO  # fundamental class axiom
        if amb[1]:
            return self._euler_step(amb, prim)
        nprim = sum(prim)
        if any(amb[k] for k in range(2, n + 1)):
            if nprim:
                return self._ambient_elim_mixed(amb, prim)
            return self._ambient_elim_leaf(amb, prim)
        # now purely primitive
        if nprim == 4:
            return PONE  # the two surviving shapes (4) and (2,2) both give 1
        if all(v == 1 for v in prim):
            return PX  # the special correlator
        if sum(1 for v in prim if v) == 1:
            return self._single_slot_step(prim)
        return self._generic_primitive_step(prim)

    def _three_point(self, amb, prim):
        n = self.n
        nprim = sum(prim)
        if nprim == 0:
            slots = []
            for k, v in enumerate(amb):
                slots.extend([k] * v)
            val = ambient_3pt_tau(n, *slots)
            return (val,) if val else PZERO
        if nprim == 2 and max(prim) == 2:
            # <eps_a, eps_a, gamma_k>: only the pairing against 1 survives
            return PONE if amb[0] == 1 else PZERO
        return PZERO

    def _euler_step(self, amb, prim):
        """Remove one slot-1 insertion via the Euler vector field.

        For length-4 correlators the tau^{n-1} component of the field feeds a
        pairing term through slot 0; it vanishes for longer correlators by
        the fundamental class axiom but must be kept here.
        """
        n = self.n
        iamb = _bump(amb, 1, -1)
        c0 = (
            sum((j - 1) * v for j, v in enumerate(iamb))
            + (Fraction(n, 2) - 1) * sum(prim)
            + 3
            - n
        )
        val = pscale(c0, self._T(iamb, prim))
        if iamb[n - 1]:
            corr = self._T(_bump(_bump(iamb, n - 1, -1), 0), prim)
            val = padd(val, pscale(Fraction(-(4 * n - 4) * iamb[n - 1]), corr))
        val = pscale(Fraction(1, n - 1), val)
        if iamb[n]:
            tail = self._T(_bump(_bump(iamb, n, -1), 1), prim)
            val = padd(val, pscale(Fraction(-12 * iamb[n]), tail))
        return val

    # -- WDVV machinery ------------------------------------------------------

    def _contract(self, mkA, mkB):
        """Sum A_e eta^{ef} B_f over the inverse-pairing structure."""
        n = self.n
        size = 2 * n + 4
        avals = [mkA(e) for e in range(size)]
        total = PZERO
        if avals[0]:
            b1 = mkB(1)
            if b1:
                total = padd(total, pscale(Fraction(-4), pmul(avals[0], b1)))
        if avals[1]:
            b0 = mkB(0)
            if b0:
                total = padd(total, pscale(Fraction(-4), pmul(avals[1], b0)))
        quarter = Fraction(1, 4)
        for e in range(n + 1):
            if avals[e]:
                bv = mkB(n - e)
                if bv:
                    total = padd(total, pscale(quarter, pmul(avals[e], bv)))
        for e in range(n + 1, size):
            if avals[e]:
                bv = mkB(e)
                if bv:
                    total = padd(total, pmul(avals[e], bv))
        return total

    def _with_slot(self, amb, prim, slot, k=1):
        n = self.n
        if slot <= n:
            return _bump(amb, slot, k), prim
        return amb, _bump(prim, slot - n - 1, k)

    def _subindices(self, vec):
        """All componentwise subindices J <= vec with their binomial weights."""
        ranges = [range(v + 1) for v in vec]
        for j in itertools.product(*ranges):
            w = 1
            for v, jv in zip(vec, j):
                if jv:
                    w *= comb(v, jv)
            yield j, w

    def _ambient_elim_mixed(self, amb, prim):
        n = self.n
        i = max(k for k in range(2, n + 1) if amb[k])
        if prim[0] >= 2:
            a = b = n + 1  # global slot of the largest primitive exponent
            prim2 = _bump(prim, 0, -2)
        else:
            a, b = n + 1, n + 2
            prim2 = _bump(_bump(prim, 0, -1), 1, -1)
        return self._wdvv_ambient_step(_bump(amb, i, -1), prim2, i, a, b)

    def _ambient_elim_leaf(self, amb, prim):
        n = self.n
        i = min(k for k in range(2, n + 1) if amb[k])
        rest = _bump(amb, i, -1)
        a = max(k for k in range(2, n + 1) if rest[k])
        rest = _bump(rest, a, -1)
        b = max(k for k in range(2, n + 1) if rest[k])
        rest = _bump(rest, b, -1)
        return self._wdvv_ambient_step(rest, prim, i, a, b)

    def _wdvv_ambient_step(self, amb, prim, i, a, b):
        """Extract the tau^I coefficient of WDVV for (slot1, slot i-1; a, b).

        The leading term of the left side is the target correlator because
        multiplying by the degree-one quantum class raises the power index by
        one; all other terms are strictly smaller in the termination order.
        """
        n = self.n
        flat = amb + prim
        na = n + 1
        val = PZERO
        for j, w in self._subindices(flat):
            jamb, jprim = j[:na], j[na:]
            kamb = tuple(x - y for x, y in zip(amb, jamb))
            kprim = tuple(x - y for x, y in zip(prim, jprim))
            sj = sum(j)
            wf = Fraction(w)
            # left side, J = 0 excluded (that term is the target)
            if sj:
                ja, jp = _bump(jamb, 1), jprim
                ja = _bump(ja, i - 1)

                def mk_a(e, _ja=ja, _jp=jp):
                    aa, pp = self._with_slot(_ja, _jp, e)
                    return self._T(aa, pp)

                ka, kp = self._with_slot(kamb, kprim, a)
                ka, kp = self._with_slot(ka, kp, b)

                def mk_b(f, _ka=ka, _kp=kp):
                    aa, pp = self._with_slot(_ka, _kp, f)
                    return self._T(aa, pp)

                val = padd(val, pscale(-wf, self._contract(mk_a, mk_b)))
            # right side, all J
            ja2, jp2 = self._with_slot(_bump(jamb, 1), jprim, a)

            def mk_a2(e, _ja=ja2, _jp=jp2):
                aa, pp = self._with_slot(_ja, _jp, e)
                return self._T(aa, pp)

            ka2, kp2 = self._with_slot(_bump(kamb, i - 1), kprim, b)

            def mk_b2(f, _ka=ka2, _kp=kp2):
                aa, pp = self._with_slot(_ka, _kp, f)
                return self._T(aa, pp)

            val = padd(val, pscale(wf, self._contract(mk_a2, mk_b2)))
        return val

    def _single_slot_step(self, prim):
        """Purely primitive with one active slot: split two insertions off."""
        n = self.n
        m = prim[0]
        inner = _bump(prim, 0, -2)
        size = sum(inner)
        coeff_a = Fraction(2 * size - 4, n - 1)  # partner slot exponent is 0
        if not coeff_a:
            raise DivisionGuardError(
                "single-slot reduction hit zero coefficient at exponent %d" % m
            )
        coeff_b = Fraction(2 * size - 4, n - 1) - 2 * inner[0]
        rhs = self._rhs_two_equal(inner, 0, 1)
        partner = self._T((0,) * (n + 1), _bump(inner, 1, 2))
        val = padd(rhs, pscale(-coeff_b, partner))
        return pscale(1 / coeff_a, val)

    def _generic_primitive_step(self, prim):
        n = self.n
        a, b, c = index_triple(prim)
        inner = _bump(_bump(prim, a, -1), b, -1)
        size = sum(inner)
        coeff = Fraction(2 * size - 4, n - 1) - 2 * inner[c]
        if not coeff:
            raise DivisionGuardError(
                "generic primitive reduction hit zero coefficient for %r" % (prim,)
            )
        rhs = self._rhs_distinct(inner, a, b, c)
        return pscale(1 / coeff, rhs)

    def _prim_pair_sums(self, inner, specs):
        """Shared loop for the purely primitive WDVV extractions.

        specs: list of (outer coefficient, |J| bounds, first-factor fixed
        slots, second-factor fixed slots); slots are global basis indices.
        """
        n = self.n
        amb0 = (0,) * (n + 1)
        total = PZERO
        size = sum(inner)
        for j, w in self._subindices(inner):
            sj = sum(j)
            k = tuple(x - y for x, y in zip(inner, j))
            for coeff, lo, hi, aslots, bslots in specs:
                if sj < lo or sj > size + hi:
                    continue
                ja, jp = amb0, j
                for s in aslots:
                    ja, jp = self._with_slot(ja, jp, s)

                def mk_a(e, _ja=ja, _jp=jp):
                    aa, pp = self._with_slot(_ja, _jp, e)
                    return self._T(aa, pp)

                ka, kp = amb0, k
                for s in bslots:
                    ka, kp = self._with_slot(ka, kp, s)

                def mk_b(f, _ka=ka, _kp=kp):
                    aa, pp = self._with_slot(_ka, _kp, f)
                    return self._T(aa, pp)

                total = padd(total, pscale(coeff * w, self._contract(mk_a, mk_b)))
        return total

    def _rhs_two_equal(self, inner, a, b):
        """Right side of the double-insertion extraction (slots a, a; b, b)."""
        n = self.n
        ga, gb = n + 1 + a, n + 1 + b
        q = Fraction(1, 4)
        specs = [
            (q, 2, 0, (1, n - 1), (ga, ga)),
            (q, 2, 0, (1, n - 1), (gb, gb)),
            (-q, 1, -1, (1, ga), (n - 1, ga)),
            (-q, 1, -1, (1, gb), (n - 1, gb)),
            (Fraction(-1), 2, -2, (ga, ga), (gb, gb)),
            (Fraction(1), 2, -2, (ga, gb), (ga, gb)),
        ]
        return self._prim_pair_sums(inner, specs)

    def _rhs_distinct(self, inner, a, b, c):
        """Right side of the distinct-slot extraction (slots a, b; c, c)."""
        n = self.n
        ga, gb, gc = n + 1 + a, n + 1 + b, n + 1 + c
        q = Fraction(1, 4)
        specs = [
            (q, 2, 0, (1, n - 1), (ga, gb)),
            (-q, 1, -1, (1, ga), (n - 1, gb)),
            (Fraction(-1), 2, -2, (ga, gb), (gc, gc)),
            (Fraction(1), 2, -2, (ga, gc), (gb, gc)),
        ]
        return self._prim_pair_sums(inner, specs)

    # -- public API -----------------------------------------------------------

    def _split(self, index):
        n = self.n
        index = tuple(int(v) for v in index)
        if len(index) != 2 * n + 4:
            raise ValueError(
                "index must have %d entries, got %d" % (2 * n + 4, len(index))
            )
        if any(v < 0 for v in index):
            raise ValueError("exponents must be nonnegative")
        if sum(index) < 3:
            raise ValueError("correlator length must be at least 3")
        return index[: n + 1], index[n + 1 :]

    def correlator_tau(self, index) -> UniPoly:
        """Correlator in small-quantum coordinates, as a polynomial in x."""
        amb, prim = self._split(index)
        return UniPoly(self._T(amb, prim))

    def correlator_t(self, index) -> UniPoly:
        """Correlator in cup-product coordinates, via the coordinate change."""
        n = self.n
        amb, prim = self._split(index)
        r_max, s_max = amb[n - 1], amb[n]
        val = PZERO
        for r in range(r_max + 1):
            for s in range(s_max + 1):
                coef = (
                    Fraction(comb(r_max, r) * comb(s_max, s))
                    * Fraction(-4) ** r
                    * Fraction(-12) ** s
                )
                amb2 = list(amb)
                amb2[n - 1] -= r
                amb2[0] += r
                amb2[n] -= s
                amb2[1] += s
                val = padd(val, pscale(coef, self._T(tuple(amb2), prim)))
        return UniPoly(val)

    def beta_of_t_index(self, index):
        """Curve degree forced by the dimension axiom, or None."""
        n = self.n
        index = tuple(int(v) for v in index)
        weighted = sum(k * v for k, v in enumerate(index[: n + 1])) + (n // 2) * sum(
            index[n + 1 :]
        )
        beta, rem = divmod(weighted - (n - 3 + sum(index)), n - 1)
        return None if rem else beta

    def correlator_classes(self, classes, beta) -> UniPoly:
        """Multilinear correlator of cohomology classes at fixed degree.

        Classes are coefficient vectors over the cup-coordinate basis
        (1, h_1..h_n, eps_1..eps_{n+3}); entries may be Gaussian rationals.
        """
        n = self.n
        size = 2 * n + 4
        if len(classes) < 3:
            raise ValueError("need at least three insertions")
        zero = GaussianRational(0)
        acc = {(0,) * size: GaussianRational(1)}
        for cls in classes:
            if len(cls) != size:
                raise ValueError("class vector must have %d entries" % size)
            support = []
            for slot, c in enumerate(cls):
                g = c if isinstance(c, GaussianRational) else GaussianRational(c)
                if g:
                    support.append((slot, g))
            nxt = {}
            for idx, cf in acc.items():
                for slot, g in support:
                    key = _bump(idx, slot)
                    cur = nxt.get(key)
                    nxt[key] = cf * g if cur is None else cur + cf * g
            acc = nxt
        out = {}
        for idx, cf in acc.items():
            if self.beta_of_t_index(idx) != beta:
                continue
            poly = self.correlator_t(idx)
            for k, coeff in enumerate(poly.coeffs):
                if coeff:
                    cur = out.get(k, zero)
                    out[k] = cur + cf * coeff
        if not out:
            return UniPoly(())
        coeffs = [out.get(k, zero) for k in range(max(out) + 1)]
        return UniPoly(coeffs)

    def f_value(self) -> UniPoly:
        """Correlator of the n+3 sliding-window plane classes.

        Expressed in the unnormalized middle-degree basis, so the
        coefficients are plain rationals for every even n.
        """
        from .geometry import sigma_interval_class

        n = self.n
        classes = [sigma_interval_class(w, n) for w in range(n + 3)]
        poly = self.correlator_classes(classes, beta=n // 2)
        if n % 4 == 2:
            # the engine unknown x is normalized; rewrite in terms of the
            # unnormalized unknown x' with x = i * x'
            i_pow = GaussianRational(0, 1)
            coeffs = []
            fac = GaussianRational(1)
            for c in poly.coeffs:
                coeffs.append(c * fac)
                fac = fac * i_pow
            poly = UniPoly(coeffs)
        out = []
        for c in poly.coeffs:
            if isinstance(c, GaussianRational):
                if not c.is_rational():
                    raise ArithmeticError("window correlator has imaginary part")
                out.append(c.re)
            else:
                out.append(Fraction(c))
        return UniPoly(out)

    def conjecture_quadratic_lhs(self) -> UniPoly:
        """The squares-on-n+1-slots correlator of length 2n+2."""
        n = self.n
        prim = (2,) * (n + 1) + (0, 0)
        return UniPoly(self._T((0,) * (n + 1), prim))

    def conjecture_quadratic(self) -> UniPoly:
        """Residual of the quadratic identity; zero means the identity holds."""
        n = self.n
        lhs = self.conjecture_quadratic_lhs()
        rhs = UniPoly((Fraction(-1, 4), Fraction(0), Fraction(1))) * (
            Fraction(2) ** (n - 3)
        )
        return lhs - rhs

    # -- diagnostics -----------------------------------------------------------

    def wdvv_extracted_residual(self, a, b, c, d, index) -> UniPoly:
        """Coefficient extraction of WDVV for components (a,b;c,d) at index.

        Returns left minus right; must be identically zero.
        """
        n = self.n
        amb, prim = self._split_relaxed(index)
        flat = amb + prim
        nslots = n + 1
        total = PZERO
        for j, w in self._subindices(flat):
            jamb, jprim = j[:nslots], j[nslots:]
            kamb = tuple(x - y for x, y in zip(amb, jamb))
            kprim = tuple(x - y for x, y in zip(prim, jprim))
            wf = Fraction(w)
            for x, y, u, v, sgn in ((a, b, c, d, 1), (a, c, b, d, -1)):
                ja, jp = self._with_slot(jamb, jprim, x)
                ja, jp = self._with_slot(ja, jp, y)

                def mk_a(e, _ja=ja, _jp=jp):
                    aa, pp = self._with_slot(_ja, _jp, e)
                    return self._T(aa, pp)

                ka, kp = self._with_slot(kamb, kprim, u)
                ka, kp = self._with_slot(ka, kp, v)

                def mk_b(f, _ka=ka, _kp=kp):
                    aa, pp = self._with_slot(_ka, _kp, f)
                    return self._T(aa, pp)

                total = padd(total, pscale(Fraction(sgn) * wf, self._contract(mk_a, mk_b)))
        return UniPoly(total)

    def _split_relaxed(self, index):
        n = self.n
        index = tuple(int(v) for v in index)
        if len(index) != 2 * n + 4 or any(v < 0 for v in index):
            raise ValueError("bad index")
        return index[: n + 1], index[n + 1 :]

    def cached_items(self):
        return sorted(self.memo.items())


def convergence_witness(n, lmax, engine=None, grid=Fraction(1, 4)):
    """Smallest grid multiple C with |v_I| <= (|I|-5)! C^{|I|-5} on the cache.

    Seeds the cache with every canonical index of length 5..lmax built from
    ambient slots 2..n and parity-uniform primitive exponents, specializes
    the unknown to the conjectural value (-1)^{n/2} / 2, then scans lengths
    6..lmax (length-5 entries give a C-independent constraint and are
    excluded).  Returns (C, number of indices inspected).
    """
    if lmax < 5:
        raise ValueError("lmax must be at least 5")
    eng = engine if engine is not None else CorrelatorEngine(n)
    nn = eng.n
    for total in range(5, lmax + 1):
        for amb in _ambient_exponents(nn, total):
            room = total - sum(amb)
            for prim in _prim_partitions(nn, room):
                full = amb + prim
                if eng.beta_of_t_index(full) is None:
                    continue
                eng._T(amb, prim)
    xval = Fraction((-1) ** (nn // 2), 2)
    best = Fraction(1)
    count = 0
    for (amb, prim), poly in eng.cached_items():
        length = sum(amb) + sum(prim)
        if not 6 <= length <= lmax:
            continue
        count += 1
        v = abs(peval(poly, xval))
        if not v:
            continue
        k = length - 5
        fact = 1
        for t in range(2, k + 1):
            fact *= t
        # smallest grid multiple m*grid with (m*grid)^k >= v / k!
        target = v / fact
        lo, hi = 1, 2
        while (hi * grid) ** k < target:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if (mid * grid) ** k >= target:
                hi = mid
            else:
                lo = mid + 1
        best = max(best, lo * grid)
    return best, count


def _ambient_exponents(n, total):
    """Exponent vectors over ambient slots 2..n with weight <= total."""
    slots = list(range(2, n + 1))

    def rec(pos, left):
        if pos == len(slots):
            yield ()
            return
        for v in range(left + 1):
            for rest in rec(pos + 1, left - v):
                yield (v,) + rest

    for combo in rec(0, total):
        vec = [0, 0] + list(combo)
        yield tuple(vec)


def _prim_partitions(n, total):
    """Parity-uniform descending exponent tuples over n+3 primitive slots."""
    slots = n + 3

    def parts(left, maxv, room):
        if left == 0:
            yield ()
            return
        if room == 0:
            return
        for v in range(min(left, maxv), 0, -1):
            for rest in parts(left - v, v, room - 1):
                yield (v,) + rest

    seen = set()
    for p in parts(total, total, slots):
        if len({v & 1 for v in p} | ({0} if len(p) < slots else set())) > 1:
            continue
        tup = tuple(p) + (0,) * (slots - len(p))
        if tup not in seen:
            seen.add(tup)
            yield tup


_engines = {}
_engines_lock = threading.Lock()


def get_engine(n: int) -> CorrelatorEngine:
    """Shared per-dimension engine so separate entry points reuse one cache."""
    with _engines_lock:
        eng = _engines.get(n)
        if eng is None:
            eng = _engines[n] = CorrelatorEngine(n)
        return eng
