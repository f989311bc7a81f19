"""Substitution algorithms converting between adjacent adic levels.

Raising replaces powers U_i^{m_i} using the key recurrence until every
exponent respects its bound at level i+1; lowering substitutes the recurrence
for U_{i+1} and restores the bounds at level i.  Both record a trace of
intermediate expansions with their Gauss weights; the weight sequence is
nondecreasing and ends at the division-based weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basefield import KElem
from .errors import FuelExhaustedError, KeyvalError, LevelOutOfRangeError
from .keybasis import AdicExpansion, WeightedBasis
from .values import INF, Value


@dataclass
class FormalExpansion:
    """Like AdicExpansion, but without the exponent-bound constraints."""

    level: int
    terms: dict


@dataclass
class RewriteTrace:
    direction: str  # "raise" or "lower"
    entries: list = field(default_factory=list)

    @property
    def weights(self):
        return [w for _, w in self.entries]

    def record(self, terms, level, basis):
        w = formal_weight(FormalExpansion(level, terms), basis)
        self.entries.append((FormalExpansion(level, dict(terms)), w))


def formal_weight(E: FormalExpansion, basis: WeightedBasis) -> Value:
    """Gauss weight: min of nu(c) + sum a_j beta_j, Infinity when empty."""
    if E.level > basis.alpha:
        raise LevelOutOfRangeError("expansion level exceeds basis length")
    w = INF
    for a, c in E.terms.items():
        t = basis.term_weight(a, c)
        if t < w:
            w = t
    return w


def _combine(into: dict, exponents, coeff):
    prev = into.get(exponents)
    if prev is None:
        into[exponents] = coeff
    else:
        s = prev + coeff
        if s.is_zero():
            del into[exponents]
        else:
            into[exponents] = s


def _multiply(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            _combine(out, tuple(x + y for x, y in zip(ea, eb)), ca * cb)
    return out


def _power(e: dict, n: int, width: int) -> dict:
    result = {(0,) * width: KElem.one()}
    base = e
    while n:
        if n & 1:
            result = _multiply(result, base)
        base = _multiply(base, base)
        n >>= 1
    return result


def _pad(a, width):
    return a + (0,) * (width - len(a))


def _key_power_replacement(basis: WeightedBasis, j: int, width: int) -> dict:
    """U_j^{m_j} as an expansion at vector width: U_{j+1} minus lower terms."""
    cache = getattr(basis, "_repl_cache", None)
    if cache is None:
        cache = basis._repl_cache = {}
    cached = cache.get((j, width))
    if cached is not None:
        return cached
    step = basis.steps[j - 1]
    if step.m is None:
        raise KeyvalError("step %d has no integral degree ratio" % j)
    lead = (0,) * (j - 1) + (step.m,)
    out = {}
    for a, c in step.next_expansion.terms.items():
        if a == lead:
            continue
        out[_pad(a, width)] = -c
    unit = [0] * width
    unit[j] = 1  # index j is the 1-based level j+1
    _combine(out, tuple(unit), KElem.one())
    cache[(j, width)] = out
    return out


def _default_fuel(terms: dict, basis: WeightedBasis) -> int:
    deg = 1
    for a in terms:
        d = sum(e * basis.key(k + 1).degree for k, e in enumerate(a))
        deg = max(deg, d)
    mmax = max((s.m for s in basis.steps if s.m), default=1)
    return 10 * deg * basis.alpha * mmax


def _reduce_bounded(terms, basis, width, top, trace, fuel):
    """Rewrite passes: smallest violating index first, all occurrences at once.

    Exponents at 1-based positions 1..top are bounded by their m's; positions
    above ``top`` are free.
    """
    passes = 0
    while True:
        j = None
        for k in range(1, top + 1):
            m = basis.m(k)
            if any(a[k - 1] >= m for a in terms):
                j = k
                break
        if j is None:
            return terms, passes
        if passes >= fuel:
            raise FuelExhaustedError("rewriting exceeded %d passes" % fuel)
        m = basis.m(j)
        repl = _key_power_replacement(basis, j, width)
        powers = {}
        out = {}
        for a, c in terms.items():
            if a[j - 1] < m:
                _combine(out, a, c)
                continue
            q, r = divmod(a[j - 1], m)
            stub = list(a)
            stub[j - 1] = r
            hit = powers.get(q)
            if hit is None:
                hit = powers[q] = _power(repl, q, width)
            for eb, cb in hit.items():
                _combine(out, tuple(x + y for x, y in zip(stub, eb)), c * cb)
        terms = out
        passes += 1
        trace.record(terms, width, basis)


def raise_expansion(E: AdicExpansion, basis: WeightedBasis, fuel: int | None = None):
    """Convert an i-adic expansion to the (i+1)-adic expansion by rewriting."""
    i = E.level
    if i >= basis.alpha:
        raise LevelOutOfRangeError("cannot raise past the last level")
    width = i + 1
    terms = {a + (0,): c for a, c in E.terms.items()}
    if fuel is None:
        fuel = _default_fuel(terms, basis)
    trace = RewriteTrace("raise")
    trace.record(terms, width, basis)
    terms, passes = _reduce_bounded(terms, basis, width, i, trace, fuel)
    if passes:
        trace.record(terms, width, basis)  # the canonical result closes the trace
    return AdicExpansion(width, terms), trace


def lower_expansion(E: AdicExpansion, basis: WeightedBasis, fuel: int | None = None):
    """Convert an (i+1)-adic expansion to the i-adic expansion by rewriting."""
    lvl = E.level
    if lvl < 2 or lvl > basis.alpha:
        raise LevelOutOfRangeError("lowering needs a level between 2 and alpha")
    i = lvl - 1
    if fuel is None:
        fuel = _default_fuel(E.terms, basis)
    trace = RewriteTrace("lower")
    rewrote = any(a[-1] for a in E.terms)
    if not rewrote:
        terms = dict(E.terms)
        trace.record(terms, lvl, basis)
    else:
        # substitute the recurrence for every occurrence of the top key first;
        # recording the input expansion would break trace monotonicity.
        sub = {_pad(a, lvl): c for a, c in basis.steps[i - 1].next_expansion.terms.items()}
        powers = {}
        terms = {}
        for a, c in E.terms.items():
            e = a[-1]
            if not e:
                _combine(terms, a, c)
                continue
            stub = a[:-1] + (0,)
            hit = powers.get(e)
            if hit is None:
                hit = powers[e] = _power(sub, e, lvl)
            for eb, cb in hit.items():
                _combine(terms, tuple(x + y for x, y in zip(stub, eb)), c * cb)
        trace.record(terms, lvl, basis)
    terms, passes = _reduce_bounded(terms, basis, lvl, i - 1, trace, fuel)
    if rewrote or passes:
        trace.record(terms, lvl, basis)
    assert all(a[-1] == 0 for a in terms)
    return AdicExpansion(i, {a[:-1]: c for a, c in terms.items()}), trace
