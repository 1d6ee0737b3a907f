"""Finite continued fractions over the extended rationals, and k-sequences.

A continued fraction ``[a0; a1, ..., aN]`` is evaluated by the right-to-left
fold ``v <- a_i + 1/v`` using the partial arithmetic of :mod:`cfkit.exact`,
so zero partial quotients are legal (``[1,0]`` evaluates to ``inf``).  A
continued fraction is *simple* when every term after the first is >= 1; each
rational has exactly two finite simple expansions, distinguished here by the
parity of the index of the last term.

A *k-sequence* is a finitely supported sequence (k_1, k_2, ...) of natural
numbers; it encodes the number ``[0, 1, k_1, 1, k_2, ..., 1, k_h]``.  This
coordinate on [0,1) is the input to the path-counting machinery in
:mod:`cfkit.paths` and the invariant pipeline in :mod:`cfkit.correspondence`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .errors import DomainError
from .exact import ExtendedRational, add, as_extended, reciprocal

Parity = Literal["even", "odd"]


@dataclass(frozen=True)
class ContinuedFraction:
    """``[a0; a1, ..., aN]`` with integer terms, a_i >= 0 for i >= 1."""

    a0: int
    terms: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.a0, int):
            raise DomainError(f"a0 must be an integer, got {self.a0!r}")
        terms = tuple(self.terms)
        for t in terms:
            if not isinstance(t, int) or t < 0:
                raise DomainError(f"terms after a0 must be integers >= 0, got {t!r}")
        object.__setattr__(self, "terms", terms)

    @property
    def is_simple(self) -> bool:
        """True when every term after a0 is >= 1."""
        return all(t >= 1 for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return f"[{self.a0}]"
        return f"[{self.a0}; " + ", ".join(str(t) for t in self.terms) + "]"


@dataclass(frozen=True)
class KSequence:
    """Finitely supported sequence (k_1, ..., k_h), trailing zeros trimmed."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            if not isinstance(e, int) or e < 0:
                raise DomainError(f"k-sequence entries must be integers >= 0, got {e!r}")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @property
    def h(self) -> int:
        """Largest index with a nonzero entry; 0 for the zero sequence."""
        return len(self.entries)

    def at(self, i: int) -> int:
        """1-based entry access; 0 beyond the support."""
        if i < 1:
            raise DomainError(f"k-sequence index must be >= 1, got {i}")
        return self.entries[i - 1] if i <= len(self.entries) else 0

    @property
    def support(self) -> tuple[int, ...]:
        """Sorted 1-based indices of the nonzero entries."""
        return tuple(i for i, e in enumerate(self.entries, start=1) if e > 0)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def eval_terms(values: Iterable) -> ExtendedRational:
    """Evaluate ``[v0, v1, ..., vN]`` by the fold ``v <- v_i + 1/v``.

    The head value may be any extended rational; later terms are usually
    integers.  Integer-term fractions never evaluate to ``undefined``: a zero
    intermediate value just turns into ``inf`` one step up.
    """
    vals = [as_extended(v) for v in values]
    if not vals:
        raise DomainError("cannot evaluate an empty continued fraction")
    acc = vals[-1]
    for v in reversed(vals[:-1]):
        acc = add(v, reciprocal(acc))
    return acc


def eval_cf(cf: ContinuedFraction) -> ExtendedRational:
    """Exact value of a continued fraction in the extended rationals."""
    return eval_terms([cf.a0, *cf.terms])


def expand_simple(r, parity: Parity) -> ContinuedFraction:
    """The simple continued fraction of ``r`` in [0,1) with the given parity.

    Each rational in (0,1) has exactly two simple expansions with a0 = 0,
    related by ``[..., a] = [..., a-1, 1]``; their last-term indices have
    opposite parity.  ``r = 0`` expands to ``[0]`` (zero terms, counted as
    even); it has no odd expansion.
    """
    _check_parity(parity)
    r = Fraction(r)
    if not 0 <= r < 1:
        raise DomainError(f"expand_simple requires 0 <= r < 1, got {r}")
    if r == 0:
        if parity == "odd":
            raise DomainError("0 has no odd-parity simple expansion")
        return ContinuedFraction(0)
    terms = []
    num, den = r.numerator, r.denominator
    while num:
        terms.append(den // num)
        den, num = num, den % num
    # Euclid always ends with a term >= 2 for r in (0,1).
    assert terms[-1] >= 2
    if (len(terms) % 2 == 0) != (parity == "even"):
        terms[-1] -= 1
        terms.append(1)
    return ContinuedFraction(0, tuple(terms))


def convergents(cf: ContinuedFraction) -> list[tuple[int, int]]:
    """Convergents (p_0,q_0), ..., (p_N,q_N) of a simple CF with a0 = 0.

    p_0=0, p_1=1, q_0=1, q_1=a_1, then p_n = a_n p_{n-1} + p_{n-2} and
    q_n = a_n q_{n-1} + q_{n-2}; p_n/q_n equals the n-term truncation.
    """
    _require_zero_head_simple(cf, "convergents")
    out = [(0, 1)]
    p_prev, q_prev = 1, 0  # (p_{-1}, q_{-1}) so the recurrence covers n = 1
    p, q = 0, 1
    for a in cf.terms:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return out


def k_to_simple(k: KSequence) -> ContinuedFraction:
    """Rewrite the value of a nonzero k-sequence as a simple CF.

    With support p_1 < ... < p_m, the value [0,1,k_1,1,k_2,...] equals
    [0; p_1, k_{p_1}, p_2-p_1, k_{p_2}, ..., p_m-p_{m-1}, k_{p_m}], a simple
    CF with an even number of terms ending in k_{p_m}.
    """
    if k.h == 0:
        raise DomainError("the zero k-sequence has no simple CF form (its value is 0)")
    terms = []
    prev = 0
    for p in k.support:
        terms.append(p - prev)
        terms.append(k.at(p))
        prev = p
    return ContinuedFraction(0, tuple(terms))


def simple_to_k(cf: ContinuedFraction) -> KSequence:
    """Inverse of :func:`k_to_simple` on even-length simple CFs with a0 = 0.

    Reads off p_j = a_1 + a_3 + ... + a_{2j-1} and k_{p_j} = a_{2j}; all
    other entries are zero.  ``[0]`` maps to the zero sequence.
    """
    _require_zero_head_simple(cf, "simple_to_k")
    if len(cf.terms) % 2 != 0:
        raise DomainError(f"simple_to_k requires an even number of terms, got {len(cf.terms)}")
    entries: dict[int, int] = {}
    p = 0
    for j in range(0, len(cf.terms), 2):
        p += cf.terms[j]
        entries[p] = cf.terms[j + 1]
    out = [0] * p
    for i, v in entries.items():
        out[i - 1] = v
    return KSequence(tuple(out))


def k_value(k: KSequence) -> Fraction:
    """Exact value of ``[0, 1, k_1, 1, k_2, ..., 1, k_h]``; 0 for the zero sequence.

    Evaluated directly on the zero-padded form with the partial arithmetic,
    independently of :func:`k_to_simple`, so the two routes cross-check.
    """
    if k.h == 0:
        return Fraction(0)
    terms: list[int] = [0]
    for e in k.entries:
        terms.extend((1, e))
    v = eval_terms(terms)
    assert v.is_finite and 0 <= v.value < 1
    return v.value


def k_value_bounds(k_prefix: Sequence[int], depth: int) -> tuple[Fraction, Fraction]:
    """Exact interval bracketing every number whose k-sequence starts this way.

    Only the first ``depth`` entries of the prefix are trusted.  The lower
    endpoint is the value of the truncated sequence (attained when all later
    entries are zero); the upper endpoint appends the smallest simple-CF term
    any continuation could produce next, which by the even/odd convergent
    squeeze over-estimates every continuation.  Width shrinks as ``depth``
    grows, and the intervals for successive depths are nested.
    """
    entries = [int(e) for e in k_prefix]
    if any(e < 0 for e in entries):
        raise DomainError("k-sequence entries must be >= 0")
    if depth < 0 or depth > len(entries):
        raise DomainError(f"depth must be within the available prefix (0..{len(entries)})")
    truncated = KSequence(tuple(entries[:depth]))
    if truncated.h == 0:
        simple_terms: tuple[int, ...] = ()
        last_support = 0
    else:
        simple_terms = k_to_simple(truncated).terms
        last_support = truncated.support[-1]
    lo = eval_terms([0, *simple_terms])
    gap_min = depth - last_support + 1
    hi = eval_terms([0, *simple_terms, gap_min])
    assert lo.is_finite and hi.is_finite
    return lo.value, hi.value


def _check_parity(parity) -> None:
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")


def _require_zero_head_simple(cf: ContinuedFraction, where: str) -> None:
    if cf.a0 != 0:
        raise DomainError(f"{where} requires a0 = 0, got {cf.a0}")
    if not cf.is_simple:
        raise DomainError(f"{where} requires a simple CF (all terms >= 1)")
