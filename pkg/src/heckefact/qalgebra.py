"""Exact arithmetic in q: sparse Laurent polynomials over Z, rational
functions over Q, and the standard q-combinatorial quantities built on them.

LaurentPoly is the universal coefficient for all Hecke computations; RatFunc
is the coefficient field used when series or projector formulas divide by
q-factorials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InternalInexactDivision


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Stored as a mapping exponent -> nonzero coefficient; the zero polynomial
    has an empty mapping.  Instances are immutable and hashable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def monomial(c, e) -> "LaurentPoly":
        return LaurentPoly({e: c})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Top exponent, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def valuation(self):
        """Bottom exponent, or None for the zero polynomial."""
        return min(self.terms) if self.terms else None

    def coeff(self, e) -> int:
        return self.terms.get(e, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d) -> "LaurentPoly":
        """Multiply by q^d."""
        return _raw({e + d: c for e, c in self.terms.items()})

    def scale_term(self, c, d) -> "LaurentPoly":
        """Multiply by the monomial c*q^d."""
        if not c:
            return ZERO
        return _raw({e + d: k * c for e, k in self.terms.items()})

    def divexact(self, other) -> "LaurentPoly":
        """Exact division; raises InternalInexactDivision on any remainder."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        # shift both to ordinary polynomials and long-divide from the top
        sv, ov = self.valuation(), other.valuation()
        num = {e - sv: c for e, c in self.terms.items()}
        den = {e - ov: c for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        out = {}
        nd = max(num) if num else None
        while num:
            nd = max(num)
            if nd < dd:
                raise InternalInexactDivision(f"remainder {self} / {other}")
            q, r = divmod(num[nd], lead)
            if r:
                raise InternalInexactDivision(f"remainder {self} / {other}")
            e = nd - dd
            out[e] = q
            for de, dc in den.items():
                s = num.get(de + e, 0) - dc * q
                if s:
                    num[de + e] = s
                else:
                    num.pop(de + e, None)
        return _raw(out).shift(sv - ov)

    # -- specialization ---------------------------------------------------

    def eval_at(self, q):
        """Evaluate at a concrete q (int or Fraction; q != 0 if negative exps)."""
        total = 0
        for e, c in self.terms.items():
            if e >= 0:
                total += c * q ** e
            else:
                total += Fraction(c, 1) / Fraction(q) ** (-e)
        return total

    def at_one(self) -> int:
        return sum(self.terms.values())

    def subs_qinv(self) -> "LaurentPoly":
        """Apply q -> 1/q."""
        return _raw({-e: c for e, c in self.terms.items()})

    # -- rendering --------------------------------------------------------

    def text(self) -> str:
        """Canonical text: ascending exponents, 'q^e' with coefficient prefix."""
        if not self.terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self.terms)):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json(self) -> dict:
        return {"q": {str(e): str(c) for e, c in sorted(self.terms.items())}}

    @staticmethod
    def from_json(obj) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in obj["q"].items()})

    def __repr__(self):
        return f"LaurentPoly({self.text()!r})"


def _raw(terms) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(p, "terms", terms)
    object.__setattr__(p, "_hash", None)
    return p


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q (helpers for RatFunc)
# ---------------------------------------------------------------------------

def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        coef = a[-1] / lead
        shift = len(a) - 1 - db
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
        a.pop()
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


class RatFunc:
    """A reduced ratio of polynomials in q over Q.

    Normal form: denominator monic and coprime to the numerator, so equality
    is structural.  Coefficients are tuples of Fractions, ascending degree.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _ptrim([Fraction(c) for c in num])
        den = _ptrim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (Fraction(1),)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc((Fraction(c),))

    @staticmethod
    def from_laurent(p: LaurentPoly) -> "RatFunc":
        if p.is_zero():
            return RF_ZERO
        v = p.valuation()
        shift = -v if v < 0 else 0
        deg = p.degree() + shift
        num = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            num[e + shift] = Fraction(c)
        den = [Fraction(0)] * shift + [Fraction(1)]
        return RatFunc(num, den)

    def as_laurent(self):
        """Back-convert when the denominator is a power of q and all
        coefficients are integers; returns None otherwise."""
        if len([c for c in self.den if c]) != 1 or self.den[-1] != 1:
            return None
        shift = len(self.den) - 1
        terms = {}
        for e, c in enumerate(self.num):
            if c:
                if c.denominator != 1:
                    return None
                terms[e - shift] = c.numerator
        return LaurentPoly(terms)

    # -- arithmetic -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        object.__setattr__(r, "num", _pneg(self.num))
        object.__setattr__(r, "den", self.den)
        return r

    def __sub__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _rcoerce(other) - self

    def __mul__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _rcoerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RF_ONE / self ** (-k)
        result = RF_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def eval_at(self, q):
        num = sum(c * Fraction(q) ** e for e, c in enumerate(self.num))
        den = sum(c * Fraction(q) ** e for e, c in enumerate(self.den))
        return num / den

    def text(self) -> str:
        lp = self.as_laurent()
        if lp is not None:
            return lp.text()
        return f"({_ptext(self.num)})/({_ptext(self.den)})"

    def __repr__(self):
        return f"RatFunc({self.text()!r})"


def _ptext(p):
    terms = {e: c for e, c in enumerate(p) if c}
    if not terms:
        return "0"
    parts = []
    for i, e in enumerate(sorted(terms)):
        c = terms[e]
        mag = abs(c)
        mags = str(mag) if mag.denominator != 1 else str(mag.numerator)
        if e == 0:
            body = mags
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            body = qpart if mag == 1 else f"{mags}*{qpart}"
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _rcoerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc((Fraction(x),))
    if isinstance(x, LaurentPoly):
        return RatFunc.from_laurent(x)
    return NotImplemented


RF_ZERO = RatFunc(())
RF_ONE = RatFunc((Fraction(1),))


# ---------------------------------------------------------------------------
# q-combinatorial quantities
# ---------------------------------------------------------------------------

def q_int(j: int) -> LaurentPoly:
    """[j]_q = (q^j - 1)/(q - 1) as a Laurent polynomial; j may be negative."""
    if j == 0:
        return ZERO
    if j > 0:
        return _raw({e: 1 for e in range(j)})
    return _raw({e: -1 for e in range(j, 0)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    """[n]!_q = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n).divexact(q_factorial(k) * q_factorial(n - k))


def q_multinomial(n: int, parts) -> LaurentPoly:
    """[n choose parts]_q; zero unless the parts are nonnegative and sum to n."""
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n or n < 0:
        return ZERO
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(n).divexact(den)


def q_catalan(n: int) -> LaurentPoly:
    """C_n(q) = [2n choose n]_q / [n+1]_q."""
    if n < 0:
        raise ValueError("q_catalan needs n >= 0")
    return q_binomial(2 * n, n).divexact(q_int(n + 1))


def q_narayana(n: int, k: int) -> LaurentPoly:
    """N_{n,k}(q) = [n choose k]_q [n choose k-1]_q / [n]_q."""
    if not 1 <= k <= n:
        raise ValueError("q_narayana needs 1 <= k <= n")
    return (q_binomial(n, k) * q_binomial(n, k - 1)).divexact(q_int(n))


def binom2(n: int) -> int:
    return n * (n - 1) // 2


# ---------------------------------------------------------------------------
# polynomials in the formal variable t over RatFunc
# ---------------------------------------------------------------------------

class TPoly:
    """A polynomial in t with RatFunc coefficients, ascending by t-degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_rcoerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @staticmethod
    def const(c) -> "TPoly":
        return TPoly((c,))

    @staticmethod
    def t() -> "TPoly":
        return TPoly((RF_ZERO, RF_ONE))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, d) -> RatFunc:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else RF_ZERO

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TPoly):
            other = TPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TPoly):
            other = TPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            other = TPoly.const(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [RF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return TPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "TPoly":
        c = _rcoerce(c)
        return TPoly([a * c for a in self.coeffs])

    def eval_t(self, value) -> RatFunc:
        value = _rcoerce(value)
        acc = RF_ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def specialize_q(self, q):
        """Evaluate every coefficient at a concrete q; returns Fraction list."""
        return [c.eval_at(q) for c in self.coeffs]

    def __repr__(self):
        return f"TPoly({[c.text() for c in self.coeffs]})"


def q_binom_t(k: int) -> TPoly:
    """The q-binomial basis polynomial binom(t, k)_q of degree k in t."""
    if k < 0:
        raise ValueError("q_binom_t needs k >= 0")
    prod = TPoly.const(RF_ONE)
    t = TPoly.t()
    for i in range(k):
        prod = prod * (t + TPoly.const(q_int(-i)))
    return prod.scale(RF_ONE / RatFunc.from_laurent(q_factorial(k)))


# ---------------------------------------------------------------------------
# partitions-adjacent q-quantities (hook formula for unipotent dimensions)
# ---------------------------------------------------------------------------

def unipotent_dim(parts) -> LaurentPoly:
    """Graded dimension q^{n(lam)} [n]!_q / prod [hook]_q for a partition."""
    from .permcore import Partition

    lam = parts if isinstance(parts, Partition) else Partition(parts)
    n = lam.size
    num = q_factorial(n).shift(lam.nlam())
    den = ONE
    for h in lam.hook_lengths():
        den = den * q_int(h)
    return num.divexact(den)
