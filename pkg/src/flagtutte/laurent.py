"""Exact Laurent polynomials in the character lattice of a torus.

A character t^a = t_1^{a_1} ... t_n^{a_n} is an exponent vector a in Z^n;
a :class:`LaurentPoly` maps exponent vectors to nonzero integer
coefficients.  A :class:`KRational` keeps its denominator as a multiset of
exponent vectors, each standing for a binomial factor (1 - t^a) — the only
denominators the localization formulas ever produce — so cancellation can
happen factor by factor and stay exact.
"""

from fractions import Fraction

from .errors import BadWeights, DimensionMismatch, InexactDivision, PoleAtOne


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Integer-coefficient Laurent polynomial, sparse exponent-dict form."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def one_minus(cls, exp):
        """The binomial 1 - t^exp."""
        exp = tuple(exp)
        zero = (0,) * len(exp)
        if exp == zero:
            return cls.zero(len(exp))
        return cls(len(exp), {zero: 1, exp: -1})

    # -- ring structure ---------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly(self.nvars, terms)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars,
                               {e: c * other for e, c in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                key = _vadd(e1, e2)
                v = terms.get(key, 0) + c1 * c2
                if v:
                    terms[key] = v
                else:
                    del terms[key]
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def shift(self, exp):
        """Multiply by the monomial t^exp."""
        exp = tuple(exp)
        return LaurentPoly(self.nvars,
                           {_vadd(e, exp): c for e, c in self.terms.items()})

    # -- queries ----------------------------------------------------------
    def sorted_terms(self):
        """Terms in ascending lex order on exponent vectors."""
        return sorted(self.terms.items())

    def subs_one(self):
        """Value at t_1 = ... = t_n = 1."""
        return sum(self.terms.values())

    def exact_divide(self, q):
        """The quotient self / q in the Laurent ring, if it is exact.

        Leading-term elimination under lex order; raises InexactDivision
        if no integer Laurent polynomial quotient exists.
        """
        self._check(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.nvars)
        lead_q = max(q.terms)
        lc_q = q.terms[lead_q]
        # quotient support is confined to the coordinate-wise Newton box
        lo = tuple(min(e[i] for e in self.terms) - max(e[i] for e in q.terms)
                   for i in range(self.nvars))
        hi = tuple(max(e[i] for e in self.terms) - min(e[i] for e in q.terms)
                   for i in range(self.nvars))
        rem = dict(self.terms)
        quot = {}
        while rem:
            lead_r = max(rem)
            c, r = divmod(rem[lead_r], lc_q)
            if r:
                raise InexactDivision("leading coefficient does not divide")
            mono = _vsub(lead_r, lead_q)
            if any(m < l or m > h for m, l, h in zip(mono, lo, hi)):
                raise InexactDivision("quotient support escapes Newton box")
            quot[mono] = c
            for e, qc in q.terms.items():
                key = _vadd(mono, e)
                v = rem.get(key, 0) - c * qc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return LaurentPoly(self.nvars, quot)

    def divisible_by(self, q):
        try:
            self.exact_divide(q)
            return True
        except InexactDivision:
            return False

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {format_poly(self)})"


def format_poly(p, names=None):
    """Human-readable form, 1-indexed variables t1..tn by default."""
    if p.is_zero():
        return "0"
    if names is None:
        names = [f"t{i + 1}" for i in range(p.nvars)]
    parts = []
    for e, c in sorted(p.terms.items(), reverse=True):
        mono = "*".join(
            f"{names[i]}" + (f"^{x}" if x != 1 else "")
            for i, x in enumerate(e) if x
        )
        if not mono:
            term = str(abs(c))
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}*{mono}"
        parts.append(("- " if c < 0 else "+ ") + term)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


class KRational:
    """Laurent polynomial divided by a multiset of factors (1 - t^a).

    The denominator is stored unexpanded; construction greedily cancels any
    factor that divides the numerator exactly, so the representation is
    reduced and a genuine Laurent polynomial always ends with no denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(), reduce=True):
        den = tuple(tuple(a) for a in den)
        if any(all(x == 0 for x in a) for a in den):
            raise ZeroDivisionError("denominator factor 1 - t^0 is zero")
        if num.is_zero():
            den = ()
        elif reduce and den:
            num, den = self._reduced(num, den)
        self.num = num
        self.den = tuple(sorted(den))

    @staticmethod
    def _reduced(num, den):
        remaining = []
        for a in sorted(den):
            factor = LaurentPoly.one_minus(a)
            try:
                num = num.exact_divide(factor)
            except InexactDivision:
                remaining.append(a)
        return num, tuple(remaining)

    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return not self.den

    def as_laurent(self):
        if self.den:
            raise InexactDivision(
                f"denominator {list(self.den)} does not cancel")
        return self.num

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = KRational.from_poly(other)
        lcm = _multiset_max(self.den, other.den)
        num = (self.num * _poly_product(self.num.nvars, _multiset_sub(lcm, self.den))
               + other.num * _poly_product(other.num.nvars, _multiset_sub(lcm, other.den)))
        return KRational(num, lcm)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = KRational.from_poly(other)
        return KRational(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        """Exact equality as rational functions (cross-multiplied)."""
        if not isinstance(other, KRational):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        left = self.num * _poly_product(self.nvars, other.den)
        right = other.num * _poly_product(self.nvars, self.den)
        return left == right

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if not self.den:
            return f"KRational({format_poly(self.num)})"
        den = " * ".join(f"(1 - {format_poly(LaurentPoly.monomial(a))})"
                         for a in self.den)
        return f"KRational(({format_poly(self.num)}) / {den})"


def _multiset_max(a, b):
    """Multiset union-by-maximum of two denominator factor lists."""
    counts = {}
    for t in a:
        counts[t] = counts.get(t, 0) + 1
    other = {}
    for t in b:
        other[t] = other.get(t, 0) + 1
    for t, c in other.items():
        counts[t] = max(counts.get(t, 0), c)
    out = []
    for t in sorted(counts):
        out.extend([t] * counts[t])
    return tuple(out)


def _multiset_sub(a, b):
    """Multiset difference a - b (b must be contained in a)."""
    counts = {}
    for t in a:
        counts[t] = counts.get(t, 0) + 1
    for t in b:
        counts[t] -= 1
    out = []
    for t in sorted(counts):
        assert counts[t] >= 0
        out.extend([t] * counts[t])
    return tuple(out)


def _poly_product(nvars, exps):
    p = LaurentPoly.one(nvars)
    for a in exps:
        p = p * LaurentPoly.one_minus(a)
    return p


def kr_add(a, b):
    return a + b


def kr_mul(a, b):
    return a * b


def evaluate_at_one(f, weights):
    """Evaluate at t_i -> 1 through the one-parameter subgroup t_i = z^{w_i}.

    Substitutes, cancels the common (1 - z) order between numerator and
    denominator, and evaluates at z = 1.  Raises BadWeights when a
    denominator factor collapses to zero identically and PoleAtOne when the
    numerator vanishes to lower order than the denominator.
    """
    if isinstance(f, LaurentPoly):
        f = KRational.from_poly(f)
    n = f.nvars
    if len(weights) != n:
        raise DimensionMismatch(f"need {n} weights, got {len(weights)}")
    dots = [sum(a_i * w_i for a_i, w_i in zip(a, weights)) for a in f.den]
    if any(d == 0 for d in dots):
        raise BadWeights(f"weights {tuple(weights)} kill a denominator factor")
    # numerator as a univariate Laurent polynomial in z
    uni = {}
    for e, c in f.num.terms.items():
        d = sum(x * w for x, w in zip(e, weights))
        v = uni.get(d, 0) + c
        if v:
            uni[d] = v
        else:
            del uni[d]
    order = len(dots)
    if not uni:
        return 0
    lo, hi = min(uni), max(uni)
    coeffs = [uni.get(d, 0) for d in range(lo, hi + 1)]
    for k in range(order):
        if sum(coeffs) != 0:
            raise PoleAtOne(k, order)
        # divide by (1 - z): running-sum synthetic division
        run, new = 0, []
        for c in coeffs[:-1]:
            run += c
            new.append(run)
        coeffs = new or [0]
    value = Fraction(sum(coeffs))
    for d in dots:
        value /= d  # each factor (1 - z^d) = (1 - z) * g with g(1) = d
    return int(value) if value.denominator == 1 else value
