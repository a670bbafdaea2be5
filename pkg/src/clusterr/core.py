"""Exact commutative arithmetic: Laurent polynomials, rational functions,
epsilon-scalars and tropical points.

Polynomials are plain dicts from exponent tuples to coefficients.  A
``LaurentRing`` fixes the variable order; elements carry a reference to it.
Coefficients are ints / ``fractions.Fraction`` or, when the ring has a
modulus, ints reduced mod p.
"""
from fractions import Fraction as Rational
from operator import add, sub


class NotDivisible(ArithmeticError):
    pass


def _clean(terms, modulus=None):
    if modulus is None:
        return {e: c for e, c in terms.items() if c != 0}
    out = {}
    for e, c in terms.items():
        c %= modulus
        if c:
            out[e] = c
    return out


class LaurentRing:
    """Ring of Laurent polynomials in a fixed, ordered list of variables."""

    def __init__(self, names, modulus=None):
        self.names = tuple(names)
        self.index = {v: k for k, v in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate variable names")
        self.modulus = modulus
        self.zero_exp = (0,) * len(self.names)

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.names == other.names \
            and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.names, self.modulus))

    def __repr__(self):
        return "LaurentRing(%d vars%s)" % (
            len(self.names), "" if self.modulus is None else ", mod %d" % self.modulus)

    def gen(self, name):
        e = [0] * len(self.names)
        e[self.index[name]] = 1
        return Laurent(self, {tuple(e): 1})

    def gens(self):
        return [self.gen(v) for v in self.names]

    def const(self, c):
        return Laurent(self, {self.zero_exp: c} if c else {})

    def one(self):
        return self.const(1)

    def zero(self):
        return Laurent(self, {})

    def monomial(self, exps, coeff=1):
        """Monomial from a dict name -> exponent."""
        e = [0] * len(self.names)
        for v, k in exps.items():
            e[self.index[v]] += k
        return Laurent(self, {tuple(e): coeff})


class Laurent:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = _clean(terms, ring.modulus)

    # -- basic protocol
    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Laurent(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Laurent(self.ring, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            (e, c), = self.terms.items()
            k = -k
            if self.ring.modulus is None:
                inv = Rational(1, c) if c not in (1, -1) else c
            else:
                inv = pow(c, -1, self.ring.modulus)
            base = Laurent(self.ring, {tuple(-a for a in e): inv})
        else:
            base = self
        out = self.ring.one()
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __repr__(self):
        return "Laurent(%s)" % self.to_text()

    # -- queries
    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def coefficients(self):
        return list(self.terms.values())

    def is_positive(self):
        """All coefficients nonnegative (and the polynomial nonzero)."""
        return bool(self.terms) and all(c > 0 for c in self.terms.values())

    def min_exponents(self):
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else None

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(k for k, a in enumerate(e) if a)
        return {self.ring.names[k] for k in used}

    def shift(self, exps):
        return Laurent(self.ring, {tuple(map(add, e, exps)): c for e, c in self.terms.items()})

    # -- evaluation
    def eval_mod(self, point, p):
        """Evaluate at a point (dict name -> int) modulo p."""
        vals = [point[v] % p for v in self.ring.names]
        total = 0
        inv_cache = {}
        for e, c in self.terms.items():
            t = c % p if not isinstance(c, Rational) else \
                c.numerator * pow(c.denominator, -1, p) % p
            for k, a in enumerate(e):
                if a > 0:
                    t = t * pow(vals[k], a, p) % p
                elif a < 0:
                    if k not in inv_cache:
                        inv_cache[k] = pow(vals[k], -1, p)
                    t = t * pow(inv_cache[k], -a, p) % p
            total += t
        return total % p

    def substitute(self, values, one):
        """Generic substitution: ``values`` maps names to objects supporting
        ``*``, ``+`` and integer powers (negative powers for monomials)."""
        total = None
        for e, c in self.terms.items():
            t = one * c
            for k, a in enumerate(e):
                if a:
                    t = t * (values[self.ring.names[k]] ** a)
            total = t if total is None else total + t
        return one * 0 if total is None else total

    def to_text(self, fmt=str):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                fmt(self.ring.names[k]) if a == 1 else "%s^%d" % (fmt(self.ring.names[k]), a)
                for k, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def laurent_mul(a, b):
    if a.ring is not b.ring and a.ring != b.ring:
        raise ValueError("ring mismatch")
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(map(add, ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return Laurent(a.ring, out)


def laurent_exact_divide(a, b):
    """Quotient q with q*b == a, or NotDivisible.

    Long division on lex-leading terms.  The quotient's exponents are boxed
    by a's and b's exponent ranges, which bounds the loop.
    """
    if not b.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if not a.terms:
        return a.ring.zero()
    ring = a.ring
    p = ring.modulus

    def cdiv(x, y):
        if p is not None:
            return x * pow(y, -1, p) % p
        q = Rational(x, y)
        return q.numerator if q.denominator == 1 else q

    if b.is_monomial():
        (eb, cb), = b.terms.items()
        neg = tuple(-x for x in eb)
        return Laurent(ring, {tuple(map(add, e, neg)): cdiv(c, cb)
                              for e, c in a.terms.items()})

    lo_a = [min(col) for col in zip(*a.terms)]
    hi_a = [max(col) for col in zip(*a.terms)]
    lo_b = [min(col) for col in zip(*b.terms)]
    hi_b = [max(col) for col in zip(*b.terms)]
    lo_q = [x - y for x, y in zip(lo_a, lo_b)]
    hi_q = [x - y for x, y in zip(hi_a, hi_b)]
    if any(l > h for l, h in zip(lo_q, hi_q)):
        raise NotDivisible("exponent ranges incompatible")

    eb, cb = b.leading()
    rem = dict(a.terms)
    quot = {}
    bterms = list(b.terms.items())
    while rem:
        er = max(rem)
        cr = rem[er]
        eq = tuple(map(sub, er, eb))
        if any(x < l or x > h for x, l, h in zip(eq, lo_q, hi_q)):
            raise NotDivisible("leading term escapes quotient box")
        cq = cdiv(cr, cb)
        quot[eq] = cq
        for e, c in bterms:
            k = tuple(map(add, eq, e))
            v = rem.get(k, 0) - cq * c
            if p is not None:
                v %= p
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Laurent(ring, quot)


class RatFunc:
    """A pair num/den of Laurent polynomials.

    No gcd is ever taken; equality is tested by cross-multiplication.
    """
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one()
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Laurent):
            return RatFunc(other)
        if isinstance(other, (int, Rational)):
            return RatFunc(self.ring.const(other))
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den).reduced()

    __rmul__ = __mul__

    def inverse(self):
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den ** -k, self.num ** -k)
        return RatFunc(self.num ** k, self.den ** k)

    def reduced(self):
        """Cheap normalisation: if the denominator is a monomial, absorb it;
        else try exact division of the numerator by the denominator."""
        if self.den.is_monomial():
            return RatFunc(laurent_exact_divide(self.num, self.den))
        return self

    def as_laurent(self):
        """The Laurent polynomial num/den, or NotDivisible."""
        return laurent_exact_divide(self.num, self.den)

    def eval_mod(self, point, p):
        d = self.den.eval_mod(point, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.num.eval_mod(point, p) * pow(d, -1, p) % p

    def substitute(self, values, one):
        return self.num.substitute(values, one) / self.den.substitute(values, one)

    def __repr__(self):
        return "RatFunc((%s) / (%s))" % (self.num.to_text(), self.den.to_text())


# Epsilon scalars: Laurent polynomials in the quantum parameter, kept as
# {exponent: coefficient}.

class EpsScalar:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def power(cls, k, coeff=1):
        return cls({k: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = EpsScalar(other)
        return isinstance(other, EpsScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = EpsScalar(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return EpsScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return EpsScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return EpsScalar({k: c * other for k, c in self.terms.items()})
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return EpsScalar(out)

    __rmul__ = __mul__

    def shift(self, k):
        return EpsScalar({a + k: c for a, c in self.terms.items()})

    def at(self, eps, p=None):
        """Value at eps (mod p when given)."""
        if p is None:
            return sum(c * Rational(eps) ** k for k, c in self.terms.items())
        return sum(c * pow(eps, k, p) for k, c in self.terms.items()) % p

    def is_monomial(self):
        return len(self.terms) == 1

    def __repr__(self):
        return "EpsScalar(%s)" % self.to_text()

    def to_text(self):
        if not self.terms:
            return "0"
        out = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                out.append(str(c))
            else:
                e = "e" if k == 1 else "e^%d" % k
                out.append(e if c == 1 else "-" + e if c == -1 else "%d*%s" % (c, e))
        return " + ".join(out).replace("+ -", "- ")


# Tropical semifield: exponent vectors, oplus = componentwise min.

class TropicalPoint:
    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    @classmethod
    def unit(cls, n, k):
        return cls(1 if j == k else 0 for j in range(n))

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    def __eq__(self, other):
        return isinstance(other, TropicalPoint) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __mul__(self, other):
        return trop_mul(self, other)

    def __truediv__(self, other):
        return TropicalPoint(map(sub, self.exps, other.exps))

    def __pow__(self, k):
        return TropicalPoint(k * a for a in self.exps)

    def inverse(self):
        return TropicalPoint(-a for a in self.exps)

    def oplus(self, other):
        return trop_add(self, other)

    def __repr__(self):
        return "Trop%s" % (self.exps,)


def trop_add(a, b):
    return TropicalPoint(map(min, a.exps, b.exps))


def trop_mul(a, b):
    return TropicalPoint(map(add, a.exps, b.exps))


def principal_part(num, den=None):
    """Tropical image of a subtraction-free ratio num/den.

    The semifield map sends a sum of monomials to the componentwise minimum
    of their exponents, so for subtraction-free input this is min(num) - min(den).
    """
    if isinstance(num, RatFunc):
        num, den = num.num, num.den
    for poly in (num, den):
        if poly is None:
            continue
        if not poly.terms:
            raise ValueError("zero polynomial has no tropical image")
        if any(c < 0 for c in poly.terms.values()):
            raise ValueError("not subtraction-free: negative coefficient")
    top = num.min_exponents()
    if den is None:
        return TropicalPoint(top)
    return TropicalPoint(map(sub, top, den.min_exponents()))
