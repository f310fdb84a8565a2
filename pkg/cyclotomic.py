#!/usr/bin/env python
'''
exact arithmetic over the rationals and the cyclotomic fields Q(zeta_m)

A CyclotomicScalar of order m is stored by its coefficients on the power
basis 1, z, ..., z^(phi(m)-1) of Q[z]/Phi_m(z), where z is the residue
class of the primitive root.  Any arithmetic result that is rational comes
back as a fractions.Fraction, so rational work stays on the fast path.
Scalars of different orders are embedded into the lcm of the orders first.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
from math import gcd
import numbers

import sympy
from sympy.parsing.sympy_parser import (parse_expr, standard_transformations,
                                        convert_xor)

from .iaraerror import DivisionByZero, IARAError

_z = sympy.Symbol('z')

# per-order caches: Phi_m coefficients, reduced powers of z, trace weights
_phi_cache = {}
_power_cache = {}
_trace_cache = {}


def cyclotomic_polynomial(m):
    '''return Phi_m as an integer sympy Poly in z'''
    if m < 1:
        raise IARAError("cyclotomic order must be positive, got %r" % (m,))
    return sympy.Poly(sympy.cyclotomic_poly(m, _z), _z)


def totient(m):
    '''Euler phi, the degree of Q(zeta_m)'''
    return int(sympy.totient(m))


def _phi_coeffs(m):
    '''ascending integer coefficients of Phi_m'''
    if m not in _phi_cache:
        poly = cyclotomic_polynomial(m)
        _phi_cache[m] = [int(c) for c in reversed(poly.all_coeffs())]
    return _phi_cache[m]


def _powers(m):
    '''z^k reduced modulo Phi_m for k = 0..m-1'''
    if m in _power_cache:
        return _power_cache[m]
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    cur = [0] * d
    cur[0] = 1
    table = []
    for k in range(m):
        table.append(tuple(cur))
        top = cur[d - 1]
        nxt = [0] + cur[:d - 1]
        if top:
            for i in range(d):
                nxt[i] -= top * phi[i]
        cur = nxt
    _power_cache[m] = table
    return table


def _trace_weights(m):
    '''normalised traces Tr(z^k)/phi(m) for the basis powers'''
    if m not in _trace_cache:
        weights = []
        for k in range(totient(m)):
            d = m // gcd(m, k)
            weights.append(Fraction(int(sympy.mobius(d)), totient(d)))
        _trace_cache[m] = weights
    return _trace_cache[m]


def _fold(m, terms):
    '''reduce a map exponent -> coefficient modulo Phi_m'''
    table = _powers(m)
    out = [Fraction(0)] * len(table[0])
    for e, c in terms:
        if not c:
            continue
        row = table[e % m]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return out


def _make(order, coeffs):
    '''collapse rational results to Fraction'''
    for c in coeffs[1:]:
        if c:
            return CyclotomicScalar._raw(order, tuple(coeffs))
    return Fraction(coeffs[0])


def _lift(x):
    if isinstance(x, CyclotomicScalar):
        return x.order, x.coeffs
    if isinstance(x, numbers.Rational):
        return 1, (Fraction(x),)
    return None


def _embed_coeffs(order, coeffs, target):
    if order == target:
        return coeffs
    if order == 1:
        return (coeffs[0],) + (Fraction(0),) * (totient(target) - 1)
    step = target // order
    return tuple(_fold(target, [(i * step, c) for i, c in enumerate(coeffs)]))


def _common(a, b):
    la = _lift(a)
    lb = _lift(b)
    if la is None or lb is None:
        return None
    (oa, ca), (ob, cb) = la, lb
    if oa == ob:
        return oa, ca, cb
    m = oa * ob // gcd(oa, ob)
    return m, _embed_coeffs(oa, ca, m), _embed_coeffs(ob, cb, m)


class CyclotomicScalar(object):
    '''an exact element of Q(zeta_m)'''
    __slots__ = ('order', 'coeffs')

    def __init__(self, order, coeffs):
        if order < 1:
            raise IARAError("cyclotomic order must be positive, got %r" % (order,))
        d = totient(order)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            coeffs = _fold(order, list(enumerate(coeffs)))
        coeffs += [Fraction(0)] * (d - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, order, coeffs):
        self = cls.__new__(cls)
        self.order = order
        self.coeffs = coeffs
        return self

    def is_rational(self):
        for c in self.coeffs[1:]:
            if c:
                return False
        return True

    def __bool__(self):
        for c in self.coeffs:
            if c:
                return True
        return False
    __nonzero__ = __bool__

    def __add__(self, other):
        com = _common(self, other)
        if com is None:
            return NotImplemented
        m, ca, cb = com
        return _make(m, [x + y for x, y in zip(ca, cb)])
    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.order, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        com = _common(self, other)
        if com is None:
            return NotImplemented
        m, ca, cb = com
        return _make(m, [x - y for x, y in zip(ca, cb)])

    def __rsub__(self, other):
        com = _common(other, self)
        if com is None:
            return NotImplemented
        m, ca, cb = com
        return _make(m, [x - y for x, y in zip(ca, cb)])

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            if not other:
                return Fraction(0)
            return _make(self.order, [c * other for c in self.coeffs])
        com = _common(self, other)
        if com is None:
            return NotImplemented
        m, ca, cb = com
        terms = {}
        for i, x in enumerate(ca):
            if not x:
                continue
            for j, y in enumerate(cb):
                if y:
                    terms[i + j] = terms.get(i + j, 0) + x * y
        return _make(m, _fold(m, terms.items()))
    __rmul__ = __mul__

    def inverse(self):
        '''multiplicative inverse via extended Euclid against Phi_m'''
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta_%u)" % self.order)
        if self.is_rational():
            return 1 / self.coeffs[0]
        f = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                        for c in reversed(self.coeffs)], _z, domain='QQ')
        g = sympy.Poly(list(reversed(_phi_coeffs(self.order))), _z, domain='QQ')
        h = f.invert(g)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(h.all_coeffs())]
        return _make(self.order, list(CyclotomicScalar(self.order, coeffs).coeffs))

    def __truediv__(self, other):
        if _lift(other) is None:
            return NotImplemented
        return self * inv(other)
    __div__ = __truediv__

    def __rtruediv__(self, other):
        if _lift(other) is None:
            return NotImplemented
        return other * self.inverse()
    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = Fraction(1)
        while n:
            if n & 1:
                result = base * result
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        com = _common(self, other)
        if com is None:
            return NotImplemented
        return com[1] == com[2]

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        # normalised trace is invariant under embedding, and equals the
        # value itself for rationals
        trace = Fraction(0)
        for c, w in zip(self.coeffs, _trace_weights(self.order)):
            if c:
                trace += c * w
        return hash(trace)

    def __repr__(self):
        return 'CyclotomicScalar(%u, %s)' % (self.order, format_scalar(self))

    def __str__(self):
        return format_scalar(self)


def primitive_root(m):
    '''the primitive m-th root of unity zeta_m'''
    return CyclotomicScalar._raw(m, tuple(Fraction(c) for c in _powers(m)[1 % m]))


def zeta_power(m, k):
    '''zeta_m^k for any integer k'''
    return _make(m, [Fraction(c) for c in _powers(m)[k % m]])


def embed(x, target):
    '''express x in Q(zeta_target); the order of x must divide target'''
    order, coeffs = _lift(x)
    if target % order:
        raise IARAError("cannot embed order %u into order %u" % (order, target))
    return CyclotomicScalar._raw(target, tuple(_embed_coeffs(order, coeffs, target)))


def inv(x):
    '''exact inverse of an int, Fraction or CyclotomicScalar'''
    if isinstance(x, CyclotomicScalar):
        return x.inverse()
    if not x:
        raise DivisionByZero("inverse of zero")
    return 1 / Fraction(x)


def div(a, b):
    return a * inv(b)


def is_rational(x):
    if isinstance(x, CyclotomicScalar):
        return x.is_rational()
    return isinstance(x, numbers.Rational)


def to_fraction(x):
    if isinstance(x, CyclotomicScalar):
        if not x.is_rational():
            raise IARAError("%s is not rational" % format_scalar(x))
        return x.coeffs[0]
    return Fraction(x)


def scalar_order(x):
    if isinstance(x, CyclotomicScalar):
        return x.order
    return 1


def scalar_sort_key(x):
    '''total order used for deterministic reporting'''
    if is_rational(x):
        return (0, to_fraction(x), ())
    return (1, x.order, x.coeffs)


def format_scalar(x):
    '''render as a polynomial in z, e.g. "1/2 - 1/2*z^2"'''
    if not isinstance(x, CyclotomicScalar):
        return str(Fraction(x))
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = 'z' if k == 1 else 'z^%u' % k
            body = mono if a == 1 else '%s*%s' % (a, mono)
        parts.append((c < 0, body))
    if not parts:
        return '0'
    text = ('-' if parts[0][0] else '') + parts[0][1]
    for neg, body in parts[1:]:
        text += (' - ' if neg else ' + ') + body
    return text


def parse_scalar(text, order=1):
    '''parse the format_scalar grammar; z denotes zeta_order'''
    try:
        expr = parse_expr(text, local_dict={'z': _z},
                          transformations=standard_transformations + (convert_xor,))
    except Exception as e:
        raise IARAError("cannot parse scalar '%s': %s" % (text, e))
    terms = []
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, exponent = term.as_coeff_exponent(_z)
        if not coeff.is_Rational or not exponent.is_Integer:
            raise IARAError("'%s' is not a rational polynomial in z" % text)
        terms.append((int(exponent), Fraction(int(coeff.p), int(coeff.q))))
    if not terms:
        return Fraction(0)
    return _make(order, _fold(order, terms))
