'''
ambient Lie algebras with invariant forms

Brackets and forms are defined on basis keys and evaluated on demand (and
memoised), so an algebra may be infinite dimensional; only the bases that
toral pairs carry are finite.  Elements are sparse Vectors over keys.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
import logging

from .coeffalg import zero_degree, add_degrees, format_element
from .cyclotomic import format_scalar
from .iaraerror import IARAError
from .iarareport import Verdict, sample_tuples, FINITE
from .sparse import Vector, format_key

logger = logging.getLogger(__name__)


class LieAlgebra(object):
    '''base class: subclasses provide _bracket and _form on keys'''
    def __init__(self, name, rank=0):
        self.name = name
        self.rank = rank
        self._bcache = {}
        self._fcache = {}

    def bracket_keys(self, a, b):
        key = (a, b)
        r = self._bcache.get(key)
        if r is None:
            r = self._bracket(a, b)
            self._bcache[key] = r
        return r

    def form_keys(self, a, b):
        key = (a, b)
        r = self._fcache.get(key)
        if r is None:
            r = self._form(a, b)
            self._fcache[key] = r
        return r

    def degree(self, key):
        return zero_degree(self.rank)

    def bracket(self, x, y):
        out = {}
        for a, s in x.items():
            for b, t in y.items():
                for k, c in self.bracket_keys(a, b).items():
                    out[k] = out.get(k, 0) + s * t * c
        return Vector(out)

    def form(self, x, y):
        total = 0
        for a, s in x.items():
            for b, t in y.items():
                f = self.form_keys(a, b)
                if f:
                    total = total + s * t * f
        return total

    def ad_power(self, x, y, n):
        for _ in range(n):
            if not y:
                break
            y = self.bracket(x, y)
        return y

    def format_key(self, key):
        return format_key(key)

    def describe(self, v):
        '''readable text for an element'''
        if not v:
            return '0'
        parts = []
        for k, c in v.sorted_items():
            text = format_scalar(c)
            name = self.format_key(k)
            if text == '1':
                parts.append(name)
            elif text == '-1':
                parts.append('-' + name)
            else:
                parts.append('(%s)*%s' % (text, name))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, self.name)


class StructureConstantAlgebra(LieAlgebra):
    '''
    finite dimensional algebra from sparse tables: brackets[(a, b)] and
    gram[(a, b)], completed by antisymmetry and symmetry
    '''
    def __init__(self, keys, brackets, gram, name='g'):
        LieAlgebra.__init__(self, name)
        self.keys = list(keys)
        self.table = {}
        for (a, b), v in brackets.items():
            v = v if isinstance(v, Vector) else Vector(v)
            self.table[(a, b)] = v
            self.table[(b, a)] = -v
        self.gram = {}
        for (a, b), v in gram.items():
            self.gram[(a, b)] = v
            self.gram[(b, a)] = v

    def _bracket(self, a, b):
        return self.table.get((a, b), Vector())

    def _form(self, a, b):
        return self.gram.get((a, b), 0)

    def basis(self):
        return [Vector.unit(k) for k in self.keys]


def abelian_algebra(n, name=None):
    '''n-dimensional abelian algebra with the standard form'''
    keys = ['h%u' % (i + 1) for i in range(n)]
    gram = dict(((k, k), 1) for k in keys)
    return StructureConstantAlgebra(keys, {}, gram, name=name or 'abelian%u' % n)


class MatrixAlgebra(LieAlgebra):
    '''
    gl over a coefficient algebra A: keys ('E', i, j, a) stand for a e_ij with a
    a basis key of A, bracket is the matrix commutator and the form is
    (a e_ij, b e_kl) = delta_il delta_jk eps(a, b)
    '''
    def __init__(self, indices, coeff, name=None):
        LieAlgebra.__init__(self, name or 'gl_%u(%s)' % (len(indices), coeff.name), coeff.rank)
        self.indices = list(indices)
        self.coeff = coeff

    def key(self, i, j, a):
        return ('E', i, j, a)

    def element(self, i, j, a):
        '''a e_ij for an element a of A'''
        return Vector(dict((('E', i, j, k), c) for k, c in a.items()))

    def _bracket(self, x, y):
        _, i, j, a = x
        _, k, l, b = y
        out = {}
        if j == k:
            for ck, c in self.coeff.mul_keys(a, b).items():
                key = ('E', i, l, ck)
                out[key] = out.get(key, 0) + c
        if l == i:
            for ck, c in self.coeff.mul_keys(b, a).items():
                key = ('E', k, j, ck)
                out[key] = out.get(key, 0) - c
        return Vector(out)

    def _form(self, x, y):
        _, i, j, a = x
        _, k, l, b = y
        if i != l or j != k:
            return 0
        return self.coeff.eps_keys(a, b)

    def degree(self, key):
        return key[3][0]

    def format_key(self, key):
        _, i, j, (l, b) = key
        mono = format_element(self.coeff, Vector.unit((l, b)))
        name = 'e(%d,%d)' % (i, j)
        if mono == '1':
            return name
        return '%s*%s' % (mono, name)


class TensorAlgebra(LieAlgebra):
    '''
    g (x) A for commutative A: keys ('T', x, a), bracket [x,y] (x) ab and form
    (x,y) eps(a,b); the degree is the A-degree
    '''
    def __init__(self, inner, coeff, name=None):
        if not coeff.commutative:
            raise IARAError("loop algebras need a commutative coefficient algebra")
        LieAlgebra.__init__(self, name or '%s(x)%s' % (inner.name, coeff.name), coeff.rank)
        self.inner = inner
        self.coeff = coeff

    def lift(self, x, a):
        '''x (x) a for x in the inner algebra and a in A'''
        out = {}
        for gk, s in x.items():
            for ak, t in a.items():
                out[('T', gk, ak)] = s * t
        return Vector(out)

    def _bracket(self, x, y):
        _, g1, a1 = x
        _, g2, a2 = y
        inner = self.inner.bracket_keys(g1, g2)
        if not inner:
            return inner
        out = {}
        prod = self.coeff.mul_keys(a1, a2)
        for gk, s in inner.items():
            for ak, t in prod.items():
                out[('T', gk, ak)] = s * t
        return Vector(out)

    def _form(self, x, y):
        _, g1, a1 = x
        _, g2, a2 = y
        f = self.inner.form_keys(g1, g2)
        if not f:
            return 0
        return f * self.coeff.eps_keys(a1, a2)

    def degree(self, key):
        return key[2][0]

    def format_key(self, key):
        _, gk, ak = key
        mono = format_element(self.coeff, Vector.unit(ak)).replace('z', 'w')
        inner = self.inner.format_key(gk)
        if mono == '1':
            return '%s@1' % inner
        return '%s@%s' % (inner, mono)


class DegreeExtension(LieAlgebra):
    '''
    L + V + V-dagger for a Z^r-graded algebra L: V = span(V_i) is central,
    [D_i, x] = deg(x)_i x, and [x, y] picks up the central term
    (x, y) sum_i deg(x)_i V_i; V and V-dagger are in duality under the form
    '''
    def __init__(self, inner, name=None):
        LieAlgebra.__init__(self, name or '%s+V+V*' % inner.name, inner.rank)
        self.inner = inner

    def central(self, i):
        return Vector.unit(('V', i))

    def derivation(self, i):
        return Vector.unit(('D', i))

    def _kind(self, key):
        if isinstance(key, tuple) and len(key) == 2 and key[0] in ('V', 'D'):
            return key[0]
        return None

    def _bracket(self, x, y):
        kx = self._kind(x)
        ky = self._kind(y)
        if kx == 'V' or ky == 'V' or (kx == 'D' and ky == 'D'):
            return Vector()
        if kx == 'D':
            return Vector.unit(y, self.inner.degree(y)[x[1]])
        if ky == 'D':
            return Vector.unit(x, -self.inner.degree(x)[y[1]])
        out = self.inner.bracket_keys(x, y)
        f = self.inner.form_keys(x, y)
        if f:
            out = Vector(out.c)
            for i, d in enumerate(self.inner.degree(x)):
                if d:
                    out.c[('V', i)] = d * f
        return out

    def _form(self, x, y):
        kx = self._kind(x)
        ky = self._kind(y)
        if kx is None and ky is None:
            return self.inner.form_keys(x, y)
        if set((kx, ky)) == set(('V', 'D')) and x[1] == y[1]:
            return 1
        return 0

    def degree(self, key):
        if self._kind(key):
            return zero_degree(self.rank)
        return self.inner.degree(key)

    def format_key(self, key):
        kind = self._kind(key)
        if kind == 'V':
            return 'c%u' % (key[1] + 1)
        if kind == 'D':
            return 'd%u' % (key[1] + 1)
        return self.inner.format_key(key)


def _first_failure(tuples, test):
    for t in tuples:
        if not test(*t):
            return t
    return None


def check_antisymmetry(alg, basis, samples=None, seed=0, window=FINITE):
    bad = _first_failure(sample_tuples(basis, 2, samples, seed),
                         lambda x, y: alg.bracket(x, y) == -alg.bracket(y, x))
    return Verdict.check('antisymmetry', bad is None, window,
                         '' if bad is None else 'fails on %s' % (bad,))


def check_jacobi(alg, basis, samples=None, seed=0, window=FINITE):
    '''[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on (sampled) basis triples'''
    def jacobi(x, y, z):
        b = alg.bracket
        return not (b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y))
    tuples = sample_tuples(basis, 3, samples, seed)
    bad = _first_failure(tuples, jacobi)
    return Verdict.check('jacobi', bad is None, window,
                         ('%u triples' % len(tuples)) if bad is None else
                         'fails on %s' % ', '.join(alg.describe(v) for v in bad))


def check_invariance(alg, basis, samples=None, seed=0, window=FINITE):
    '''symmetry and invariance of the form on (sampled) basis tuples'''
    def invariant(x, y, z):
        return alg.form(alg.bracket(x, y), z) == alg.form(x, alg.bracket(y, z))
    tuples = sample_tuples(basis, 3, samples, seed)
    bad = _first_failure(tuples, invariant)
    if bad is None:
        bad = _first_failure(sample_tuples(basis, 2, samples, seed),
                             lambda x, y: alg.form(x, y) == alg.form(y, x))
    return Verdict.check('form invariance', bad is None, window,
                         ('%u triples' % len(tuples)) if bad is None else
                         'fails on %s' % ', '.join(alg.describe(v) for v in bad))


def check_algebra(alg, basis, samples=None, seed=0, window=FINITE):
    '''antisymmetry, Jacobi and form invariance'''
    return [check_antisymmetry(alg, basis, samples, seed, window),
            check_jacobi(alg, basis, samples, seed, window),
            check_invariance(alg, basis, samples, seed, window)]
