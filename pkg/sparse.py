'''
sparse vectors and exact linear algebra over Q(zeta_m)

Vectors map hashable basis keys to scalars (int, Fraction or
CyclotomicScalar) and never store zeros.  Basis keys are nested tuples;
key_order gives them a deterministic total order.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
from math import gcd

from .cyclotomic import inv, format_scalar


def key_order(key):
    '''deterministic sort key for basis keys of mixed shape'''
    return repr(key)


class Vector(object):
    '''a finitely supported linear combination of basis keys'''
    __slots__ = ('c',)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    self.c[k] = v

    @staticmethod
    def unit(key, scale=1):
        v = Vector()
        if scale:
            v.c[key] = scale
        return v

    def items(self):
        return self.c.items()

    def keys(self):
        return self.c.keys()

    def get(self, key, default=0):
        return self.c.get(key, default)

    def __getitem__(self, key):
        return self.c.get(key, 0)

    def __contains__(self, key):
        return key in self.c

    def __iter__(self):
        return iter(self.c)

    def __len__(self):
        return len(self.c)

    def __bool__(self):
        return len(self.c) > 0
    __nonzero__ = __bool__

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return Vector(out)

    def __sub__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) - v
        return Vector(out)

    def __neg__(self):
        r = Vector()
        r.c = dict((k, -v) for k, v in self.c.items())
        return r

    def scale(self, s):
        if not s:
            return Vector()
        r = Vector()
        for k, v in self.c.items():
            p = v * s
            if p:
                r.c[k] = p
        return r

    def __mul__(self, s):
        return self.scale(s)
    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if set(self.c) != set(other.c):
            return False
        for k, v in self.c.items():
            if v != other.c[k]:
                return False
        return True

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    __hash__ = None

    def sorted_items(self):
        return sorted(self.c.items(), key=lambda kv: key_order(kv[0]))

    def __repr__(self):
        if not self.c:
            return '0'
        return ' + '.join('(%s)*%s' % (format_scalar(v), format_key(k))
                          for k, v in self.sorted_items())


def format_key(key):
    '''compact text for a basis key'''
    if isinstance(key, tuple):
        return '[' + ','.join(format_key(k) for k in key) + ']'
    return str(key)


def combine(terms):
    '''sum of scalar * Vector pairs'''
    out = {}
    for s, v in terms:
        if not s:
            continue
        for k, c in v.c.items():
            out[k] = out.get(k, 0) + s * c
    return Vector(out)


class EchelonBasis(object):
    '''
    incrementally maintained reduced row echelon form of a set of sparse
    vectors, optionally tracking each row as a combination of the labels
    of the vectors that were added
    '''
    def __init__(self, vectors=None):
        self.rows = {}
        self.combos = {}
        self.pivots = []
        if vectors:
            for i, v in enumerate(vectors):
                self.add(v, i)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v, combo=None):
        '''residual of v modulo the span, and the tracked combination'''
        r = dict(v.c if isinstance(v, Vector) else v)
        cb = dict(combo) if combo else {}
        hits = [p for p in r if p in self.rows]
        for p in hits:
            c = r.get(p, 0)
            if not c:
                continue
            for k, x in self.rows[p].items():
                r[k] = r.get(k, 0) - c * x
            for k, x in self.combos[p].items():
                cb[k] = cb.get(k, 0) - c * x
        return (dict((k, x) for k, x in r.items() if x),
                dict((k, x) for k, x in cb.items() if x))

    def contains(self, v):
        return not self.reduce(v)[0]

    def add(self, v, label=None):
        '''
        add v; returns None if it was independent, otherwise the dependency
        combination (label -> coefficient) that sums to zero
        '''
        combo = {label: 1} if label is not None else {}
        r, cb = self.reduce(v, combo)
        if not r:
            return cb
        p = min(r, key=key_order)
        s = inv(r[p])
        r = dict((k, x * s) for k, x in r.items())
        cb = dict((k, x * s) for k, x in cb.items())
        for q in self.pivots:
            row = self.rows[q]
            c = row.get(p, 0)
            if not c:
                continue
            for k, x in r.items():
                row[k] = row.get(k, 0) - c * x
                if not row[k]:
                    del row[k]
            qc = self.combos[q]
            for k, x in cb.items():
                qc[k] = qc.get(k, 0) - c * x
                if not qc[k]:
                    del qc[k]
        self.rows[p] = r
        self.combos[p] = cb
        self.pivots.append(p)
        return None

    def coordinates(self, v):
        '''
        coefficients expressing v in the added vectors (by label), or None
        when v is outside the span
        '''
        r, cb = self.reduce(v)
        if r:
            return None
        return dict((k, -x) for k, x in cb.items())

    def basis(self):
        '''the reduced rows, sorted by pivot'''
        return [Vector(self.rows[p]) for p in sorted(self.pivots, key=key_order)]


def span_basis(vectors):
    '''canonical reduced basis of the span'''
    return EchelonBasis(vectors).basis()


def rank(vectors):
    return len(EchelonBasis(vectors))


def independent_subset(vectors):
    '''indices of a maximal independent subset, in input order'''
    eb = EchelonBasis()
    keep = []
    for i, v in enumerate(vectors):
        if eb.add(v) is None:
            keep.append(i)
    return keep


def kernel(images):
    '''
    kernel of the map sending basis index i to images[i]; returned as
    coefficient dicts over the indices
    '''
    eb = EchelonBasis()
    out = []
    for i, v in enumerate(images):
        dep = eb.add(v, i)
        if dep is not None:
            out.append(dep)
    return out


def solve(columns, target):
    '''coefficients c with sum c_i columns[i] = target, or None'''
    eb = EchelonBasis()
    for i, v in enumerate(columns):
        eb.add(v, i)
    coords = eb.coordinates(target)
    if coords is None:
        return None
    return [coords.get(i, 0) for i in range(len(columns))]


def matrix_rank(rows):
    '''rank of a dense matrix given as a list of rows'''
    return rank([Vector(dict(enumerate(r))) for r in rows])


def matrix_inverse(rows):
    '''exact inverse of a dense square matrix, None when singular'''
    n = len(rows)
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        s = inv(a[col][col])
        a[col] = [x * s for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_vec(m, v):
    out = []
    for row in m:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def bilinear(u, m, v):
    '''u^T m v for dense u, v'''
    return sum((x * y for x, y in zip(u, mat_vec(m, v)) if x and y), Fraction(0))


def is_positive_semidefinite(gram):
    '''exact symmetric pivoted elimination; rational entries only'''
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    alive = list(range(n))
    while alive:
        piv = None
        for i in alive:
            if a[i][i] < 0:
                return False
            if a[i][i] > 0 and piv is None:
                piv = i
        if piv is None:
            # all remaining diagonal entries are zero, so the block must be zero
            for i in alive:
                for j in alive:
                    if a[i][j]:
                        return False
            return True
        alive.remove(piv)
        d = a[piv][piv]
        for i in alive:
            f = a[i][piv] / d
            if f:
                for j in alive:
                    a[i][j] -= f * a[piv][j]
    return True


def lattice_basis(rows):
    '''
    Z-basis (as integer rows) of the lattice spanned by integer rows, by
    unimodular row reduction column by column
    '''
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    basis = []
    for col in range(ncols):
        while True:
            nz = [r for r in work if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for k in range(ncols):
                    r[k] -= q * p[k]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col]]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                piv = [-x for x in piv]
                work.remove(nz[0])
            else:
                work.remove(piv)
            basis.append(piv)
    return basis


def integer_rows(vectors):
    '''scale rational row vectors by a common denominator'''
    den = 1
    for v in vectors:
        for x in v:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
    return den, [[int(Fraction(x) * den) for x in v] for v in vectors]
