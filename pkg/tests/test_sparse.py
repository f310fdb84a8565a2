#!/usr/bin/env python


"""
Unit tests for the sparse linear algebra library
"""

from __future__ import absolute_import, division, print_function
from fractions import Fraction
import unittest

from hypothesis import given
from hypothesis.strategies import integers, lists

from pyiara import sparse
from pyiara.sparse import Vector, EchelonBasis
from pyiara.cyclotomic import primitive_root


class VectorTest(unittest.TestCase):

    """
    Class to test Vector
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.a = Vector({'x': 1, 'y': Fraction(1, 2)})
        self.b = Vector({'x': -1, 'z': 3})
        super(VectorTest, self).__init__(*args, **kwargs)

    def test_maths(self):
        """Test vector arithmetic drops zeros"""
        s = self.a + self.b
        assert 'x' not in s
        assert s == Vector({'y': Fraction(1, 2), 'z': 3})
        assert self.a - self.a == Vector()
        assert not (self.a - self.a)
        assert 2 * self.a == Vector({'x': 2, 'y': 1})
        assert self.a.scale(0) == Vector()
        assert -self.b == Vector({'x': 1, 'z': -3})
        assert sparse.combine([(1, self.a), (1, self.b), (0, self.b)]) == s

    def test_repr(self):
        """Test deterministic printing"""
        assert repr(Vector()) == '0'
        assert repr(Vector({('E', 1, 2): -1})) == '(-1)*[E,1,2]'


class EchelonTest(unittest.TestCase):

    """
    Class to test EchelonBasis and friends
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.vecs = [Vector({0: 1, 1: 1}), Vector({1: 1, 2: 1}), Vector({0: 1, 2: -1})]
        super(EchelonTest, self).__init__(*args, **kwargs)

    def test_rank_and_kernel(self):
        """Test a dependent triple"""
        assert sparse.rank(self.vecs) == 2
        assert sparse.independent_subset(self.vecs) == [0, 1]
        ker = sparse.kernel(self.vecs)
        assert len(ker) == 1
        combo = sparse.combine([(c, self.vecs[i]) for i, c in ker[0].items()])
        assert not combo

    def test_solve(self):
        """Test solving against columns"""
        target = Vector({0: 2, 1: 3, 2: 1})
        coeffs = sparse.solve(self.vecs, target)
        assert coeffs is not None
        assert sparse.combine(zip(coeffs, self.vecs)) == target
        assert sparse.solve(self.vecs, Vector({0: 1})) is None

    def test_cyclotomic_entries(self):
        """Test elimination over Q(i)"""
        i = primitive_root(4)
        eb = EchelonBasis([Vector({0: 1, 1: i})])
        assert eb.contains(Vector({0: i, 1: -1}))
        assert not eb.contains(Vector({0: 1, 1: -i}))

    def test_matrices(self):
        """Test dense helpers"""
        m = [[2, 1], [1, 1]]
        assert sparse.matrix_inverse(m) == [[1, -1], [-1, 2]]
        assert sparse.matrix_inverse([[1, 2], [2, 4]]) is None
        assert sparse.matrix_rank([[1, 2], [2, 4]]) == 1
        assert sparse.mat_vec(m, [1, 1]) == [3, 2]
        assert sparse.bilinear([1, 0], m, [0, 1]) == 1

    def test_semidefinite(self):
        """Test the semidefinite check"""
        assert sparse.is_positive_semidefinite([[2, -1], [-1, 2]])
        assert sparse.is_positive_semidefinite([[2, 0], [0, 0]])
        assert not sparse.is_positive_semidefinite([[0, 1], [1, 0]])
        assert not sparse.is_positive_semidefinite([[1, 2], [2, 1]])

    def test_lattice(self):
        """Test the integer row reduction"""
        basis = sparse.lattice_basis([[2, 0], [0, 2], [1, 1]])
        assert len(basis) == 2
        assert abs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]) == 2
        den, rows = sparse.integer_rows([[Fraction(1, 2), 1], [Fraction(1, 3), 0]])
        assert den == 6
        assert rows == [[3, 6], [2, 0]]


@given(lists(lists(integers(min_value=-3, max_value=3), min_size=3, max_size=3),
             min_size=1, max_size=5))
def test_lattice_basis_spans_rows(rows):
    basis = sparse.lattice_basis(rows)
    eb = EchelonBasis([Vector(dict(enumerate(b))) for b in basis])
    assert len(eb) == len(basis)
    for r in rows:
        assert eb.contains(Vector(dict(enumerate(r))))


if __name__ == '__main__':
    unittest.main()
