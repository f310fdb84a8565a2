#!/usr/bin/env python


"""
Unit tests for the graded coefficient algebras
"""

from __future__ import absolute_import, division, print_function
from fractions import Fraction
import unittest

from hypothesis import given
from hypothesis.strategies import composite, integers, lists, sampled_from, tuples

from pyiara import coeffalg
from pyiara.coeffalg import Window
from pyiara.iaraerror import (InvalidCocycle, InvalidSignMatrix, DegenerateBaseForm,
                              NotHomogeneous, WindowNotSymmetric)
from pyiara.sparse import Vector


class WindowTest(unittest.TestCase):

    """
    Class to test Window
    """

    def test_box(self):
        """Test the box window"""
        w = Window(2, 1)
        assert len(w) == 9
        assert (1, -1) in w
        assert (2, 0) not in w
        assert w.stamp() == '|lambda|<=1'
        assert Window(0).stamp() == 'finite'
        assert len(Window(0)) == 1

    def test_explicit(self):
        """Test explicit degree lists"""
        w = Window(1, degrees=[(0,), (2,), (-2,)])
        assert w.bound == 2
        assert w.explicit
        try:
            Window(1, degrees=[(0,), (1,)])
            assert False, "expected WindowNotSymmetric"
        except WindowNotSymmetric:
            pass


class BaseAlgebraTest(unittest.TestCase):

    """
    Class to test BaseAlgebra
    """

    def test_field(self):
        """Test B = F and B = F^2"""
        assert coeffalg.field_base().is_field()
        b = coeffalg.product_base(2)
        assert not b.is_field()
        assert b.eps(b.unit, b.unit) == 1
        assert b.inverse({0: 2, 1: 3}) == {0: Fraction(1, 2), 1: Fraction(1, 3)}
        assert b.inverse({0: 1}) is None

    def test_field_exact(self):
        """Test Q[x]/(x^2 - 4) is not a field while Q(sqrt 2) is"""
        split = coeffalg.BaseAlgebra(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 4}},
                                     {0: 1}, [[1, 0], [0, 4]], name='Q[x]/(x^2-4)')
        assert not split.is_field()
        u = split.non_unit()
        assert u
        assert split.inverse(u) is None
        assert split.minimal_polynomial({1: 1}).all_coeffs() == [1, 0, -4]
        quad = coeffalg.BaseAlgebra(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 2}},
                                    {0: 1}, [[1, 0], [0, 2]], name='Q(sqrt2)')
        assert quad.is_field()
        assert quad.inverse({0: 1, 1: 1}) == {0: -1, 1: 1}
        dual = coeffalg.BaseAlgebra(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
                                    {0: 1}, [[1, 1], [1, 0]], name='Q[x]/(x^2)')
        assert dual.nilradical() == [{1: 1}]
        assert not dual.is_field()
        assert coeffalg.product_base(2).inverse(coeffalg.product_base(2).non_unit()) is None

    def test_degenerate(self):
        """Test a zero form is rejected"""
        try:
            coeffalg.BaseAlgebra(1, {(0, 0): {0: 1}}, {0: 1}, [[0]])
            assert False, "expected DegenerateBaseForm"
        except DegenerateBaseForm:
            pass


class TwistedGroupAlgebraTest(unittest.TestCase):

    """
    Class to test twisted group algebras
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.alg = coeffalg.make_twisted_group_algebra(coeffalg.field_base(), 2, {(0, 1): -1})
        self.window = Window(2, 1)
        super(TwistedGroupAlgebraTest, self).__init__(*args, **kwargs)

    def test_products(self):
        """Test the twisted product"""
        z1 = self.alg.generator(0)
        z2 = self.alg.generator(1)
        assert self.alg.mul(z1, z2) == self.alg.monomial((1, 1), -1)
        assert self.alg.mul(z1, z2) == self.alg.mul(z2, z1)
        assert coeffalg.format_element(self.alg, self.alg.mul(z1, z2)) == '-z1*z2'
        assert coeffalg.format_element(self.alg, z1) == 'z1'
        assert self.alg.form_eps(self.alg.monomial((1, 1)), self.alg.monomial((-1, -1))) == 1
        assert self.alg.form_eps(z1, z2) == 0
        assert self.alg.name == 'F^t[Z^2]'

    def test_identities(self):
        """Test the algebra identities on a window"""
        for v in coeffalg.check_identities(self.alg, self.window):
            assert v.ok, v.line()

    def test_division(self):
        """Test predivision, division and torus"""
        assert coeffalg.is_predivision(self.alg, self.window).ok
        assert coeffalg.is_division(self.alg, self.window).ok
        assert coeffalg.is_torus(self.alg, self.window).ok
        split = coeffalg.make_twisted_group_algebra(coeffalg.product_base(2), 1)
        w = Window(1, 1)
        assert coeffalg.is_predivision(split, w).ok
        assert not coeffalg.is_division(split, w).ok
        assert not coeffalg.is_torus(split, w).ok

    def test_inverse(self):
        """Test inverting homogeneous elements"""
        x = self.alg.monomial((1, 1), 2)
        y = self.alg.invert_homogeneous(x)
        assert self.alg.mul(x, y) == self.alg.unit()
        try:
            self.alg.invert_homogeneous(self.alg.generator(0) + self.alg.generator(1))
            assert False, "expected NotHomogeneous"
        except NotHomogeneous:
            pass

    def test_invalid(self):
        """Test cocycle validation"""
        base = coeffalg.field_base()
        for cocycle in [{(0, 1): -1, (1, 0): 1}, {(0, 2): -1}, {(0, 0): 0}]:
            try:
                coeffalg.make_twisted_group_algebra(base, 2, cocycle)
                assert False, "expected InvalidCocycle for %s" % cocycle
            except InvalidCocycle:
                pass


class QAlgebraTest(unittest.TestCase):

    """
    Class to test the q-algebras
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.alg = coeffalg.make_q_algebra(coeffalg.field_base(), [[1, -1], [-1, 1]])
        self.window = Window(2, 1)
        super(QAlgebraTest, self).__init__(*args, **kwargs)

    def test_anticommuting(self):
        """Test z1 z2 = -z2 z1"""
        z1 = self.alg.generator(0)
        z2 = self.alg.generator(1)
        assert not self.alg.commutative
        assert self.alg.mul(z1, z2) == -self.alg.mul(z2, z1)
        assert self.alg.commutator(z1, self.alg.generator(0, 2)) == coeffalg.Vector()

    def test_identities(self):
        """Test associativity, the form and the involution"""
        for v in coeffalg.check_identities(self.alg, self.window):
            assert v.ok, v.line()
        assert coeffalg.check_involution(self.alg, self.window).ok
        assert self.alg.bar_sign((1, 1)) == -1
        assert self.alg.bar_sign((2, 1)) == 1

    def test_center_split(self):
        """Test A = [A,A] + Z(A)"""
        split = coeffalg.commutator_center_split(self.alg, self.window)
        assert split.central == [(0, 0)]
        assert len(split.commutators) == 8
        assert split.verdict().ok
        wide = coeffalg.commutator_center_split(self.alg, Window(2, 2))
        assert (2, 0) in wide.central
        assert (2, 2) in wide.central
        assert (1, 2) not in wide.central

    def test_invalid(self):
        """Test sign matrix validation"""
        base = coeffalg.field_base()
        for signs in [[[1, 1], [-1, 1]], [[1, 2], [2, 1]], [[-1]], [[1, 1]]]:
            try:
                coeffalg.make_q_algebra(base, signs)
                assert False, "expected InvalidSignMatrix for %s" % signs
            except InvalidSignMatrix:
                pass
        try:
            coeffalg.make_q_algebra(base, [[1, -1], [-1, 1]], total_order=[0, 0])
            assert False, "expected InvalidSignMatrix"
        except InvalidSignMatrix:
            pass

Q_TORUS = coeffalg.make_q_algebra(coeffalg.field_base(), [[1, -1], [-1, 1]])
TWISTED = coeffalg.make_twisted_group_algebra(coeffalg.field_base(), 2, {(0, 1): -1})


@composite
def elements(draw):
    '''sparse elements of a rank 2 algebra over F supported on the box |lambda| <= 1'''
    terms = draw(lists(tuples(integers(min_value=-1, max_value=1), integers(min_value=-1, max_value=1),
                              integers(min_value=-3, max_value=3)), max_size=4))
    out = {}
    for a, b, c in terms:
        out[((a, b), 0)] = out.get(((a, b), 0), 0) + c
    return Vector(out)


@given(sampled_from([Q_TORUS, TWISTED]), elements(), elements(), elements())
def test_associative(alg, x, y, z):
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


@given(sampled_from([Q_TORUS, TWISTED]), elements(), elements(), elements())
def test_form_invariant(alg, x, y, z):
    assert alg.form_eps(alg.mul(x, y), z) == alg.form_eps(x, alg.mul(y, z))


@given(sampled_from([Q_TORUS, TWISTED]), elements(), elements())
def test_form_symmetric(alg, x, y):
    assert alg.form_eps(x, y) == alg.form_eps(y, x)
    assert alg.form_eps(x, alg.unit()) == alg.form_eps(alg.unit(), x)


if __name__ == '__main__':
    unittest.main()
