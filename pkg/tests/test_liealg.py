#!/usr/bin/env python


"""
Unit tests for the Lie algebra and toral pair libraries
"""

from __future__ import absolute_import, division, print_function
from fractions import Fraction
import unittest

from pyiara import liealg, toral, coeffalg
from pyiara.coeffalg import Window
from pyiara.cyclotomic import zeta_power
from pyiara.iaraerror import NotToral, NoWitness, HypothesisUnmet, CenterNonzero
from pyiara.iarareport import PASS
from pyiara.slalg import make_sl, make_sl_Kpm
from pyiara.sparse import Vector
from pyiara.toral import Root


class LieAlgebraTest(unittest.TestCase):

    """
    Class to test the ambient Lie algebras
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.coeff = coeffalg.make_twisted_group_algebra(coeffalg.field_base(), 1)
        self.loop = liealg.TensorAlgebra(make_sl(2).algebra, self.coeff)
        self.ext = liealg.DegreeExtension(self.loop)
        super(LieAlgebraTest, self).__init__(*args, **kwargs)

    def test_matrix_bracket(self):
        """Test the matrix commutator and trace form"""
        sl2 = make_sl(2)
        alg = sl2.algebra
        one = alg.coeff.unit()
        e = alg.element(1, 2, one)
        f = alg.element(2, 1, one)
        h = alg.element(1, 1, one) - alg.element(2, 2, one)
        assert alg.bracket(e, f) == h
        assert alg.bracket(h, e) == e.scale(2)
        assert alg.form(e, f) == 1
        assert alg.form(h, h) == 2
        assert alg.describe(e) == 'e(1,2)'

    def test_abelian(self):
        """Test the abelian algebra"""
        a = liealg.abelian_algebra(3)
        x, y, z = a.basis()
        assert not a.bracket(x, y)
        assert a.form(x, x) == 1
        for v in liealg.check_algebra(a, a.basis()):
            assert v.ok

    def test_central_term(self):
        """Test [e(x)z, f(x)z^-1] picks up the central element"""
        sl2 = make_sl(2).algebra
        one = sl2.coeff.unit()
        e = sl2.element(1, 2, one)
        f = sl2.element(2, 1, one)
        h = sl2.element(1, 1, one) - sl2.element(2, 2, one)
        ez = self.loop.lift(e, self.coeff.monomial((1,)))
        fz = self.loop.lift(f, self.coeff.monomial((-1,)))
        br = self.ext.bracket(ez, fz)
        expect = self.loop.lift(h, self.coeff.unit()) + self.ext.central(0)
        assert br == expect
        d = self.ext.derivation(0)
        assert self.ext.bracket(d, ez) == ez
        assert self.ext.bracket(d, fz) == fz.scale(-1)
        assert self.ext.form(self.ext.central(0), d) == 1
        assert self.ext.form(d, d) == 0
        assert self.ext.describe(self.ext.central(0)) == 'c1'

    def test_loop_identities(self):
        """Test Jacobi and invariance on a windowed loop algebra"""
        sl2 = make_sl(2)
        basis = []
        for x in sl2.basis:
            for n in (-1, 0, 1):
                basis.append(self.loop.lift(x, self.coeff.monomial((n,))))
        basis.extend([self.ext.central(0), self.ext.derivation(0)])
        for v in liealg.check_algebra(self.ext, basis, samples=500):
            assert v.ok, v.line()

    def test_noncommutative_loop(self):
        """Test that loops need a commutative coefficient algebra"""
        q = coeffalg.make_q_algebra(coeffalg.field_base(), [[1, -1], [-1, 1]])
        try:
            liealg.TensorAlgebra(make_sl(2).algebra, q)
            assert False, "expected IARAError"
        except liealg.IARAError:
            pass


class ToralPairTest(unittest.TestCase):

    """
    Class to test ToralPair and the IARA axioms
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.sl2 = make_sl(2)
        self.sl3 = make_sl(3)
        super(ToralPairTest, self).__init__(*args, **kwargs)

    def test_roots(self):
        """Test the root space decomposition of sl3"""
        dec = self.sl3.decomposition()
        assert len(dec.roots()) == 7
        assert len(dec.nonzero_roots()) == 6
        assert dec.dim(self.sl3.zero_root()) == 2
        assert Root((2, -1)) in dec
        assert Root((1, 1)) in dec
        assert toral.root_form(self.sl3, Root((2, -1)), Root((2, -1))) == 2
        assert toral.root_form(self.sl3, Root((2, -1)), Root((-1, 2))) == -1

    def test_sl2(self):
        """Test sl2 roots and the sl2-triple"""
        dec = self.sl2.decomposition()
        assert [r.coords for r in dec.nonzero_roots()] == [(-2,), (2,)]
        e, h, f = toral.sl2_triple(self.sl2, Root((2,)))
        alg = self.sl2.algebra
        assert alg.bracket(e, f) == h
        assert toral.representative(self.sl2, Root((2,))) == \
            self.sl2.toral[0]
        try:
            toral.sl2_triple(self.sl2, Root((0,)))
            assert False, "expected NoWitness"
        except NoWitness:
            pass

    def test_axioms(self):
        """Test IA1-IA3 on sl2 and sl3"""
        for pair in (self.sl2, self.sl3):
            for v in toral.check_iara(pair, division=True):
                assert v.status == PASS, v.line()
            assert toral.check_split(pair).ok
            assert toral.zero_space_abelian(pair)

    def test_root_table(self):
        """Test the report table"""
        rows = toral.root_table(self.sl2)
        assert len(rows) == 3
        assert rows[-1][2] == 1
        assert rows[-1][3] == '2'

    def test_not_toral(self):
        """Test a dependent toral basis is rejected"""
        h = self.sl2.toral[0]
        try:
            toral.ToralPair(self.sl2.algebra, self.sl2.basis, [h, h.scale(2)])
            assert False, "expected NotToral"
        except NotToral:
            pass

    def test_nonweight_basis(self):
        """Test diagonalising when the basis is not a weight basis"""
        alg = self.sl2.algebra
        e, f, h = self.sl2.basis
        pair = toral.ToralPair(alg, [e + f, e - f, h], [h])
        dec = pair.decomposition()
        assert dec.dim(Root((2,))) == 1
        assert dec.dim(Root((-2,))) == 1
        assert toral.weight_of(pair, e + f) is None
        assert toral.weight_of(pair, e) == Root((2,))

    def test_cyclotomic_eigenvalues(self):
        """Test a rotation splits over Q(i) once order 4 is in play"""
        alg = liealg.StructureConstantAlgebra(['h', 'x', 'y'], {('h', 'x'): {'y': 1}, ('h', 'y'): {'x': -1}},
                                              {('h', 'h'): 1}, name='so2')
        h = Vector.unit('h')
        pair = toral.ToralPair(alg, alg.basis(), [h], order=4)
        dec = pair.decomposition()
        assert dec.roots() == [Root((0,)), Root((zeta_power(4, 3),)), Root((zeta_power(4, 1),))]
        for r in dec.roots():
            assert dec.dim(r) == 1
        v = dec.space(Root((zeta_power(4, 1),)))[0]
        assert alg.bracket(h, v) == v.scale(zeta_power(4, 1))
        try:
            toral.ToralPair(alg, alg.basis(), [h]).decomposition()
            assert False, "expected NotToral"
        except NotToral:
            pass

    def test_ia3_sampled(self):
        """Test a sampled IA3 check says how much it covered"""
        v = toral.check_IA3(self.sl3, samples=10)
        assert v.ok, v.line()
        assert v.detail.endswith(', sampled 10 of 48')
        assert 'sampled' not in toral.check_IA3(self.sl3).detail

    def test_ia3_bound(self):
        """Test the IA3 bound makes the verdict inconclusive"""
        v = toral.check_IA3(self.sl3, bound=1)
        assert v.status == 'inconclusive'
        assert toral.nilpotency_index(self.sl3, self.sl3.decomposition().roots(),
                                      Root((2, -1)), Root((-2, 1))) == 3


class SlKpmTest(unittest.TestCase):

    """
    Class to test sl_{K+-}(A)
    """

    def test_field_coefficients(self):
        """Test sl_3(F[z]) + V + V-dagger on a window"""
        coeff = coeffalg.make_twisted_group_algebra(coeffalg.field_base(), 1)
        pair = make_sl_Kpm(1, coeff, Window(1, 1))
        assert pair.split
        assert len(pair.toral) == 4
        dec = pair.decomposition()
        assert toral.check_split(pair, dec).ok
        v = toral.check_IA2(pair, dec)
        assert v.ok, v.line()
        assert pair.root_degree(dec.nonzero_roots()[0]) in ((-1,), (0,), (1,))

    def test_errors(self):
        """Test the construction errors"""
        try:
            make_sl(1)
            assert False, "expected HypothesisUnmet"
        except HypothesisUnmet:
            pass
        coeff = coeffalg.make_twisted_group_algebra(coeffalg.field_base(), 1)
        try:
            make_sl_Kpm(0, coeff)
            assert False, "expected HypothesisUnmet"
        except HypothesisUnmet:
            pass


if __name__ == '__main__':
    unittest.main()
