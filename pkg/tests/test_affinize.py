#!/usr/bin/env python


"""
Unit tests for loop algebras and extended affinizations
"""

from __future__ import absolute_import, division, print_function
import unittest

from pyiara import affinize, automorph, coeffalg, rootsys
from pyiara.affinize import GradingHomomorphism, HatRoot
from pyiara.coeffalg import Window
from pyiara.iaraerror import HypothesisUnmet
from pyiara.iarareport import FAIL, PASS
from pyiara.slalg import make_sl, make_sl_Kpm
from pyiara.toral import Root


def laurent(rank=1):
    return coeffalg.make_twisted_group_algebra(coeffalg.field_base(), rank)


class GradingHomomorphismTest(unittest.TestCase):

    """
    Class to test rho
    """

    def test_onto(self):
        """Test surjectivity onto Z_m"""
        assert GradingHomomorphism([1], 2).is_onto()
        assert not GradingHomomorphism([0], 2).is_onto()
        assert not GradingHomomorphism([2, 4], 6).is_onto()
        assert GradingHomomorphism([2, 3], 6).is_onto()
        assert GradingHomomorphism([0], 1).is_onto()
        rho = GradingHomomorphism([1, 2], 3)
        assert rho((1, 1)) == 0
        assert rho((1, 0)) == 1


class UntwistedAffinizationTest(unittest.TestCase):

    """
    Class to test sl2 (x) F[z] + V + V-dagger
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.sl2 = make_sl(2)
        sigma = automorph.identity_automorphism(self.sl2)
        loop = affinize.loop_algebra(self.sl2, sigma, laurent(), [0], Window(1, 1))
        self.ext = affinize.extend(loop)
        super(UntwistedAffinizationTest, self).__init__(*args, **kwargs)

    def test_dimensions(self):
        """Test the windowed components"""
        loop = self.ext.loop
        assert loop.dims() == [((-1,), 3), ((0,), 3), ((1,), 3)]
        assert self.ext.pair.dim() == 11
        assert len(self.ext.pair.toral) == 3

    def test_hat_roots(self):
        """Test the hat roots are alpha + n delta"""
        hats = affinize.hat_root_system(self.ext)
        assert len(hats) == 9
        assert HatRoot(Root((2,)), (1,)) in hats
        zero = HatRoot(Root((0,)), (0,))
        assert len(affinize.hat_root_space(self.ext, zero)) == 3
        assert len(affinize.hat_root_space(self.ext, HatRoot(Root((0,)), (1,)))) == 1
        assert affinize.check_hat_roots(self.ext).ok
        hat = HatRoot(Root((-2,)), (1,))
        assert self.ext.hat_root(self.ext.root(hat)) == hat

    def test_theorem(self):
        """Test the affinization is an IARA on the window"""
        for v in affinize.verify_theorem_affinization(self.ext, samples=300):
            assert v.status == PASS, v.line()

    def test_lifted_witnesses(self):
        """Test IA2 witnesses lifted from sl2 report their routes"""
        v = affinize.check_IA2_lifted(self.ext)
        assert v.ok, v.line()
        assert v.detail == 'bracket in T^0 6, isotropic pair via toral 2'
        assert len(v.witnesses) == 8

    def test_classify(self):
        """Test the affine root system is of type A_1 modulo the radical"""
        system = rootsys.system_from_pair(self.ext.pair)
        assert system.bound == 1
        for v in rootsys.check_R1_R5(system):
            assert v.ok, v.line()
        assert rootsys.classify_type(system) == 'A_1'


class TwistedAffinizationTest(unittest.TestCase):

    """
    Class to test the affinization of sl3 twisted by the diagram flip
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.sl3 = make_sl(3)
        self.sigma = automorph.transpose_involution(self.sl3)
        loop = affinize.loop_algebra(self.sl3, self.sigma, laurent(), [1], Window(1, 1))
        self.ext = affinize.extend(loop)
        super(TwistedAffinizationTest, self).__init__(*args, **kwargs)

    def test_components(self):
        """Test odd degrees carry g^1"""
        dims = dict(self.ext.loop.dims())
        assert dims[(0,)] == 3
        assert dims[(1,)] == 5
        assert self.ext.pair.dim() == 15

    def test_hat_roots(self):
        """Test the hat roots against the grading"""
        assert affinize.check_hat_roots(self.ext).ok
        system = rootsys.system_from_pair(self.ext.pair)
        assert rootsys.classify_type(system) == 'BC_1'

    def test_lifted_witnesses(self):
        """Test IA2 witnesses lifted through the diagram flip"""
        v = affinize.check_IA2_lifted(self.ext)
        assert v.ok, v.line()
        assert v.detail.startswith('bracket in T^0 ')
        assert 'isotropic pair via' in v.detail

    def test_unmet(self):
        """Test rho must be onto and A must be commutative"""
        try:
            affinize.loop_algebra(self.sl3, self.sigma, laurent(), [0], Window(1, 1))
            assert False, "expected HypothesisUnmet"
        except HypothesisUnmet:
            pass
        q = coeffalg.make_q_algebra(coeffalg.field_base(), [[1, -1], [-1, 1]])
        try:
            affinize.loop_algebra(self.sl3, self.sigma, q, [1, 0], Window(2, 1))
            assert False, "expected HypothesisUnmet"
        except HypothesisUnmet:
            pass


class IterateTest(unittest.TestCase):

    """
    Class to test sigma-hat on an untwisted affinization
    """

    def test_iterate(self):
        """Test the fixed algebra of sigma (x) mu"""
        sl3 = make_sl(3)
        loop = affinize.loop_algebra(sl3, automorph.identity_automorphism(sl3), laurent(), [0],
                                     Window(1, 1))
        ext = affinize.extend(loop)
        sigma_hat, verdicts = affinize.iterate(ext, automorph.transpose_involution(sl3), [1])
        assert sigma_hat.order == 2
        names = dict((v.name, v) for v in verdicts)
        assert names['iterated fixed algebra'].ok, names['iterated fixed algebra'].line()
        assert names['homomorphism'].ok
        assert names['A3 isometry'].ok

class SlKpmAffinizationTest(unittest.TestCase):

    """
    Class to test the affinization of sl_3(F_q[z]) under x -> -x*
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        q = coeffalg.make_q_algebra(coeffalg.field_base(), [[1]])
        self.base = make_sl_Kpm(1, q, Window(1, 1))
        self.sigma = automorph.transpose_involution(self.base)
        loop = affinize.loop_algebra(self.base, self.sigma, laurent(), [1], Window(1, 2))
        self.ext = affinize.extend(loop)
        super(SlKpmAffinizationTest, self).__init__(*args, **kwargs)

    def test_degree_rows(self):
        """Test the z-degree stays a degree row with its own bound"""
        assert len(self.ext.pair.probes) == 2
        assert self.ext.pair.probe_bound(0) == 2
        assert self.ext.pair.probe_bound(1) == 1
        system = rootsys.system_from_pair(self.ext.pair)
        assert system.bounds == [2, 1]
        assert system.bound == 2
        assert system.stamp() == '|lambda|<=(2,1)'
        loaded = rootsys.loads(rootsys.dumps(system))
        assert loaded.bounds == [2, 1]

    def test_root_system(self):
        """Test R1-R5 hold with strings cut at both windows"""
        system = rootsys.system_from_pair(self.ext.pair)
        for v in rootsys.check_R1_R5(system):
            assert v.ok, v.line()
        assert rootsys.classify_type(system) == 'BC_1'

    def test_theorem(self):
        """Test nothing fails on the windowed affinization"""
        for v in affinize.verify_theorem_affinization(self.ext, samples=300):
            assert v.status != FAIL, v.line()



if __name__ == '__main__':
    unittest.main()
