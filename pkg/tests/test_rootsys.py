#!/usr/bin/env python


"""
Unit tests for affine reflection systems
"""

from __future__ import absolute_import, division, print_function
import os
import unittest

from pyiara import rootsys
from pyiara.iaraerror import StringBroken, RankTooHigh, ConfigError, IARAError
from pyiara.iarareport import PASS, HYPOTHESIS


def affine_bc1(bound=2):
    '''BC_1 + Z delta on the window |n| <= bound'''
    roots = [(a, n) for a in range(-2, 3) for n in range(-bound, bound + 1)]
    return rootsys.AffineReflectionSystem([[1, 0], [0, 0]], roots, [[0, 1]], bound, name='BC1+Z')


class FiniteSystemTest(unittest.TestCase):

    """
    Class to test finite root systems
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        simple = [(1, 0), (0, 1), (1, 1)]
        roots = simple + [(-a, -b) for a, b in simple]
        self.a2 = rootsys.AffineReflectionSystem([[2, -1], [-1, 2]], roots, name='A2')
        super(FiniteSystemTest, self).__init__(*args, **kwargs)

    def test_axioms(self):
        """Test R1-R5 on A2"""
        assert (0, 0) in self.a2
        assert len(self.a2.roots) == 7
        for v in rootsys.check_R1_R5(self.a2):
            assert v.status == PASS, v.line()
        assert self.a2.stamp() == 'finite'

    def test_strings(self):
        """Test root strings and the Cartan integers"""
        s = rootsys.root_string(self.a2, (0, 1), (1, 0))
        assert (s.d, s.u) == (0, 1)
        assert self.a2.pairing((0, 1), (1, 0)) == -1
        s = rootsys.root_string(self.a2, (1, 0), (1, 0))
        assert (s.d, s.u) == (2, 0)
        assert not s.truncated
        rows = rootsys.string_table(self.a2)
        assert len(rows) == 6 * 7
        try:
            rootsys.root_string(self.a2, (0, 0), (0, 0))
            assert False, "expected IARAError"
        except IARAError:
            pass

    def test_broken(self):
        """Test a broken string is found"""
        system = rootsys.AffineReflectionSystem([[2]], [(1,), (-1,), (3,), (-3,)])
        try:
            rootsys.root_string(system, (3,), (1,))
            assert False, "expected StringBroken"
        except StringBroken as e:
            assert e.gap == (-2,)
        names = dict((v.name, v.ok) for v in rootsys.check_R1_R5(system))
        assert not names['R3']

    def test_R2_R4_R5(self):
        """Test failures of R2, R4 and R5"""
        system = rootsys.AffineReflectionSystem([[2]], [(2,), (-2,)])
        names = dict((v.name, v.ok) for v in rootsys.check_R1_R5(system))
        assert not names['R2']
        a1a1 = rootsys.AffineReflectionSystem([[2, 0], [0, 2]], [(1, 0), (-1, 0), (0, 1), (0, -1)])
        names = dict((v.name, v.ok) for v in rootsys.check_R1_R5(a1a1))
        assert not names['R4']
        assert len(rootsys.components(a1a1.nonisotropic(), a1a1.form)) == 2
        gaps = rootsys.AffineReflectionSystem([[2, 0], [0, 0]], [(1, 0), (-1, 0), (0, 1), (0, -1)])
        names = dict((v.name, v.ok) for v in rootsys.check_R1_R5(gaps))
        assert not names['R5']

    def test_classify(self):
        """Test the classification by signature"""
        assert rootsys.classify_type(self.a2) == 'A_2'
        b2 = [(1, 0), (0, 1), (1, 1), (1, -1)]
        b2 = rootsys.AffineReflectionSystem([[1, 0], [0, 1]], b2 + [(-a, -b) for a, b in b2])
        assert rootsys.classify_type(b2) == 'B_2'
        a1a1 = rootsys.AffineReflectionSystem([[2, 0], [0, 2]], [(1, 0), (-1, 0), (0, 1), (0, -1)])
        assert rootsys.classify_type(a1a1) == 'unrecognized'
        rank5 = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
        roots = []
        for i in range(5):
            roots.append(tuple(1 if k == i else 0 for k in range(5)))
            roots.append(tuple(-1 if k == i else 0 for k in range(5)))
        try:
            rootsys.classify_type(rootsys.AffineReflectionSystem(rank5, roots))
            assert False, "expected RankTooHigh"
        except RankTooHigh:
            pass

    def test_exceptional(self):
        """Test G_2 in simple root coordinates and F_4 in doubled coordinates"""
        positive = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
        g2 = rootsys.AffineReflectionSystem([[2, -3], [-3, 6]], positive + [(-a, -b) for a, b in positive],
                                            name='G2')
        for v in rootsys.check_R1_R5(g2):
            assert v.status == PASS, v.line()
        assert g2.pairing((0, 1), (1, 0)) == -3
        assert rootsys.classify_type(g2) == 'G_2'
        f4 = rootsys._canonical('F', 4)
        assert len(f4) == 48
        ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        assert rootsys.classify_type(rootsys.AffineReflectionSystem(ident, f4, name='F4')) == 'F_4'
        assert len(rootsys._canonical('G', 2)) == 12

    def test_canonical(self):
        """Test the canonical signatures are distinct"""
        sigs = rootsys.canonical_signatures()
        assert len(sigs) == len(rootsys.CANONICAL_TYPES)
        assert len(rootsys._canonical('BC', 2)) == 12
        assert len(rootsys._canonical('D', 4)) == 24


class AffineSystemTest(unittest.TestCase):

    """
    Class to test windowed affine reflection systems
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        self.system = affine_bc1()
        super(AffineSystemTest, self).__init__(*args, **kwargs)

    def test_axioms(self):
        """Test R1-R5 with strings cut by the window"""
        assert self.system.stamp() == '|lambda|<=2'
        for v in rootsys.check_R1_R5(self.system):
            assert v.status == PASS, v.line()
        assert len(self.system.isotropic()) == 5
        assert rootsys.classify_type(self.system) == 'BC_1'
        s = rootsys.root_string(self.system, (0, 0), (1, 1))
        assert s.truncated

    def test_isotropic_fixed(self):
        """Test sigma fixes delta, and the hypothesis failing for delta -> -delta"""
        verdicts = rootsys.check_isotropic_fixed(self.system, [[1, 0], [0, 1]])
        assert verdicts[-1].name == 'isotropic roots fixed'
        assert all(v.ok for v in verdicts)
        verdicts = rootsys.check_isotropic_fixed(self.system, [[1, 0], [0, -1]])
        statuses = dict((v.name, v.status) for v in verdicts)
        assert statuses['hypothesis: pi(delta) != 0'] == HYPOTHESIS
        assert 'isotropic roots fixed' not in statuses

    def test_saveload(self):
        """Test the saving and loading to file"""
        rootsys.save_dump(self.system, 'roots.txt')
        assert os.path.isfile('roots.txt')
        loaded = rootsys.load_dump('roots.txt')
        os.remove('roots.txt')
        assert loaded.roots == self.system.roots
        assert loaded.gram == self.system.gram
        assert loaded.degree_rows == [[0, 1]]
        assert loaded.bound == 2

    def test_row_windows(self):
        """Test a window bound per degree row"""
        roots = [(a, m, n) for a in (-1, 0, 1) for m in range(-2, 3) for n in (-1, 0, 1)]
        system = rootsys.AffineReflectionSystem([[2, 0, 0], [0, 0, 0], [0, 0, 0]], roots,
                                                [[0, 1, 0], [0, 0, 1]], [2, 1], name='A1+Z2')
        assert system.bounds == [2, 1]
        assert system.in_window((1, 2, 1))
        assert not system.in_window((1, 1, 2))
        assert system.stamp() == '|lambda|<=(2,1)'
        assert 'window 2 1\n' in rootsys.dumps(system)
        assert rootsys.loads(rootsys.dumps(system)).bounds == [2, 1]
        assert rootsys.loads('gram 2\ndegree 1\nwindow 3\nroot 1\n').bounds == [3]
        try:
            rootsys.AffineReflectionSystem([[2]], [(1,)], [[1]], [1, 2])
            assert False, "expected IARAError"
        except IARAError:
            pass
        try:
            rootsys.loads('gram 2 0\ngram 0 0\ndegree 0 1\nwindow 1 2\nroot 1 0\n')
            assert False, "expected ConfigError"
        except ConfigError:
            pass

    def test_bad_dump(self):
        """Test dump parse errors carry the line number"""
        for text, line in [('gram 2\nroot x\n', 2), ('# c\ngram 2\nfoo 1\n', 3)]:
            try:
                rootsys.loads(text)
                assert False, "expected ConfigError"
            except ConfigError as e:
                assert e.line == line
                assert e.message.startswith('line %u:' % line)
        try:
            rootsys.loads('root 1\n')
            assert False, "expected ConfigError"
        except ConfigError:
            pass
        try:
            rootsys.loads('gram 1 0\ngram 0 0\ndegree 0 1\nroot 1 0\n')
            assert False, "expected ConfigError"
        except ConfigError:
            pass


if __name__ == '__main__':
    unittest.main()
