#!/usr/bin/env python


"""
Unit tests for verdicts and report rendering
"""

from __future__ import absolute_import, division, print_function
from fractions import Fraction
import unittest

from pyiara.iarareport import Report, Verdict, PASS, FAIL


class ReportTest(unittest.TestCase):

    """
    Class to test Report rendering
    """

    def test_table_cells(self):
        """Test degree tuples print as plain numbers"""
        report = Report('t')
        section = report.section('affinize')
        section.table(['lambda', 'dim'], [((Fraction(-1, 1),), 3), ((Fraction(1, 2), 0), 1)])
        assert section.lines == ['lambda    dim', '(-1,)     3', '(1/2, 0)  1']
        assert 'Fraction' not in report.render()

    def test_long_names(self):
        """Test verdict names past the default width keep the columns aligned"""
        report = Report('t')
        section = report.section('roots')
        section.add(Verdict('R1', PASS, 'finite'))
        section.add(Verdict('hypothesis: sigma preserves the form', FAIL, 'finite', 'bad'))
        lines = [l for l in report.render().splitlines() if l.startswith('  ')]
        assert len(lines) == 2
        assert lines[0].index('PASS') == lines[1].index('FAIL')
        assert lines[1].startswith('  hypothesis: sigma preserves the form FAIL')
        assert Verdict('R1', PASS).line() == 'R1' + ' ' * 29 + 'PASS' + ' ' * 9 + '[finite]'


if __name__ == '__main__':
    unittest.main()
