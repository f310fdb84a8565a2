#!/usr/bin/env python


"""
regression tests for the pipeline driver and the preset gallery
"""

from __future__ import absolute_import, print_function
import os
import unittest

from pyiara import pipeline
from pyiara.iaraconfig import PipelineConfig
from pyiara.iaraerror import ConfigError, StepError
from pyiara.iarareport import FAIL, PASS


class PipelineTest(unittest.TestCase):

    """
    Class to test running configurations
    """

    def __init__(self, *args, **kwargs):
        """Constructor, set up some data that is reused in many tests"""
        super(PipelineTest, self).__init__(*args, **kwargs)

    def test_empty(self):
        """Test an empty pipeline passes with an empty summary"""
        report = pipeline.run(PipelineConfig('empty'))
        assert report.passed
        assert report.render() == '# empty\n== summary: \n== result: PASS\n'

    def test_step_error(self):
        """Test failures name the step"""
        config = PipelineConfig('broken')
        config.step('automorphism').set('kind', 'identity')
        try:
            pipeline.run(config)
            assert False, "expected StepError"
        except StepError as e:
            assert e.index == 1
            assert e.step == 'automorphism'
            assert isinstance(e.inner_exception, ConfigError)
            assert e.message.startswith('step 1 (automorphism):')

    def test_bad_coefficients(self):
        """Test coefficient step errors"""
        config = PipelineConfig('broken')
        config.step('coeff-algebra').set('kind', 'twisted').set('rank', 2).set('cocycle', 1, 2, 'x')
        try:
            pipeline.run(config)
            assert False, "expected StepError"
        except StepError as e:
            assert isinstance(e.inner_exception, ConfigError)
        config = PipelineConfig('broken')
        config.step('coeff-algebra').set('kind', 'q').set('signs', 1, 1).set('signs', -1, 1)
        try:
            pipeline.run(config)
            assert False, "expected StepError"
        except StepError as e:
            assert e.inner_exception.__class__.__name__ == 'InvalidSignMatrix'

    def test_coeff_step(self):
        """Test the coefficient algebra step for a q-algebra"""
        config = PipelineConfig('q')
        config.step('coeff-algebra').set('kind', 'q').set('signs', 1, -1).set('signs', -1, 1)
        report = pipeline.run(config)
        assert report.passed
        assert report.verdict('bar involution').ok
        assert report.verdict('associativity').ok

    def test_transpose_preset(self):
        """Test the sl3 diagram flip preset end to end"""
        report = pipeline.run(pipeline.get_preset('sl3_transpose_involution'))
        for v in report.verdicts():
            assert v.status == PASS, v.line()
        assert report.verdict('type of pi(R)').ok
        assert report.verdict('type of R^sigma').ok
        text = report.render()
        assert text.startswith('# sl3_transpose_involution\n== step 1: build-base\n')
        assert text.endswith('== result: PASS\n')
        assert text == pipeline.run(pipeline.get_preset('sl3_transpose_involution')).render()

    def test_toroidal_preset(self):
        """Test the twisted toroidal preset"""
        report = pipeline.run(pipeline.get_preset('example7_1'))
        assert report.passed, report.render()
        assert report.verdict('hypothesis: finite period').ok
        assert report.verdict('isotropic roots fixed').ok

    def quick(self, name):
        config = pipeline.get_preset(name)
        config.settings['samples'] = 300
        return pipeline.run(config)

    def test_grade_sigma_on_roots(self):
        """Test the grade step checks isotropic roots against the involution"""
        report = pipeline.run(pipeline.get_preset('sl3_transpose_involution'))
        grade = report.sections[2]
        assert grade.title == 'grade'
        assert 'transpose of order 2 on the roots of sl3' in grade.lines
        names = dict((v.name, v) for v in grade.verdicts)
        assert names['isotropic roots fixed'].ok, names['isotropic roots fixed'].line()
        assert names['hypothesis: finite period'].detail == 'period 2'

    def test_iterated_preset(self):
        """Test the iterated sl3 affinization preset"""
        report = self.quick('example7_2')
        for v in report.verdicts():
            assert v.status != FAIL, v.line()
        assert report.verdict('type of R').ok, report.verdict('type of R').line()
        grade = [s for s in report.sections if s.title == 'grade'][0]
        assert 'transpose.mu of order 2 on the roots of sl3^' in grade.lines
        assert [v for v in grade.verdicts if v.name == 'isotropic roots fixed'][0].ok

    def test_quantum_torus_preset(self):
        """Test the sl_3(F_q[z]) preset"""
        report = self.quick('example7_3')
        for v in report.verdicts():
            assert v.status != FAIL, v.line()
        assert report.verdict('type of pi(R)').ok, report.verdict('type of pi(R)').line()
        assert report.verdict('type of R^sigma').ok, report.verdict('type of R^sigma').line()
        assert report.verdict('type of R').ok, report.verdict('type of R').line()
        assert report.verdict('R3').ok

    def test_untwisted_preset(self):
        """Test the untwisted sl3 loop preset"""
        report = self.quick('sl_n_untwisted')
        for v in report.verdicts():
            assert v.status != FAIL, v.line()
        assert report.verdict('type of R').ok, report.verdict('type of R').line()
        assert report.verdict('isotropic roots fixed').ok

    def test_roots_dump(self):
        """Test the roots step writes a dump"""
        config = pipeline.get_preset('sl3_transpose_involution')
        config.steps[-1].set('dump', 'fixed.dump')
        pipeline.run(config)
        assert os.path.isfile('fixed.dump')
        os.remove('fixed.dump')

    def test_only_verb(self):
        """Test single verb selection keeps the setup steps"""
        config = pipeline.only_verb(pipeline.get_preset('sl3_transpose_involution'), 'restrict')
        assert [s.name for s in config.steps] == ['build-base', 'automorphism', 'restrict']

    def test_presets(self):
        """Test the preset gallery"""
        names = pipeline.preset_names()
        assert names == ['example7_1', 'example7_2', 'example7_3', 'sl_n_untwisted',
                         'sl3_transpose_involution']
        assert len(pipeline.presets()) == len(names)
        for config in pipeline.presets():
            assert config.steps
        try:
            pipeline.get_preset('nosuch')
            assert False, "expected ConfigError"
        except ConfigError:
            pass


if __name__ == '__main__':
    unittest.main()
