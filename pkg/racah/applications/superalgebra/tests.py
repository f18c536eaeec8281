import json
from io import StringIO
from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.core.exceptions import ImproperlyConfigured

from racah.exceptions import DomainError, ForbiddenParent, ParityError
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.classical.services import TriangleService
from racah.applications.regge import choices as regge_choices
from racah.applications.regge.services import TransformService
from racah.applications.superalgebra import choices
from racah.applications.superalgebra.services import (
    IFactorService,
    PhaseService,
    ScalarFactorService,
    SuperTriangleService,
    SuperValueService,
)
from racah.applications.symbol.services import DoubletService, EnumerationService, ParityService, ValidationService
from racah.applications.symbol.values import Symbol3j


def S(text):
    return Symbol3j.parse(text.split())


class SuperDeltaTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(SuperTriangleService.super_delta(0, 0, 0), SqrtRational.one())
        self.assertEqual(SuperTriangleService.super_delta('1/2', '1/2', '1/2'), SqrtRational(1, Fraction(1, 2)))
        self.assertEqual(SuperTriangleService.super_delta(1, 1, 1), SqrtRational(1, Fraction(1, 6)))

    def test_triangle_violation(self):
        with self.assertRaises(DomainError):
            SuperTriangleService.super_delta('1/2', '1/2', 2)


class IFactorTest(SimpleTestCase):
    def test_alpha(self):
        self.assertEqual(IFactorService.i_factor(S('1 1 0 / 1 -1 0')), 1)

    def test_gamma(self):
        self.assertEqual(IFactorService.i_factor(S('1/2 1/2 1/2 / 0 0 0')), 2)

    def test_beta_primed(self):
        # column 1 odd: -j1 + j2 + j3 + 1/2
        self.assertEqual(IFactorService.i_factor(S('1/2 1 1 / 0 1 -1')), 2)
        self.assertEqual(IFactorService.i_factor(S('1/2 2 2 / 0 1 -1')), 4)

    def test_factorial_form(self):
        for symbol in EnumerationService.super(6):
            self.assertEqual(IFactorService.i_factor_factorial(symbol), IFactorService.i_factor(symbol), symbol)

    def test_invariance(self):
        for symbol in EnumerationService.super(6):
            parity = ParityService.classify_parity(symbol)
            if parity.is_beta():
                transforms = (parity.kappa,)
            elif parity.code == 'gamma':
                transforms = regge_choices.REGGE_TRANSFORMS
            else:
                continue
            for kappa in transforms:
                image = TransformService.apply_regge(symbol, kappa)
                self.assertEqual(IFactorService.i_factor(image), IFactorService.i_factor(symbol), (symbol, kappa))


class ScalarFactorTest(SimpleTestCase):
    def test_half_spins(self):
        value = ScalarFactorService.scalar_factor(('1/2', '1/2', '1/2'), (0, 0, 0))
        self.assertEqual(value, SqrtRational(1, 2))

    def test_bad_doublet(self):
        with self.assertRaises(DomainError):
            ScalarFactorService.scalar_factor((1, 1, 1), (0, 0, 0))

    def test_super_scalar_factor(self):
        for symbol in EnumerationService.super(4):
            tl = DoubletService.parent_spins(symbol)
            expected = TriangleService.delta_twice(*tl) * ScalarFactorService.scalar_factor_twice(symbol.tj, tl)
            self.assertEqual(ScalarFactorService.super_scalar_factor(symbol), expected, symbol)


class SuperValueTest(SimpleTestCase):
    def test_half_spins(self):
        self.assertEqual(SuperValueService.compute_super_3j(S('1/2 1/2 1/2 / 0 0 0')), SqrtRational(1, 2))

    def test_beta_example(self):
        self.assertEqual(SuperValueService.compute_super_3j(S('1 3/2 1/2 / 0 0 0')), SqrtRational(-1, Fraction(1, 3)))
        self.assertEqual(SuperValueService.compute_super_3j(S('1 1 1 / 1 -1/2 -1/2')), SqrtRational(1, Fraction(1, 3)))

    def test_no_parent(self):
        with self.assertRaises(ForbiddenParent) as e:
            SuperValueService.compute_super_3j(S('7/2 2 3/2 / -1/2 1/2 0'))
        self.assertEqual(e.exception.flat_index, 1)

    def test_paths_agree(self):
        for symbol in EnumerationService.super(6):
            value = SuperValueService.product(symbol)
            for variant in choices.PHASE_VARIANTS:
                self.assertEqual(SuperValueService.direct(symbol, variant), value, (symbol, variant))

    def test_both_paths(self):
        value = SuperValueService.compute_super_3j(S('3/2 1 1/2 / 1/2 -1 1/2'), choices.PATH_BOTH)
        self.assertEqual(value, SuperValueService.product(S('3/2 1 1/2 / 1/2 -1 1/2')))

    def test_resolution(self):
        variant = SuperValueService.resolve_phase_variant(4)
        self.assertEqual(variant, choices.PHASE_PLUS_PLUS)
        for symbol in EnumerationService.super(4):
            self.assertEqual(SuperValueService.direct(symbol, variant), SuperValueService.product(symbol))

    def test_default_variant(self):
        self.assertEqual(SuperValueService.configured_variant(), choices.PHASE_PLUS_PLUS)

    @override_settings(SUPER_PHASE_VARIANT='auto', SUPER_PHASE_JMAX='1')
    def test_auto_variant(self):
        self.assertEqual(SuperValueService.configured_variant(), choices.PHASE_PLUS_PLUS)

    @override_settings(SUPER_PHASE_VARIANT='sideways')
    def test_unknown_variant(self):
        with self.assertRaises(ImproperlyConfigured):
            SuperValueService.configured_variant()


class ReggeSymmetryTest(SimpleTestCase):
    def test_alpha_gamma_invariance(self):
        for symbol in EnumerationService.super(6):
            if ParityService.classify_parity(symbol).is_beta():
                continue
            value = SuperValueService.product(symbol)
            for kappa in regge_choices.REGGE_TRANSFORMS:
                image = TransformService.apply_regge(symbol, kappa)
                self.assertEqual(SuperValueService.product(image), value, (symbol, kappa))

    def test_beta_sign_law(self):
        signs = set()
        for symbol in EnumerationService.super(6):
            parity = ParityService.classify_parity(symbol)
            if not parity.is_beta():
                continue
            image = TransformService.apply_regge(symbol, parity.kappa)
            if not ValidationService.is_super(image):
                continue
            phase = PhaseService.beta_phase(symbol, parity.kappa)
            value = SuperValueService.product(symbol)
            self.assertEqual(SuperValueService.product(image), value * phase, symbol)
            if value:
                signs.add(phase)
        self.assertEqual(signs, {1, -1})

    def test_beta_phase_example(self):
        self.assertEqual(PhaseService.beta_phase(S('1 3/2 1/2 / 0 0 0'), 1), -1)

    def test_beta_phase_needs_matching_index(self):
        with self.assertRaises(ParityError):
            PhaseService.beta_phase(S('1 3/2 1/2 / 0 0 0'), 2)
        with self.assertRaises(ParityError):
            PhaseService.beta_phase(S('1/2 1/2 1/2 / 0 0 0'), 1)


class SuperEvalCommandTest(SimpleTestCase):
    def test_value(self):
        out = StringIO()
        call_command('super-eval', '1/2', '1/2', '1/2', '/', '0', '0', '0', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {'sign': 1, 'radicand': '2/1'})

    def test_both_paths(self):
        out = StringIO()
        call_command('super-eval', '--path', 'both', '1', '3/2', '1/2', '/', '0', '0', '0', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {'sign': -1, 'radicand': '1/3'})

    def test_no_parent(self):
        with self.assertRaises(CommandError) as e:
            call_command('super-eval', '7/2', '2', '3/2', '/', '-1/2', '1/2', '0', stdout=StringIO())
        self.assertEqual(e.exception.returncode, 2)
        self.assertIn('no parent', str(e.exception))
