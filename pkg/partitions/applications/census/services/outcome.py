from racah.exceptions import DomainError, InvariantViolation
from racah.applications.classical.services import WignerService
from racah.applications.regge.choices import KIND_CLASSICAL, KIND_SUPER, REGGE_TRANSFORMS
from racah.applications.regge.services import OrbitService, SymmetryService, TransformService
from racah.applications.superalgebra import choices as super_choices
from racah.applications.superalgebra.services import IFactorService, PhaseService, SuperValueService
from racah.applications.symbol.services import ParityService, ValidationService
from partitions import translates as _
from partitions.applications.census.values import CensusRecord, ClassOutcome
from partitions.applications.prolongation.services import FlatService
from partitions.applications.selector import choices as selector_choices
from partitions.applications.selector.services import ClassifyService, ProfileService


class OrbitMemo:
    """Orbit reports shared by every class they contain"""

    def __init__(self):
        self._reports = {}

    def get(self, seed, closure):
        found = SymmetryService.classical_set(seed)
        report = self._reports.get(found)
        if report is None:
            report = closure(seed)
            for member in report.classes:
                self._reports[member] = report
        return report


def label_or_violation(classify, symbol, violations):
    try:
        return classify()
    except InvariantViolation as e:
        violations.append(f'{symbol}: {e}')
        return None


def compare(symbol, partition, oracle, allowed, violations):
    if oracle == selector_choices.FORBIDDEN_LABEL:
        violations.append(f'{symbol}: {_.forbidden_label}')
    elif oracle not in allowed:
        violations.append(f'{symbol}: {_.label_outside} ({oracle})')
    if partition is not None and partition != oracle:
        violations.append(f'{symbol}: {_.oracle_disagrees} ({partition} != {oracle})')


class OutcomeService:
    @staticmethod
    def classical(symbol, convention, memo):
        violations = []
        value = WignerService.compute_3j(symbol)
        for kappa in REGGE_TRANSFORMS:
            if WignerService.compute_3j(TransformService.apply_regge(symbol, kappa)) != value:
                violations.append(f'{symbol}: R{kappa} {_.classical_invariance}')
        report = memo.get(symbol, OrbitService.orbit)
        partition = label_or_violation(lambda: ClassifyService.classify(symbol, convention), symbol, violations)
        compare(symbol, partition, report.n_empty, selector_choices.LABELS, violations)
        record = CensusRecord(
            symbol, ParityService.classify_parity(symbol).code, value, partition,
            report.n_empty, len(report), ProfileService.selector_profile(symbol, convention),
        )
        return ClassOutcome(record, violations, checks=len(REGGE_TRANSFORMS))

    @staticmethod
    def super(symbol, convention, memo):
        violations, phases, checks = [], [], 1
        parity = ParityService.classify_parity(symbol)
        value = SuperValueService.product(symbol)
        try:
            SuperValueService.compute_super_3j(symbol, super_choices.PATH_BOTH)
        except InvariantViolation:
            violations.append(f'{symbol}: {_.path_mismatch}')
        i_factor = IFactorService.i_factor(symbol)

        if parity.is_beta():
            transforms = (parity.kappa,)
            report = memo.get(symbol, OrbitService.beta_orbit)
            allowed = selector_choices.BETA_LABELS
        else:
            transforms = REGGE_TRANSFORMS
            report = memo.get(symbol, OrbitService.orbit)
            allowed = selector_choices.LABELS

        for kappa in transforms:
            try:
                image = TransformService.apply_regge(symbol, kappa)
            except DomainError:
                continue
            checks += 1
            if IFactorService.i_factor(image) != i_factor:
                violations.append(f'{symbol}: R{kappa} {_.i_factor_invariance}')
            if not ValidationService.is_super(image):
                continue
            if parity.is_beta():
                phase = PhaseService.beta_phase(symbol, kappa)
                if SuperValueService.product(image) != value * phase:
                    violations.append(f'{symbol}: R{kappa} {_.sign_law}')
                if value:
                    phases.append(phase)
            elif SuperValueService.product(image) != value:
                violations.append(f'{symbol}: R{kappa} {_.alpha_gamma_invariance}')

        partition = label_or_violation(
            lambda: ClassifyService.classify_super_partition(symbol, convention), symbol, violations,
        )
        compare(symbol, partition, report.n_empty, allowed, violations)
        record = CensusRecord(
            symbol, parity.code, value, partition,
            report.n_empty, len(report), ProfileService.selector_profile(symbol, convention),
        )
        return ClassOutcome(record, violations, phases, checks)

    @staticmethod
    def flat(symbol, convention, memo):
        violations = []
        flat = FlatService.detect_flat_forbidden(symbol)
        value = FlatService.prolong_value(flat)
        alpha = FlatService.identify_alpha(flat)
        if SuperValueService.compute_super_3j(alpha) != value:
            violations.append(f'{symbol}: {_.prolongation_mismatch}')
        if FlatService.edmonds_flat_value(flat) != value:
            violations.append(f'{symbol}: {_.edmonds_mismatch}')
        report = memo.get(alpha, lambda seed: FlatService.flat_orbit(flat))
        partition = label_or_violation(lambda: FlatService.classify_flat(flat, convention), symbol, violations)
        compare(symbol, partition, report.n_empty, selector_choices.BETA_LABELS, violations)
        record = CensusRecord(
            symbol, ParityService.classify_parity(symbol).code, value, partition,
            report.n_empty, len(report), FlatService.underlined_profile(flat, convention),
        )
        return ClassOutcome(record, violations, checks=2)

    @staticmethod
    def builder(kind):
        if kind == KIND_CLASSICAL:
            return OutcomeService.classical
        if kind == KIND_SUPER:
            return OutcomeService.super
        return OutcomeService.flat
