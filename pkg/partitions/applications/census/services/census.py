import logging
from itertools import repeat
from concurrent.futures import ProcessPoolExecutor

from racah.exceptions import InvariantViolation
from racah.utils import setting, workers_setting
from racah.applications.regge.choices import KIND_SUPER
from racah.applications.superalgebra.services import SuperValueService
from partitions import translates as _
from partitions.applications.census.services.enumerate import EnumerateService
from partitions.applications.census.services.outcome import OrbitMemo, OutcomeService
from partitions.applications.census.values import CensusReport
from partitions.applications.selector.services import CalibrationService

logger = logging.getLogger(__name__)


def census_chunk(kind, symbols, convention):
    memo = OrbitMemo()
    build = OutcomeService.builder(kind)
    return [build(symbol, convention, memo) for symbol in symbols]


class CensusService:
    @staticmethod
    def outcomes(config, convention):
        symbols = EnumerateService.enumerate(config)
        shards = EnumerateService.shards(symbols, setting('CENSUS_CHUNK_SIZE', 64))
        workers = workers_setting(config.workers)
        logger.info(f'Census {config.kind} up to j={config.jmax}: {len(symbols)} classes in {len(shards)} shards, {workers} workers')
        if workers == 1 or len(shards) < 2:
            chunks = [census_chunk(config.kind, shard, convention) for shard in shards]
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                chunks = list(executor.map(census_chunk, repeat(config.kind), shards, repeat(convention)))
        # merge; shard order depends on the pool
        return sorted((outcome for chunk in chunks for outcome in chunk), key=lambda o: o.record.key)

    @staticmethod
    def calibration():
        try:
            return CalibrationService.calibrate(CalibrationService.calibration_jmax()), []
        except InvariantViolation as e:
            return None, [str(e)]

    @staticmethod
    def run_census(config, writer=None):
        convention = CalibrationService.configured_convention()
        calibration, violations = CensusService.calibration()
        phase_variant = SuperValueService.configured_variant() if config.kind == KIND_SUPER else None
        report = CensusReport(config, calibration, convention, phase_variant)
        report.violations.extend(violations)
        if writer is not None:
            writer.open()
        for outcome in CensusService.outcomes(config, convention):
            report.add(outcome)
            if writer is not None:
                writer.write(outcome.record)
        if writer is not None:
            writer.close()

        if config.kind == KIND_SUPER and sum(report.signs.values()) and 0 in report.signs.values():
            logger.warning(f'{_.single_sign} up to j={config.jmax}: {report.signs}')
        for violation in report.violations:
            logger.error(violation)
        logger.info(
            f'Census {config.kind} up to j={config.jmax} done: {report.total} classes, '
            f'{report.checks} value checks, {len(report.violations)} violations'
        )
        return report
