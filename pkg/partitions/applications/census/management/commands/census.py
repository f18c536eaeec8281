from django.core.management.base import CommandError

from racah.commands import CalculusCommand, EXIT_INVARIANT, EXIT_USAGE, render
from racah.exceptions import DomainError, InvariantViolation
from racah.utils import choice_setting, get_backend, setting
from racah.applications.regge import choices as regge_choices
from partitions.applications.census import choices
from partitions.applications.census.serializers import CensusReportSerializer
from partitions.applications.census.services import CensusService
from partitions.applications.census.values import CensusConfig


class Command(CalculusCommand):
    help = "Classify every symbol class up to a spin cutoff and check the partition laws."

    def add_arguments(self, parser):
        parser.add_argument(
            "--kind",
            choices=[value for value, label in regge_choices.KIND],
            default=regge_choices.KIND_CLASSICAL,
            help="Census of classical, super or forbidden flat beta symbols (default classical)."
        )
        parser.add_argument(
            "--jmax",
            default=None,
            help="Largest spin enumerated, e.g. 4 or 7/2 (default CENSUS_JMAX)."
        )
        parser.add_argument(
            "--format",
            choices=[value for value, label in choices.FORMAT],
            default=None,
            help="Record format (default CENSUS_FORMAT)."
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Worker processes; the CENSUS_WORKERS environment variable wins."
        )
        parser.add_argument(
            "--output",
            default=None,
            help="Write the records to this file instead of standard output."
        )
        parser.add_argument(
            "--decimal",
            action="store_true",
            help="Add a 12-digit decimal rendering of each value."
        )

    def config(self, options):
        formats = [value for value, label in choices.FORMAT]
        try:
            return CensusConfig(
                options.get("jmax") or str(setting('CENSUS_JMAX', '4')),
                options.get("kind"),
                options.get("format") or choice_setting('CENSUS_FORMAT', formats, choices.FORMAT_JSON_LINES),
                options.get("workers"),
            )
        except DomainError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def census(self, config, stream, decimal):
        writer = get_backend(config.format, 'CENSUS_WRITERS', stream, decimal)
        try:
            return CensusService.run_census(config, writer)
        except InvariantViolation as e:
            raise CommandError(str(e), returncode=EXIT_INVARIANT)

    def handle(self, *args, **options):
        config = self.config(options)
        output = options.get("output")
        if output:
            with open(output, 'w', newline='') as stream:
                report = self.census(config, stream, options.get("decimal"))
            self.write(CensusReportSerializer(report).data)
        else:
            report = self.census(config, self.stdout, options.get("decimal"))
            self.stderr.write(render(CensusReportSerializer(report).data))
        if not report.ok:
            raise CommandError(f'{len(report.violations)} census violations', returncode=EXIT_INVARIANT)
