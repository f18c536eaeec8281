from partitions.applications.census.services.enumerate import EnumerateService
from partitions.applications.census.services.outcome import OutcomeService
from partitions.applications.census.services.census import CensusService

__all__ = (
    EnumerateService,
    OutcomeService,
    CensusService,
)
