from partitions.applications.selector.services.profile import ProfileService
from partitions.applications.selector.services.clauses import ClauseService
from partitions.applications.selector.services.classify import ClassifyService
from partitions.applications.selector.services.calibration import CalibrationService

__all__ = (
    ProfileService,
    ClauseService,
    ClassifyService,
    CalibrationService,
)
