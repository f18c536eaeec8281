from partitions.applications.prolongation.services.clauses import FlatClauseService
from partitions.applications.prolongation.services.flat import FlatService

__all__ = (
    FlatClauseService,
    FlatService,
)
