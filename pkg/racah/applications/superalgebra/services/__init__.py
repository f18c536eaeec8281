from racah.applications.superalgebra.services.triangle import SuperTriangleService
from racah.applications.superalgebra.services.ifactor import IFactorService
from racah.applications.superalgebra.services.phase import PhaseService
from racah.applications.superalgebra.services.scalar import ScalarFactorService
from racah.applications.superalgebra.services.value import SuperValueService

__all__ = (
    SuperTriangleService,
    IFactorService,
    PhaseService,
    ScalarFactorService,
    SuperValueService,
)
