from racah.applications.classical.services.triangle import TriangleService
from racah.applications.classical.services.wigner import WignerService
from racah.applications.classical.services.oracle import OracleService

__all__ = (
    TriangleService,
    WignerService,
    OracleService,
)
