from racah.applications.regge.services.transform import TransformService
from racah.applications.regge.services.symmetry import SymmetryService
from racah.applications.regge.services.orbit import OrbitService

__all__ = (
    TransformService,
    SymmetryService,
    OrbitService,
)
