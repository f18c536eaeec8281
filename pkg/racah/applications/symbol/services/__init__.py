from racah.applications.symbol.services.parity import ParityService
from racah.applications.symbol.services.doublet import DoubletService
from racah.applications.symbol.services.validation import ValidationService
from racah.applications.symbol.services.enumeration import EnumerationService

__all__ = (
    ParityService,
    DoubletService,
    ValidationService,
    EnumerationService,
)
