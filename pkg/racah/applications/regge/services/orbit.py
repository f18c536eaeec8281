import logging
from collections import deque

from racah.exceptions import DomainError, ParityError
from racah.applications.regge import choices
from racah.applications.regge.values import OrbitReport
from racah.applications.regge.services.symmetry import SymmetryService
from racah.applications.regge.services.transform import TransformService
from racah.applications.symbol.services import ParityService

logger = logging.getLogger(__name__)


def all_transforms(symbol):
    return choices.REGGE_TRANSFORMS


def matching_transform(symbol):
    parity = ParityService.classify_parity(symbol)
    if not parity.is_beta():
        raise ParityError(f'{symbol} has parity {parity.code}, a beta orbit needs beta')
    return (parity.kappa,)


class OrbitService:
    @staticmethod
    def closure(seed, transforms=all_transforms, keep=None):
        """Breadth-first closure of the classes reachable from `seed`.

        `transforms(symbol)` names the R_kappa applied to a member and may
        raise ParityError to leave that member unexpanded, `keep`
        filters the classes admitted to the orbit.
        """
        start = SymmetryService.classical_set(seed)
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft().canonical
            try:
                kappas = transforms(current)
            except ParityError as e:
                logger.debug(f'{current} has no matching transform: {e}')
                continue
            for kappa in kappas:
                try:
                    image = TransformService.apply_regge(current, kappa)
                except DomainError as e:
                    logger.debug(f'R{kappa} leaves the domain from {current}: {e}')
                    continue
                found = SymmetryService.classical_set(image)
                if found in seen or (keep is not None and not keep(found.canonical)):
                    continue
                seen.add(found)
                queue.append(found)
        return OrbitReport(seen)

    @staticmethod
    def orbit(symbol):
        return OrbitService.closure(symbol)

    @staticmethod
    def beta_orbit(symbol):
        """Closure under the single R_kappa matching each member's beta index"""
        matching_transform(symbol)
        return OrbitService.closure(symbol, matching_transform)
