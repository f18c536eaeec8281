from racah.applications.regge.choices import KIND_CLASSICAL, KIND_SUPER
from racah.applications.regge.services import SymmetryService
from racah.applications.symbol.services import EnumerationService
from partitions.applications.prolongation.services import FlatService


class EnumerateService:
    @staticmethod
    def candidates(config):
        if config.kind == KIND_CLASSICAL:
            return EnumerationService.classical(config.tjmax, ordered=True)
        if config.kind == KIND_SUPER:
            return EnumerationService.super(config.tjmax, ordered=True)
        return (
            symbol for symbol in EnumerationService.symbols(config.tjmax, ordered=True)
            if FlatService.detect_flat_forbidden(symbol) is not None
        )

    @staticmethod
    def enumerate(config):
        """Canonical representative of every SetClass of the requested kind, in key order"""
        symbols = [s for s in EnumerateService.candidates(config) if SymmetryService.is_canonical(s)]
        return sorted(symbols, key=lambda s: s.key)

    @staticmethod
    def shards(symbols, chunk_size):
        """Chunks of at most chunk_size symbols sharing their leading spin"""
        shards = []
        for symbol in symbols:
            if shards and shards[-1][0].tj[0] == symbol.tj[0] and len(shards[-1]) < chunk_size:
                shards[-1].append(symbol)
            else:
                shards.append([symbol])
        return shards
