# CLI subcommands, one module per mode
from . import check, semigroup, seshadri, surface, toric

SUBCOMMANDS = (toric, surface, semigroup, seshadri, check)

__all__ = ["SUBCOMMANDS"]
