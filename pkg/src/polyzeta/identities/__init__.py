"""Identity generators, one per family, and the registry that names them."""

from .common import FAMILIES, Family, IdentityInstance, ParameterError, get_family, parse_params

_MODULES = ("algebraic", "polylog", "bbb", "alternating", "ky", "posets")


def load_all():
    import importlib

    for name in _MODULES:
        importlib.import_module(f"{__name__}.{name}")


def family_names() -> list:
    load_all()
    return sorted(FAMILIES)


__all__ = ["FAMILIES", "Family", "IdentityInstance", "ParameterError", "get_family",
           "parse_params", "load_all", "family_names"]
