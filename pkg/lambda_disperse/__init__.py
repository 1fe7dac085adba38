"""lambda-disperse - probe dispersion, gain and group index of incoherently pumped three-level atoms."""

from importlib.metadata import PackageNotFoundError, version

from lambda_disperse.model import classify_regime, group_index, susceptibility, susceptibility_symmetric, susceptibility_vee
from lambda_disperse.params import SusceptibilitySample, SystemParams
from lambda_disperse.types import RegimeClass, Scheme

try:
    # default: from metadata
    __version__ = version("lambda-disperse")
except PackageNotFoundError:
    try:
        # dynamic: from _version
        from ._version import version as __version__
    except ImportError:
        __version__ = "0.0.0"


__all__ = [
    "RegimeClass",
    "Scheme",
    "SusceptibilitySample",
    "SystemParams",
    "__version__",
    "classify_regime",
    "group_index",
    "susceptibility",
    "susceptibility_symmetric",
    "susceptibility_vee",
]
