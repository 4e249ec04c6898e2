"""Heintze criterion checks and left-invariant Finsler curvature tools."""

try:
    from ._negcurv import *  # noqa: F401,F403  (installed package layout)
    from . import _negcurv as _impl
except ImportError:  # build-tree layout: extension next to the package dir
    from _negcurv import *  # noqa: F401,F403
    import _negcurv as _impl

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
