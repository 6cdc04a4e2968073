"""Social-preference rideshare matching: judgment scoring, ideal-solution
ranking, stable matchings for equal and unequal sets, exact assignment, and
stability-quality metrics. The heavy lifting lives in the native module."""

try:
    from ._ridematch import *  # noqa: F401,F403  (installed layout)
    from . import _ridematch as _native
except ImportError:  # build-tree layout: extension sits on PYTHONPATH
    from _ridematch import *  # noqa: F401,F403
    import _ridematch as _native

__all__ = [name for name in dir(_native) if not name.startswith("_")]
__version__ = "0.1.0"
