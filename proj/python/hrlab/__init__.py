"""Constant (p,q)-form algebra and Hodge-Riemann certification."""

try:
    from ._hrlab import *  # noqa: F401,F403  (installed layout)
    from ._hrlab import __version__  # noqa: F401
except ImportError:
    from _hrlab import *  # noqa: F401,F403  (build-tree layout)
    from _hrlab import __version__  # noqa: F401
