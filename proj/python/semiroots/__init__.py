from ._semiroots import *  # noqa: F401,F403
from ._semiroots import SemirootsError, Transform  # noqa: F401
