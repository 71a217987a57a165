from ._boreldegen import *  # noqa: F401,F403
