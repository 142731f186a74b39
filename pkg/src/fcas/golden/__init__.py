"""Golden reference material: transcriptions of the displayed equations.

tables.py builds every reference polynomial programmatically; build_goldens
renders them to canonical-text .txt files (checked in, one per reference,
each annotated with the equation label it transcribes).  The loader prefers
the .txt files and a regression test pins tables.py and the .txt files to
each other, so neither can drift alone.
"""

from .tables import build_golden, CITATIONS  # noqa: F401
from .loader import load_golden_texts  # noqa: F401
