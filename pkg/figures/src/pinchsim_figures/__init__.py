"""Figure rendering for pinchsim experiment CSV files.

Talks to the simulator only through its CSV output format; see ``loader``
for the format contract and ``render`` for the three figure kinds.
"""

from .loader import ExperimentData, FigureDataError, REQUIRED_COLUMNS, load_csv, require_columns
from .render import RENDERERS, render_fig2, render_fig3, render_fig4, save_figure

__version__ = "0.1.0"

__all__ = [
    "ExperimentData",
    "FigureDataError",
    "REQUIRED_COLUMNS",
    "RENDERERS",
    "load_csv",
    "require_columns",
    "render_fig2",
    "render_fig3",
    "render_fig4",
    "save_figure",
    "__version__",
]
