"""
Sweeps, checks and plot data built on the core library, plus the ``jsdmix`` command line.
"""

from .figures import FIGURE_FILES, emit_figure_data
from .io import csv_text, dump_scenario, emit_csv, emit_json, load_scenario
from .settings import ExperimentSettings
from .sweeps import LINE_PARAMETERS, delta_scan, epsilon_scan, find_grid_minimizer, line_eval, sweep_grid
from .verify import verify_observations
