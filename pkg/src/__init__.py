"""Periodic Box-Ball System toolkit

Exact soliton cellular automaton dynamics, its conserved Young diagram,
the min-plus invariants and the periodic discrete Toda lattice it is the
ultradiscrete limit of.
"""

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()
__version__ = "1.0.0"
__author__ = "Periodic Box-Ball"
