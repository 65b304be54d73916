"""Run the command line interface with ``python -m piezoceig``"""
import sys

from .cli import main


sys.exit(main())
