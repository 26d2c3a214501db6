#!/usr/bin/env python3
"""
Command-line entry point for oilbench.

    python oilbench.py apply --input a.ppm --output b.ppm --radius 2
"""

import os
import sys

# Add the src directory to the path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
