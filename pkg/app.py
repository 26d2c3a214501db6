#!/usr/bin/env python3
"""
Streamlit entry point for the oilbench dashboard.

    streamlit run app.py
"""

import sys
import os

# Add the src directory to the path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))


def main():
    """Main entry point."""
    try:
        from ui import main as streamlit_main
    except ImportError as e:
        print("Error: Required dependencies not installed.")
        print("Please run: pip install -r requirements.txt")
        print(f"Details: {e}")
        sys.exit(1)

    streamlit_main()


if __name__ == "__main__":
    main()
