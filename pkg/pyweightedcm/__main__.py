"""Weighted edge ideal Cohen-Macaulay toolkit."""
import sys

from pyweightedcm.cli import main

if __name__ == "__main__":
    sys.exit(main())
