#!/usr/bin/env python3
"""CLI entry point for computing in the semigroup of a finite network.

Usage:
    python netras.py nf --network data/ex6.net "~t2 ~t1 t1 t2" --trace
    python netras.py mul --network @ex6 "t1 | t1" "t1 t2 | t1 t2"
    python netras.py props --network @ex6 "t1 t2 | t2"
    python netras.py enum --network @ex6 --ball 4 --sub R
    python netras.py order --network @ex6
    python netras.py skeleton --network @g2
    python netras.py confluence --network data/misaligned.net
    python netras.py ideal principal:t2 --network @ex6 --carrier S --verify
    python netras.py iso data/ex6.net data/ex6_renamed.net
    python netras.py example6 --json
"""

import sys

from src.cli import run
from src.config import setup_logging

log = setup_logging()


def main():
    try:
        status = run(sys.argv[1:])
    except KeyboardInterrupt:
        log.info("Interrupted.")
        status = 1
    sys.exit(status)


if __name__ == "__main__":
    main()
