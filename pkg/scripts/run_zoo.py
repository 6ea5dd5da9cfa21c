#!/usr/bin/env python3
"""Run the full catalog and print the match table plus the relations table."""

import sys

from symcont.report import render_zoo_text
from symcont.zoo import run_all


def main() -> int:
    report = run_all()
    data = {"command": "zoo", **report.to_json()}
    sys.stdout.write(render_zoo_text(data))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
