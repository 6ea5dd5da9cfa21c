#!/usr/bin/env python3
"""Run the acceptance suite and show one line per criterion."""

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(["tests/test_acceptance.py", "-v", "-s", *sys.argv[1:]]))
