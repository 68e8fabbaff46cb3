"""Collected PASS/FAIL lines for the acceptance criteria."""

LINES = []
