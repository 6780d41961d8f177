"""Integration tests for the delaygame CLI.

These tests run the actual commands in-process against the bundled
instances and generated files.
"""
