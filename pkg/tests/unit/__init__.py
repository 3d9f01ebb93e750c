# Provide module documentation for the unit test package.
# Define the module docstring for the unit test package.
"""Unit tests package."""
# Overview: Unit test module namespace.
# Details: Groups one unit suite per circa package.
