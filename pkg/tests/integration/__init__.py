# Provide module documentation for the integration test package.
# Define the module docstring for the integration test package.
"""Integration tests package."""
# Overview: Integration test module namespace.
# Details: Groups full pipeline, CLI and property runs.
