# Document the purpose of the module entry point.
"""Run the circa command line with python -m circa."""

# Import sys for the exit code.
import sys

# Import the command line entry point.
from circa.cli.main import main

# Execute the CLI entry point.
sys.exit(main())
