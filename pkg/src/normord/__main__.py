"""Module entry point for ``python -m normord``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
