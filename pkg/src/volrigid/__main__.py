"""Allow ``python -m volrigid``."""

from __future__ import annotations

from .cli import main

main()
