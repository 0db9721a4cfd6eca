#!/usr/bin/env python3
"""
Torsion Growth - Demo
Classifies the pin curves and prints E(K)_tors, E(F)_tors and the rules applied.
"""

import sys
import time
from pathlib import Path

from rich.console import Console
from rich.table import Table

sys.path.insert(0, str(Path(__file__).parent))

from src.ecurve.curve import Curve  # noqa: E402
from src.growth.classifier import classify_growth  # noqa: E402
from src.suites.growth import PINS  # noqa: E402
from src.utils.logger import setup_global_logging  # noqa: E402


def main():
    """Classify every pin curve and show the results."""
    setup_global_logging("WARNING")
    console = Console()
    console.print("[bold blue]Torsion growth over the maximal elementary abelian 2-extension[/bold blue]")

    table = Table(title="Pin curves")
    table.add_column("Curve", style="cyan")
    table.add_column("Field")
    table.add_column("E(K)_tors", justify="center")
    table.add_column("E(F)_tors", justify="center", style="yellow")
    table.add_column("Rules", style="dim")
    table.add_column("Seconds", justify="right")

    failures = 0
    for label, field, text, expected_K, expected_F in PINS:
        E = Curve.parse(text, field)
        start = time.perf_counter()
        result = classify_growth(E)
        elapsed = time.perf_counter() - start
        groups = ", ".join(G.format() for G in result.groups())
        ok = result.torsion_K.format() == expected_K and groups == expected_F
        failures += not ok
        mark = "" if ok else " [red](expected " + expected_F + ")[/red]"
        table.add_row(
            label,
            repr(field),
            result.torsion_K.format(),
            groups + mark,
            " ".join(result.certificate.rule_ids()),
            f"{elapsed:.2f}",
        )

    console.print(table)
    return 1 if failures else 0


if __name__ == "__main__":
    exit(main())
