#!/usr/bin/env python3
"""Auto-generate dynamic sections of README.md.

This script uses a template-based approach:
- README_TEMPLATE.md contains human-editable prose (owned by developers)
- This script injects generated tables into placeholders (owned by automation)

Placeholders in template:
- <!-- GENERATED:BADGE_LINE --> : Timestamp, experiment and endpoint counts
- <!-- GENERATED:EXPERIMENT_TABLE --> : CSV header of every experiment
- <!-- GENERATED:API_TABLE --> : Endpoint table from the OpenAPI schema
- <!-- GENERATED:STATS --> : Documentation statistics footer

Usage:
  python scripts/generate_readme.py
"""

import re
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Mapping, Sequence

ROOT = Path(__file__).parent.parent
HTTP_METHODS = ("get", "post", "put", "delete", "patch")


def load_template(path: Path = ROOT / "README_TEMPLATE.md") -> str:
    """Load README template file"""
    if not path.exists():
        raise FileNotFoundError(
            f"README template not found at {path}. "
            "Create README_TEMPLATE.md with placeholders."
        )
    return path.read_text(encoding="utf-8")


def generate_experiment_table(columns: Mapping[Any, Sequence[str]]) -> str:
    """Generate markdown table of experiment CSV headers"""
    table = "| Experiment | CSV header |\n"
    table += "|------------|------------|\n"
    for kind, names in columns.items():
        name = getattr(kind, "value", kind)
        table += f"| `{name}` | `{','.join(names)}` |\n"
    return table


def generate_endpoint_table(spec: Dict[str, Any]) -> str:
    """Generate markdown table of endpoints, health first"""
    endpoints = []
    for path, methods in spec.get("paths", {}).items():
        for method, details in methods.items():
            if method.lower() in HTTP_METHODS:
                endpoints.append((method.upper(), path, details.get("summary", path)))

    endpoints.sort(key=lambda e: (0, "") if e[1] == "/health" else (1, e[1]))

    table = "| Method | Endpoint | Description |\n"
    table += "|--------|----------|-------------|\n"
    for method, path, summary in endpoints:
        table += f"| {method} | `{path}` | {summary} |\n"
    return table


def count_endpoints(spec: Dict[str, Any]) -> int:
    return sum(
        1
        for methods in spec.get("paths", {}).values()
        for method in methods
        if method.lower() in HTTP_METHODS
    )


def generate_badge_line(experiments: int, endpoints: int, timestamp: str) -> str:
    return (
        f"> **Auto-generated tables** | Last updated: **{timestamp}** | "
        f"Experiments: **{experiments}** | Endpoints: **{endpoints}**"
    )


def generate_stats_footer(experiments: int, endpoints: int, timestamp: str, version: str) -> str:
    return f"""**Documentation Statistics**
- Experiments: {experiments}
- Endpoints: {endpoints}
- Last generated: {timestamp}
- Service version: {version}
- Generator: scripts/generate_readme.py
- Template: README_TEMPLATE.md

*Table sections are regenerated by the script. Prose sections are human-editable.*"""


def inject_content(template: str, replacements: Dict[str, str]) -> str:
    """Inject generated content into template placeholders"""
    result = template
    for placeholder, content in replacements.items():
        pattern = rf"<!-- GENERATED:{placeholder} -->"
        result = re.sub(pattern, lambda _: content, result)
    return result


def main():
    """Generate README.md by injecting dynamic content into template"""
    from levelk_market.core.experiments import EXPERIMENT_COLUMNS
    from levelk_market.main import app

    print("Generating README.md from template + experiment registry...")

    template = load_template()
    spec = app.openapi()
    version = spec.get("info", {}).get("version", "0.1.0")
    experiments = len(EXPERIMENT_COLUMNS)
    endpoints = count_endpoints(spec)
    timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M UTC")

    replacements = {
        "BADGE_LINE": generate_badge_line(experiments, endpoints, timestamp),
        "EXPERIMENT_TABLE": generate_experiment_table(EXPERIMENT_COLUMNS),
        "API_TABLE": generate_endpoint_table(spec),
        "STATS": generate_stats_footer(experiments, endpoints, timestamp, version),
    }

    readme_path = ROOT / "README.md"
    readme_path.write_text(inject_content(template, replacements), encoding="utf-8")

    print("README.md generated successfully")
    print(f"   Location: {readme_path}")
    print(f"   Experiments documented: {experiments}")
    print(f"   Endpoints documented: {endpoints}")


if __name__ == "__main__":
    main()
