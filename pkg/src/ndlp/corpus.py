"""Access to the example programs shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

CORPUS_NAMES = (
    "fred.ndlp",
    "connection.ndlp",
    "teaching.ndlp",
    "teaching2.ndlp",
    "no_stable.ndlp",
    "wf_chain.ndlp",
    "wf_mutual.ndlp",
    "wf_partial.ndlp",
    "robot.ndlp",
)


def corpus_path(name: str) -> Path:
    """Filesystem path of a shipped example program."""
    path = Path(str(resources.files(__package__) / "examples" / name))
    if not path.exists():
        raise FileNotFoundError(f"no example program named {name!r}")
    return path


def corpus_text(name: str) -> str:
    return corpus_path(name).read_text(encoding="utf-8")
