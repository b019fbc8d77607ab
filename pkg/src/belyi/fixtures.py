"""Bundled data files: small triples and maps, the field K and the appendix reduction."""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path

from .algebra.fields import NumberField
from .candidate import BelyiCandidate, read_map
from .perm import PermutationTriple, read_triple

APPENDIX = "appendix_mod269.factors"
PREFIX = "fixture:"


class ChecksumError(RuntimeError):
    pass


def data_dir() -> Path:
    return Path(str(resources.files("belyi") / "data"))


def fixture_path(name: str) -> Path:
    p = data_dir() / name
    if not p.exists():
        # allow the stem, e.g. "triple_deg3"
        hits = sorted(h for h in data_dir().glob(name + ".*") if h.suffix != ".sha256")
        if len(hits) != 1:
            raise FileNotFoundError(f"no fixture named {name!r}")
        p = hits[0]
    return p


def resolve(arg: str) -> Path:
    """A path, or ``fixture:<name>`` for a bundled file."""
    if arg.startswith(PREFIX):
        return fixture_path(arg[len(PREFIX):])
    return Path(arg)


def list_fixtures():
    return sorted(p.name for p in data_dir().iterdir() if not p.name.startswith("_"))


def sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def verify_checksum(name: str = APPENDIX) -> str:
    path = fixture_path(name)
    want = (data_dir() / (Path(name).stem + ".sha256")).read_text().split()[0]
    got = sha256(path)
    if got != want:
        raise ChecksumError(f"{name}: sha256 {got} does not match the recorded {want}")
    return got


def appendix_map() -> BelyiCandidate:
    """The degree-266 map reduced mod (269, 207 + alpha), checksum-guarded."""
    verify_checksum(APPENDIX)
    return read_map(fixture_path(APPENDIX))


def k_field() -> NumberField:
    for line in fixture_path("k_minpoly.txt").read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line.startswith("field:"):
            return NumberField([int(t) for t in line[len("field:"):].split()])
    raise ValueError("k_minpoly.txt has no field: line")


def triple(name: str) -> PermutationTriple:
    return read_triple(fixture_path(name))


def small_map(name: str) -> BelyiCandidate:
    return read_map(fixture_path(name))
