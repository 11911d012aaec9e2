"""Locating and loading the JSON fixtures and modular polynomial files."""
import json
import os
from functools import lru_cache
from importlib import resources


def fixture_dir() -> str:
    env = os.environ.get("ATLAS_FIXTURE_DIR")
    if env:
        return env
    return str(resources.files("isogeny_atlas") / "data")


def phi_dir() -> str:
    env = os.environ.get("ATLAS_PHI_DIR")
    if env:
        return env
    return str(resources.files("isogeny_atlas") / "data" / "phi")


@lru_cache(maxsize=None)
def _load(path: str):
    with open(path) as fh:
        return json.load(fh)


def load_json(name: str):
    path = os.path.join(fixture_dir(), name)
    if not os.path.exists(path):
        raise FileNotFoundError("fixture %s not found in %s" % (name, fixture_dir()))
    return _load(path)


def clear_caches():
    """Forget loaded fixtures (used when the fixture directory changes)."""
    _load.cache_clear()
    from . import families, fricke, oracle

    for mod in (families, fricke, oracle):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
