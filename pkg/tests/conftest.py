"""Shared test fixtures: the bundled ideal corpus and seeded generators."""

from importlib.resources import files

import pytest

from posetres import parse_ideal

DATA = files("posetres") / "data"

CORPUS = sorted(p.name[:-len(".ideal")] for p in DATA.iterdir()
                if p.name.endswith(".ideal"))

# lattice-linearity over the rationals, per fixture
LATTICE_LINEAR_OVER_Q = {
    "ci3": True,
    "koszul3": True,
    "nonll_ranked": False,
    "nonll_small": False,
    "path4": True,
    "rp2": True,
    "scarf_small": True,
    "triangle": True,
}


def data_text(name):
    return (DATA / f"{name}.ideal").read_text(encoding="utf-8")


def load_ideal(name):
    return parse_ideal(data_text(name)).ideal


def parse(text):
    return parse_ideal(text).ideal


@pytest.fixture(scope="session")
def corpus_ideals():
    return {name: load_ideal(name) for name in CORPUS}
