from pathlib import Path

import numpy as np
import pytest

from vecfit.svg_core.document import parse_svg

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def sample_path(name):
    return SAMPLES / f"{name}.svg"


def load_sample(name):
    return parse_svg(sample_path(name).read_text(encoding="utf-8"))


def svg(body, size=100):
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
            f'width="{size}" height="{size}">{body}</svg>')


@pytest.fixture
def triangle_doc():
    return load_sample("triangle")


@pytest.fixture
def ball_bar_doc():
    return load_sample("ball_bar")


@pytest.fixture
def figure_doc():
    return load_sample("figure")


@pytest.fixture
def donut_doc():
    return load_sample("donut")


@pytest.fixture
def concave_doc():
    return load_sample("concave")


@pytest.fixture
def square_doc():
    return parse_svg(svg('<g id="sq"><rect x="30" y="30" width="40" height="40" fill="#336699"/></g>'))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
