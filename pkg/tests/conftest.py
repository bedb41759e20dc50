from pathlib import Path

import pytest

from gencluster import SemifieldContext, initial_seed

SEEDS_DIR = Path(__file__).resolve().parent.parent / "seeds"

BUNDLED_SEEDS = (
    "a2_trivial.json",
    "rank2_generalized_trivial.json",
    "rank2_generalized_principal.json",
    "rank3_generalized.json",
    "rank2_zero_interior.json",
)


def seed_path(name: str) -> Path:
    return SEEDS_DIR / name


@pytest.fixture
def trop2():
    return SemifieldContext.tropical(2)


@pytest.fixture
def worked_seed_trivial():
    """B=[[0,1],[-1,0]], d=(2,1), z1=(1, 2, 1), trivial coefficients."""
    return initial_seed([[0, 1], [-1, 0]], (2, 1), [[1, 2, 1], [1, 1]])


@pytest.fixture
def worked_seed_principal():
    ctx = SemifieldContext.tropical(2)
    return initial_seed(
        [[0, 1], [-1, 0]],
        (2, 1),
        [[1, 2, 1], [1, 1]],
        ctx,
        y=[ctx.generator(0), ctx.generator(1)],
    )
