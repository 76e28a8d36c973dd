import pytest
from hypothesis import HealthCheck, settings

from cdalg import catalog

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")

_ACCEPTANCE: dict[int, tuple[bool, list[str]]] = {}


@pytest.fixture
def acceptance():
    """Record ``(criterion, ok, details)``; lines are printed in the terminal summary."""

    def record(criterion: int, ok: bool, details):
        if isinstance(details, str):
            details = [details]
        _ACCEPTANCE[criterion] = (bool(ok), list(details))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        ok, details = _ACCEPTANCE[k]
        tr.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}")
        for d in details:
            tr.write_line(f"    {d}")


@pytest.fixture(scope="session")
def small_cd():
    """CD catalog algebras cheap enough for exhaustive tensor checks."""
    return [catalog.sl2(), catalog.heisenberg3(), catalog.r2(), catalog.r2_plus_k(), catalog.abelian(3),
            catalog.b61(0), catalog.b61(1), catalog.b61(-1)]


@pytest.fixture(scope="session")
def everything():
    return catalog.all_examples()
