import pytest

from qfano.sarkisov.replay import library, run_replay


@pytest.fixture(scope="session")
def replay_traces():
    """Replay every library config once per test session."""
    return {ident: run_replay(cfg) for ident, cfg in library().items()}
