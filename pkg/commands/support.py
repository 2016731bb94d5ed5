"""Lookups shared by the command adapters."""

from typing import Optional

from run_context import RunConfig
from shared.schedule_io import load_schedule
from varorder.oracles import OracleSolution, create_oracle
from varorder.schedule import TimedSchedule


def make_oracle(config: RunConfig) -> Optional[OracleSolution]:
    """
    Build the oracle named by config.oracle, or None if none was given.

    Raises:
        ValueError: If the oracle id is unknown
    """
    match config.oracle:
        case None:
            return None
        case "const":
            return create_oracle("const", order=config.order)
        case "ex2":
            return create_oracle("ex2", coefficients=config.coefficients)
        case oracle_id:
            return create_oracle(oracle_id)


def resolve_schedule(config: RunConfig, oracle: Optional[OracleSolution] = None) -> TimedSchedule:
    """
    Schedule from --schedule, falling back to the oracle's own schedule.

    Raises:
        ValueError: If neither a schedule nor an oracle is available
    """
    if config.schedule is not None:
        return load_schedule(config.schedule)
    if oracle is not None:
        return oracle.schedule
    raise ValueError(f"Command '{config.command}' needs --schedule or --oracle")


def require_oracle(config: RunConfig) -> OracleSolution:
    """
    Oracle for commands that compare against one.

    Raises:
        ValueError: If no oracle was given or the signal is not the unit step
    """
    oracle = make_oracle(config)
    if oracle is None:
        raise ValueError(f"Command '{config.command}' needs --oracle")
    if config.signal != "step":
        raise ValueError(f"Oracles describe the unit-step response, got signal '{config.signal}'")
    return oracle
