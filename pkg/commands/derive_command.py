"""Evaluate a variable-order operator on a signal."""

import logging

import pandas as pd

from command_manager import Command, EXIT_OK
from commands.support import make_oracle, resolve_schedule
from run_context import RunConfig
from shared.csv_output import matrix_path, write_frame, write_matrix
from shared.schedule_io import load_signal
from varorder.engine_registry import create_engine

logger = logging.getLogger(__name__)


class DeriveCommand(Command):
    """Write rows (t, value), optionally followed by the operator matrix."""
    help = "evaluate the operator with one engine"

    def run(self, config: RunConfig) -> int:
        sched = config.index_schedule(resolve_schedule(config, make_oracle(config)))
        f = load_signal(config.signal, config.h, config.samples, config.alignment)
        engine = create_engine(config.engine, dense_cap=config.dense_cap)
        logger.debug("Deriving %d samples with engine %s", len(f), config.engine)

        result = engine.evaluate(f, sched)
        write_frame(pd.DataFrame({"t": result.times, "value": result.values}), config.out)
        if config.dump_matrix:
            matrix = engine.operator_matrix(sched, len(f) - 1, config.h)
            write_matrix(matrix.entries, matrix_path(config.out))
        return EXIT_OK
