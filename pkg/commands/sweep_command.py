"""Step-size convergence sweep against an oracle."""

import logging

import pandas as pd

from command_manager import Command, EXIT_OK
from commands.support import require_oracle, resolve_schedule
from run_context import RunConfig
from shared.csv_output import write_frame
from shared.schedule_io import load_signal
from varorder.engine_registry import create_engine
from varorder.report import ComparisonReport
from varorder.schedule import grid_index

logger = logging.getLogger(__name__)


class SweepCommand(Command):
    """Repeat compare for every step in --hs; rows (h, t, numeric, reference, error)."""
    help = "convergence sweep over several steps"

    def run(self, config: RunConfig) -> int:
        if not config.hs:
            raise ValueError("Command 'sweep' needs --hs")
        oracle = require_oracle(config)
        timed = resolve_schedule(config, oracle)
        engine = create_engine(config.engine, dense_cap=config.dense_cap)

        frames = []
        for h in config.hs:
            samples = grid_index(config.horizon, h, "horizon") + 1
            f = load_signal(config.signal, h, samples, config.alignment)
            numeric = engine.evaluate(f, config.index_schedule(timed, h))
            report = ComparisonReport(t=f.times, numeric=numeric.values, reference=oracle.evaluate(f.times))
            logger.info("h = %g: max error %.6g, rms %.6g", h, report.max_abs_error, report.rms_error)
            frames.append(report.to_frame().assign(h=h))

        sweep = pd.concat(frames, ignore_index=True)
        write_frame(sweep[["h", "t", "numeric", "reference", "error"]], config.out)
        return EXIT_OK
