"""Compare an engine against an analytic oracle."""

import logging

from command_manager import Command, EXIT_OK
from commands.support import require_oracle, resolve_schedule
from run_context import RunConfig
from shared.csv_output import write_frame
from shared.schedule_io import load_signal
from varorder.engine_registry import create_engine
from varorder.report import ComparisonReport

logger = logging.getLogger(__name__)


class CompareCommand(Command):
    """Write rows (t, numeric, reference, error) of the unit-step response."""
    help = "compare an engine with a closed-form oracle"

    def run(self, config: RunConfig) -> int:
        oracle = require_oracle(config)
        sched = config.index_schedule(resolve_schedule(config, oracle))
        f = load_signal(config.signal, config.h, config.samples, config.alignment)
        numeric = create_engine(config.engine, dense_cap=config.dense_cap).evaluate(f, sched)

        report = ComparisonReport(t=f.times, numeric=numeric.values, reference=oracle.evaluate(f.times))
        logger.info("Compare %s vs %s at h = %g: %s", config.engine, config.oracle, config.h, report.summary())
        write_frame(report.to_frame(), config.out)
        return EXIT_OK
