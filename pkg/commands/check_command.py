"""Cross-check the switching-matrix product against the type-2 engines."""

import logging

import pandas as pd

from command_manager import Command, EXIT_OK, EXIT_TOLERANCE
from commands.support import make_oracle, resolve_schedule
from run_context import RunConfig
from shared.csv_output import write_frame
from shared.schedule_io import load_signal
from varorder.matrix import theorem1_check

logger = logging.getLogger(__name__)


class CheckCommand(Command):
    """
    Write rows (name, discrepancy) and fail with exit code 2 above --tol.

    The probe input is the ramp 1 + t unless a file signal is given.
    """
    help = "check engine equivalence on a schedule"

    def run(self, config: RunConfig) -> int:
        sched = config.index_schedule(resolve_schedule(config, make_oracle(config)))
        k = config.samples - 1
        probe = None if config.signal == "step" else load_signal(config.signal, config.h, config.samples, config.alignment)

        report = theorem1_check(sched, k, config.h, probe=probe, cap=config.dense_cap)
        frame = pd.DataFrame({
            "name": list(report.discrepancies.keys()),
            "discrepancy": list(report.discrepancies.values()),
        })
        write_frame(frame, config.out)
        if report.max_discrepancy > config.tol:
            logger.error("Largest discrepancy %.3g exceeds tolerance %.3g", report.max_discrepancy, config.tol)
            return EXIT_TOLERANCE
        return EXIT_OK
