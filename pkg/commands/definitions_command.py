"""Evaluate all three variable-order definitions side by side."""

import pandas as pd

from command_manager import Command, EXIT_OK
from commands.support import make_oracle, resolve_schedule
from run_context import RunConfig
from shared.csv_output import write_frame
from shared.schedule_io import load_signal
from varorder.derivatives import deriv_type1, deriv_type2, deriv_type3


class DefinitionsCommand(Command):
    """Write rows (t, type1, type2, type3)."""
    help = "evaluate type-1, type-2 and type-3 definitions together"

    def run(self, config: RunConfig) -> int:
        sched = config.index_schedule(resolve_schedule(config, make_oracle(config)))
        f = load_signal(config.signal, config.h, config.samples, config.alignment)
        write_frame(pd.DataFrame({
            "t": f.times,
            "type1": deriv_type1(f, sched).values,
            "type2": deriv_type2(f, sched).values,
            "type3": deriv_type3(f, sched).values,
        }), config.out)
        return EXIT_OK
