"""Print a GL coefficient sequence."""

import numpy as np
import pandas as pd

from command_manager import Command, EXIT_OK
from run_context import RunConfig
from shared.csv_output import write_frame
from varorder.weights import gl_weights, gl_weights_gamma, validate_order

WEIGHT_METHODS = {
    "recurrence": gl_weights,
    "gamma": gl_weights_gamma,
}


class WeightsCommand(Command):
    """Write rows (i, w) for --order, --h and --count."""
    help = "print GL coefficients w[0..count-1]"

    def run(self, config: RunConfig) -> int:
        if config.method not in WEIGHT_METHODS:
            raise ValueError(f"Unknown weight method '{config.method}'. Available methods: {list(WEIGHT_METHODS.keys())}")
        weights = WEIGHT_METHODS[config.method](validate_order(config.order), config.h, config.count)
        write_frame(pd.DataFrame({"i": np.arange(len(weights)), "w": weights.w}), config.out)
        return EXIT_OK
