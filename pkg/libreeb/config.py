"Analysis configuration and related parameters"

# One million recursion nodes per top-level recognition query.
DEFAULT_BUDGET = 10 ** 6


class AnalysisConfig:
    """
    Maintains the parameters shared by every analysis command.

    Stores dimension, search budget and sampling settings.

    Vocab:
      Budget: number of uncached recursion nodes a single top-level
              recognition query may visit before answering Unknown.
      Seed: the only source of randomness; omitted means 0, never the clock.
    """

    def __init__(self, dim=None, budget=DEFAULT_BUDGET, seed=0,
                 samples=1000, use_cache=True):
        # Dimension of the d-graph being analysed, None if not applicable
        self.dim = dim

        # Recognition search limits
        self.budget = budget
        self.use_cache = use_cache

        # Random colorings
        self.seed = seed
        self.samples = samples

        assert dim is None or dim >= -1
        assert budget > 0
        assert seed >= 0
        assert samples > 0

    def __eq__(self, other):
        """
        Compare analysis configuration.

        True means two runs are expected to produce byte-identical output.
        """
        keys = [
            'dim', 'budget', 'seed',
            'samples', 'use_cache',
        ]
        if other is None:
            return False
        for key in keys:
            if getattr(self, key) != getattr(other, key):
                return False

        return True

    def rng(self):
        "Seeded random generator for coloring sampling"
        # pylint: disable=import-outside-toplevel
        import numpy as np
        return np.random.default_rng(self.seed)

    def __repr__(self):
        "Format for debugging"
        s = "<AnalysisConfig dim={} budget={} seed={} samples={} cache={}>"
        return s.format(
            self.dim, self.budget,
            self.seed, self.samples,
            'on' if self.use_cache else 'off'
        )
