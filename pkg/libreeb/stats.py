import logging
from time import time

log = logging.getLogger(__name__)


class SearchStats:
    """
    Aggregate recognition search counters and log them periodically
    """
    # Emit a status line every that many uncached nodes
    REPORT_EVERY = 20000

    def __init__(self):
        # Node counter since the last report
        self.recent = 0
        self.start = time()

        # Search totals
        self.nodes = 0
        self.unknowns = 0

        # Memo table
        self.cache_hits = 0
        self.cache_misses = 0
        self.canonical_forms = 0

    def show(self):
        "Log statistics"
        took = max(time() - self.start, 1e-9)
        nodes_per_s = self.recent / took
        lookups = self.cache_hits + self.cache_misses
        hit_rate = self.cache_hits / lookups if lookups else 0.0

        s = ("STAT: nodes=%-8d n/s=%7.1f "
             "cache: hits=%d misses=%d rate=%.3f canon=%d unknown=%d")
        log.info(s, self.nodes, nodes_per_s,
                 self.cache_hits, self.cache_misses, hit_rate,
                 self.canonical_forms, self.unknowns)

        # Warnings
        if lookups > 10000 and hit_rate < 0.05:
            log.warning("Recognition cache hit rate is %.3f - "
                        "the search is not revisiting isomorphic graphs", hit_rate)

    def node(self):
        """
        Count a new search node and maybe log statistics
        """
        self.nodes += 1
        self.recent += 1
        if self.recent >= self.REPORT_EVERY:
            self.show()
            self.recent = 0
            self.start = time()

    def as_dict(self):
        return {
            'nodes': self.nodes,
            'cache_hits': self.cache_hits,
            'cache_misses': self.cache_misses,
            'canonical_forms': self.canonical_forms,
            'unknowns': self.unknowns,
        }
