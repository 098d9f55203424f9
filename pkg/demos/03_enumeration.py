"""
Walking the semigroup tree
==========================

Count semigroups by genus, check the count against a brute-force search,
and run the same enumeration split across worker processes.
"""

from semiweight.tree import brute_force_enumerate, enumerate_semigroups

stats = enumerate_semigroups(18)
print(stats.counts)
print(f"{stats.nodes} semigroups in {stats.wall_time:.2f}s")

# brute force tests every g-subset of [1, 2g-1]
print([len(brute_force_enumerate(g)) for g in range(9)])


class WeightHistogram:
    """Counts of (genus, symmetric) pairs; forkable and mergeable so it can
    run in parallel."""

    def __init__(self):
        self.hist = {}

    def __call__(self, s):
        key = (s.genus, s.frobenius == 2 * s.genus - 1)
        self.hist[key] = self.hist.get(key, 0) + 1

    def fork(self):
        return WeightHistogram()

    def merge(self, other):
        for k, v in other.hist.items():
            self.hist[k] = self.hist.get(k, 0) + v


if __name__ == "__main__":
    serial, parallel = WeightHistogram(), WeightHistogram()
    enumerate_semigroups(14, serial)
    enumerate_semigroups(14, parallel, workers=2)
    assert serial.hist == parallel.hist
    print("symmetric semigroups per genus:",
          [serial.hist.get((g, True), 0) for g in range(15)])
