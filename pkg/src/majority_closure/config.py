from __future__ import annotations

import os
from dataclasses import dataclass
from math import factorial

from .errors import OrbitTooLarge, TooManyCandidates

ORBIT_CAP_ENV = "MF_ORBIT_CAP"


@dataclass(frozen=True)
class Limits:
    """Enumeration caps.

    ``orbit_cap`` bounds the candidate count for full permutation-group scans
    (sym closure, tie profiles, the brute-force oracle).  Stabilizer averages
    over ``k`` free points are allowed while ``k! <= (orbit_cap - 2)!``, which
    gives ``(n-2)! <= 720`` for pair stabilizers at the default cap of 8.
    """

    orbit_cap: int = 8
    subset_cap: int = 20

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ORBIT_CAP_ENV)
        if raw is None or not raw.strip():
            return cls()
        return cls(orbit_cap=int(raw))

    def check_group(self, n: int) -> None:
        if n > self.orbit_cap:
            raise OrbitTooLarge(f"n={n} exceeds orbit cap {self.orbit_cap}")

    def check_stabilizer(self, free: int) -> None:
        if factorial(free) > factorial(max(self.orbit_cap - 2, 0)):
            raise OrbitTooLarge(
                f"stabilizer of size {free}! exceeds ({self.orbit_cap}-2)!")

    def check_subsets(self, n: int) -> None:
        if n > self.subset_cap:
            raise TooManyCandidates(f"n={n} exceeds subset-scan cap {self.subset_cap}")


def limits() -> Limits:
    return Limits.from_env()
