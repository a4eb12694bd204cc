from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceeded


@dataclass(frozen=True)
class SizeGuard:
    """Limits for exhaustive enumeration.

    ``max_codeword_bits`` bounds ``gamma + 2*delta`` (log2 of the code size);
    ``max_ambient_log2`` bounds ``alpha + 2*beta`` (log2 of the ambient space,
    which the dual oracle walks in full).
    """

    max_codeword_bits: int = 24
    max_ambient_log2: int = 26

    def check_code(self, log2_size: int) -> None:
        if log2_size > self.max_codeword_bits:
            raise GuardExceeded(
                f"code has 2^{log2_size} codewords, guard allows 2^{self.max_codeword_bits}",
                {"max_codeword_bits": log2_size},
            )

    def check_ambient(self, log2_size: int) -> None:
        if log2_size > self.max_ambient_log2:
            raise GuardExceeded(
                f"ambient space has 2^{log2_size} vectors, guard allows 2^{self.max_ambient_log2}",
                {"max_ambient_log2": log2_size},
            )


DEFAULT_GUARD = SizeGuard()
UNLIMITED = SizeGuard(10**9, 10**9)
