import os
import sys
from typing import List, Tuple


def parse_eps(raw: str) -> Tuple[float, ...]:
    ladder = tuple(float(part) for part in raw.split(",") if part.strip())
    if not ladder:
        raise ValueError("PBBS_EPS must list at least one value")
    if any(eps <= 0 for eps in ladder):
        raise ValueError(f"PBBS_EPS values must be positive, got {raw!r}")
    if any(a <= b for a, b in zip(ladder, ladder[1:])):
        raise ValueError(f"PBBS_EPS must be strictly decreasing, got {raw!r}")
    return ladder


# Configuration
class Config:
    def __init__(self):
        self.host = os.environ.get("HOST", "0.0.0.0")
        self.port = int(os.environ.get("PORT", "8082"))
        self.log_level = os.environ.get("LOG_LEVEL", "INFO")

        # Numerical defaults
        self.default_eps = parse_eps(os.environ.get("PBBS_EPS", "0.1,0.05,0.02"))
        self.default_prec = int(os.environ.get("PBBS_PREC", "0"))  # 0 = derive from the state
        self.precision_factor = float(os.environ.get("PBBS_PREC_FACTOR", "2.0"))
        self.guard_bits = int(os.environ.get("PBBS_GUARD_BITS", "64"))
        self.root_bits = int(os.environ.get("PBBS_ROOT_BITS", "0"))  # 0 = prec // 2
        self.steps = int(os.environ.get("PBBS_STEPS", "10"))

        # Search and enumeration limits
        self.seed = int(os.environ.get("PBBS_SEED", "20240601"))
        self.cap = int(os.environ.get("PBBS_CAP", "100000"))
        self.enum_bound = int(os.environ.get("PBBS_ENUM_BOUND", "16"))

        if self.default_prec and self.default_prec < 64:
            raise ValueError("PBBS_PREC must be 0 or at least 64 bits")
        if self.precision_factor < 1:
            raise ValueError("PBBS_PREC_FACTOR must be at least 1")
        if self.enum_bound < 1 or self.cap < 1:
            raise ValueError("PBBS_ENUM_BOUND and PBBS_CAP must be positive")

    def summary(self) -> List[str]:
        """Human-readable configuration lines for `serve` and `--help`."""
        prec = self.default_prec or "derived"
        return [
            "🔧 Configuration loaded:",
            f"   Server: {self.host}:{self.port} | Log level: {self.log_level}",
            f"   Eps ladder: {','.join(str(e) for e in self.default_eps)} | Steps: {self.steps}",
            f"   Precision: {prec} (factor {self.precision_factor}, guard {self.guard_bits} bits)",
            f"   Seed: {self.seed} | Cap: {self.cap} | Enumeration bound: {self.enum_bound}",
        ]


try:
    config = Config()
except Exception as e:
    print(f"❌ Configuration Error: {e}", file=sys.stderr)
    sys.exit(1)
