"""
Runtime configuration - 运行配置
=====================================
Defaults for distance certification, code search and the record catalog.
Values can be overridden from the environment (a local .env file is read
on import):

    ASSOC_CODES_CATALOG        catalog file path
    ASSOC_CODES_WORKERS        default worker count
    ASSOC_CODES_EXACT_CEILING  largest n + k handled by exact enumeration
    ASSOC_CODES_TABLE_BITS     stabilizer bits expanded per enumeration block
    ASSOC_CODES_TIME_BUDGET    search time budget in seconds
"""

import os

from dotenv import load_dotenv
from termcolor import cprint

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        cprint(f"⚠️ {name}={raw!r} is not an integer, using {default}", "yellow")
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        cprint(f"⚠️ {name}={raw!r} is not a number, using {default}", "yellow")
        return default


# ============================================================================
# 距离计算 (distance)
# ============================================================================

# exact coset enumeration is attempted only while n + k is at most this
EXACT_CEILING = _env_int("ASSOC_CODES_EXACT_CEILING", 28)

# brute-force oracle over all 4^n Pauli operators
ORACLE_MAX_N = 8

# --method auto falls back to weight enumeration up to this weight
AUTO_BOUNDED_W_MAX = 7

# candidate vectors are packed into one 64-bit word per half
DISTANCE_MAX_N = 64

# stabilizer generators expanded into a lookup block (2^bits entries)
GRAY_TABLE_BITS = _env_int("ASSOC_CODES_TABLE_BITS", 16)

# pair-join batches in weight enumeration are capped at this many pairs
JOIN_BATCH_PAIRS = 4_000_000

# randomized kernel sampling for unverified upper bounds
WITNESS_SAMPLES = 20_000
WITNESS_SEED = 2024

# ============================================================================
# 搜索 / 复现 (search, reproduction)
# ============================================================================

DEFAULT_WORKERS = max(1, _env_int("ASSOC_CODES_WORKERS", 1))
DEFAULT_TIME_BUDGET = _env_float("ASSOC_CODES_TIME_BUDGET", 600.0)
DEFAULT_MIN_D = 3

# weight-d upper-bound checks are run when n or d is small enough
UPPER_CHECK_MAX_N = 24
UPPER_CHECK_MAX_D = 5

# ============================================================================
# 目录 (catalog)
# ============================================================================

CATALOG_ENV_VAR = "ASSOC_CODES_CATALOG"
DEFAULT_CATALOG_PATH = "codes_catalog.jsonl"
CATALOG_SCHEMA = "assoc-codes/catalog"
CATALOG_VERSION = 1


def catalog_path(override: str = None) -> str:
    """Resolve the catalog file: explicit path, then environment, then default."""
    if override:
        return override
    return os.getenv(CATALOG_ENV_VAR) or DEFAULT_CATALOG_PATH
