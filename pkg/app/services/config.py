##############################################################################
# File: config.py — global settings
# Everything tunable lives here and is read once from the environment
# (a local .env is honoured through python-dotenv):
# - harness parallelism
# - oracle / enumeration / baseline size limits
# - debug-only runtime checks
# - logging and CORS for the API
##############################################################################
import os

from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


class Settings:
    PROJECT_NAME: str = "kconn"
    VERSION: str = "0.1.0"

    # Harness
    KCONN_THREADS: int = int(os.getenv("KCONN_THREADS", str(os.cpu_count() or 1)))
    ORACLE_MAX_N: int = int(os.getenv("KCONN_ORACLE_MAX_N", "60"))
    BASELINE_MAX_M: int = int(os.getenv("KCONN_BASELINE_MAX_M", "10000"))

    # Oracles
    ENUMERATION_MAX_N: int = int(os.getenv("KCONN_ENUMERATION_MAX_N", "20"))

    # Expensive checks: cut recount, work-list sufficiency, depth bound
    DEBUG_CHECKS: bool = _flag("KCONN_DEBUG_CHECKS")
    DEPTH_FACTOR: float = float(os.getenv("KCONN_DEPTH_FACTOR", "4"))

    LOG_LEVEL: str = os.getenv("KCONN_LOG_LEVEL", "WARNING").upper()

    # Paths
    BASE_DIR: str = os.path.dirname(os.path.dirname(os.path.dirname(__file__)))
    BENCH_DIR: str = os.getenv("KCONN_BENCH_DIR", os.path.join(BASE_DIR, "data", "bench"))

    # API
    CORS_ORIGINS: list = [
        o.strip() for o in os.getenv("KCONN_CORS_ORIGINS", "*").split(",") if o.strip()
    ]


settings = Settings()
