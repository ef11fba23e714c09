from fastapi import APIRouter

from app.services.config import settings

router = APIRouter()


@router.get("/ping")
def ping():
    return {"status": "healthy", "service": settings.PROJECT_NAME, "version": settings.VERSION}


# Size limits the cross-checking paths enforce; clients use them to decide
# whether algorithm="baseline" or an oracle comparison is worth asking for.
@router.get("/limits")
def limits():
    return {
        "oracle_max_n": settings.ORACLE_MAX_N,
        "baseline_max_m": settings.BASELINE_MAX_M,
        "enumeration_max_n": settings.ENUMERATION_MAX_N,
        "debug_checks": settings.DEBUG_CHECKS,
    }
