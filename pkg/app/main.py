##################################################################
# file: app/main.py
# The FastAPI application object. No algorithms here:
# ✔ Sets up logging from settings
# ✔ Enables CORS for browser clients
# ✔ Wires the health and solve routers
# The work happens in app/services/*.
###################################################################
import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.routers import health_router, solve_router
from app.services.config import settings

logging.basicConfig(level=settings.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")

# 🧠 1. App identity (shows up in the /docs Swagger UI)
app = FastAPI(
    title="kconn",
    version=settings.VERSION,
    description="Maximal 2-edge-, 2-vertex- and k-edge-connected subgraphs of directed graphs.",
)

# 🌐 2. CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# 🏠 3. Root check
@app.get("/")
def root():
    return {"status": "ok", "message": "kconn API is running"}


# 🔌 4. Routers
app.include_router(health_router.router, prefix="/health", tags=["Health"])
app.include_router(solve_router.router, prefix="/solve", tags=["Solve"])
