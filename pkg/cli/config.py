"""
Environment-aware configuration.
Settings only change ambient behaviour (log level, result store, worker
count); no setting changes what a command prints.
"""
import os

from dotenv import load_dotenv

load_dotenv()  # Read .env if present


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class BaseConfig:
    APP_ENV = os.getenv("APP_ENV", "production")
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    # Result store for computed polynomials; only touched when caching is on
    DATABASE_URL = os.getenv("DATABASE_URL", "sqlite:///tower-tableaux.db")
    RESULT_CACHE = _flag("RESULT_CACHE")
    # 1 = enumerate in this process
    ENUMERATION_WORKERS = int(os.getenv("ENUMERATION_WORKERS", "1"))
    DEBUG = False


class DevelopmentConfig(BaseConfig):
    DEBUG = True
    LOG_LEVEL = os.getenv("LOG_LEVEL", "DEBUG")


class TestingConfig(BaseConfig):
    TESTING = True
    DATABASE_URL = "sqlite:///:memory:"
    RESULT_CACHE = False
    ENUMERATION_WORKERS = 1


class ProductionConfig(BaseConfig):
    DEBUG = False


def get_config(name: str | None = None):
    """
    Select config class.
    - If name is provided, choose by name.
    - Else choose based on APP_ENV (dev/testing/prod), production when unset.
    """
    env = (name or os.getenv("APP_ENV", "production")).lower()
    if env in ["prod", "production"]:
        return ProductionConfig
    if env in ["test", "testing"]:
        return TestingConfig
    return DevelopmentConfig
