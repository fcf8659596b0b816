from cgcl_analytics.infrastructure.config.logging import logger, setup_logging
from cgcl_analytics.infrastructure.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings", "logger", "setup_logging"]
