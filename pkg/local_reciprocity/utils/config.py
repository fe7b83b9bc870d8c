"""Process-wide configuration: size caps and their environment overrides."""

import logging
import os
import threading

SIZE_CAP_VARIABLE = "COHOMOLOGY_SIZE_CAP"


class Config:
    """Caps that keep every computation at desk scale."""

    size_cap = 2**24
    max_group_order = 64
    min_degree = -3
    max_degree = 3
    max_bar_degree = 4
    field_cap = 10**6
    tower_cap = 10**9
    max_field_degree = 6
    default_seed = 20240917
    _instance = None
    _lock = threading.Lock()

    def __init__(self):
        raise RuntimeError("Call instance() instead")

    @classmethod
    def instance(cls):
        """Return the shared configuration, reading the environment once."""
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    instance = cls.__new__(cls)
                    instance._read_environment()
                    cls._instance = instance
        return cls._instance

    @classmethod
    def reload(cls):
        """Drop the shared configuration and read the environment again."""
        with cls._lock:
            cls._instance = None
        return cls.instance()

    def _read_environment(self):
        raw = os.environ.get(SIZE_CAP_VARIABLE)
        if raw is None or raw.strip() == "":
            return
        try:
            value = int(raw)
        except ValueError as ex:
            raise ValueError(f"{SIZE_CAP_VARIABLE} must be an integer, got {raw!r}") from ex
        if value <= 0:
            raise ValueError(f"{SIZE_CAP_VARIABLE} must be positive, got {value}")
        logging.getLogger(__name__).info("Size cap overridden to %s entries", value)
        self.size_cap = value
