import logging

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class Log:
    @staticmethod
    def init(log_level="WARNING", filename=None):
        level = log_level
        if isinstance(log_level, str):
            level = logging.getLevelName(log_level.upper())
            if not isinstance(level, int):
                raise ValueError(f"Unknown log level {log_level!r}")
        options = {"format": LOG_FORMAT, "datefmt": DATE_FORMAT, "level": level, "force": True}
        if filename is not None:
            options["filename"] = filename
            options["encoding"] = "utf-8"
        logging.basicConfig(**options)

    @staticmethod
    def log_information(source, message, is_an_error=False):
        if is_an_error:
            logging.getLogger(source).error("%s - %s", source, message)
        else:
            logging.getLogger(source).info("%s - %s", source, message)
